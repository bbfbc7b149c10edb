#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "pialg/grpalg.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(PIALG_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path work_dir() {
    auto dir = std::filesystem::temp_directory_path() / "pialg-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_fixture(const std::string& name, const std::string& bytes) {
    auto path = work_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << bytes;
    return path.string();
}

// two-generator algebra: [a,b] = a, a^[2] = 0, b^[2] = b
std::string example_2d_file() {
    json j;
    j["bracket"] = {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
    j["dim"] = 2;
    j["kind"] = "rlie";
    j["labels"] = {"a", "b"};
    j["p"] = 2;
    j["pmap"] = {{0, 0}, {0, 1}};
    return write_fixture("d2.json", j.dump(2) + "\n");
}

std::string dihedral6_file() {
    pialg::GroupSpec g = pialg::group_dihedral(6);
    json j;
    j["kind"] = "group";
    j["labels"] = g.labels;
    j["order"] = g.order;
    json t = json::array();
    for (uint32_t i = 0; i < g.order; ++i) {
        json row = json::array();
        for (uint32_t k = 0; k < g.order; ++k) row.push_back(g.mul(i, k));
        t.push_back(row);
    }
    j["table"] = t;
    return write_fixture("d6.json", j.dump(2) + "\n");
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("validate accepts the sample files and reports issues") {
    RunResult ok = run_cli("validate " + example_2d_file());
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "valid rlie file"));

    RunResult g = run_cli("validate " + dihedral6_file());
    CHECK(g.exit_code == 0);

    std::string bad = write_fixture(
        "bad.json",
        R"({"kind":"rlie","p":2,"dim":1,"bracket":[[[1]]],"pmap":[[0]],"labels":["x"]})");
    RunResult inv = run_cli("validate " + bad);
    CHECK(inv.exit_code == 1);
    CHECK(contains(inv.output, "alternating"));

    std::string nj = write_fixture("nj.json", "not json\n");
    CHECK(run_cli("validate " + nj).exit_code == 2);
}

TEST_CASE("canonical emission round-trips byte for byte") {
    RunResult first = run_cli("validate " + example_2d_file() + " --emit");
    REQUIRE(first.exit_code == 0);
    std::string again = write_fixture("d2_canonical.json", first.output);
    RunResult second = run_cli("validate " + again + " --emit");
    CHECK(second.exit_code == 0);
    CHECK(first.output == second.output);
}

TEST_CASE("env builds the envelope file and check decides the worked identity") {
    std::string out = (work_dir() / "uD.json").string();
    RunResult env = run_cli("env " + example_2d_file() + " --out " + out);
    REQUIRE(env.exit_code == 0);
    CHECK(contains(env.output, "dim 4"));

    RunResult holds = run_cli("check " + out + " --ideal omega --identity \"wxyz - wyxz\"");
    CHECK(holds.exit_code == 0);
    CHECK(contains(holds.output, "holds"));
    CHECK(contains(holds.output, "all 81 basis substitutions vanish"));

    RunResult fails = run_cli("check " + out + " --identity \"xy - yx\"");
    CHECK(fails.exit_code == 1);
    CHECK(contains(fails.output, "FAILS"));
    CHECK(contains(fails.output, "witness"));

    RunResult absent = run_cli("engel " + out + " --ideal omega");
    CHECK(absent.exit_code == 0);
    CHECK(contains(absent.output, "engel degree: absent"));
}

TEST_CASE("groupalg feeds search which finds the dihedral identity") {
    std::string out = (work_dir() / "kd6p3.json").string();
    RunResult ga = run_cli("groupalg " + dihedral6_file() + " --p 3 --out " + out);
    REQUIRE(ga.exit_code == 0);
    CHECK(contains(ga.output, "dim 6"));

    RunResult sr = run_cli("search " + out + " --ideal omega --max-degree 4 --max-vars 2");
    CHECK(sr.exit_code == 0);
    // canonical orbit representative of yxy^2 - y^2xy after renaming
    CHECK(contains(sr.output, "a^2ba - aba^2"));
    CHECK(contains(sr.output, "found 1 identities"));

    RunResult direct =
        run_cli("check " + dihedral6_file() + " --p 3 --ideal omega --identity \"yxy^2 - y^2xy\"");
    CHECK(direct.exit_code == 0);
    CHECK(contains(direct.output, "holds"));
}

TEST_CASE("json reports are canonical and deterministic") {
    std::string out = (work_dir() / "uD.json").string();
    run_cli("env " + example_2d_file() + " --out " + out);
    std::string cmd = "--json check " + out + " --ideal omega --identity \"wxyz - wyxz\"";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);

    json doc = json::parse(a.output);
    CHECK(doc["version"] == "pialg 1.0.0");
    CHECK(doc["command"] == "check");
    CHECK(doc["seed"] == 0);
    CHECK(doc["env"].contains("PIALG_INDET_BUDGET"));
    CHECK(doc["verdict"]["holds"] == true);
    CHECK(doc["verdict"]["mode"] == "basis_multilinear");
    std::string digest = doc["inputs"][0]["digest"].get<std::string>();
    CHECK(digest.rfind("fnv1a:", 0) == 0);

    RunResult f1 = run_cli("--json fixtures");
    RunResult f2 = run_cli("--json fixtures");
    REQUIRE(f1.exit_code == 0);
    CHECK(f1.output == f2.output);
    json fx = json::parse(f1.output);
    CHECK(fx["verdict"]["all_ok"] == true);
    CHECK(fx["verdict"]["fixtures"].size() == 2);
}

TEST_CASE("witness appears in the json report when a check fails") {
    std::string out = (work_dir() / "uD.json").string();
    run_cli("env " + example_2d_file() + " --out " + out);
    RunResult r = run_cli("--json check " + out + " --identity \"xy - yx\"");
    CHECK(r.exit_code == 1);
    json doc = json::parse(r.output);
    CHECK(doc["verdict"]["holds"] == false);
    REQUIRE(doc["verdict"].contains("witness"));
    CHECK(doc["verdict"]["witness"].size() == 2);
    CHECK(doc["verdict"]["witness_field"]["p"] == 2);
}

TEST_CASE("usage and resource failures exit 2 with machine-readable codes") {
    RunResult missing = run_cli("--json check nosuchfile.json --identity x");
    CHECK(missing.exit_code == 2);
    json doc = json::parse(missing.output);
    CHECK(doc["error"]["code"] == "usage_error");

    CHECK(run_cli("check " + example_2d_file() + " --bogus-flag").exit_code == 2);
    CHECK(run_cli("engel " + dihedral6_file()).exit_code == 2);

    RunResult badmode =
        run_cli("--json check " + example_2d_file() + " --identity x --mode turbo");
    CHECK(badmode.exit_code == 2);
    CHECK(json::parse(badmode.output)["error"]["code"] == "usage_error");

    RunResult badparse =
        run_cli("--json check " + example_2d_file() + " --identity \"x +\"");
    CHECK(badparse.exit_code == 2);
    CHECK(contains(json::parse(badparse.output)["error"]["message"].get<std::string>(),
                   "identity parse error"));
}

TEST_CASE("suite command renders every catalog verdict") {
    RunResult r = run_cli("--json suite");
    REQUIRE(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["verdict"]["all_equivalent"] == true);
    CHECK(doc["verdict"]["reports"].size() == 42);
    const json& first = doc["verdict"]["reports"][0];
    CHECK(first["theorem"] == "nonmatrix-envelope");
    CHECK(first["instance"] == "example-2d");
    CHECK(first["completed"] == true);
    for (const auto& rep : doc["verdict"]["reports"]) CHECK(rep["equivalent"] == true);
}
