#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pialg/env.hpp"
#include "pialg/errors.hpp"
#include "pialg/grpalg.hpp"
#include "pialg/identity.hpp"
#include "pialg/poly.hpp"
#include "pialg/rng.hpp"
#include "pialg/suite.hpp"

using nlohmann::json;
using namespace pialg;

namespace {

constexpr const char* kVersion = "pialg 1.0.0";

std::string fnv1a_digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw usage_error(path + ": cannot write");
    out << bytes;
}

std::string canonical_bytes(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// AlgebraFile parsing with located errors

const json& need(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw usage_error(path + ": missing field '" + key + "'");
    return *it;
}

int64_t need_int(const json& j, const char* key, const std::string& path) {
    const json& v = need(j, key, path);
    if (!v.is_number_integer())
        throw usage_error(path + ": field '" + key + "' must be an integer");
    return v.get<int64_t>();
}

FpVec dense_vec(const json& v, size_t dim, uint32_t p, const std::string& ctx) {
    if (!v.is_array() || v.size() != dim)
        throw usage_error(ctx + ": expected an array of " + std::to_string(dim) + " integers");
    FpVec out(dim, 0);
    for (size_t i = 0; i < dim; ++i) {
        if (!v[i].is_number_integer()) throw usage_error(ctx + ": entries must be integers");
        int64_t c = v[i].get<int64_t>();
        if (c < 0 || c >= static_cast<int64_t>(p))
            throw usage_error(ctx + ": coefficients must lie in [0, " + std::to_string(p) + ")");
        out[i] = static_cast<uint32_t>(c);
    }
    return out;
}

std::vector<std::string> opt_labels(const json& j, size_t n, const std::string& path) {
    std::vector<std::string> labels;
    auto it = j.find("labels");
    if (it == j.end()) return labels;
    if (!it->is_array() || it->size() != n)
        throw usage_error(path + ": 'labels' must be an array of " + std::to_string(n) +
                          " strings");
    for (const auto& s : *it) {
        if (!s.is_string()) throw usage_error(path + ": labels must be strings");
        labels.push_back(s.get<std::string>());
    }
    return labels;
}

std::vector<SparseFpVec> dense_table(const json& t, size_t dim, uint32_t p,
                                     const std::string& path, const char* key) {
    if (!t.is_array() || t.size() != dim)
        throw usage_error(path + ": '" + key + "' must have " + std::to_string(dim) + " rows");
    std::vector<SparseFpVec> table;
    table.reserve(dim * dim);
    for (size_t i = 0; i < dim; ++i) {
        const json& row = t[i];
        if (!row.is_array() || row.size() != dim)
            throw usage_error(path + ": '" + key + "' row " + std::to_string(i) + " must have " +
                              std::to_string(dim) + " entries");
        for (size_t j = 0; j < dim; ++j)
            table.push_back(to_sparse(dense_vec(row[j], dim, p,
                                                path + ": " + key + "[" + std::to_string(i) +
                                                    "][" + std::to_string(j) + "]")));
    }
    return table;
}

std::string file_kind(const json& j, const std::string& path) {
    const json& k = need(j, "kind", path);
    if (!k.is_string()) throw usage_error(path + ": 'kind' must be a string");
    std::string kind = k.get<std::string>();
    if (kind != "rlie" && kind != "group" && kind != "algebra")
        throw usage_error(path + ": unknown kind '" + kind + "'");
    return kind;
}

RLieSpec rlie_from_json(const json& j, const std::string& path) {
    int64_t p = need_int(j, "p", path);
    int64_t dim = need_int(j, "dim", path);
    if (p < 2 || dim < 0) throw usage_error(path + ": bad p or dim");
    auto labels = opt_labels(j, static_cast<size_t>(dim), path);
    auto bracket = dense_table(need(j, "bracket", path), static_cast<size_t>(dim),
                               static_cast<uint32_t>(p), path, "bracket");
    const json& pm = need(j, "pmap", path);
    if (!pm.is_array() || pm.size() != static_cast<size_t>(dim))
        throw usage_error(path + ": 'pmap' must have " + std::to_string(dim) + " rows");
    FpMat pmap;
    for (size_t i = 0; i < static_cast<size_t>(dim); ++i)
        pmap.push_back(dense_vec(pm[i], static_cast<size_t>(dim), static_cast<uint32_t>(p),
                                 path + ": pmap[" + std::to_string(i) + "]"));
    return make_rlie(static_cast<uint32_t>(p), static_cast<size_t>(dim), std::move(bracket),
                     std::move(pmap), std::move(labels));
}

GroupSpec group_from_json(const json& j, const std::string& path) {
    int64_t order = need_int(j, "order", path);
    if (order < 1) throw usage_error(path + ": bad order");
    size_t n = static_cast<size_t>(order);
    auto labels = opt_labels(j, n, path);
    const json& t = need(j, "table", path);
    if (!t.is_array() || t.size() != n)
        throw usage_error(path + ": 'table' must have " + std::to_string(n) + " rows");
    std::vector<uint32_t> flat;
    flat.reserve(n * n);
    for (size_t i = 0; i < n; ++i) {
        const json& row = t[i];
        if (!row.is_array() || row.size() != n)
            throw usage_error(path + ": 'table' row " + std::to_string(i) + " must have " +
                              std::to_string(n) + " entries");
        for (size_t k = 0; k < n; ++k) {
            if (!row[k].is_number_integer() || row[k].get<int64_t>() < 0 ||
                row[k].get<int64_t>() >= order)
                throw usage_error(path + ": 'table' entries must be indices below the order");
            flat.push_back(row[k].get<uint32_t>());
        }
    }
    return make_group(std::move(flat), std::move(labels));
}

AlgebraSpec algebra_from_json(const json& j, const std::string& path) {
    int64_t p = need_int(j, "p", path);
    int64_t dim = need_int(j, "dim", path);
    if (p < 2 || dim < 0) throw usage_error(path + ": bad p or dim");
    auto labels = opt_labels(j, static_cast<size_t>(dim), path);
    auto table = dense_table(need(j, "table", path), static_cast<size_t>(dim),
                             static_cast<uint32_t>(p), path, "table");
    std::optional<FpVec> unit;
    const json& u = need(j, "unit", path);
    if (!u.is_null())
        unit = dense_vec(u, static_cast<size_t>(dim), static_cast<uint32_t>(p), path + ": unit");
    return make_algebra(static_cast<uint32_t>(p), static_cast<size_t>(dim), std::move(table),
                        std::move(unit), std::move(labels));
}

std::optional<SubspaceBasis> omega_from_json(const json& j, const AlgebraSpec& a,
                                             const std::string& path) {
    auto it = j.find("omega");
    if (it == j.end()) return std::nullopt;
    if (!it->is_array()) throw usage_error(path + ": 'omega' must be an array of rows");
    FpMat rows;
    for (size_t i = 0; i < it->size(); ++i)
        rows.push_back(dense_vec((*it)[i], a.dim, a.p, path + ": omega[" + std::to_string(i) + "]"));
    return span_of(a.p, a.dim, std::move(rows));
}

// ---------------------------------------------------------------------------
// Canonical emission

json vec_json(const FpVec& v) {
    json a = json::array();
    for (uint32_t c : v) a.push_back(c);
    return a;
}

json table_json(const AlgebraSpec& a) {
    json t = json::array();
    for (size_t i = 0; i < a.dim; ++i) {
        json row = json::array();
        for (size_t j = 0; j < a.dim; ++j) row.push_back(vec_json(to_dense(a.entry(i, j), a.dim)));
        t.push_back(row);
    }
    return t;
}

json algebra_to_json(const AlgebraSpec& a, const SubspaceBasis* omega) {
    json j;
    j["dim"] = a.dim;
    j["kind"] = "algebra";
    j["labels"] = a.labels;
    if (omega) {
        json rows = json::array();
        for (const auto& r : omega->rows) rows.push_back(vec_json(r));
        j["omega"] = rows;
    }
    j["p"] = a.p;
    j["table"] = table_json(a);
    j["unit"] = a.unit ? vec_json(*a.unit) : json(nullptr);
    return j;
}

json rlie_to_json(const RLieSpec& L) {
    json j;
    json t = json::array();
    for (size_t i = 0; i < L.dim; ++i) {
        json row = json::array();
        for (size_t k = 0; k < L.dim; ++k) row.push_back(vec_json(to_dense(L.br(i, k), L.dim)));
        t.push_back(row);
    }
    j["bracket"] = t;
    j["dim"] = L.dim;
    j["kind"] = "rlie";
    j["labels"] = L.labels;
    j["p"] = L.p;
    json pm = json::array();
    for (const auto& row : L.pmap) pm.push_back(vec_json(row));
    j["pmap"] = pm;
    return j;
}

json group_to_json(const GroupSpec& g) {
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
    return j;
}

// ---------------------------------------------------------------------------
// Reports

struct Ctx {
    bool json_out = false;
    bool timing = false;
    uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> inputs; // path, digest
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
};

uint32_t threads_env() {
    if (const char* s = std::getenv("PIALG_THREADS")) {
        long v = std::atol(s);
        if (v >= 1) return static_cast<uint32_t>(v);
    }
    return 1;
}

json report_skeleton(const std::string& cmd, const Ctx& c, json args) {
    json r;
    r["args"] = std::move(args);
    r["command"] = cmd;
    json env;
    env["PIALG_ENV_LIMIT"] = env_dim_limit();
    env["PIALG_INDET_BUDGET"] = indeterminate_budget();
    env["PIALG_SEED"] = global_seed();
    env["PIALG_THREADS"] = threads_env();
    r["env"] = env;
    json ins = json::array();
    for (const auto& [path, digest] : c.inputs) {
        json e;
        e["digest"] = digest;
        e["path"] = path;
        ins.push_back(e);
    }
    r["inputs"] = ins;
    r["seed"] = c.seed;
    r["version"] = kVersion;
    return r;
}

void finish(json& report, const Ctx& c) {
    if (c.timing)
        report["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - c.t0)
                .count();
}

void print_doc(const json& j) { std::fputs(canonical_bytes(j).c_str(), stdout); }

json witness_json(const CheckReport& rep) {
    json vars = json::array();
    for (const auto& var : rep.witness) {
        json coords = json::array();
        for (const auto& e : var) {
            json cs = json::array();
            for (uint32_t i = 0; i < rep.witness_k; ++i) cs.push_back(e[i]);
            coords.push_back(cs);
        }
        vars.push_back(coords);
    }
    return vars;
}

json condition_json(const TheoremCondition& c) {
    json j;
    j["detail"] = c.detail;
    j["label"] = c.label;
    j["value"] = c.value;
    j["witnessed"] = c.witnessed;
    return j;
}

json theorem_json(const TheoremReport& r, bool timing) {
    json j;
    j["completed"] = r.completed;
    json cs = json::array();
    for (const auto& c : r.conditions) cs.push_back(condition_json(c));
    j["conditions"] = cs;
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    j["equivalent"] = r.equivalent;
    j["instance"] = r.instance;
    j["note"] = r.note;
    j["theorem"] = r.theorem;
    return j;
}

json fixture_json(const FixtureReport& r) {
    json j;
    json cs = json::array();
    for (const auto& c : r.checks) {
        json e;
        e["detail"] = c.detail;
        e["label"] = c.label;
        e["ok"] = c.ok;
        cs.push_back(e);
    }
    j["checks"] = cs;
    j["name"] = r.name;
    j["ok"] = r.ok();
    return j;
}

// ---------------------------------------------------------------------------
// Input loading for check/engel/search

struct LoadedAlgebra {
    AlgebraSpec a;
    std::optional<SubspaceBasis> omega;
    std::string kind;
};

json load_doc(Ctx& c, const std::string& path) {
    std::string bytes = read_file(path);
    c.inputs.emplace_back(path, fnv1a_digest(bytes));
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) throw usage_error(path + ": not valid JSON");
    if (!j.is_object()) throw usage_error(path + ": expected a JSON object");
    return j;
}

std::string issue_text(const RLieIssue& i) {
    std::string s = i.axiom;
    if (!i.indices.empty()) {
        s += " at [";
        for (size_t k = 0; k < i.indices.size(); ++k)
            s += (k ? "," : "") + std::to_string(i.indices[k]);
        s += "]";
    }
    if (!i.detail.empty()) s += ": " + i.detail;
    return s;
}

RLieSpec valid_rlie(const json& j, const std::string& path) {
    RLieSpec L = rlie_from_json(j, path);
    RLieValidation vr = validate_rlie(L);
    if (!vr.ok())
        throw usage_error(path + ": invalid restricted Lie algebra: " +
                          issue_text(vr.issues.front()));
    return L;
}

LoadedAlgebra load_algebra(Ctx& c, const std::string& path, std::optional<uint32_t> p_flag) {
    json j = load_doc(c, path);
    std::string kind = file_kind(j, path);
    if (kind == "rlie") {
        EnvAlgebra u = build_u(valid_rlie(j, path));
        SubspaceBasis omega = augmentation_ideal_env(u);
        return {std::move(u.A), std::move(omega), kind};
    }
    if (kind == "group") {
        if (!p_flag) throw usage_error(path + ": group input needs --p");
        GroupSpec g = group_from_json(j, path);
        AlgebraSpec kg = build_kg(g, *p_flag);
        SubspaceBasis omega = augmentation_ideal_kg(kg);
        return {std::move(kg), std::move(omega), kind};
    }
    AlgebraSpec a = algebra_from_json(j, path);
    auto omega = omega_from_json(j, a, path);
    return {std::move(a), std::move(omega), kind};
}

const SubspaceBasis* pick_domain(const LoadedAlgebra& la, const std::string& ideal,
                                 SubspaceBasis& whole_storage) {
    if (ideal.empty()) {
        whole_storage = whole_space(la.a.p, la.a.dim);
        return &whole_storage;
    }
    if (ideal != "omega") throw usage_error("--ideal only supports 'omega'");
    if (!la.omega) throw usage_error("no augmentation ideal is available for this input");
    return &*la.omega;
}

CheckMode parse_mode(const std::string& m) {
    if (m == "auto") return CheckMode::automatic;
    if (m == "basis") return CheckMode::basis_multilinear;
    if (m == "generic") return CheckMode::generic;
    if (m == "prefilter") return CheckMode::prefilter_generic;
    throw usage_error("--mode must be one of auto, basis, generic, prefilter");
}

// ---------------------------------------------------------------------------
// Subcommand handlers: fill the report, print human text, return the exit code

int cmd_validate(Ctx& c, const std::string& path, bool emit) {
    json j = load_doc(c, path);
    std::string kind = file_kind(j, path);
    bool valid = true;
    std::vector<std::string> issues;
    json canonical;
    if (kind == "rlie") {
        RLieSpec L = rlie_from_json(j, path);
        RLieValidation vr = validate_rlie(L);
        valid = vr.ok();
        for (const auto& i : vr.issues) issues.push_back(issue_text(i));
        canonical = rlie_to_json(L);
    } else if (kind == "group") {
        try {
            canonical = group_to_json(group_from_json(j, path));
        } catch (const usage_error& e) {
            valid = false;
            issues.push_back(e.what());
        }
    } else {
        try {
            AlgebraSpec a = algebra_from_json(j, path);
            auto omega = omega_from_json(j, a, path);
            canonical = algebra_to_json(a, omega ? &*omega : nullptr);
        } catch (const usage_error& e) {
            valid = false;
            issues.push_back(e.what());
        }
    }
    if (emit) {
        if (!valid) throw usage_error(path + ": cannot emit an invalid file: " + issues.front());
        print_doc(canonical);
        return 0;
    }
    json report = report_skeleton("validate", c, json{{"emit", false}, {"file", path}});
    json verdict;
    verdict["issues"] = issues;
    verdict["kind"] = kind;
    verdict["valid"] = valid;
    report["verdict"] = verdict;
    finish(report, c);
    if (c.json_out) {
        print_doc(report);
    } else if (valid) {
        std::printf("%s: valid %s file\n", path.c_str(), kind.c_str());
    } else {
        std::printf("%s: invalid %s file\n", path.c_str(), kind.c_str());
        for (const auto& s : issues) std::printf("  - %s\n", s.c_str());
    }
    return valid ? 0 : 1;
}

int emit_algebra(Ctx& c, const std::string& cmd, json args, const AlgebraSpec& a,
                 const SubspaceBasis& omega, const std::string& out) {
    json doc = algebra_to_json(a, &omega);
    if (out.empty()) {
        print_doc(doc);
        return 0;
    }
    std::string bytes = canonical_bytes(doc);
    write_file(out, bytes);
    json report = report_skeleton(cmd, c, std::move(args));
    json o;
    o["digest"] = fnv1a_digest(bytes);
    o["dim"] = a.dim;
    o["path"] = out;
    report["output"] = o;
    finish(report, c);
    if (c.json_out)
        print_doc(report);
    else
        std::printf("wrote %s (dim %zu, %s)\n", out.c_str(), a.dim,
                    o["digest"].get<std::string>().c_str());
    return 0;
}

int cmd_env(Ctx& c, const std::string& path, const std::string& out) {
    json j = load_doc(c, path);
    if (file_kind(j, path) != "rlie") throw usage_error(path + ": env expects a rlie file");
    EnvAlgebra u = build_u(valid_rlie(j, path));
    SubspaceBasis omega = augmentation_ideal_env(u);
    return emit_algebra(c, "env", json{{"file", path}, {"out", out}}, u.A, omega, out);
}

int cmd_groupalg(Ctx& c, const std::string& path, uint32_t p, const std::string& out) {
    json j = load_doc(c, path);
    if (file_kind(j, path) != "group")
        throw usage_error(path + ": groupalg expects a group file");
    AlgebraSpec kg = build_kg(group_from_json(j, path), p);
    SubspaceBasis omega = augmentation_ideal_kg(kg);
    return emit_algebra(c, "groupalg", json{{"file", path}, {"out", out}, {"p", p}}, kg, omega,
                        out);
}

int cmd_check(Ctx& c, const std::string& path, const std::string& text, const std::string& ideal,
              const std::string& mode, std::optional<uint32_t> p_flag) {
    LoadedAlgebra la = load_algebra(c, path, p_flag);
    Identity f = parse_identity(text, la.a.p);
    SubspaceBasis whole;
    const SubspaceBasis* domain = pick_domain(la, ideal, whole);
    CheckReport rep = holds_on(la.a, *domain, f, parse_mode(mode), c.seed);

    json report = report_skeleton(
        "check", c,
        json{{"file", path}, {"ideal", ideal.empty() ? "whole" : ideal}, {"identity", text},
             {"mode", mode}});
    json verdict;
    verdict["dim"] = la.a.dim;
    verdict["holds"] = rep.holds;
    verdict["identity"] = identity_to_string(f);
    verdict["mode"] = rep.mode_used;
    verdict["p"] = rep.p;
    verdict["summary"] = rep.summary;
    if (!rep.holds) {
        json wf;
        wf["k"] = rep.witness_k;
        wf["p"] = rep.p;
        verdict["witness"] = witness_json(rep);
        verdict["witness_field"] = wf;
    }
    report["verdict"] = verdict;
    finish(report, c);
    if (c.json_out) {
        print_doc(report);
    } else {
        std::printf("%s on %s: %s (%s; %s)\n", identity_to_string(f).c_str(),
                    ideal.empty() ? "the whole algebra" : "the augmentation ideal",
                    rep.holds ? "holds" : "FAILS", rep.mode_used.c_str(), rep.summary.c_str());
        if (!rep.holds) {
            for (size_t v = 0; v < rep.witness.size(); ++v)
                std::printf("  witness %c over GF(%u^%u): %s\n", f.varnames[v], rep.p,
                            rep.witness_k, witness_json(rep)[v].dump().c_str());
        }
    }
    return rep.holds ? 0 : 1;
}

int cmd_engel(Ctx& c, const std::string& path, const std::string& ideal,
              std::optional<uint32_t> p_flag) {
    LoadedAlgebra la = load_algebra(c, path, p_flag);
    SubspaceBasis whole;
    const SubspaceBasis* domain = pick_domain(la, ideal, whole);
    auto deg = engel_degree(la.a, *domain, c.seed);

    json report = report_skeleton(
        "engel", c, json{{"file", path}, {"ideal", ideal.empty() ? "whole" : ideal}});
    json verdict;
    verdict["dim"] = la.a.dim;
    verdict["engel_degree"] = deg ? json(*deg) : json(nullptr);
    report["verdict"] = verdict;
    finish(report, c);
    if (c.json_out)
        print_doc(report);
    else if (deg)
        std::printf("engel degree: %u\n", *deg);
    else
        std::printf("engel degree: absent\n");
    return 0;
}

int cmd_search(Ctx& c, const std::string& path, const std::string& ideal, uint32_t max_degree,
               uint32_t max_vars, std::optional<uint32_t> p_flag) {
    LoadedAlgebra la = load_algebra(c, path, p_flag);
    SubspaceBasis whole;
    const SubspaceBasis* domain = pick_domain(la, ideal, whole);
    std::vector<Identity> found = semigroup_search(la.a, *domain, max_degree, max_vars);

    json report = report_skeleton(
        "search", c,
        json{{"file", path}, {"ideal", ideal.empty() ? "whole" : ideal},
             {"max_degree", max_degree}, {"max_vars", max_vars}});
    json list = json::array();
    for (const auto& f : found) {
        json e;
        e["degree"] = f.degree();
        e["text"] = identity_to_string(f);
        e["vars"] = f.nvars();
        list.push_back(e);
    }
    json verdict;
    verdict["count"] = found.size();
    verdict["identities"] = list;
    report["verdict"] = verdict;
    finish(report, c);
    if (c.json_out) {
        print_doc(report);
    } else {
        for (const auto& f : found)
            std::printf("degree %u: %s\n", f.degree(), identity_to_string(f).c_str());
        std::printf("found %zu identities up to degree %u in at most %u variables\n",
                    found.size(), max_degree, max_vars);
    }
    return 0;
}

int cmd_suite(Ctx& c, const std::string& catalog) {
    if (catalog != "builtin") throw usage_error("--catalog only supports 'builtin'");
    std::vector<TheoremReport> reports = run_catalog(standard_catalog());
    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.completed && r.equivalent;

    json report = report_skeleton("suite", c, json{{"catalog", catalog}});
    json list = json::array();
    for (const auto& r : reports) list.push_back(theorem_json(r, c.timing));
    report["verdict"] = json{{"all_equivalent", all_ok}, {"reports", list}};
    finish(report, c);
    if (c.json_out) {
        print_doc(report);
    } else {
        for (const auto& r : reports) std::printf("%s\n", r.text(c.timing).c_str());
        std::printf("suite: %zu reports, %s\n", reports.size(),
                    all_ok ? "all equivalent" : "FAILURES above");
    }
    return all_ok ? 0 : 1;
}

int cmd_fixtures(Ctx& c) {
    FixtureReport f1 = fixture_2d();
    FixtureReport f2 = fixture_dihedral();
    bool all_ok = f1.ok() && f2.ok();

    json report = report_skeleton("fixtures", c, json::object());
    report["verdict"] =
        json{{"all_ok", all_ok}, {"fixtures", json::array({fixture_json(f1), fixture_json(f2)})}};
    finish(report, c);
    if (c.json_out)
        print_doc(report);
    else
        std::printf("%s\n%s\n", f1.text().c_str(), f2.text().c_str());
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"polynomial identities of modular enveloping and group algebras"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Ctx ctx;
    ctx.seed = global_seed();
    app.add_flag("--json", ctx.json_out, "emit the report as canonical JSON on stdout");
    app.add_flag("--timing", ctx.timing, "include elapsed times in reports");
    app.add_option("--seed", ctx.seed, "seed for randomized shortcuts (default PIALG_SEED)");

    std::string file, out, identity_text, ideal, mode = "auto", catalog = "builtin";
    uint32_t p_value = 0, max_degree = 4, max_vars = 4;
    bool emit = false;
    bool p_given = false;

    CLI::App* validate = app.add_subcommand("validate", "parse and validate an input file");
    validate->add_option("file", file)->required();
    validate->add_flag("--emit", emit, "print the canonical document instead of a report");

    CLI::App* env = app.add_subcommand("env", "restricted enveloping algebra of a rlie file");
    env->add_option("file", file)->required();
    env->add_option("--out", out, "write the algebra file here and report its digest");

    CLI::App* groupalg = app.add_subcommand("groupalg", "group algebra of a group file");
    groupalg->add_option("file", file)->required();
    groupalg->add_option("--p", p_value, "field characteristic")->required();
    groupalg->add_option("--out", out, "write the algebra file here and report its digest");

    CLI::App* check = app.add_subcommand("check", "decide whether an identity holds");
    check->add_option("file", file)->required();
    check->add_option("--identity", identity_text, "identity text")->required();
    check->add_option("--ideal", ideal, "restrict substitutions (omega)");
    check->add_option("--mode", mode, "auto, basis, generic, or prefilter");
    check->add_option("--p", p_value, "field characteristic (group input)");

    CLI::App* engel = app.add_subcommand("engel", "least engel degree, absent is a verdict");
    engel->add_option("file", file)->required();
    engel->add_option("--ideal", ideal, "restrict substitutions (omega)");
    engel->add_option("--p", p_value, "field characteristic (group input)");

    CLI::App* search = app.add_subcommand("search", "two-word identities holding on a domain");
    search->add_option("file", file)->required();
    search->add_option("--ideal", ideal, "restrict substitutions (omega)");
    search->add_option("--max-degree", max_degree, "word degree bound");
    search->add_option("--max-vars", max_vars, "variable count bound");
    search->add_option("--p", p_value, "field characteristic (group input)");

    CLI::App* suite = app.add_subcommand("suite", "theorem checkers over the builtin catalog");
    suite->add_option("--catalog", catalog, "catalog name (builtin)");

    app.add_subcommand("fixtures", "worked two-generator and dihedral computations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    for (CLI::App* sub : {check, engel, search})
        if (sub->parsed() && sub->count("--p")) p_given = true;
    std::optional<uint32_t> p_flag = p_given ? std::optional<uint32_t>(p_value) : std::nullopt;

    try {
        if (validate->parsed()) return cmd_validate(ctx, file, emit);
        if (env->parsed()) return cmd_env(ctx, file, out);
        if (groupalg->parsed()) return cmd_groupalg(ctx, file, p_value, out);
        if (check->parsed()) return cmd_check(ctx, file, identity_text, ideal, mode, p_flag);
        if (engel->parsed()) return cmd_engel(ctx, file, ideal, p_flag);
        if (search->parsed())
            return cmd_search(ctx, file, ideal, max_degree, max_vars, p_flag);
        if (suite->parsed()) return cmd_suite(ctx, catalog);
        return cmd_fixtures(ctx);
    } catch (const usage_error& e) {
        json err;
        err["error"] = json{{"code", "usage_error"}, {"message", e.what()}};
        err["version"] = kVersion;
        if (ctx.json_out)
            print_doc(err);
        else
            std::fprintf(stderr, "error (usage_error): %s\n", e.what());
        return 2;
    } catch (const resource_error& e) {
        json err;
        err["error"] = json{{"code", "resource_error"}, {"message", e.what()}};
        err["version"] = kVersion;
        if (ctx.json_out)
            print_doc(err);
        else
            std::fprintf(stderr, "error (resource_error): %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error (internal): %s\n", e.what());
        return 2;
    }
}
