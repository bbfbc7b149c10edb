#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "doctest.h"
#include "pialg/suite.hpp"

using namespace pialg;

namespace {

const TheoremCondition& cond(const TheoremReport& r, const std::string& label) {
    for (const auto& c : r.conditions)
        if (c.label == label) return c;
    static TheoremCondition missing;
    FAIL("missing condition ", label, " in ", r.theorem);
    return missing;
}

bool detail_has(const TheoremCondition& c, const std::string& needle) {
    return c.detail.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("two-generator fixture reproduces the worked computations") {
    FixtureReport r = fixture_2d();
    CHECK(r.ok());
    CHECK(r.checks.size() == 8);
    CHECK(r.name == "two-generator envelope at p=2");
    std::string t = r.text();
    CHECK(t.find("fixture two-generator envelope at p=2: pass") == 0);
    CHECK(t.find("[a,b] = a") != std::string::npos);
    CHECK(t.find("all 81 basis substitutions vanish") != std::string::npos);
    CHECK(t == fixture_2d().text());
}

TEST_CASE("dihedral fixture reproduces the worked computations") {
    FixtureReport r = fixture_dihedral();
    CHECK(r.ok());
    CHECK(r.checks.size() == 13);
    std::string t = r.text();
    CHECK(t.find("fixture dihedral group algebra at p=3: pass") == 0);
    CHECK(t.find("superalgebra grading") != std::string::npos);
    CHECK(t.find("R0R1R0 = 0") != std::string::npos);
    CHECK(t == fixture_dihedral().text());
}

TEST_CASE("nonmatrix checker on the two-generator algebra") {
    TheoremReport r = check_thm_nonmatrix_L(lie_example_d(), "example-2d");
    CHECK(r.completed);
    CHECK(r.equivalent);
    REQUIRE(r.conditions.size() == 3);
    CHECK(cond(r, "(iii)").value);
    CHECK(cond(r, "(iv)").value);
    CHECK(detail_has(cond(r, "(iv)"), "index 2"));
    CHECK(cond(r, "(i)").value);
    CHECK(cond(r, "(i)").witnessed);
    CHECK(detail_has(cond(r, "(i)"), "t=1"));
    CHECK(detail_has(cond(r, "(i)"), "nonmatrix=true"));
}

TEST_CASE("nonmatrix checker on sl2 refutes both clauses") {
    TheoremReport r = check_thm_nonmatrix_L(lie_sl2(3), "sl2-p3");
    CHECK(r.completed);
    CHECK(r.equivalent);
    REQUIRE(r.conditions.size() == 2);
    CHECK_FALSE(cond(r, "(iii)").value);
    CHECK_FALSE(cond(r, "(iv)").value);
    CHECK(detail_has(cond(r, "(iv)"), "non-nil element"));
}

TEST_CASE("nonmatrix checker falls back when the witness check exceeds budget") {
    TheoremReport r = check_thm_nonmatrix_L(lie_heisenberg(3), "heisenberg-p3");
    CHECK(r.completed);
    CHECK(r.equivalent);
    CHECK(cond(r, "(iii)").value);
    CHECK(detail_has(cond(r, "(iv)"), "index 3"));
    CHECK(cond(r, "(i)").value);
    CHECK_FALSE(cond(r, "(i)").witnessed);
    CHECK(detail_has(cond(r, "(i)"), "decided from the nil bound"));
}

TEST_CASE("nonmatrix checker on dihedral group algebras") {
    TheoremReport r3 = check_thm_nonmatrix_G(group_dihedral(6), 3, "dihedral6-p3");
    CHECK(r3.completed);
    CHECK(r3.equivalent);
    CHECK(cond(r3, "(iii)").value);
    CHECK(cond(r3, "(iv)").value);
    CHECK(cond(r3, "(i)").value);
    CHECK(cond(r3, "(i)").witnessed);

    TheoremReport r5 = check_thm_nonmatrix_G(group_dihedral(6), 5, "dihedral6-p5");
    CHECK(r5.completed);
    CHECK(r5.equivalent);
    REQUIRE(r5.conditions.size() == 2);
    CHECK_FALSE(cond(r5, "(iii)").value);
    CHECK_FALSE(cond(r5, "(iv)").value);
    CHECK(detail_has(cond(r5, "(iv)"), "non-nil element"));
}

TEST_CASE("engel checker on lie instances") {
    TheoremReport h = check_thm_engel(lie_heisenberg(3), "heisenberg-p3");
    CHECK(h.completed);
    CHECK(h.equivalent);
    CHECK(cond(h, "(ii)").value);
    CHECK(detail_has(cond(h, "(ii)"), "engel degree of the envelope: 3"));
    CHECK(cond(h, "(iii)").value);
    CHECK(cond(h, "(iv)").value);

    TheoremReport d = check_thm_engel(lie_example_d(), "example-2d");
    CHECK(d.completed);
    CHECK(d.equivalent);
    CHECK_FALSE(cond(d, "(ii)").value);
    CHECK_FALSE(cond(d, "(iii)").value);
    CHECK_FALSE(cond(d, "(iv)").value);
}

TEST_CASE("engel checker on group instances") {
    TheoremReport c = check_thm_engel(group_cyclic(4), 2, "cyclic4-p2");
    CHECK(c.equivalent);
    CHECK(cond(c, "(ii)").value);
    CHECK(detail_has(cond(c, "(ii)"), "engel degree of the group algebra: 1"));

    TheoremReport d = check_thm_engel(group_dihedral(6), 3, "dihedral6-p3");
    CHECK(d.equivalent);
    CHECK_FALSE(cond(d, "(ii)").value);
    CHECK_FALSE(cond(d, "(iii)").value);
    CHECK_FALSE(cond(d, "(iv)").value);

    TheoremReport q = check_thm_engel(group_quaternion(), 2, "quaternion-p2");
    CHECK(q.equivalent);
    CHECK(cond(q, "(ii)").value);
    CHECK(cond(q, "(iii)").value);
    CHECK(cond(q, "(iv)").value);
}

TEST_CASE("sandwich checker exhibits the embedded algebra at p=2") {
    TheoremReport r = check_thm_sandwich(lie_example_d(), 3, "example-2d");
    CHECK(r.completed);
    CHECK(r.equivalent);
    CHECK(cond(r, "(ii)").value);
    CHECK(detail_has(cond(r, "(ii)"), "least m = 1"));
    CHECK_FALSE(cond(r, "(iv)").value);
    CHECK(cond(r, "(dichotomy)").value);
    CHECK(cond(r, "(dichotomy)").witnessed);
    CHECK(detail_has(cond(r, "(dichotomy)"), "embedded copy"));
}

TEST_CASE("sandwich checker under the odd hypothesis") {
    TheoremReport h = check_thm_sandwich(lie_heisenberg(3), 3, "heisenberg-p3");
    CHECK(h.equivalent);
    CHECK(detail_has(cond(h, "(ii)"), "least m = 2"));
    CHECK(cond(h, "(iv)").value);
    CHECK(cond(h, "(hypothesis)").value);

    TheoremReport s = check_thm_sandwich(lie_sl2(3), 3, "sl2-p3");
    CHECK(s.equivalent);
    CHECK_FALSE(cond(s, "(ii)").value);
    CHECK_FALSE(cond(s, "(iv)").value);
}

TEST_CASE("sandwich checker exhibits the dihedral subgroup") {
    TheoremReport r = check_thm_sandwich(group_dihedral(6), 3, 3, "dihedral6-p3");
    CHECK(r.completed);
    CHECK(r.equivalent);
    CHECK(detail_has(cond(r, "(ii)"), "least m = 1"));
    CHECK_FALSE(cond(r, "(iv)").value);
    CHECK(cond(r, "(dichotomy)").value);
    CHECK(cond(r, "(dichotomy)").witnessed);
    CHECK(detail_has(cond(r, "(dichotomy)"), "dihedral subgroup of order 6"));
    CHECK(cond(r, "(torsion)").value);

    TheoremReport r5 = check_thm_sandwich(group_dihedral(6), 5, 3, "dihedral6-p5");
    CHECK(r5.equivalent);
    CHECK_FALSE(cond(r5, "(ii)").value);
    CHECK(cond(r5, "(dichotomy)").value);
    CHECK_FALSE(cond(r5, "(dichotomy)").witnessed);
    CHECK(detail_has(cond(r5, "(dichotomy)"), "not needed"));
}

TEST_CASE("standard catalog is validated and labeled") {
    InstanceCatalog c = standard_catalog();
    REQUIRE(c.lie.size() == 7);
    REQUIRE(c.groups.size() == 7);
    CHECK(c.lie[0].id == "example-2d");
    CHECK(c.lie[0].expect_nonmatrix);
    CHECK_FALSE(c.lie[0].expect_engel);
    CHECK(c.lie[3].id == "sl2-p3");
    CHECK_FALSE(c.lie[3].expect_nonmatrix);
    CHECK(c.groups[3].id == "dihedral6-p3");
    CHECK(c.groups[3].expect_nonmatrix);
    CHECK_FALSE(c.groups[3].expect_engel);
    for (const auto& inst : c.lie) CHECK(validate_rlie(inst.L).ok());
}

TEST_CASE("catalog run matches the expected classifications") {
    InstanceCatalog c = standard_catalog();
    std::vector<TheoremReport> reports = run_catalog(c);
    REQUIRE(reports.size() == 3 * (c.lie.size() + c.groups.size()));
    for (const auto& r : reports) {
        CAPTURE(r.theorem);
        CAPTURE(r.instance);
        CHECK(r.completed);
        CHECK(r.equivalent);
    }
    for (size_t i = 0; i < c.lie.size(); ++i) {
        const TheoremReport& nm = reports[3 * i];
        const TheoremReport& en = reports[3 * i + 1];
        CAPTURE(c.lie[i].id);
        CHECK(nm.theorem == "nonmatrix-envelope");
        CHECK(nm.instance == c.lie[i].id);
        CHECK(cond(nm, "(iii)").value == c.lie[i].expect_nonmatrix);
        CHECK(cond(nm, "(iv)").value == c.lie[i].expect_nonmatrix);
        CHECK(cond(en, "(ii)").value == c.lie[i].expect_engel);
    }
    const size_t off = 3 * c.lie.size();
    for (size_t j = 0; j < c.groups.size(); ++j) {
        const TheoremReport& nm = reports[off + 3 * j];
        const TheoremReport& en = reports[off + 3 * j + 1];
        CAPTURE(c.groups[j].id);
        CHECK(nm.theorem == "nonmatrix-group-algebra");
        CHECK(nm.instance == c.groups[j].id);
        CHECK(cond(nm, "(iii)").value == c.groups[j].expect_nonmatrix);
        CHECK(cond(nm, "(iv)").value == c.groups[j].expect_nonmatrix);
        CHECK(cond(en, "(ii)").value == c.groups[j].expect_engel);
    }
}

TEST_CASE("catalog run is deterministic and thread-agnostic") {
    InstanceCatalog small;
    small.lie.push_back({"example-2d", lie_example_d(), true, false});
    small.lie.push_back({"torus-p2", lie_abelian(2, 1, FpMat{{1}}), true, true});
    small.groups.push_back({"cyclic4-p2", group_cyclic(4), 2, true, true});
    small.groups.push_back({"dihedral6-p3", group_dihedral(6), 3, true, false});

    std::vector<TheoremReport> serial = run_catalog(small);
    setenv("PIALG_THREADS", "3", 1);
    std::vector<TheoremReport> threaded = run_catalog(small);
    unsetenv("PIALG_THREADS");

    REQUIRE(serial.size() == 12);
    REQUIRE(threaded.size() == 12);
    for (size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].text() == threaded[i].text());

    CHECK(serial[0].text() == check_thm_nonmatrix_L(lie_example_d(), "example-2d").text());
    CHECK(serial[2].text() == check_thm_sandwich(lie_example_d(), 3, "example-2d").text());
}

TEST_CASE("report rendering carries timing only on request") {
    TheoremReport r = check_thm_engel(group_cyclic(4), 2, "cyclic4-p2");
    CHECK(r.text().find("elapsed_ms") == std::string::npos);
    CHECK(r.text(true).find("elapsed_ms") != std::string::npos);
}
