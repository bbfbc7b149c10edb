#ifndef PIALG_SUITE_HPP
#define PIALG_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pialg/grpalg.hpp"
#include "pialg/rlie.hpp"

namespace pialg {

// One checked condition of a theorem, reduced to desk scale.  `witnessed`
// marks existence clauses discharged by exhibiting an explicit identity
// rather than decided abstractly.
struct TheoremCondition {
    std::string label;
    std::string detail;
    bool value = false;
    bool witnessed = false;
};

struct TheoremReport {
    std::string theorem;
    std::string instance;
    std::string note;                       // which desk-scale reduction was taken
    std::vector<TheoremCondition> conditions;
    bool completed = true;                  // false when a resource limit interrupted
    bool equivalent = false;                // the asserted biconditional(s), as recorded
    double elapsed_ms = 0;

    // Canonical rendering; elapsed time only on request so that reports stay
    // byte-identical across runs.
    std::string text(bool timing = false) const;
};

struct FixtureCheck {
    std::string label;
    bool ok = false;
    std::string detail;
};

struct FixtureReport {
    std::string name;
    std::vector<FixtureCheck> checks;

    bool ok() const;
    std::string text() const;
};

struct LieInstance {
    std::string id;
    RLieSpec L;
    bool expect_nonmatrix;  // derived p-nil and gamma^2 of the envelope nil bounded
    bool expect_engel;      // envelope satisfies some engel identity
};

struct GroupInstance {
    std::string id;
    GroupSpec G;
    uint32_t p;
    bool expect_nonmatrix;
    bool expect_engel;
};

struct InstanceCatalog {
    std::vector<LieInstance> lie;
    std::vector<GroupInstance> groups;
};

// Small validated instances with their expected classifications.
InstanceCatalog standard_catalog();

// derived p-nil of bounded index  <=>  gamma^2 of the envelope nil of bounded
// index; a nonmatrix power-commutator identity witnesses the identity clause.
TheoremReport check_thm_nonmatrix_L(const RLieSpec& L, const std::string& id = "");
TheoremReport check_thm_nonmatrix_G(const GroupSpec& G, uint32_t p, const std::string& id = "");

// engel condition on the envelope  <=>  nilpotent with p-nil derived  <=>
// derived and center-quotient conditions.
TheoremReport check_thm_engel(const RLieSpec& L, const std::string& id = "");
TheoremReport check_thm_engel(const GroupSpec& G, uint32_t p, const std::string& id = "");

// sandwich identity on the augmentation ideal vs engel condition; outside the
// stated hypotheses the dichotomy (embedded 2-dimensional algebra, or a
// dihedral subgroup of order 2p) is exhibited instead.
TheoremReport check_thm_sandwich(const RLieSpec& L, uint32_t m_bound = 3,
                                 const std::string& id = "");
TheoremReport check_thm_sandwich(const GroupSpec& G, uint32_t p, uint32_t m_bound = 3,
                                 const std::string& id = "");

// Exact reproductions of the worked two-generator and dihedral computations.
FixtureReport fixture_2d();
FixtureReport fixture_dihedral();

// Every checker on every catalog instance, in deterministic order; fans out
// over PIALG_THREADS workers.
std::vector<TheoremReport> run_catalog(const InstanceCatalog& c);

} // namespace pialg

#endif
