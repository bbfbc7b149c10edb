#ifndef PIALG_GRPALG_HPP
#define PIALG_GRPALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pialg/algebra.hpp"

namespace pialg {

// Finite group as a validated Cayley table.  Element 0 is the identity.
struct GroupSpec {
    size_t order = 1;
    std::vector<uint32_t> table;   // row-major: table[i*order+j] = index of g_i g_j
    std::vector<uint32_t> inverse; // two-sided inverses
    std::vector<std::string> labels;

    uint32_t mul(uint32_t i, uint32_t j) const { return table[i * order + j]; }
    uint32_t inv(uint32_t i) const { return inverse[i]; }
    uint32_t pow(uint32_t i, uint64_t e) const;
};

// Validates permutation rows/columns, the identity at index 0, associativity
// on all triples (witness in the error message), and inverse consistency.
GroupSpec make_group(std::vector<uint32_t> table, std::vector<std::string> labels = {});

GroupSpec group_cyclic(size_t n);
GroupSpec group_dihedral(size_t order);     // order 2n: a^2 = b^n = (ab)^2 = 1
GroupSpec group_direct_product(const GroupSpec& g, const GroupSpec& h);
GroupSpec group_quaternion();               // order 8: {1,-1,i,-i,j,-j,k,-k}

// Sorted element-index set, closed under product and inverse.
struct Subgroup {
    std::vector<uint32_t> elems;
    bool is_normal = false;

    size_t order() const { return elems.size(); }
    bool contains(uint32_t i) const;
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

Subgroup subgroup_closure(const GroupSpec& g, std::vector<uint32_t> generators);
Subgroup derived_subgroup(const GroupSpec& g);
Subgroup center_group(const GroupSpec& g);

uint64_t element_order(const GroupSpec& g, uint32_t i);
uint64_t group_exponent(const GroupSpec& g);

// Every listed element has p-power order.
bool is_p_elements(const GroupSpec& g, const std::vector<uint32_t>& elems, uint32_t p);

// Length of the lower central series down to the trivial subgroup, or
// absent when it stabilizes above it.
std::optional<uint32_t> nilpotency_class(const GroupSpec& g);

struct GroupInfo {
    Subgroup derived;
    Subgroup center;
    uint64_t exponent = 1;
    std::optional<uint32_t> nilpotency_class;
};
GroupInfo group_info(const GroupSpec& g);

// Group algebra over GF(p): structure constants straight off the Cayley table.
AlgebraSpec build_kg(const GroupSpec& g, uint32_t p);

// span{g_i - g_0 : i != 0}; kernel of the augmentation, dim |G| - 1.
SubspaceBasis augmentation_ideal_kg(const AlgebraSpec& kg);

// For each h: does h^(p^(t+1)) land in the center, and does h^(2 p^t) = 1?
struct TorsionScan {
    bool has_2_torsion = false;
    struct Entry {
        uint32_t h;
        bool central_power;
        bool torsion_square;
    };
    std::vector<Entry> entries;
    bool all_covered = false; // every element satisfies at least one disjunct
};
TorsionScan torsion_scan(const GroupSpec& g, uint32_t p, uint32_t t);

// h^s g - g h^s - h^{2s} g + g h^{2s} + h^{2s} g h^s - h^s g h^{2s} with
// s = p^t, summed with signs in K[G]; returns a failing pair or nothing.
std::optional<std::pair<uint32_t, uint32_t>> six_term_witness(const GroupSpec& g, uint32_t p,
                                                              uint32_t t);

} // namespace pialg

#endif
