#ifndef PIALG_IDENTITY_HPP
#define PIALG_IDENTITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pialg/algebra.hpp"

namespace pialg {

// One signed word: coefficient in [1, p), word = variable indices.
struct IdTerm {
    uint32_t coeff = 1;
    std::vector<uint8_t> word;

    bool operator==(const IdTerm& o) const { return coeff == o.coeff && word == o.word; }
};

// Linear combination of noncommutative words over GF(p).  Canonical form:
// like terms combined, no zero coefficients, terms sorted by (degree, then
// word compared through the variable names), variables listed in order of
// first appearance in that sorted term list.  Printing and parsing are
// mutually inverse on canonical text.
struct Identity {
    uint32_t p = 2;
    std::vector<char> varnames; // index -> single-letter name
    std::vector<IdTerm> terms;
    std::string tag;

    size_t nvars() const { return varnames.size(); }
    uint32_t degree() const;

    bool operator==(const Identity& o) const {
        return p == o.p && varnames == o.varnames && terms == o.terms;
    }
};

// Canonicalizes (combines, sorts, relabels); throws usage_error if everything
// cancels.  Words must be nonempty and indices in range.
Identity make_identity_terms(uint32_t p, std::vector<char> names,
                             std::vector<IdTerm> terms, std::string tag);

// Named families.
Identity engel_identity(uint32_t m, uint32_t p);              // [x, y, ..., y]
Identity sandwich_identity(uint32_t m, uint32_t p);           // y^m [x,_m y] y^m
Identity semigroup_identity(const std::string& w1, const std::string& w2, uint32_t p);
Identity power_commutator_identity(uint32_t t, uint32_t p);   // ([x,y]z)^(p^t)
Identity power_diff_identity(uint64_t k, uint64_t l, uint32_t p); // x^k - x^l

// Grammar: variables a-z, juxtaposition, ^n, [w,...] left-normed commutator,
// integer coefficients, +/-, and "w1 = w2" as w1 - w2.  Errors carry the
// offending position.
Identity parse_identity(const std::string& text, uint32_t p);
std::string identity_to_string(const Identity& f);

bool is_multilinear(const Identity& f);
std::vector<Identity> multihomogeneous_components(const Identity& f);

// Equality after some bijective renaming of variables.
bool identity_equivalent(const Identity& f, const Identity& g);

enum class CheckMode { automatic, basis_multilinear, generic, prefilter_generic };

struct CheckReport {
    bool holds = false;
    std::string mode_used;
    uint32_t p = 2;
    uint32_t witness_k = 1;                         // witness entries in GF(p^k)
    std::vector<std::vector<FqRing::Elem>> witness; // per variable, ambient coords
    std::string summary;
};

// Does f vanish for every substitution from the domain span, coefficients
// drawn from an arbitrary infinite field of characteristic p?  Ground truth
// is generic substitution x_i = sum_j t_ij d_j with polynomial coefficient
// vanishing; a "fails" verdict always carries a re-verified concrete witness.
CheckReport holds_on(const AlgebraSpec& a, const SubspaceBasis& domain, const Identity& f,
                     CheckMode mode = CheckMode::automatic, uint64_t seed = 0);

// f fails on generic 2x2 matrices.
bool is_nonmatrix(const Identity& f, uint32_t p);

// Least m <= dim(domain) with [x,_m y] = 0 on the domain, via powers of the
// generic right-bracket operator; concrete pairs refute before any
// polynomial matrix power is formed.
std::optional<uint32_t> engel_degree(const AlgebraSpec& a, const SubspaceBasis& domain,
                                     uint64_t seed = 0);

// Substitute [x_i, y_i] z_i for each variable, fresh names allocated
// alphabetically around the ones in use.
Identity hull_transform(const Identity& f);

// All held two-word identities w1 - w2 of equal multidegree, degree bounded
// by max_degree, over at most max_vars variables; each word is evaluated
// generically once and words are bucketed by value.  Deduplicated under
// simultaneous renaming, canonically ordered.
std::vector<Identity> semigroup_search(const AlgebraSpec& a, const SubspaceBasis& domain,
                                       uint32_t max_degree = 4, uint32_t max_vars = 4);

} // namespace pialg

#endif
