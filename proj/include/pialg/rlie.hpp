#ifndef PIALG_RLIE_HPP
#define PIALG_RLIE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pialg/algebra.hpp"

namespace pialg {

// Restricted Lie algebra over GF(p) on a fixed basis: bracket structure
// constants plus the image of each basis element under x -> x^[p].
// Shape problems throw; axiom failures are collected by validate_rlie.
struct RLieSpec {
    uint32_t p = 2;
    size_t dim = 0;
    std::vector<SparseFpVec> bracket; // row-major, bracket[i*dim+j] = [e_i, e_j]
    FpMat pmap;                       // pmap[i] = coordinates of e_i^[p]
    std::vector<std::string> labels;

    const SparseFpVec& br(size_t i, size_t j) const { return bracket[i * dim + j]; }
    FpRing field() const { return FpRing(p); }
};

// Checks table shapes and throws usage_error on malformed input; returns the
// spec with default labels filled in.  No axiom checking here.
RLieSpec make_rlie(uint32_t p, size_t dim, std::vector<SparseFpVec> bracket, FpMat pmap,
                   std::vector<std::string> labels = {});

struct RLieIssue {
    std::string axiom;           // "alternating", "antisymmetry", "jacobi", "pmap"
    std::vector<size_t> indices; // witness basis indices
    std::string detail;
};

struct RLieValidation {
    std::vector<RLieIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Axioms on basis elements: [e_i,e_i] = 0, antisymmetry, Jacobi on triples,
// and ad(e_i^[p]) = ad(e_i)^p as matrices.  Multilinearity carries these to
// all elements, and the basis-level p-map condition determines a unique
// restricted structure.
RLieValidation validate_rlie(const RLieSpec& L);

FpVec lie_bracket(const RLieSpec& L, const FpVec& x, const FpVec& y);

// Matrix of ad(x): column j holds the coordinates of [x, e_j].
FpMat ad_matrix(const RLieSpec& L, const FpVec& x);

// Frobenius-semilinear extension of the basis p-map: sum of c_i^p e_i^[p].
// For an ideal S of a valid algebra, x^[p] of x in S differs from this by
// bracket terms already absorbed in S, so row-wise images decide p-closure.
FpVec pmap_semilinear(const RLieSpec& L, const FpVec& x);

bool lie_check_subalgebra(const RLieSpec& L, const SubspaceBasis& s);

// [S, L] contained in S, and the p-map keeps S's rows inside S.
bool lie_check_restricted_ideal(const RLieSpec& L, const SubspaceBasis& s);

// Span of all basis brackets; an ideal by bilinearity.
SubspaceBasis derived_lie(const RLieSpec& L);

// Solution space of [x, e_j] = 0 for all j.
SubspaceBasis center_lie(const RLieSpec& L);

// L = G_1, G_{k+1} = [G_k, L]; returned up to (and excluding) the first
// repeat, so the last entry is where the series stabilizes.
std::vector<SubspaceBasis> lower_central(const RLieSpec& L);

// Closure of H under bracket-with-L and the semilinear p-map images of its
// rows.  Purely table-level, so it also serves as the mechanical semantics
// when the axioms fail.
SubspaceBasis restricted_ideal_closure(const RLieSpec& L, const SubspaceBasis& h);

// Closure of H under x -> x^[p] for every element x, p-th powers evaluated
// in u(L).  Requires a valid spec.
SubspaceBasis p_hull(const RLieSpec& L, const SubspaceBasis& h);

// Least t <= dim with x^(p^t) = 0 in u(L) for a generic element x of H
// (polynomial coefficients).  Concrete witnesses over GF(p^k) refute
// candidates before any generic power is formed.
std::optional<uint32_t> p_nil_bounded(const RLieSpec& L, const SubspaceBasis& h,
                                      uint64_t seed = 0);

// Quotient by a restricted ideal; basis is the standard complement of the
// ideal's pivot columns.
RLieSpec lie_quotient(const RLieSpec& L, const SubspaceBasis& s,
                      std::vector<std::string> labels = {});

// Built-in examples.
RLieSpec lie_example_d();                                   // p = 2: [a,b]=a, a^[2]=0, b^[2]=b
RLieSpec lie_abelian(uint32_t p, size_t n, FpMat pmap);     // zero bracket
RLieSpec lie_heisenberg(uint32_t p);                        // [x,y]=z, zero p-map
RLieSpec lie_sl2(uint32_t p);                               // {e,h,f}, e^[p]=f^[p]=0, h^[p]=h
RLieSpec lie_direct_sum(const RLieSpec& a, const RLieSpec& b);

} // namespace pialg

#endif
