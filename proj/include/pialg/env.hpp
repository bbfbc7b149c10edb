#ifndef PIALG_ENV_HPP
#define PIALG_ENV_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pialg/rlie.hpp"

namespace pialg {

// log2 bound on the dimension of constructed envelopes: dim = p^n must
// satisfy n*log2(p) <= limit.  Overridable via PIALG_ENV_LIMIT.
uint32_t env_dim_limit();

// Associative envelope of a restricted Lie algebra.  Basis monomials are
// e_0^{a_0} ... e_{n-1}^{a_{n-1}} with 0 <= a_i < p, indexed by
// sum a_i * p^i, so index p^i is the embedded generator e_i and index 0 is 1.
struct EnvAlgebra {
    RLieSpec L;
    AlgebraSpec A;                            // dim p^n, fully validated
    std::vector<std::vector<uint16_t>> expo;  // exponent vector per monomial

    size_t gen_mono(size_t i) const;          // p^i
};

// Straightening: products of basis monomials are rewritten with
// e_j e_i = e_i e_j + [e_j, e_i] (j > i) and e_i^p = e_i^[p], which
// terminates by the (degree, inversion count) measure.  The resulting
// structure constants are re-validated for associativity.
EnvAlgebra build_u(const RLieSpec& L);

FpVec env_embed(const EnvAlgebra& u, const FpVec& x_lie);

// Inverse of env_embed on its image; throws if any coordinate sits on a
// monomial of degree != 1.
FpVec env_project_lie(const EnvAlgebra& u, const FpVec& x_env);

// Augmentation: the coefficient of the unit monomial.
uint32_t env_eps(const FpVec& x_env);

// Kernel of the augmentation: all monomials of positive degree.
SubspaceBasis augmentation_ideal_env(const EnvAlgebra& u);

// x^[p] for an arbitrary element of L, evaluated as x^p inside u(L).
FpVec lie_pmap_general(const EnvAlgebra& u, const FpVec& x_lie);

// u(L) as a free left u(A)-module of rank q over the complement monomials,
// with right multiplication giving q x q matrices over u(A).  The basis of L
// is reordered so A's basis comes first.
struct RegularRep {
    RLieSpec lad;       // adapted copy of L (A first, complement after)
    FpMat adapted_rows; // adapted basis in original coordinates
    EnvAlgebra u;       // envelope of lad
    EnvAlgebra ua;      // envelope of A with its induced structure
    size_t adim = 0;    // dim A
    size_t q = 0;       // p^(n - adim) complement monomials

    // original L coordinates -> u coordinates of the embedded element
    FpVec embed_original(const FpVec& x_lie_original) const;

    // matrix (x_{vm}) with v*x = sum_m x_{vm} * m over complement monomials;
    // entries are ua coordinate vectors
    std::vector<std::vector<FpVec>> matrix_of(const FpVec& x_env) const;
};

RegularRep regular_rep_over(const RLieSpec& L, const SubspaceBasis& a);

// Entry-wise product of two representation matrices over ua.
std::vector<std::vector<FpVec>> rep_mat_mul(const EnvAlgebra& ua,
                                            const std::vector<std::vector<FpVec>>& x,
                                            const std::vector<std::vector<FpVec>>& y);

} // namespace pialg

#endif
