#ifndef PIALG_ALGEBRA_HPP
#define PIALG_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pialg/fq.hpp"
#include "pialg/linalg.hpp"
#include "pialg/poly.hpp"

namespace pialg {

// Product of two basis elements as a sorted sparse coefficient vector.
using SparseFpVec = std::vector<std::pair<uint32_t, uint32_t>>;

inline SparseFpVec to_sparse(const FpVec& v) {
    SparseFpVec s;
    for (uint32_t i = 0; i < v.size(); ++i)
        if (v[i]) s.emplace_back(i, v[i]);
    return s;
}

inline FpVec to_dense(const SparseFpVec& s, size_t dim) {
    FpVec v(dim, 0);
    for (auto& [i, c] : s) v[i] = c;
    return v;
}

// Finite-dimensional associative algebra over GF(p) given by structure
// constants on a fixed basis.  Construct through make_algebra, which checks
// associativity on every basis triple and the unit axioms.
struct AlgebraSpec {
    uint32_t p = 2;
    size_t dim = 0;
    std::vector<SparseFpVec> table; // dim*dim entries, row-major: table[i*dim+j] = b_i * b_j
    std::optional<FpVec> unit;      // coordinates of 1, if the algebra is unital
    std::vector<std::string> labels;

    const SparseFpVec& entry(size_t i, size_t j) const { return table[i * dim + j]; }
    FpRing field() const { return FpRing(p); }
};

AlgebraSpec make_algebra(uint32_t p, size_t dim, std::vector<SparseFpVec> table,
                         std::optional<FpVec> unit, std::vector<std::string> labels);

// 2x2 matrix units e11, e12, e21, e22 over GF(p); basis index = 2*row + col.
AlgebraSpec m2_algebra(uint32_t p);

// Transport to the basis whose i-th vector has old coordinates basis_rows[i].
// Verdict-level operations are invariant under this.
AlgebraSpec change_basis(const AlgebraSpec& a, const FpMat& basis_rows,
                         std::vector<std::string> new_labels = {});

// ---------------------------------------------------------------------------
// Elements over an arbitrary coefficient ring (GF(p), GF(p^k), or polynomial)

template <class Ring>
std::vector<typename Ring::Elem> alg_zero(const AlgebraSpec& a, const Ring& r) {
    return std::vector<typename Ring::Elem>(a.dim, r.zero());
}

template <class Ring>
bool alg_is_zero(const Ring& r, const std::vector<typename Ring::Elem>& v) {
    for (auto& x : v)
        if (!r.is_zero(x)) return false;
    return true;
}

template <class Ring>
std::vector<typename Ring::Elem> alg_lift(const AlgebraSpec& a, const Ring& r,
                                          const FpVec& coords) {
    auto v = alg_zero(a, r);
    for (size_t i = 0; i < a.dim; ++i)
        if (coords[i]) v[i] = r.from_int(coords[i]);
    return v;
}

template <class Ring>
std::vector<typename Ring::Elem> alg_add(const Ring& r,
                                         const std::vector<typename Ring::Elem>& u,
                                         const std::vector<typename Ring::Elem>& v) {
    std::vector<typename Ring::Elem> w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = r.add(u[i], v[i]);
    return w;
}

template <class Ring>
std::vector<typename Ring::Elem> alg_sub(const Ring& r,
                                         const std::vector<typename Ring::Elem>& u,
                                         const std::vector<typename Ring::Elem>& v) {
    std::vector<typename Ring::Elem> w(u.size());
    for (size_t i = 0; i < u.size(); ++i) w[i] = r.sub(u[i], v[i]);
    return w;
}

template <class Ring>
std::vector<typename Ring::Elem> alg_scale(const Ring& r, const typename Ring::Elem& c,
                                           const std::vector<typename Ring::Elem>& v) {
    std::vector<typename Ring::Elem> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = r.mul(c, v[i]);
    return w;
}

// Bilinear product through the structure-constant table.
template <class Ring>
std::vector<typename Ring::Elem> alg_mul(const AlgebraSpec& a, const Ring& r,
                                         const std::vector<typename Ring::Elem>& u,
                                         const std::vector<typename Ring::Elem>& v) {
    auto w = alg_zero(a, r);
    for (size_t i = 0; i < a.dim; ++i) {
        if (r.is_zero(u[i])) continue;
        for (size_t j = 0; j < a.dim; ++j) {
            if (r.is_zero(v[j])) continue;
            const SparseFpVec& c = a.entry(i, j);
            if (c.empty()) continue;
            typename Ring::Elem uv = r.mul(u[i], v[j]);
            for (auto& [k, ck] : c) {
                if (ck == 1) w[k] = r.add(w[k], uv);
                else w[k] = r.add(w[k], r.mul(r.from_int(ck), uv));
            }
        }
    }
    return w;
}

template <class Ring>
std::vector<typename Ring::Elem> alg_commutator(const AlgebraSpec& a, const Ring& r,
                                                const std::vector<typename Ring::Elem>& u,
                                                const std::vector<typename Ring::Elem>& v) {
    return alg_sub(r, alg_mul(a, r, u, v), alg_mul(a, r, v, u));
}

// [x, y, y, ..., y] with n copies of y, bracketing to the left.
template <class Ring>
std::vector<typename Ring::Elem> alg_left_normed(const AlgebraSpec& a, const Ring& r,
                                                 const std::vector<typename Ring::Elem>& x,
                                                 const std::vector<typename Ring::Elem>& y,
                                                 size_t n) {
    auto w = x;
    for (size_t i = 0; i < n; ++i) w = alg_commutator(a, r, w, y);
    return w;
}

template <class Ring>
std::vector<typename Ring::Elem> alg_pow(const AlgebraSpec& a, const Ring& r,
                                         std::vector<typename Ring::Elem> x, uint64_t e) {
    if (e == 0) {
        if (!a.unit) throw usage_error("alg_pow: zeroth power needs a unital algebra");
        return alg_lift(a, r, *a.unit);
    }
    // left-to-right products; exponents here are small
    auto w = x;
    for (uint64_t i = 1; i < e; ++i) w = alg_mul(a, r, w, x);
    return w;
}

std::string element_to_string(const AlgebraSpec& a, const FpVec& v);
std::string element_to_string_raw(const std::vector<std::string>& labels, const FpVec& v);

// ---------------------------------------------------------------------------
// Subspaces

// Canonical subspace of K^dim: rows in reduced row echelon form.  Flags are
// set only by the validators below.
struct SubspaceBasis {
    size_t ambient_dim = 0;
    uint32_t p = 2;
    FpMat rows;                  // RREF, possibly empty
    std::vector<size_t> pivots;  // pivot column per row
    bool is_ideal = false;
    bool is_subalgebra = false;

    size_t dim() const { return rows.size(); }
    bool contains(const FpVec& v, const FpRing& F) const {
        return vec_is_zero(reduce_against(v, rows, pivots, F));
    }
    bool operator==(const SubspaceBasis& o) const {
        return ambient_dim == o.ambient_dim && p == o.p && rows == o.rows;
    }
};

SubspaceBasis span_of(uint32_t p, size_t ambient_dim, FpMat generators);
SubspaceBasis whole_space(uint32_t p, size_t dim);

// sum and product of subspaces (product = span of pairwise products)
SubspaceBasis subspace_sum(const SubspaceBasis& s, const SubspaceBasis& t);
SubspaceBasis subspace_product(const AlgebraSpec& a, const SubspaceBasis& s,
                               const SubspaceBasis& t);

bool check_mul_closed(const AlgebraSpec& a, const SubspaceBasis& s);
bool check_ideal(const AlgebraSpec& a, const SubspaceBasis& s);

// Smallest two-sided ideal containing the generators (fixed-point loop,
// re-echelonized each pass).
SubspaceBasis ideal_closure(const AlgebraSpec& a, const FpMat& generators);

// gamma^2: the ideal generated by all commutators of basis elements.
SubspaceBasis commutator_ideal(const AlgebraSpec& a);

SubspaceBasis center_of(const AlgebraSpec& a);

// Least c with I^c = 0 (products of c factors), or nullopt when the powers
// stabilize at a nonzero subspace.  Finite dimension makes the loop exact.
std::optional<uint32_t> nilpotency_index(const AlgebraSpec& a, const SubspaceBasis& ideal);

// Least n such that x^n vanishes identically for x a generic element of the
// ideal (coefficients over an infinite extension), searched for n <= dim+1.
// Concrete witnesses over GF(p^k) refute candidate exponents before any
// polynomial computation is attempted; a "present" answer is always
// certified by the generic power being identically zero.
std::optional<uint32_t> nil_bounded_index(const AlgebraSpec& a, const SubspaceBasis& ideal,
                                          uint64_t seed = 0);

FpMat transport_rows(const FpMat& rows, const FpMat& basis_rows, const FpRing& F);

} // namespace pialg

#endif
