#ifndef PIALG_LINALG_HPP
#define PIALG_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pialg/fp.hpp"

namespace pialg {

using FpVec = std::vector<uint32_t>;
using FpMat = std::vector<FpVec>;

inline bool vec_is_zero(const FpVec& v) {
    for (uint32_t x : v)
        if (x) return false;
    return true;
}

inline FpVec vec_add(const FpVec& a, const FpVec& b, const FpRing& F) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
    return r;
}

inline FpVec vec_sub(const FpVec& a, const FpVec& b, const FpRing& F) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
    return r;
}

inline FpVec vec_scale(const FpVec& a, uint32_t c, const FpRing& F) {
    FpVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    return r;
}

// In-place reduction to canonical reduced row echelon form.  Returns the
// pivot columns.  Zero rows are dropped, so the result is a canonical basis
// of the row span: equal spans give equal row lists.
inline std::vector<size_t> rref(FpMat& rows, const FpRing& F) {
    std::vector<size_t> pivots;
    if (rows.empty()) return pivots;
    const size_t ncols = rows[0].size();
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const uint32_t inv = F.inv(rows[r][c]);
        for (size_t j = c; j < ncols; ++j) rows[r][j] = F.mul(rows[r][j], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const uint32_t f = rows[i][c];
            for (size_t j = c; j < ncols; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Reduce v against RREF rows with known pivot columns; the remainder is zero
// iff v lies in the span.
inline FpVec reduce_against(FpVec v, const FpMat& rows, const std::vector<size_t>& pivots,
                            const FpRing& F) {
    for (size_t i = 0; i < rows.size(); ++i) {
        const uint32_t c = v[pivots[i]];
        if (c == 0) continue;
        for (size_t j = pivots[i]; j < v.size(); ++j)
            v[j] = F.sub(v[j], F.mul(c, rows[i][j]));
    }
    return v;
}

inline size_t rank_of(FpMat rows, const FpRing& F) {
    rref(rows, F);
    return rows.size();
}

// Canonical basis of {x : M x = 0}, rows of the result in RREF.
inline FpMat nullspace(FpMat m, size_t ncols, const FpRing& F) {
    std::vector<size_t> pivots = rref(m, F);
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    FpMat basis;
    for (size_t fc = 0; fc < ncols; ++fc) {
        if (is_pivot[fc]) continue;
        FpVec v(ncols, 0);
        v[fc] = 1;
        for (size_t i = 0; i < m.size(); ++i)
            v[pivots[i]] = F.neg(m[i][fc]);
        basis.push_back(std::move(v));
    }
    rref(basis, F);
    return basis;
}

inline FpMat mat_identity(size_t n) {
    FpMat m(n, FpVec(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline FpMat mat_mul(const FpMat& a, const FpMat& b, const FpRing& F) {
    const size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    FpMat r(n, FpVec(mcols, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            const uint32_t av = a[i][t];
            if (av == 0) continue;
            for (size_t j = 0; j < mcols; ++j)
                r[i][j] = F.add(r[i][j], F.mul(av, b[t][j]));
        }
    return r;
}

inline FpMat mat_pow(FpMat a, uint64_t e, const FpRing& F) {
    FpMat r = mat_identity(a.size());
    while (e) {
        if (e & 1) r = mat_mul(r, a, F);
        if (e >>= 1) a = mat_mul(a, a, F);
    }
    return r;
}

inline std::optional<FpMat> mat_inverse(const FpMat& a, const FpRing& F) {
    const size_t n = a.size();
    FpMat aug(n, FpVec(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j] % F.p;
        aug[i][n + i] = 1;
    }
    std::vector<size_t> pivots = rref(aug, F);
    if (aug.size() != n) return std::nullopt;
    for (size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    FpMat inv(n, FpVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

} // namespace pialg

#endif
