#ifndef PIALG_FQ_HPP
#define PIALG_FQ_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pialg/fp.hpp"

namespace pialg {

// Univariate polynomials over GF(p) as coefficient vectors c0..cd with the
// trailing (leading-degree) zeros stripped.  Only used to build and validate
// extension-field moduli; field elements themselves live in FqRing below.
namespace upoly {

using UPoly = std::vector<uint32_t>;

inline void normalize(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline UPoly mul(const UPoly& a, const UPoly& b, const FpRing& F) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    normalize(r);
    return r;
}

inline UPoly mod(UPoly a, const UPoly& m, const FpRing& F) {
    normalize(a);
    const size_t dm = m.size() - 1;
    const uint32_t lead_inv = F.inv(m.back());
    while (a.size() > dm) {
        const uint32_t c = F.mul(a.back(), lead_inv);
        const size_t sh = a.size() - 1 - dm;
        for (size_t i = 0; i < m.size(); ++i)
            a[sh + i] = F.sub(a[sh + i], F.mul(c, m[i]));
        normalize(a);
    }
    return a;
}

inline UPoly gcd(UPoly a, UPoly b, const FpRing& F) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        UPoly r = mod(a, b, F);
        a = b;
        b = r;
    }
    return a;
}

// x^e mod m by square and multiply.
inline UPoly pow_x(uint64_t e, const UPoly& m, const FpRing& F) {
    UPoly result{1};
    UPoly base = mod(UPoly{0, 1}, m, F);
    while (e) {
        if (e & 1) result = mod(mul(result, base, F), m, F);
        base = mod(mul(base, base, F), m, F);
        e >>= 1;
    }
    return result;
}

// Rabin's criterion: m (monic, degree k) is irreducible over GF(p) iff
// x^(p^k) = x mod m and gcd(x^(p^(k/l)) - x, m) = 1 for each prime l | k.
inline bool irreducible(const UPoly& m, uint32_t p) {
    FpRing F(p);
    const size_t k = m.size() - 1;
    if (k == 0) return false;
    uint64_t q = 1;
    for (size_t i = 0; i < k; ++i) q *= p;
    UPoly t = pow_x(q, m, F);
    UPoly x = mod(UPoly{0, 1}, m, F);
    if (t != x) return false;

    std::vector<size_t> prime_divs;
    size_t n = k;
    for (size_t d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            if (prime_divs.empty() || prime_divs.back() != d) prime_divs.push_back(d);
            n /= d;
        }
    if (n > 1) prime_divs.push_back(n);

    for (size_t l : prime_divs) {
        uint64_t e = 1;
        for (size_t i = 0; i < k / l; ++i) e *= p;
        UPoly diff = pow_x(e, m, F);
        // subtract x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = F.sub(diff[1], 1);
        normalize(diff);
        UPoly g = gcd(m, diff, F);
        if (g.size() > 1) return false;
    }
    return true;
}

} // namespace upoly

inline constexpr uint32_t kFqMaxPrime = 13;
inline constexpr uint32_t kFqMaxDegree = 6;

// Fixed modulus for GF(p^k): the lexicographically smallest monic irreducible
// z^k + c_{k-1} z^{k-1} + ... + c_0, ordered by (c_0, ..., c_{k-1}).
// Deterministic, so the table is reproducible across runs and builds.
inline upoly::UPoly fq_modulus(uint32_t p, uint32_t k) {
    if (p > kFqMaxPrime || !is_prime_u32(p))
        throw usage_error("fq_modulus: prime out of table range (p <= 13)");
    if (k < 1 || k > kFqMaxDegree)
        throw usage_error("fq_modulus: degree out of table range (1 <= k <= 6)");
    upoly::UPoly m(k + 1, 0);
    m[k] = 1;
    // odometer over (c_0, ..., c_{k-1}) in lexicographic order
    while (true) {
        if (upoly::irreducible(m, p)) return m;
        size_t i = k;
        do {
            --i;
            m[i] += 1;
            if (m[i] < p) break;
            m[i] = 0;
        } while (i > 0);
        if (i == 0 && m[0] == 0)
            throw resource_error("fq_modulus: no irreducible found (unreachable)");
    }
}

// GF(p^k) = GF(p)[z]/(m(z)).  Elements are coefficient tuples c0..c_{k-1};
// slots at index >= k are kept zero.
struct FqRing {
    FpRing base;
    uint32_t k;
    std::array<uint32_t, kFqMaxDegree + 1> mod{}; // monic, degree k

    using Elem = std::array<uint32_t, kFqMaxDegree>;

    FqRing(uint32_t p_, uint32_t k_) : base(p_), k(k_) {
        upoly::UPoly m = fq_modulus(p_, k_);
        for (size_t i = 0; i < m.size(); ++i) mod[i] = m[i];
    }

    // Caller-supplied modulus (must be monic of degree k and irreducible).
    FqRing(uint32_t p_, uint32_t k_, const upoly::UPoly& m) : base(p_), k(k_) {
        if (k_ < 1 || k_ > kFqMaxDegree)
            throw usage_error("FqRing: 1 <= k <= 6 required");
        if (m.size() != k_ + 1 || m.back() != 1)
            throw usage_error("FqRing: modulus must be monic of degree k");
        if (!upoly::irreducible(m, p_))
            throw usage_error("FqRing: modulus is reducible");
        for (size_t i = 0; i < m.size(); ++i) mod[i] = m[i];
    }

    uint32_t p() const { return base.p; }
    uint64_t order() const {
        uint64_t q = 1;
        for (uint32_t i = 0; i < k; ++i) q *= base.p;
        return q;
    }

    Elem zero() const { return Elem{}; }
    Elem one() const {
        Elem e{};
        e[0] = base.one();
        return e;
    }
    Elem from_int(int64_t v) const {
        Elem e{};
        e[0] = base.from_int(v);
        return e;
    }
    // the residue class of z (generator of the extension over GF(p))
    Elem gen() const {
        Elem e{};
        if (k == 1) {
            // GF(p): z reduces to -c0
            e[0] = base.neg(mod[0]);
        } else {
            e[1] = 1;
        }
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r{};
        for (uint32_t i = 0; i < k; ++i) r[i] = base.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r{};
        for (uint32_t i = 0; i < k; ++i) r[i] = base.sub(a[i], b[i]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r{};
        for (uint32_t i = 0; i < k; ++i) r[i] = base.neg(a[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::array<uint32_t, 2 * kFqMaxDegree> full{};
        for (uint32_t i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            for (uint32_t j = 0; j < k; ++j)
                full[i + j] = base.add(full[i + j], base.mul(a[i], b[j]));
        }
        // reduce degrees k..2k-2 using z^k = -(c_{k-1} z^{k-1} + ... + c_0)
        for (uint32_t d = 2 * k - 2; d + 1 > k; --d) {
            const uint32_t c = full[d];
            if (c == 0) continue;
            full[d] = 0;
            for (uint32_t i = 0; i < k; ++i)
                full[d - k + i] = base.sub(full[d - k + i], base.mul(c, mod[i]));
        }
        Elem r{};
        for (uint32_t i = 0; i < k; ++i) r[i] = full[i];
        return r;
    }
    Elem pow(Elem a, uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(const Elem& a) const {
        for (uint32_t i = 0; i < k; ++i)
            if (a[i] != 0) return false;
        return true;
    }
    std::string to_string(const Elem& a) const {
        std::string s;
        for (uint32_t i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += std::to_string(a[i]);
            } else {
                if (a[i] != 1) s += std::to_string(a[i]) + "*";
                s += (i == 1) ? "z" : "z^" + std::to_string(i);
            }
        }
        return s.empty() ? "0" : s;
    }
};

} // namespace pialg

#endif
