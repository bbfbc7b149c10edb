#ifndef PIALG_POLY_HPP
#define PIALG_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pialg/fp.hpp"

namespace pialg {

inline uint32_t indeterminate_budget() {
    if (const char* s = std::getenv("PIALG_INDET_BUDGET")) {
        long v = std::atol(s);
        if (v >= 1) return static_cast<uint32_t>(v);
    }
    return 64;
}

// Exponent vector stored sparsely: (variable, exponent) pairs, sorted by
// variable, exponents > 0.  The empty list is the constant monomial.
using Mono = std::vector<std::pair<uint16_t, uint16_t>>;

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) r.push_back(a[i++]);
        else if (b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, static_cast<uint16_t>(a[i].second + b[j].second));
            ++i; ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

inline uint32_t mono_degree(const Mono& m) {
    uint32_t d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

// Sparse multivariate polynomial over GF(p) in a fixed number of
// indeterminates.  Terms are kept sorted by monomial with no zero
// coefficients, so equality is structural and is_zero is emptiness.
class Poly {
public:
    uint32_t p = 2;
    uint32_t nvars = 0;
    std::vector<std::pair<Mono, uint32_t>> terms; // sorted by Mono, coeff in [1,p)

    Poly() = default;
    Poly(uint32_t p_, uint32_t nvars_) : p(p_), nvars(nvars_) {}

    bool is_zero() const { return terms.empty(); }

    uint32_t total_degree() const {
        uint32_t d = 0;
        for (auto& [m, c] : terms) d = std::max(d, mono_degree(m));
        return d;
    }

    size_t term_count() const { return terms.size(); }

    static Poly constant(uint32_t p, uint32_t nvars, uint32_t c) {
        Poly r(p, nvars);
        c %= p;
        if (c) r.terms.emplace_back(Mono{}, c);
        return r;
    }

    static Poly variable(uint32_t p, uint32_t nvars, uint32_t i, uint32_t coeff = 1) {
        Poly r(p, nvars);
        coeff %= p;
        if (coeff)
            r.terms.emplace_back(Mono{{static_cast<uint16_t>(i), 1}}, coeff);
        return r;
    }

    bool operator==(const Poly& o) const {
        return p == o.p && nvars == o.nvars && terms == o.terms;
    }
    bool operator<(const Poly& o) const { return terms < o.terms; }
};

inline void poly_compat(const Poly& a, const Poly& b) {
    if (a.p != b.p || a.nvars != b.nvars)
        throw usage_error("poly: mismatched ring (p or variable count)");
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    poly_compat(a, b);
    Poly r(a.p, a.nvars);
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        if (a.terms[i].first < b.terms[j].first) r.terms.push_back(a.terms[i++]);
        else if (b.terms[j].first < a.terms[i].first) r.terms.push_back(b.terms[j++]);
        else {
            uint32_t c = a.terms[i].second + b.terms[j].second;
            if (c >= a.p) c -= a.p;
            if (c) r.terms.emplace_back(a.terms[i].first, c);
            ++i; ++j;
        }
    }
    while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
    return r;
}

inline Poly poly_neg(const Poly& a) {
    Poly r(a.p, a.nvars);
    r.terms.reserve(a.terms.size());
    for (auto& [m, c] : a.terms) r.terms.emplace_back(m, a.p - c);
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_scale(const Poly& a, uint32_t c) {
    c %= a.p;
    Poly r(a.p, a.nvars);
    if (c == 0) return r;
    r.terms.reserve(a.terms.size());
    for (auto& [m, k] : a.terms) {
        uint32_t v = static_cast<uint32_t>((static_cast<uint64_t>(k) * c) % a.p);
        if (v) r.terms.emplace_back(m, v);
    }
    return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    poly_compat(a, b);
    Poly r(a.p, a.nvars);
    if (a.terms.empty() || b.terms.empty()) return r;

    // one-term factors keep sortedness work trivial and are the common case
    // when multiplying by a generic-element coordinate
    const uint64_t pairs = static_cast<uint64_t>(a.terms.size()) * b.terms.size();
    if (pairs > (1ull << 27))
        throw resource_error("poly_mul: term-pair count " + std::to_string(pairs) +
                             " exceeds budget");

    std::vector<std::pair<Mono, uint32_t>> prod;
    prod.reserve(pairs);
    for (auto& [ma, ca] : a.terms)
        for (auto& [mb, cb] : b.terms) {
            uint32_t c = static_cast<uint32_t>((static_cast<uint64_t>(ca) * cb) % a.p);
            if (c) prod.emplace_back(mono_mul(ma, mb), c);
        }
    std::sort(prod.begin(), prod.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [m, c] : prod) {
        if (!r.terms.empty() && r.terms.back().first == m) {
            uint32_t s = r.terms.back().second + c;
            if (s >= a.p) s -= a.p;
            if (s) r.terms.back().second = s;
            else r.terms.pop_back();
        } else {
            r.terms.emplace_back(std::move(m), c);
        }
    }
    return r;
}

inline Poly poly_pow(const Poly& a, uint64_t e) {
    Poly r = Poly::constant(a.p, a.nvars, 1);
    Poly b = a;
    while (e) {
        if (e & 1) r = poly_mul(r, b);
        if (e >>= 1) b = poly_mul(b, b);
    }
    return r;
}

// Evaluate at a point whose entries live in any coefficient ring R
// (GF(p) via FpRing or GF(p^k) via FqRing).  Ring characteristic must be p.
template <class R>
typename R::Elem poly_eval(const Poly& a, const R& ring,
                           const std::vector<typename R::Elem>& point) {
    if (point.size() < a.nvars)
        throw usage_error("poly_eval: point has too few coordinates");
    typename R::Elem acc = ring.zero();
    for (auto& [m, c] : a.terms) {
        typename R::Elem t = ring.from_int(c);
        for (auto& [v, e] : m)
            for (uint16_t i = 0; i < e; ++i) t = ring.mul(t, point[v]);
        acc = ring.add(acc, t);
    }
    return acc;
}

inline std::string poly_to_string(const Poly& a) {
    if (a.terms.empty()) return "0";
    std::string s;
    for (auto& [m, c] : a.terms) {
        if (!s.empty()) s += " + ";
        std::string t;
        if (c != 1 || m.empty()) t = std::to_string(c);
        for (auto& [v, e] : m) {
            if (!t.empty()) t += "*";
            t += "t" + std::to_string(v);
            if (e > 1) t += "^" + std::to_string(e);
        }
        s += t;
    }
    return s;
}

// Polynomial coefficient ring for generic-element computations.  Creation is
// where the indeterminate budget is enforced.
struct PolyRing {
    uint32_t p;
    uint32_t nvars;

    using Elem = Poly;

    PolyRing(uint32_t p_, uint32_t nvars_) : p(p_), nvars(nvars_) {
        if (!is_prime_u32(p_))
            throw usage_error("PolyRing: modulus is not prime");
        const uint32_t budget = indeterminate_budget();
        if (nvars_ > budget)
            throw resource_error("PolyRing: " + std::to_string(nvars_) +
                                 " indeterminates exceed budget " + std::to_string(budget) +
                                 " (set PIALG_INDET_BUDGET to raise)");
    }

    Elem zero() const { return Poly(p, nvars); }
    Elem one() const { return Poly::constant(p, nvars, 1); }
    Elem from_int(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return Poly::constant(p, nvars, static_cast<uint32_t>(r));
    }
    Elem gen(uint32_t i) const {
        if (i >= nvars) throw usage_error("PolyRing: variable index out of range");
        return Poly::variable(p, nvars, i);
    }
    Elem add(const Elem& a, const Elem& b) const { return poly_add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(a, b); }
    Elem neg(const Elem& a) const { return poly_neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_mul(a, b); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    std::string to_string(const Elem& a) const { return poly_to_string(a); }
};

} // namespace pialg

#endif
