#ifndef PIALG_FP_HPP
#define PIALG_FP_HPP

#include <cstdint>
#include <string>

#include "pialg/errors.hpp"

namespace pialg {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Residues mod a prime, with the modulus carried by the ring object rather
// than by every element.  Elements are plain uint32_t values in [0, p).
struct FpRing {
    uint32_t p;

    using Elem = uint32_t;

    explicit FpRing(uint32_t p_) : p(p_) {
        if (!is_prime_u32(p))
            throw usage_error("FpRing: modulus " + std::to_string(p_) + " is not prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<uint64_t>(a) * b) % p);
    }
    Elem pow(Elem a, uint64_t e) const {
        Elem r = one(), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    // p is prime, so Fermat gives the inverse.
    Elem inv(Elem a) const {
        if (a == 0) throw usage_error("FpRing: division by zero");
        return pow(a, p - 2);
    }
    bool is_zero(Elem a) const { return a == 0; }
    std::string to_string(Elem a) const { return std::to_string(a); }
};

} // namespace pialg

#endif
