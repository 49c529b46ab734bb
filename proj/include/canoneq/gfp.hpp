#ifndef CANONEQ_GFP_HPP
#define CANONEQ_GFP_HPP

#include <cstdint>
#include <vector>

#include "canoneq/errors.hpp"

namespace canoneq {

/// Element of GF(p) carrying its modulus; p = 0 denotes an uninitialized
/// zero so that default construction works in generic code.
struct Fp {
    uint64_t v = 0;
    uint64_t p = 0;

    Fp() = default;
    Fp(uint64_t value, uint64_t prime) : v(value % prime), p(prime) {}

    friend Fp operator+(Fp a, Fp b) {
        uint64_t p = a.p ? a.p : b.p;
        uint64_t s = a.v + b.v;
        if (s >= p) s -= p;
        return Fp(s, p);
    }
    friend Fp operator-(Fp a, Fp b) {
        uint64_t p = a.p ? a.p : b.p;
        return Fp(a.v >= b.v ? a.v - b.v : a.v + p - b.v, p);
    }
    friend Fp operator*(Fp a, Fp b) {
        uint64_t p = a.p ? a.p : b.p;
        if (!p) return Fp();
        return Fp((uint64_t)((unsigned __int128)a.v * b.v % p), p);
    }
    Fp operator-() const { return p ? Fp(p - v, p) : Fp(); }
    bool operator==(const Fp& o) const { return v == o.v; }
    bool operator!=(const Fp& o) const { return v != o.v; }
};

inline uint64_t pow_mod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = (uint64_t)((unsigned __int128)acc * b % p);
        e >>= 1;
        b = (uint64_t)((unsigned __int128)b * b % p);
    }
    return acc;
}

inline Fp field_inv(const Fp& a) {
    if (a.v == 0) throw division_by_zero();
    return Fp(pow_mod(a.v, a.p - 2, a.p), a.p);
}
inline bool field_is_zero(const Fp& a) { return a.v == 0; }
inline Fp field_from_int(const Fp& ctx, long v) {
    long m = v % (long)ctx.p;
    if (m < 0) m += (long)ctx.p;
    return Fp((uint64_t)m, ctx.p);
}

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime p ≡ 1 (mod m), p > lower, avoiding divisors of `avoid`.
inline uint64_t find_prime_1_mod(uint64_t m, uint64_t lower, uint64_t avoid = 1) {
    uint64_t p = (lower / m) * m + 1;
    while (p <= lower) p += m;
    for (;; p += m) {
        if (!is_prime_u64(p)) continue;
        if (avoid % p == 0) continue;
        return p;
    }
}

inline std::vector<uint64_t> prime_factors_u64(uint64_t n) {
    std::vector<uint64_t> ps;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline uint64_t primitive_root(uint64_t p) {
    auto qs = prime_factors_u64(p - 1);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : qs)
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw internal_error("no primitive root found");
}

/// An element of exact multiplicative order n in GF(p); requires n | p-1.
inline uint64_t element_of_order(uint64_t n, uint64_t p) {
    if ((p - 1) % n != 0) throw error("element_of_order: n does not divide p-1");
    return pow_mod(primitive_root(p), (p - 1) / n, p);
}

} // namespace canoneq

#endif
