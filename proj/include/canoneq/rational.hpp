#ifndef CANONEQ_RATIONAL_HPP
#define CANONEQ_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "canoneq/errors.hpp"

namespace canoneq {

using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw division_by_zero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Int& num, const Int& den) {
    if (den == 0) throw division_by_zero();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (base == 0) throw division_by_zero();
        Rational inv = Rational(1) / base;
        return rat_pow(inv, -e);
    }
    Rational num, den;
    mpz_pow_ui(num.get_num().get_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)e);
    mpz_pow_ui(den.get_den().get_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)e);
    num.get_den() = den.get_den();
    num.canonicalize();
    return num;
}

// Exact k-th root of a nonnegative integer, if it exists.
inline std::optional<Int> exact_root(const Int& a, unsigned long k) {
    if (a < 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

// Exact k-th root of a positive rational, if rational.
inline std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
    if (q <= 0) return std::nullopt;
    auto n = exact_root(Int(q.get_num()), k);
    if (!n) return std::nullopt;
    auto d = exact_root(Int(q.get_den()), k);
    if (!d) return std::nullopt;
    return rat(*n, *d);
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw error("integer does not fit in a machine word: " + a.get_str());
    return a.get_si();
}

inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw error("expected an integer, got " + q.get_str());
    return to_long(Int(q.get_num()));
}

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

} // namespace canoneq

#endif
