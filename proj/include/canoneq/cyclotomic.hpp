#ifndef CANONEQ_CYCLOTOMIC_HPP
#define CANONEQ_CYCLOTOMIC_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "canoneq/rational.hpp"

namespace canoneq {

/// Fixed-point complex value (re + i*im) / 2^scale, used for embeddings at
/// precision beyond double.
struct BigComplex {
    Int re, im;
    long scale = 0;

    std::complex<double> to_double() const;
};

/// An element of the cyclotomic field Q(zeta_n), stored in the canonical
/// power basis {zeta^0, ..., zeta^{phi(n)-1}} of Q[x]/Phi_n(x).
///
/// Canonical form: coefficients carry no trailing zeros, and the order is
/// minimized (the element is stored in the smallest Q(zeta_m) containing it,
/// m | n). Two elements are equal iff their storage is identical, so
/// equality is O(1) in the field degree.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1) {}
    Cyclotomic(long v);
    Cyclotomic(const Rational& v);
    Cyclotomic(const Int& v);

    /// zeta_n^k, exponents reduced mod n.
    static Cyclotomic root_of_unity(unsigned n, long k);
    /// Element of Q(zeta_n) from coefficients in the power basis (size <= phi(n)).
    static Cyclotomic from_basis(unsigned n, std::vector<Rational> coeffs);

    unsigned order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return order_ == 1; }
    bool is_one() const;
    Rational rational_value() const; // requires is_rational()
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(size_t e) const { return e < coeffs_.size() ? coeffs_[e] : Rational(0); }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

    Cyclotomic inverse() const; // throws division_by_zero on 0
    Cyclotomic conjugate() const; // field automorphism zeta -> zeta^-1
    Cyclotomic pow(long e) const;

    bool operator==(const Cyclotomic& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    /// Structural total order (order, then coefficients); used for map keys
    /// and deduplication, not related to the complex embedding.
    static int cmp_structural(const Cyclotomic& a, const Cyclotomic& b);

    /// Approximation under zeta_n -> exp(2*pi*i/n) with
    /// |approx - exact| < 2^(-precision+4) * (1 + |exact|).
    BigComplex approx(unsigned precision_bits) const;
    std::complex<double> approx_d() const { return approx(53).to_double(); }

    /// Deterministic comparison under the fixed embedding: real part first,
    /// then imaginary, at the given precision; falls back to the structural
    /// order when both parts agree to that precision.
    static int cmp_embedding(const Cyclotomic& a, const Cyclotomic& b,
                             unsigned precision_bits = 128);

    /// All solutions c of c^k = v expressible as (rational k-th root) * root
    /// of unity; nullopt when v is not of the form q * zeta^j or q^(1/k) is
    /// irrational. v = 0 yields {0}.
    static std::optional<std::vector<Cyclotomic>> kth_roots(const Cyclotomic& v, unsigned k);

    std::string str() const; // canonical text form, e.g. "-1/2*z8 + 3"

  private:
    unsigned order_;
    std::vector<Rational> coeffs_;

    // Normalizes a raw coefficient vector over the basis of Q(zeta_n):
    // trims zeros and descends to the minimal subfield.
    static Cyclotomic make(unsigned n, std::vector<Rational> basis_coeffs);
    static Cyclotomic from_power_vector(unsigned n, const std::vector<Rational>& powers);
};

unsigned euler_phi(unsigned n);
std::vector<unsigned> prime_factors(unsigned n);
const std::vector<Int>& cyclotomic_polynomial(unsigned n);

/// zeta_n approximated to the given scale (value = (re + i im)/2^scale).
BigComplex root_of_unity_approx(unsigned n, long k, long scale);

} // namespace canoneq

#endif
