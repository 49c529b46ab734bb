#ifndef CANONEQ_PARAMPOLY_HPP
#define CANONEQ_PARAMPOLY_HPP

#include <map>
#include <optional>

#include "canoneq/polyring.hpp"

namespace canoneq {

/// Polynomial in the parameters c_0..c_{m-1} with cyclotomic coefficients,
/// kept in canonical expanded form under a fixed grevlex order.
class CPoly {
  public:
    CPoly() = default;
    CPoly(const Cyclotomic& c);
    CPoly(long v) : CPoly(Cyclotomic(v)) {}
    static CPoly param(int idx);

    bool is_zero() const { return p_.is_zero(); }
    bool is_constant() const;
    Cyclotomic constant_value() const; // requires is_constant
    int nparams() const { return nparams_; }
    int degree() const { return p_.degree(); }
    std::vector<int> support() const;

    CPoly operator-() const;
    friend CPoly operator+(const CPoly& a, const CPoly& b);
    friend CPoly operator-(const CPoly& a, const CPoly& b);
    friend CPoly operator*(const CPoly& a, const CPoly& b);
    bool operator==(const CPoly& o) const;
    bool operator!=(const CPoly& o) const { return !(*this == o); }

    /// Structural total order for deterministic containers.
    static int cmp(const CPoly& a, const CPoly& b);

    const Poly<Cyclotomic>& rep() const { return p_; }
    const Cyclotomic& lead_coeff() const { return p_.lead().c; }
    const Monomial& lead_mono() const { return p_.lead().m; }
    /// Scaled so the leading cyclotomic coefficient is 1.
    CPoly monic() const;

    Cyclotomic eval(const std::vector<Cyclotomic>& values) const;
    CPoly substitute(const std::map<int, Cyclotomic>& assignment) const;

    /// Same polynomial with every parameter index increased by `by`.
    CPoly shifted(int by) const;

    /// Exact division; nullopt if den does not divide num.
    static std::optional<CPoly> try_divide(const CPoly& num, const CPoly& den);
    /// Remainder under division by the given monic rewrite rules.
    CPoly normal_form(const std::vector<CPoly>& rules) const;

    static const TermOrder& order();

  private:
    Poly<Cyclotomic> p_;
    int nparams_ = 0;

    static CPoly make(Poly<Cyclotomic> p, int nparams);
    static void align(CPoly& a, CPoly& b);
    friend struct CPolyAccess;
};

inline bool field_is_zero(const CPoly& a) { return a.is_zero(); }
/// Inversion only of nonzero constants; parametric leads must be handled by
/// the fraction-free paths.
inline CPoly field_inv(const CPoly& a) {
    if (!a.is_constant()) throw parametric_lead_error("cannot invert a parametric coefficient");
    return CPoly(a.constant_value().inverse());
}
inline CPoly field_from_int(const CPoly&, long v) { return CPoly(v); }

/// Monic irreducible-ish factors of h: cyclotomic scalars dropped, monomial
/// content split into single parameters, univariate quadratics and binomials
/// split when their roots exist in a cyclotomic field. Anything further is
/// returned whole.
std::vector<CPoly> factor_simple(const CPoly& h);

/// Polynomial in x with CPoly coefficients.
using PPoly = Poly<CPoly>;

/// Largest common CPoly factor of all coefficients that the simple
/// factorization can see; the quotient poly and the stripped factors.
PPoly ppoly_strip_content(PPoly f, std::vector<CPoly>* stripped);

/// Fraction-free S-polynomial: lc_g (l/lm_f) f - lc_f (l/lm_g) g.
PPoly ppoly_spair(const PPoly& f, const PPoly& g, const TermOrder& ord);

/// Fraction-free reduction of every reducible term. When `check_leads` is
/// set, a divisor whose leading c-coefficient is non-constant and not listed
/// in `assumed_nonzero` raises parametric_lead_error.
PPoly ppoly_reduce_ff(PPoly f, const std::vector<PPoly>& basis, const TermOrder& ord,
                      const std::vector<CPoly>* assumed_nonzero = nullptr,
                      bool check_leads = false);

/// Exact specialization; coefficients that vanish drop out.
Poly<Cyclotomic> ppoly_specialize(const PPoly& f, const std::vector<Cyclotomic>& values,
                                  const TermOrder& ord);

PPoly ppoly_from_poly(const Poly<Cyclotomic>& f);

PPoly ppoly_shift_params(const PPoly& f, int by);

/// Entry-wise rewrite of coefficients modulo equation rules.
PPoly ppoly_normal_form(const PPoly& f, const std::vector<CPoly>& rules, const TermOrder& ord);

} // namespace canoneq

#endif
