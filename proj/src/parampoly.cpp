#include "canoneq/parampoly.hpp"

#include <algorithm>

namespace canoneq {

const TermOrder& CPoly::order() {
    static TermOrder ord{OrderKind::grevlex};
    return ord;
}

CPoly::CPoly(const Cyclotomic& c) {
    if (!c.is_zero()) p_.terms.push_back({Monomial::one(0), c});
}

CPoly CPoly::param(int idx) {
    CPoly r;
    r.nparams_ = idx + 1;
    r.p_.terms.push_back({Monomial::var(idx, idx + 1), Cyclotomic(1)});
    return r;
}

CPoly CPoly::make(Poly<Cyclotomic> p, int nparams) {
    CPoly r;
    r.p_ = std::move(p);
    r.nparams_ = nparams;
    return r;
}

void CPoly::align(CPoly& a, CPoly& b) {
    int n = std::max(a.nparams_, b.nparams_);
    for (auto& t : a.p_.terms) t.m.e.resize(n, 0);
    for (auto& t : b.p_.terms) t.m.e.resize(n, 0);
    a.nparams_ = b.nparams_ = n;
}

bool CPoly::is_constant() const {
    return p_.is_zero() || (p_.terms.size() == 1 && p_.terms[0].m.deg() == 0);
}

Cyclotomic CPoly::constant_value() const {
    if (p_.is_zero()) return Cyclotomic();
    if (!is_constant()) throw error("CPoly is not constant");
    return p_.terms[0].c;
}

std::vector<int> CPoly::support() const {
    std::vector<int> s;
    for (int v = 0; v < nparams_; ++v)
        for (const auto& t : p_.terms)
            if (t.m.e.size() > (size_t)v && t.m.e[v] > 0) {
                s.push_back(v);
                break;
            }
    return s;
}

CPoly CPoly::operator-() const { return make(poly_neg(p_), nparams_); }

CPoly operator+(const CPoly& a, const CPoly& b) {
    CPoly x = a, y = b;
    CPoly::align(x, y);
    return CPoly::make(poly_add(x.p_, y.p_, CPoly::order()), x.nparams_);
}
CPoly operator-(const CPoly& a, const CPoly& b) { return a + (-b); }
CPoly operator*(const CPoly& a, const CPoly& b) {
    CPoly x = a, y = b;
    CPoly::align(x, y);
    return CPoly::make(poly_mul(x.p_, y.p_, CPoly::order()), x.nparams_);
}

bool CPoly::operator==(const CPoly& o) const {
    CPoly x = *this, y = o;
    align(x, y);
    return poly_sub(x.p_, y.p_, order()).is_zero();
}

int CPoly::cmp(const CPoly& a, const CPoly& b) {
    CPoly x = a, y = b;
    align(x, y);
    size_t n = std::min(x.p_.terms.size(), y.p_.terms.size());
    for (size_t i = 0; i < n; ++i) {
        int c = order().cmp(x.p_.terms[i].m, y.p_.terms[i].m);
        if (c != 0) return c;
        c = Cyclotomic::cmp_structural(x.p_.terms[i].c, y.p_.terms[i].c);
        if (c != 0) return c;
    }
    if (x.p_.terms.size() != y.p_.terms.size())
        return x.p_.terms.size() < y.p_.terms.size() ? -1 : 1;
    return 0;
}

CPoly CPoly::monic() const {
    if (is_zero()) return *this;
    return make(poly_scale(p_, lead_coeff().inverse()), nparams_);
}

Cyclotomic CPoly::eval(const std::vector<Cyclotomic>& values) const {
    Cyclotomic acc;
    for (const auto& t : p_.terms) {
        Cyclotomic term = t.c;
        for (size_t v = 0; v < t.m.e.size(); ++v)
            for (int k = 0; k < t.m.e[v]; ++k) {
                if (v >= values.size()) throw error("CPoly eval: missing parameter value");
                term *= values[v];
            }
        acc += term;
    }
    return acc;
}

CPoly CPoly::substitute(const std::map<int, Cyclotomic>& assignment) const {
    CPoly acc;
    for (const auto& t : p_.terms) {
        CPoly term(t.c);
        for (size_t v = 0; v < t.m.e.size(); ++v) {
            for (int k = 0; k < t.m.e[v]; ++k) {
                auto it = assignment.find((int)v);
                term = term * (it != assignment.end() ? CPoly(it->second) : CPoly::param((int)v));
            }
        }
        acc = acc + term;
    }
    return acc;
}

CPoly CPoly::shifted(int by) const {
    CPoly r;
    r.nparams_ = nparams_ + by;
    for (const auto& t : p_.terms) {
        std::vector<int> e((size_t)r.nparams_, 0);
        for (size_t v = 0; v < t.m.e.size(); ++v) e[v + (size_t)by] = t.m.e[v];
        r.p_.terms.push_back({Monomial{std::move(e)}, t.c});
    }
    r.p_ = poly_normalize(std::move(r.p_.terms), order());
    return r;
}

std::optional<CPoly> CPoly::try_divide(const CPoly& num, const CPoly& den) {
    if (den.is_zero()) throw division_by_zero();
    if (num.is_zero()) return CPoly();
    CPoly n = num, d = den;
    align(n, d);
    Poly<Cyclotomic> rem = n.p_, quot;
    Cyclotomic dlc_inv = d.p_.lead().c.inverse();
    while (!rem.is_zero()) {
        if (!d.p_.lead().m.divides(rem.lead().m)) return std::nullopt;
        Cyclotomic c = rem.lead().c * dlc_inv;
        Monomial q = rem.lead().m.div(d.p_.lead().m);
        quot.terms.push_back({q, c});
        rem = poly_sub(rem, poly_mul_term(d.p_, q, c), order());
    }
    return make(poly_normalize(std::move(quot.terms), order()), n.nparams_);
}

CPoly CPoly::normal_form(const std::vector<CPoly>& rules) const {
    CPoly f = *this;
    bool changed = true;
    while (changed && !f.is_zero()) {
        changed = false;
        for (const auto& r : rules) {
            if (r.is_zero()) continue;
            CPoly rr = r.monic(), ff = f;
            align(ff, rr);
            Poly<Cyclotomic> cur = ff.p_;
            bool hit = true;
            while (hit && !cur.is_zero()) {
                hit = false;
                for (const auto& t : cur.terms) {
                    if (rr.p_.lead().m.divides(t.m)) {
                        Cyclotomic c = t.c;
                        Monomial q = t.m.div(rr.p_.lead().m);
                        cur = poly_sub(cur, poly_mul_term(rr.p_, q, c), order());
                        hit = true;
                        break;
                    }
                }
                if (hit) changed = true;
            }
            f = make(cur, ff.nparams_);
        }
    }
    return f;
}

std::vector<CPoly> factor_simple(const CPoly& h) {
    std::vector<CPoly> factors;
    if (h.is_zero() || h.is_constant()) return factors;
    CPoly q = h.monic();

    // Monomial content: each parameter dividing all terms.
    const auto& terms = q.rep().terms;
    std::vector<int> minexp((size_t)q.nparams(), 1 << 20);
    for (const auto& t : terms)
        for (int v = 0; v < q.nparams(); ++v)
            minexp[v] = std::min(minexp[v], t.m.e.size() > (size_t)v ? t.m.e[v] : 0);
    for (int v = 0; v < q.nparams(); ++v) {
        for (int k = 0; k < minexp[v]; ++k) {
            factors.push_back(CPoly::param(v));
            auto d = CPoly::try_divide(q, CPoly::param(v));
            q = d->monic();
        }
    }
    if (q.is_constant()) return factors;

    auto support = q.support();
    if (support.size() == 1) {
        int v = support[0];
        // univariate: collect coefficients by degree
        int deg = 0;
        for (const auto& t : q.rep().terms) deg = std::max(deg, t.m.e[v]);
        std::vector<Cyclotomic> coef((size_t)deg + 1);
        for (const auto& t : q.rep().terms) coef[(size_t)t.m.e[v]] += t.c;
        if (deg == 1) {
            factors.push_back(q.monic());
            return factors;
        }
        if (deg == 2) {
            // roots (-b +- sqrt(b^2-4ac)) / 2a when the square root exists
            Cyclotomic a = coef[2], b = coef[1], c = coef[0];
            Cyclotomic disc = b * b - Cyclotomic(4) * a * c;
            auto roots = Cyclotomic::kth_roots(disc, 2);
            if (roots) {
                Cyclotomic s = (*roots)[0];
                Cyclotomic inv2a = (Cyclotomic(2) * a).inverse();
                for (const Cyclotomic& sign : {s, -s}) {
                    Cyclotomic root = (-b + sign) * inv2a;
                    factors.push_back((CPoly::param(v) - CPoly(root)).monic());
                }
                return factors;
            }
            factors.push_back(q.monic());
            return factors;
        }
        // binomial c^k = value
        bool binomial = true;
        for (int k = 1; k < deg; ++k)
            if (!coef[(size_t)k].is_zero()) binomial = false;
        if (binomial && !coef[0].is_zero()) {
            Cyclotomic rhs = -coef[0] / coef[(size_t)deg];
            auto roots = Cyclotomic::kth_roots(rhs, (unsigned)deg);
            if (roots) {
                for (const auto& r : *roots)
                    factors.push_back((CPoly::param(v) - CPoly(r)).monic());
                return factors;
            }
        }
        factors.push_back(q.monic());
        return factors;
    }

    factors.push_back(q.monic());
    return factors;
}

PPoly ppoly_strip_content(PPoly f, std::vector<CPoly>* stripped) {
    if (f.is_zero()) return f;
    // Trial-divide all coefficients by the simple factors of the smallest one.
    bool progress = true;
    while (progress) {
        progress = false;
        size_t smallest = 0;
        for (size_t i = 1; i < f.terms.size(); ++i)
            if (f.terms[i].c.rep().terms.size() < f.terms[smallest].c.rep().terms.size())
                smallest = i;
        for (const CPoly& fac : factor_simple(f.terms[smallest].c)) {
            bool all = true;
            std::vector<CPoly> divided;
            for (const auto& t : f.terms) {
                auto d = CPoly::try_divide(t.c, fac);
                if (!d) {
                    all = false;
                    break;
                }
                divided.push_back(std::move(*d));
            }
            if (all) {
                for (size_t i = 0; i < f.terms.size(); ++i) f.terms[i].c = divided[i];
                if (stripped) stripped->push_back(fac.monic());
                progress = true;
                break;
            }
        }
    }
    // Normalize the cyclotomic scale: leading coefficient's lead becomes 1.
    Cyclotomic scale = f.terms[0].c.lead_coeff().inverse();
    for (auto& t : f.terms) t.c = t.c * CPoly(scale);
    return f;
}

PPoly ppoly_spair(const PPoly& f, const PPoly& g, const TermOrder& ord) {
    Monomial l = Monomial::lcm(f.lead().m, g.lead().m);
    CPoly cf = g.lead().c, cg = f.lead().c;
    // Avoid the cross-multiplication when one lead divides the other.
    if (auto d = CPoly::try_divide(g.lead().c, f.lead().c)) {
        cf = *d;
        cg = CPoly(1);
    } else if (auto d2 = CPoly::try_divide(f.lead().c, g.lead().c)) {
        cf = CPoly(1);
        cg = *d2;
    }
    PPoly a = poly_mul_term(f, l.div(f.lead().m), cf);
    PPoly b = poly_mul_term(g, l.div(g.lead().m), cg);
    return poly_sub(a, b, ord);
}

PPoly ppoly_reduce_ff(PPoly f, const std::vector<PPoly>& basis, const TermOrder& ord,
                      const std::vector<CPoly>* assumed_nonzero, bool check_leads) {
    auto lead_ok = [&](const CPoly& lc) {
        if (lc.is_constant()) return true;
        if (!check_leads) return true;
        if (assumed_nonzero) {
            CPoly m = lc.monic();
            for (const auto& a : *assumed_nonzero)
                if (CPoly::cmp(m, a.monic()) == 0) return true;
            // products of assumed factors are fine too
            CPoly q = m;
            bool progress = true;
            while (progress && !q.is_constant()) {
                progress = false;
                for (const auto& a : *assumed_nonzero) {
                    auto d = CPoly::try_divide(q, a);
                    if (d) {
                        q = d->monic();
                        progress = true;
                        break;
                    }
                }
            }
            if (q.is_constant()) return true;
        }
        return false;
    };

    while (!f.is_zero()) {
        // Largest term divisible by some basis lead.
        bool reduced = false;
        for (size_t ti = 0; ti < f.terms.size() && !reduced; ++ti) {
            for (const auto& g : basis) {
                if (g.is_zero()) continue;
                if (!g.lead().m.divides(f.terms[ti].m)) continue;
                if (!lead_ok(g.lead().c))
                    throw parametric_lead_error(
                        "divisor lead coefficient is not assumed nonvanishing");
                CPoly c = f.terms[ti].c;
                Monomial q = f.terms[ti].m.div(g.lead().m);
                if (auto d = CPoly::try_divide(c, g.lead().c)) {
                    // exact cancellation, no scaling of f needed
                    f = poly_sub(f, poly_mul_term(g, q, *d), ord);
                } else {
                    // f := lc_g * f - c * x^q * g  (cancels term ti exactly)
                    PPoly scaled = f;
                    for (auto& t : scaled.terms) t.c = t.c * g.lead().c;
                    f = poly_sub(scaled, poly_mul_term(g, q, c), ord);
                }
                reduced = true;
                break;
            }
        }
        if (!reduced) break;
    }
    return f;
}

Poly<Cyclotomic> ppoly_specialize(const PPoly& f, const std::vector<Cyclotomic>& values,
                                  const TermOrder& ord) {
    std::vector<Term<Cyclotomic>> terms;
    for (const auto& t : f.terms) {
        Cyclotomic c = t.c.eval(values);
        if (!c.is_zero()) terms.push_back({t.m, c});
    }
    return poly_normalize(std::move(terms), ord);
}

PPoly ppoly_from_poly(const Poly<Cyclotomic>& f) {
    PPoly r;
    for (const auto& t : f.terms) r.terms.push_back({t.m, CPoly(t.c)});
    return r;
}

PPoly ppoly_shift_params(const PPoly& f, int by) {
    PPoly r;
    for (const auto& t : f.terms) r.terms.push_back({t.m, t.c.shifted(by)});
    return r;
}

PPoly ppoly_normal_form(const PPoly& f, const std::vector<CPoly>& rules, const TermOrder& ord) {
    std::vector<Term<CPoly>> terms;
    for (const auto& t : f.terms) {
        CPoly c = t.c.normal_form(rules);
        if (!c.is_zero()) terms.push_back({t.m, c});
    }
    return poly_normalize(std::move(terms), ord);
}

} // namespace canoneq
