#ifndef CANONEQ_POLYRING_HPP
#define CANONEQ_POLYRING_HPP

#include <algorithm>
#include <vector>

#include "canoneq/cyclotomic.hpp"
#include "canoneq/gfp.hpp"
#include "canoneq/linalg.hpp"

namespace canoneq {

struct Monomial {
    std::vector<int> e;

    static Monomial one(int nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
    static Monomial var(int i, int nvars) {
        Monomial m = one(nvars);
        m.e[i] = 1;
        return m;
    }
    int deg() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_one() const {
        for (int x : e)
            if (x) return false;
        return true;
    }
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < b.e.size(); ++i) r.e[i] += b.e[i];
        return r;
    }
    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial div(const Monomial& o) const { // this / o
        Monomial r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (size_t i = 0; i < b.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    bool operator<(const Monomial& o) const { return e < o.e; } // structural, for maps
};

enum class OrderKind { grevlex, lex };

struct TermOrder {
    OrderKind kind = OrderKind::grevlex;

    // > 0 iff a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        if (kind == OrderKind::lex) {
            for (size_t i = 0; i < a.e.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        }
        int da = a.deg(), db = b.deg();
        if (da != db) return da > db ? 1 : -1;
        for (size_t i = a.e.size(); i-- > 0;)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
};

template <typename K>
struct Term {
    Monomial m;
    K c;

    bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

/// Sparse polynomial with terms strictly descending under the active order.
template <typename K>
struct Poly {
    std::vector<Term<K>> terms;

    bool is_zero() const { return terms.empty(); }
    const Term<K>& lead() const { return terms.front(); }
    int degree() const {
        int d = -1;
        for (const auto& t : terms) d = std::max(d, t.m.deg());
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms)
            if (t.m.deg() != terms[0].m.deg()) return false;
        return true;
    }
};

template <typename K>
Poly<K> poly_normalize(std::vector<Term<K>> terms, const TermOrder& ord) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term<K>& a, const Term<K>& b) { return ord.cmp(a.m, b.m) > 0; });
    Poly<K> r;
    for (auto& t : terms) {
        if (field_is_zero(t.c)) continue;
        if (!r.terms.empty() && r.terms.back().m == t.m) {
            r.terms.back().c = r.terms.back().c + t.c;
            if (field_is_zero(r.terms.back().c)) r.terms.pop_back();
        } else {
            r.terms.push_back(std::move(t));
        }
    }
    return r;
}

template <typename K>
Poly<K> poly_add(const Poly<K>& a, const Poly<K>& b, const TermOrder& ord) {
    Poly<K> r;
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && ord.cmp(a.terms[i].m, b.terms[j].m) > 0)) {
            r.terms.push_back(a.terms[i++]);
        } else if (i == a.terms.size() || ord.cmp(a.terms[i].m, b.terms[j].m) < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            K c = a.terms[i].c + b.terms[j].c;
            if (!field_is_zero(c)) r.terms.push_back({a.terms[i].m, c});
            ++i;
            ++j;
        }
    }
    return r;
}

template <typename K>
Poly<K> poly_neg(Poly<K> a) {
    for (auto& t : a.terms) t.c = -t.c;
    return a;
}

template <typename K>
Poly<K> poly_sub(const Poly<K>& a, const Poly<K>& b, const TermOrder& ord) {
    return poly_add(a, poly_neg(b), ord);
}

template <typename K>
Poly<K> poly_scale(Poly<K> a, const K& s) {
    if (field_is_zero(s)) return Poly<K>{};
    for (auto& t : a.terms) t.c = t.c * s;
    return a;
}

template <typename K>
Poly<K> poly_mul_term(const Poly<K>& a, const Monomial& m, const K& c) {
    if (field_is_zero(c)) return Poly<K>{};
    Poly<K> r = a;
    for (auto& t : r.terms) {
        t.m = t.m * m;
        t.c = t.c * c;
    }
    return r;
}

template <typename K>
Poly<K> poly_mul(const Poly<K>& a, const Poly<K>& b, const TermOrder& ord) {
    std::vector<Term<K>> acc;
    acc.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) acc.push_back({ta.m * tb.m, ta.c * tb.c});
    return poly_normalize(std::move(acc), ord);
}

template <typename K>
Poly<K> poly_monic(Poly<K> f) {
    if (f.is_zero()) return f;
    K inv = field_inv(f.terms[0].c);
    for (auto& t : f.terms) t.c = t.c * inv;
    return f;
}

/// Remainder of f under multivariate division by basis (full tail reduction).
template <typename K>
Poly<K> poly_reduce(Poly<K> f, const std::vector<Poly<K>>& basis, const TermOrder& ord) {
    Poly<K> rem;
    while (!f.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.lead().m.divides(f.lead().m)) {
                K factor = f.lead().c * field_inv(g.lead().c);
                Monomial q = f.lead().m.div(g.lead().m);
                f = poly_sub(f, poly_mul_term(g, q, factor), ord);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(f.lead());
            f.terms.erase(f.terms.begin());
        }
    }
    return rem;
}

template <typename K>
Poly<K> spoly(const Poly<K>& f, const Poly<K>& g, const TermOrder& ord) {
    Monomial l = Monomial::lcm(f.lead().m, g.lead().m);
    Poly<K> a = poly_mul_term(f, l.div(f.lead().m), field_inv(f.lead().c));
    Poly<K> b = poly_mul_term(g, l.div(g.lead().m), field_inv(g.lead().c));
    return poly_sub(a, b, ord);
}

struct BuchbergerOptions {
    long max_pairs = 500000;
    int degree_cap = -1; // -1 = none; pairs with lcm degree above the cap fail
};

/// Buchberger with the normal selection strategy (lowest lcm degree, then
/// order on the lcm, then pair age). Returns the reduced monic basis, sorted
/// by leading monomial. Throws resource_exceeded past the caps.
template <typename K>
std::vector<Poly<K>> buchberger(std::vector<Poly<K>> gens, const TermOrder& ord,
                                const BuchbergerOptions& opt = {}) {
    std::vector<Poly<K>> basis;
    for (auto& f : gens)
        if (!f.is_zero()) basis.push_back(poly_monic(std::move(f)));

    struct Pair {
        size_t i, j;
        Monomial l;
        int deg;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (basis[i].lead().m.coprime(basis[j].lead().m)) continue;
            Monomial l = Monomial::lcm(basis[i].lead().m, basis[j].lead().m);
            pairs.push_back({i, j, l, l.deg()});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    long processed = 0;
    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].deg != pairs[best].deg) {
                if (pairs[k].deg < pairs[best].deg) best = k;
            } else {
                int c = ord.cmp(pairs[k].l, pairs[best].l);
                if (c < 0) best = k;
            }
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + (long)best);
        if (opt.degree_cap >= 0 && p.deg > opt.degree_cap)
            throw resource_exceeded("buchberger: lcm degree exceeds cap");
        if (++processed > opt.max_pairs) throw resource_exceeded("buchberger: pair budget");
        Poly<K> r = poly_reduce(spoly(basis[p.i], basis[p.j], ord), basis, ord);
        if (r.is_zero()) continue;
        basis.push_back(poly_monic(std::move(r)));
        push_pairs(basis.size() - 1);
    }

    // Auto-reduce: drop redundant leads, tail-reduce each survivor.
    std::vector<Poly<K>> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].lead().m.divides(basis[i].lead().m) &&
                !(basis[j].lead().m == basis[i].lead().m && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Poly<K>> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = poly_monic(poly_reduce(reduced[i], others, ord));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly<K>& a, const Poly<K>& b) {
        return ord.cmp(a.lead().m, b.lead().m) < 0;
    });
    return reduced;
}

template <typename K>
Poly<K> poly_derivative(const Poly<K>& f, int var) {
    Poly<K> r;
    for (const auto& t : f.terms) {
        if (t.m.e[var] == 0) continue;
        Term<K> d = t;
        d.c = t.c * field_from_int(t.c, t.m.e[var]);
        d.m.e[var] -= 1;
        r.terms.push_back(std::move(d));
    }
    return r; // term order is preserved by differentiation in a fixed variable
}

/// Substitution x_i -> images[i]; used for linear changes of coordinates and
/// group actions on polynomials.
template <typename K>
Poly<K> poly_substitute(const Poly<K>& f, const std::vector<Poly<K>>& images,
                        const TermOrder& ord) {
    Poly<K> acc;
    for (const auto& t : f.terms) {
        Poly<K> prod;
        prod.terms.push_back({Monomial::one((int)t.m.e.size()), t.c});
        for (size_t v = 0; v < t.m.e.size(); ++v)
            for (int k = 0; k < t.m.e[v]; ++k) prod = poly_mul(prod, images[v], ord);
        acc = poly_add(acc, prod, ord);
    }
    return acc;
}

/// Hilbert data of S/I for a monomial ideal I in nvars variables:
/// numerator of the Hilbert series over (1-t)^nvars, the Hilbert
/// polynomial, and exact Hilbert function values.
struct HilbertData {
    int nvars = 0;
    std::vector<Int> numerator;  // HN(t) coefficients, ascending
    std::vector<Rational> hp;    // Hilbert polynomial coefficients, ascending; empty = 0

    Rational hilbert_function(long t) const {
        Rational s(0);
        for (size_t j = 0; j < numerator.size(); ++j) {
            if ((long)j > t) break;
            s += Rational(numerator[j]) * Rational(binomial(t - (long)j + nvars - 1, nvars - 1));
        }
        return s;
    }
    bool hp_equals(const std::vector<Rational>& coeffs) const {
        std::vector<Rational> a = hp, b = coeffs;
        while (!a.empty() && a.back() == 0) a.pop_back();
        while (!b.empty() && b.back() == 0) b.pop_back();
        return a == b;
    }
    std::string hp_str() const;
};

HilbertData hilbert_from_leading(std::vector<Monomial> leading, int nvars);

/// All monomials of total degree d in nvars variables, descending
/// lexicographic.
std::vector<Monomial> degree_monomials(int nvars, int d);

template <typename K>
std::vector<Monomial> leading_monomials(const std::vector<Poly<K>>& basis) {
    std::vector<Monomial> l;
    for (const auto& f : basis)
        if (!f.is_zero()) l.push_back(f.lead().m);
    return l;
}

} // namespace canoneq

#endif
