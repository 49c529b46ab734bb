#include "canoneq/polyring.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace canoneq {

namespace {

std::vector<Int> dense_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && gens[j].divides(gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

// Numerator of the Hilbert series of S/I via pivot recursion:
// HN(I) = HN(I + (x)) + t * HN(I : x).
std::vector<Int> hilbert_numerator(std::vector<Monomial> gens, int nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {Int(1)};
    for (const auto& m : gens)
        if (m.is_one()) return {Int(0)};

    // Base case: pairwise coprime generators form a regular sequence.
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        std::vector<Int> num{Int(1)};
        for (const auto& m : gens) {
            std::vector<Int> f((size_t)m.deg() + 1, Int(0));
            f[0] = 1;
            f[(size_t)m.deg()] = -1;
            num = dense_mul(num, f);
        }
        return num;
    }

    // Pivot: the variable occurring in the most generators.
    std::vector<int> freq(nvars, 0);
    for (const auto& m : gens)
        for (int v = 0; v < nvars; ++v)
            if (m.e[v]) ++freq[v];
    int pivot = 0;
    for (int v = 1; v < nvars; ++v)
        if (freq[v] > freq[pivot]) pivot = v;

    std::vector<Monomial> plus{Monomial::var(pivot, nvars)};
    for (const auto& m : gens)
        if (m.e[pivot] == 0) plus.push_back(m);
    std::vector<Monomial> colon;
    for (const auto& m : gens) {
        Monomial q = m;
        if (q.e[pivot] > 0) q.e[pivot] -= 1;
        colon.push_back(q);
    }

    std::vector<Int> a = hilbert_numerator(std::move(plus), nvars);
    std::vector<Int> b = hilbert_numerator(std::move(colon), nvars);
    std::vector<Int> r(std::max(a.size(), b.size() + 1), Int(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

// C(t - j + n - 1, n - 1) as a polynomial in t (coefficients ascending).
std::vector<Rational> binomial_polynomial(long j, int n) {
    std::vector<Rational> p{Rational(1)};
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<Rational> q(p.size() + 1, Rational(0));
        for (size_t d = 0; d < p.size(); ++d) {
            q[d + 1] += p[d];
            q[d] += p[d] * Rational(i - j);
        }
        p = std::move(q);
    }
    Rational fact(1);
    for (int i = 2; i <= n - 1; ++i) fact *= i;
    for (auto& c : p) c /= fact;
    return p;
}

} // namespace

HilbertData hilbert_from_leading(std::vector<Monomial> leading, int nvars) {
    HilbertData h;
    h.nvars = nvars;
    h.numerator = hilbert_numerator(std::move(leading), nvars);
    std::vector<Rational> hp;
    for (size_t j = 0; j < h.numerator.size(); ++j) {
        if (h.numerator[j] == 0) continue;
        auto bp = binomial_polynomial((long)j, nvars);
        if (hp.size() < bp.size()) hp.resize(bp.size(), Rational(0));
        for (size_t d = 0; d < bp.size(); ++d) hp[d] += Rational(h.numerator[j]) * bp[d];
    }
    while (!hp.empty() && hp.back() == 0) hp.pop_back();
    h.hp = std::move(hp);
    return h;
}

std::vector<Monomial> degree_monomials(int nvars, int d) {
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars - 1) {
            e[pos] = left;
            out.push_back(Monomial{e});
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[pos] = k;
            rec(pos + 1, left - k);
        }
    };
    if (nvars == 0) return out;
    rec(0, d);
    return out;
}

std::string HilbertData::hp_str() const {
    if (hp.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t d = hp.size(); d-- > 0;) {
        if (hp[d] == 0) continue;
        Rational a = hp[d] > 0 ? hp[d] : Rational(-hp[d]);
        if (first) {
            if (hp[d] < 0) os << "-";
            first = false;
        } else {
            os << (hp[d] < 0 ? " - " : " + ");
        }
        if (d == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "t";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

} // namespace canoneq
