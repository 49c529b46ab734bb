#include "canoneq/verifier.hpp"

#include <chrono>
#include <map>
#include <functional>
#include <numeric>
#include <sstream>

namespace canoneq {

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n || k <= 0) return out;
    for (;;) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

template <typename K>
Poly<K> poly_det(const std::vector<std::vector<Poly<K>>>& m, std::vector<int> rows,
                 std::vector<int> cols, const TermOrder& ord) {
    if (rows.size() == 1) return m[(size_t)rows[0]][(size_t)cols[0]];
    Poly<K> acc;
    for (size_t k = 0; k < cols.size(); ++k) {
        const Poly<K>& entry = m[(size_t)rows[0]][(size_t)cols[k]];
        if (entry.is_zero()) continue;
        std::vector<int> sub_rows(rows.begin() + 1, rows.end());
        std::vector<int> sub_cols;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        Poly<K> minor = poly_det(m, sub_rows, sub_cols, ord);
        Poly<K> term = poly_mul(entry, minor, ord);
        acc = (k % 2 == 0) ? poly_add(acc, term, ord) : poly_sub(acc, term, ord);
    }
    return acc;
}

// Projective emptiness: the Hilbert function is eventually zero iff the
// Hilbert polynomial vanishes identically (Hilbert functions of the ideal
// and its initial ideal agree). The probe degree confirms the function has
// actually reached zero past the numerator support.
bool empty_projective(const HilbertData& h, int probe_from) {
    if (!h.hp.empty()) return false;
    int from = std::max<int>(probe_from, (int)h.numerator.size());
    for (int t = from; t < from + 2; ++t)
        if (h.hilbert_function(t) != 0) return false;
    return true;
}

// Incremental smoothness loop: returns true iff ideal + all minors cut out
// the empty set; early exit once the probe reaches zero.
template <typename K>
bool jacobian_smooth(const std::vector<Poly<K>>& ideal, int nvars, long codim,
                     const TermOrder& ord, const BuchbergerOptions& gb) {
    std::vector<std::vector<Poly<K>>> jac;
    for (const auto& f : ideal) {
        std::vector<Poly<K>> row;
        for (int v = 0; v < nvars; ++v) row.push_back(poly_derivative(f, v));
        jac.push_back(std::move(row));
    }
    int nf = (int)ideal.size();
    auto row_sets = combinations(nf, (int)codim);
    auto col_sets = combinations(nvars, (int)codim);

    // Deterministically shuffled minor order: diverse minors reach the
    // early-exit probe much sooner than lexicographic enumeration.
    std::vector<std::pair<size_t, size_t>> pairs;
    pairs.reserve(row_sets.size() * col_sets.size());
    for (size_t r = 0; r < row_sets.size(); ++r)
        for (size_t c = 0; c < col_sets.size(); ++c) pairs.emplace_back(r, c);
    unsigned long long state = 0x9e3779b97f4a7c15ULL;
    for (size_t i = pairs.size(); i > 1; --i) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        std::swap(pairs[i - 1], pairs[(size_t)((state >> 33) % i)]);
    }

    std::vector<Poly<K>> current = ideal;
    const size_t batch = 48;
    std::vector<Poly<K>> pending;
    auto flush = [&](bool force) -> bool {
        if (pending.empty() && !force) return false;
        for (auto& p : pending) current.push_back(std::move(p));
        pending.clear();
        auto basis = buchberger(current, ord, gb);
        current = basis;
        int maxdeg = 0;
        for (const auto& f : basis) maxdeg = std::max(maxdeg, f.degree());
        HilbertData h = hilbert_from_leading(leading_monomials(basis), nvars);
        return empty_projective(h, maxdeg);
    };

    for (const auto& [r, c] : pairs) {
        Poly<K> minor = poly_det(jac, row_sets[r], col_sets[c], ord);
        if (minor.is_zero()) continue;
        pending.push_back(std::move(minor));
        if (pending.size() >= batch) {
            if (flush(false)) return true;
        }
    }
    return flush(true);
}

struct FpContext {
    uint64_t p;
    uint64_t root; // element of order n
    unsigned n;
};

Fp to_fp(const Cyclotomic& c, const FpContext& ctx) {
    Fp acc(0, ctx.p);
    for (size_t e = 0; e < c.coeffs().size(); ++e) {
        const Rational& q = c.coeffs()[e];
        if (q == 0) continue;
        Int num = q.get_num() % (long)ctx.p;
        Int den = q.get_den() % (long)ctx.p;
        if (den == 0) throw bad_prime("denominator vanishes mod p");
        uint64_t nu = (uint64_t)((num.get_si() % (long)ctx.p + (long)ctx.p) % (long)ctx.p);
        uint64_t de = (uint64_t)den.get_si();
        Fp term = Fp(nu, ctx.p) * field_inv(Fp(de, ctx.p));
        uint64_t zpow = pow_mod(ctx.root, (uint64_t)(e * (ctx.n / c.order())), ctx.p);
        acc = acc + term * Fp(zpow, ctx.p);
    }
    return acc;
}

std::vector<Poly<Fp>> reduce_mod_p(const std::vector<Poly<Cyclotomic>>& ideal,
                                   const FpContext& ctx, const TermOrder& ord) {
    std::vector<Poly<Fp>> out;
    for (const auto& f : ideal) {
        std::vector<Term<Fp>> ts;
        for (const auto& t : f.terms) {
            Fp c = to_fp(t.c, ctx);
            if (!field_is_zero(c)) ts.push_back({t.m, c});
        }
        Poly<Fp> g = poly_normalize(std::move(ts), ord);
        if (g.is_zero()) throw bad_prime("a generator vanishes mod p");
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace

HilbertData verify_hilbert(const std::vector<Poly<Cyclotomic>>& ideal, int nvars,
                           const TermOrder& ord, const BuchbergerOptions& gb) {
    auto basis = buchberger(ideal, ord, gb);
    return hilbert_from_leading(leading_monomials(basis), nvars);
}

bool hilbert_is_canonical(const HilbertData& h, long g) {
    return h.hp_equals({Rational(1 - g), Rational(2 * g - 2)});
}

SmoothStatus verify_smooth(const std::vector<Poly<Cyclotomic>>& ideal, int nvars, long codim,
                           const VerifyOptions& opt, std::vector<uint64_t>* primes_used,
                           uint64_t avoid) {
    if (opt.smooth_mode == SmoothMode::exact) {
        bool ok = jacobian_smooth(ideal, nvars, codim, opt.order, opt.gb);
        return ok ? SmoothStatus::exact_char0 : SmoothStatus::failed;
    }

    // field order: lcm of all coefficient orders
    unsigned n = 1;
    for (const auto& f : ideal)
        for (const auto& t : f.terms) n = (unsigned)std::lcm(n, t.c.order());

    HilbertData char0 = verify_hilbert(ideal, nvars, opt.order, opt.gb);

    int certified = 0;
    uint64_t lower = std::max<uint64_t>(2 * (uint64_t)n, 20);
    int attempts = 0;
    while (certified < opt.num_primes && attempts < opt.num_primes + 8) {
        ++attempts;
        uint64_t p = find_prime_1_mod(n, lower, avoid);
        lower = p;
        FpContext ctx{p, element_of_order(n, p), n};
        try {
            auto modp = reduce_mod_p(ideal, ctx, opt.order);
            auto basis = buchberger(modp, opt.order, opt.gb);
            HilbertData hmod = hilbert_from_leading(leading_monomials(basis), nvars);
            if (hmod.hp != char0.hp) throw bad_prime("Hilbert polynomial changed mod p");
            if (!jacobian_smooth(modp, nvars, codim, opt.order, opt.gb))
                return SmoothStatus::failed;
            if (primes_used) primes_used->push_back(p);
            ++certified;
        } catch (const bad_prime&) {
            continue; // discard and take the next prime
        }
    }
    return certified >= opt.num_primes ? SmoothStatus::modular_certified : SmoothStatus::failed;
}

std::vector<bool> verify_invariance(const std::vector<Poly<Cyclotomic>>& ideal,
                                    const std::vector<Matrix>& maps, int nvars,
                                    const TermOrder& ord) {
    // span bases per degree: monomial multiples of the generators
    std::map<int, std::vector<std::vector<Cyclotomic>>> span_rows;
    std::map<int, std::map<std::vector<int>, size_t>> mono_index;
    std::map<int, size_t> span_rank;
    std::vector<int> degrees;
    for (const auto& f : ideal)
        if (std::find(degrees.begin(), degrees.end(), f.degree()) == degrees.end())
            degrees.push_back(f.degree());
    std::sort(degrees.begin(), degrees.end());

    for (int d : degrees) {
        auto basis = degree_monomials(nvars, d);
        auto& index = mono_index[d];
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i].e] = i;
        auto& rows = span_rows[d];
        for (const auto& f : ideal) {
            if (f.degree() > d) continue;
            // monomial multiples of f in degree d
            auto mults = degree_monomials(nvars, d - f.degree());
            for (const auto& m : mults) {
                auto prod = poly_mul_term(f, m, Cyclotomic(1));
                std::vector<Cyclotomic> row(basis.size());
                for (const auto& t : prod.terms) row[index.at(t.m.e)] = t.c;
                rows.push_back(std::move(row));
            }
        }
        auto copy = rows;
        span_rank[d] = rank(copy);
    }

    std::vector<bool> results;
    for (const auto& m : maps) {
        // substitution images: x_i -> sum_j M[i][j] x_j
        std::vector<Poly<Cyclotomic>> images;
        for (int i = 0; i < nvars; ++i) {
            std::vector<Term<Cyclotomic>> ts;
            for (int j = 0; j < nvars; ++j)
                if (!m.at(i, j).is_zero()) ts.push_back({Monomial::var(j, nvars), m.at(i, j)});
            images.push_back(poly_normalize(std::move(ts), ord));
        }
        bool ok = true;
        for (const auto& f : ideal) {
            Poly<Cyclotomic> g = poly_substitute(f, images, ord);
            int d = f.degree();
            auto& index = mono_index[d];
            std::vector<Cyclotomic> row(index.size());
            for (const auto& t : g.terms) {
                auto it = index.find(t.m.e);
                if (it == index.end()) {
                    ok = false;
                    break;
                }
                row[it->second] = t.c;
            }
            if (!ok) break;
            auto aug = span_rows[d];
            aug.push_back(row);
            if (rank(aug) != span_rank[d]) {
                ok = false;
                break;
            }
        }
        results.push_back(ok);
    }
    return results;
}

VerificationReport verify_curve(const std::vector<Poly<Cyclotomic>>& ideal, int nvars, long g,
                                const std::vector<Matrix>& maps, const VerifyOptions& opt,
                                uint64_t avoid) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.genus = g;
    HilbertData h = verify_hilbert(ideal, nvars, opt.order, opt.gb);
    rep.hilbert_poly = h.hp;
    rep.hilbert_str = h.hp_str();
    rep.genus_ok = rep.degree_ok = hilbert_is_canonical(h, g);
    if (!h.hp.empty() && h.hp.size() == 2) {
        rep.degree_ok = h.hp[1] == Rational(2 * g - 2);
        rep.genus_ok = h.hp[0] == Rational(1 - g);
    }

    if (opt.check_smooth) {
        long codim = opt.codim >= 0 ? opt.codim : g - 2;
        rep.smooth = verify_smooth(ideal, nvars, codim, opt, &rep.primes, avoid);
    }

    rep.invariant_under = verify_invariance(ideal, maps, nvars, opt.order);

    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "hilbert_polynomial: " << hilbert_str << "\n";
    os << "genus_ok: " << (genus_ok ? "true" : "false") << "\n";
    os << "degree_ok: " << (degree_ok ? "true" : "false") << "\n";
    os << "smooth: ";
    switch (smooth) {
        case SmoothStatus::exact_char0: os << "exact-char-0"; break;
        case SmoothStatus::modular_certified: {
            os << "modular-certified(";
            for (size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i];
            os << ")";
            break;
        }
        case SmoothStatus::failed: os << "failed"; break;
        case SmoothStatus::skipped: os << "skipped"; break;
    }
    os << "\n";
    os << "invariant_under:";
    for (size_t i = 0; i < invariant_under.size(); ++i)
        os << " gen" << (i + 1) << "=" << (invariant_under[i] ? "ok" : "FAIL");
    os << "\n";
    os << "elapsed_ms: " << elapsed_ms << "\n";
    return os.str();
}

} // namespace canoneq
