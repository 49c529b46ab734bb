#include "canoneq/stratifier.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace canoneq {

std::string stratum_status_name(StratumStatus s) {
    switch (s) {
        case StratumStatus::unexplored: return "unexplored";
        case StratumStatus::explored: return "explored";
        case StratumStatus::specialized: return "specialized";
        case StratumStatus::verified_good: return "verified-good";
        case StratumStatus::verified_bad: return "verified-bad";
        case StratumStatus::unsolved: return "unsolved";
        case StratumStatus::inconsistent: return "inconsistent";
        case StratumStatus::capped: return "capped";
    }
    return "?";
}

namespace {

bool contains_cpoly(const std::vector<CPoly>& set, const CPoly& h) {
    for (const auto& x : set)
        if (CPoly::cmp(x, h) == 0) return true;
    return false;
}

std::string describe(const CPoly& h, const PPoly& where) {
    std::ostringstream os;
    os << "factor with " << h.rep().terms.size() << " term(s) of degree " << h.degree()
       << " from an element with " << where.terms.size() << " term(s)";
    return os.str();
}

struct Explorer {
    const ParamIdeal& ideal;
    const StratifyOptions& opt;
    StratumTree tree;

    explicit Explorer(const ParamIdeal& i, const StratifyOptions& o) : ideal(i), opt(o) {}

    int fork(int parent_id, const CPoly& h, const std::string& why) {
        if ((int)tree.strata.size() >= opt.max_strata) {
            tree.budget_hit = true;
            return -1;
        }
        Stratum child;
        child.id = (int)tree.strata.size();
        child.parent = parent_id;
        child.equations = tree.strata[(size_t)parent_id].equations;
        child.equations.push_back(h.monic());
        std::sort(child.equations.begin(), child.equations.end(),
                  [](const CPoly& a, const CPoly& b) { return CPoly::cmp(a, b) < 0; });
        child.equations.erase(std::unique(child.equations.begin(), child.equations.end(),
                                          [](const CPoly& a, const CPoly& b) {
                                              return CPoly::cmp(a, b) == 0;
                                          }),
                              child.equations.end());
        child.nonvanishing = tree.strata[(size_t)parent_id].nonvanishing;
        child.evidence.push_back(why);
        tree.strata[(size_t)parent_id].children.push_back(child.id);
        tree.strata.push_back(std::move(child));
        return (int)tree.strata.size() - 1;
    }

    void explore_stratum(int id) {
        Stratum& s0 = tree.strata[(size_t)id];
        const std::vector<CPoly> rules = s0.equations;

        for (const auto& nv : s0.nonvanishing) {
            if (nv.normal_form(rules).is_zero()) {
                s0.status = StratumStatus::inconsistent;
                return;
            }
        }

        std::vector<PPoly> basis;

        // Admission: rewrite modulo the equations, strip content, branch on
        // any new nonunit factor of the content or the leading coefficient.
        auto admit = [&](PPoly r, const char* what) -> std::optional<PPoly> {
            r = ppoly_normal_form(r, rules, ideal.order);
            for (;;) {
                if (r.is_zero()) return std::nullopt;
                std::vector<CPoly> stripped;
                r = ppoly_strip_content(r, &stripped);
                std::vector<CPoly> factors;
                for (const auto& h : stripped)
                    if (!h.is_constant()) factors.push_back(h.monic());
                bool lead_parametric = !r.lead().c.is_constant();
                if (lead_parametric)
                    for (const auto& h : factor_simple(r.lead().c))
                        if (!h.is_constant()) factors.push_back(h.monic());

                bool lead_died = false;
                for (const auto& h : factors) {
                    Stratum& s = tree.strata[(size_t)id];
                    if (contains_cpoly(s.nonvanishing, h)) continue;
                    CPoly hmod = h.normal_form(rules);
                    if (hmod.is_constant() && !hmod.is_zero()) continue; // cannot vanish here
                    if (hmod.is_zero()) {
                        // the factor vanishes identically on this stratum
                        if (!lead_parametric) return std::nullopt; // content factor: element dies
                        // leading coefficient dies: drop the lead term and re-admit
                        PPoly rest = r;
                        rest.terms.erase(rest.terms.begin());
                        r = ppoly_normal_form(rest, rules, ideal.order);
                        lead_died = true;
                        break;
                    }
                    std::ostringstream why;
                    why << what << ": " << describe(h, r);
                    fork(id, h, why.str());
                    tree.strata[(size_t)id].nonvanishing.push_back(h);
                }
                if (!lead_died) return r;
            }
        };

        for (const auto& gen : ideal.generators) {
            auto g = admit(gen, "generator content");
            if (g) basis.push_back(std::move(*g));
        }

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
        bool capped = false;
        while (!pairs.empty()) {
            size_t best = 0;
            for (size_t k = 1; k < pairs.size(); ++k) {
                if (pairs[k].deg != pairs[best].deg) {
                    if (pairs[k].deg < pairs[best].deg) best = k;
                } else if (ideal.order.cmp(pairs[k].l, pairs[best].l) < 0) {
                    best = k;
                }
            }
            Pair p = pairs[best];
            pairs.erase(pairs.begin() + (long)best);
            if (p.deg > opt.degree_cap) continue; // above the cap: basis stays partial
            if (++processed > opt.max_pairs) {
                capped = true;
                break;
            }
            PPoly sp = ppoly_spair(basis[p.i], basis[p.j], ideal.order);
            PPoly red = ppoly_reduce_ff(sp, basis, ideal.order);
            auto r = admit(red, "S-pair reduction");
            if (r) {
                basis.push_back(std::move(*r));
                push_pairs(basis.size() - 1);
            }
        }

        Stratum& s = tree.strata[(size_t)id];
        std::vector<Monomial> leads;
        for (const auto& f : basis) leads.push_back(f.lead().m);
        s.initial_ideal = std::move(leads);
        s.hilbert = hilbert_from_leading(s.initial_ideal, ideal.nvars);
        s.status = capped ? StratumStatus::capped : StratumStatus::explored;
    }
};

} // namespace

StratumTree explore(const ParamIdeal& ideal, const StratifyOptions& opt) {
    Explorer ex(ideal, opt);
    Stratum root;
    root.id = 0;
    root.nonvanishing = ideal.nonvanishing;
    ex.tree.strata.push_back(std::move(root));
    size_t head = 0;
    while (head < ex.tree.strata.size()) {
        ex.explore_stratum((int)head);
        ++head;
    }
    return std::move(ex.tree);
}

namespace {

void solve_rec(const std::vector<CPoly>& equations, const std::vector<CPoly>& nonvanishing,
               const std::vector<int>& unknowns, std::map<int, Cyclotomic>& partial,
               std::vector<std::vector<Cyclotomic>>& out, const ParamIdeal& ideal) {
    // substitute the partial assignment
    std::vector<CPoly> eqs;
    for (const auto& e : equations) {
        CPoly s = e.substitute(partial);
        if (s.is_zero()) continue;
        if (s.is_constant()) return; // contradiction
        eqs.push_back(s);
    }
    if (eqs.empty()) {
        // all equations satisfied; every unknown must be pinned
        std::vector<Cyclotomic> free_values;
        for (int u : unknowns) {
            auto it = partial.find(u);
            if (it == partial.end())
                throw unsolved_system("parameters remain undetermined by the stratum equations");
            free_values.push_back(it->second);
        }
        auto full = ideal.full_assignment(free_values);
        for (const auto& nv : nonvanishing)
            if (nv.eval(full).is_zero()) return;
        out.push_back(full);
        return;
    }

    // find an equation univariate in a single unassigned parameter
    for (const auto& e : eqs) {
        auto support = e.support();
        if (support.size() != 1) continue;
        int v = support[0];
        int deg = 0;
        for (const auto& t : e.rep().terms) deg = std::max(deg, t.m.e[(size_t)v]);
        std::vector<Cyclotomic> coef((size_t)deg + 1);
        for (const auto& t : e.rep().terms) coef[(size_t)t.m.e[(size_t)v]] += t.c;

        std::vector<Cyclotomic> roots;
        if (deg == 1) {
            roots.push_back(-coef[0] / coef[1]);
        } else if (deg == 2 && !coef[1].is_zero()) {
            Cyclotomic disc = coef[1] * coef[1] - Cyclotomic(4) * coef[2] * coef[0];
            auto sq = Cyclotomic::kth_roots(disc, 2);
            if (!sq) throw unsolved_system("quadratic discriminant has no cyclotomic square root");
            Cyclotomic inv2a = (Cyclotomic(2) * coef[2]).inverse();
            roots.push_back((-coef[1] + (*sq)[0]) * inv2a);
            roots.push_back((-coef[1] - (*sq)[0]) * inv2a);
        } else {
            // binomial a c^deg + b
            bool binomial = true;
            for (int k = 1; k < deg; ++k)
                if (!coef[(size_t)k].is_zero()) binomial = false;
            if (!binomial)
                throw unsolved_system("equation is not linear, quadratic or binomial");
            auto rs = Cyclotomic::kth_roots(-coef[0] / coef[(size_t)deg], (unsigned)deg);
            if (!rs) throw unsolved_system("binomial has no cyclotomic roots under the radical rule");
            roots = *rs;
        }
        std::sort(roots.begin(), roots.end(),
                  [](const Cyclotomic& a, const Cyclotomic& b) {
                      return Cyclotomic::cmp_structural(a, b) < 0;
                  });
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        for (const auto& r : roots) {
            partial[v] = r;
            solve_rec(equations, nonvanishing, unknowns, partial, out, ideal);
            partial.erase(v);
        }
        return;
    }
    throw unsolved_system("no equation is univariate in a single parameter");
}

} // namespace

std::vector<std::vector<Cyclotomic>> solve_stratum(const Stratum& s, const ParamIdeal& ideal) {
    // a nonvanishing constraint that reduces to zero modulo the equations
    // makes the stratum empty
    for (const auto& nv : s.nonvanishing)
        if (nv.normal_form(s.equations).is_zero()) return {};
    std::vector<int> unknowns = ideal.free_params();
    std::map<int, Cyclotomic> partial;
    std::vector<std::vector<Cyclotomic>> out;
    solve_rec(s.equations, s.nonvanishing, unknowns, partial, out, ideal);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            int c = Cyclotomic::cmp_structural(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Poly<Cyclotomic>> specialize(const ParamIdeal& ideal,
                                         const std::vector<Cyclotomic>& assignment) {
    if ((int)assignment.size() != ideal.nparams && ideal.nparams > 0)
        throw error("specialize: assignment size mismatch");
    std::vector<Poly<Cyclotomic>> out;
    for (const auto& gen : ideal.generators) {
        Poly<Cyclotomic> f = ppoly_specialize(gen, assignment, ideal.order);
        if (f.is_zero())
            throw degenerate_specialization("a generator vanishes under this specialization");
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace canoneq
