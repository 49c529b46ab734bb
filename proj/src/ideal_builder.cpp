#include "canoneq/ideal_builder.hpp"

#include <sstream>

namespace canoneq {

std::vector<Cyclotomic> ParamIdeal::full_assignment(
    const std::vector<Cyclotomic>& free_values) const {
    auto free = free_params();
    if (free.size() != free_values.size())
        throw error("specialization does not cover every free parameter");
    std::vector<Cyclotomic> all((size_t)nparams, Cyclotomic(1));
    for (size_t i = 0; i < free.size(); ++i) all[(size_t)free[i]] = free_values[i];
    return all;
}

CandidateBuild build_candidate(const std::vector<AlignedIsotypic>& aligned,
                               const std::vector<long>& ideal_mults, int nvars, int d) {
    CandidateBuild out;
    ParamIdeal& ideal = out.ideal;
    ideal.nvars = nvars;

    auto basis = degree_monomials(nvars, d);

    // Component order: irreducible degree ascending, then the first copy's
    // pivot monomial ascending in the lex order (pivot index descending).
    // This is the order in which coordinate scalings are spent, so it decides
    // which parameters survive normalization.
    std::vector<const AlignedIsotypic*> ordered;
    for (const auto& iso : aligned) ordered.push_back(&iso);
    auto pivot_index = [](const AlignedIsotypic& iso) {
        if (iso.copies.empty()) return -1;
        const auto& v = iso.copies[0][0];
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return (int)i;
        return -1;
    };
    std::stable_sort(ordered.begin(), ordered.end(),
                     [&](const AlignedIsotypic* a, const AlignedIsotypic* b) {
                         int da = a->reference.dim, db = b->reference.dim;
                         if (da != db) return da < db;
                         return pivot_index(*a) > pivot_index(*b);
                     });

    auto vec_to_ppoly = [&](const std::vector<Cyclotomic>& v, const CPoly& coeff) {
        PPoly p;
        std::vector<Term<CPoly>> ts;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) ts.push_back({basis[i], coeff * CPoly(v[i])});
        return poly_normalize(std::move(ts), ideal.order);
    };

    for (const AlignedIsotypic* iso_ptr : ordered) {
        const AlignedIsotypic& iso = *iso_ptr;
        int p = iso.irreducible_index;
        long m = ideal_mults[(size_t)p];
        long big = (long)iso.copies.size();
        if (m == 0) continue;
        if (m > big)
            throw multiplicity_error("component multiplicity exceeds the ambient one");
        long n = (long)(iso.copies.empty() ? 0 : iso.copies[0].size());

        if (m == big) {
            // the whole isotypic component lies in the ideal: no parameters
            for (long c = 0; c < big; ++c)
                for (long k = 0; k < n; ++k) {
                    ideal.generators.push_back(vec_to_ppoly(iso.copies[(size_t)c][(size_t)k],
                                                            CPoly(Cyclotomic(1))));
                    ideal.gen_info.push_back({p, (int)c, (int)k, d});
                }
            out.components.push_back(iso);
            continue;
        }

        for (long q = 0; q < m; ++q) {
            std::vector<int> param_ids;
            for (long c = 0; c < big; ++c) {
                int id = ideal.nparams++;
                ideal.params.push_back({p, (int)q, (int)c, false, d});
                param_ids.push_back(id);
            }
            for (long k = 0; k < n; ++k) {
                PPoly gen;
                for (long c = 0; c < big; ++c) {
                    PPoly part = vec_to_ppoly(iso.copies[(size_t)c][(size_t)k],
                                              CPoly::param(param_ids[(size_t)c]));
                    gen = poly_add(gen, part, ideal.order);
                }
                ideal.generators.push_back(std::move(gen));
                ideal.gen_info.push_back({p, (int)q, (int)k, d});
            }
        }
        out.components.push_back(iso);
    }
    return out;
}

void check_g_stability(const CandidateBuild& build) {
    const ParamIdeal& ideal = build.ideal;
    if (ideal.generators.empty()) return;
    const GroupModel* g = nullptr;
    for (const auto& iso : build.components)
        if (iso.reference.group) g = iso.reference.group;
    if (!g) return;

    for (const auto& iso : build.components) {
        int p = iso.irreducible_index;
        // collect generator indices per combination within this component
        std::map<int, std::vector<int>> by_comb;
        for (size_t i = 0; i < ideal.generators.size(); ++i)
            if (ideal.gen_info[i].irreducible == p && ideal.gen_info[i].degree == iso.degree_d)
                by_comb[ideal.gen_info[i].combination].push_back((int)i);
        for (int j = 0; j < g->num_generators(); ++j) {
            Matrix ref = iso.reference.gen_images[(size_t)j];
            Matrix sym = sym_matrix(g->element(g->generator(j)).mat, iso.degree_d);
            for (auto& [comb, gens] : by_comb) {
                long n = (long)gens.size();
                if (n != iso.reference.dim)
                    throw internal_error("G-stability: generator count does not match the "
                                         "reference dimension");
                for (long k = 0; k < n; ++k) {
                    // action on generator k: substitute, expect sum_l ref[l][k] f_l
                    const PPoly& f = ideal.generators[(size_t)gens[(size_t)k]];
                    // apply sym to each x-monomial basis vector of f
                    auto basis = degree_monomials(ideal.nvars, iso.degree_d);
                    std::map<std::vector<int>, int> index;
                    for (size_t b = 0; b < basis.size(); ++b) index[basis[b].e] = (int)b;
                    std::vector<CPoly> in((size_t)basis.size());
                    for (const auto& t : f.terms) in[(size_t)index.at(t.m.e)] = t.c;
                    std::vector<CPoly> image((size_t)basis.size());
                    for (size_t rr = 0; rr < basis.size(); ++rr)
                        for (size_t cc = 0; cc < basis.size(); ++cc) {
                            const Cyclotomic& s = sym.at((int)rr, (int)cc);
                            if (!s.is_zero() && !in[cc].is_zero())
                                image[rr] = image[rr] + in[cc] * CPoly(s);
                        }
                    std::vector<CPoly> expect((size_t)basis.size());
                    for (long l = 0; l < n; ++l) {
                        const Cyclotomic& r = ref.at((int)l, (int)k);
                        if (r.is_zero()) continue;
                        const PPoly& fl = ideal.generators[(size_t)gens[(size_t)l]];
                        for (const auto& t : fl.terms)
                            expect[(size_t)index.at(t.m.e)] =
                                expect[(size_t)index.at(t.m.e)] + t.c * CPoly(r);
                    }
                    for (size_t b = 0; b < basis.size(); ++b)
                        if (!(image[b] == expect[b]))
                            throw internal_error("candidate ideal is not G-stable");
                }
            }
        }
    }
}

ParamIdeal normalize(const CandidateBuild& build, const std::vector<std::vector<int>>& s1_blocks) {
    ParamIdeal ideal = build.ideal;
    if (ideal.nparams == 0) return ideal;

    int nblocks = (int)s1_blocks.size();
    std::vector<int> block_of((size_t)ideal.nvars, -1);
    for (int b = 0; b < nblocks; ++b)
        for (int v : s1_blocks[(size_t)b]) block_of[(size_t)v] = b;

    // combination index space: one scalar per (component, degree, combination)
    std::map<std::tuple<int, int, int>, int> comb_index;
    for (const auto& pi : ideal.params) {
        auto key = std::make_tuple(pi.irreducible, pi.degree, pi.combination);
        if (!comb_index.count(key)) {
            int id = (int)comb_index.size();
            comb_index[key] = id;
        }
    }

    // Torus weight of each parameter: block multidegree of its copy plus the
    // unit vector of its combination scalar. A copy whose monomials mix
    // block multidegrees is not scalable; only its combination coordinate
    // remains usable.
    int wdim = nblocks + (int)comb_index.size();
    std::vector<std::vector<Rational>> weights((size_t)ideal.nparams,
                                               std::vector<Rational>((size_t)wdim, Rational(0)));
    for (int j = 0; j < ideal.nparams; ++j) {
        const auto& pi = ideal.params[(size_t)j];
        const AlignedIsotypic* iso = nullptr;
        for (const auto& cand : build.components)
            if (cand.irreducible_index == pi.irreducible && cand.degree_d == pi.degree)
                iso = &cand;
        if (!iso) throw internal_error("normalize: missing component data");
        auto basis = degree_monomials(ideal.nvars, iso->degree_d);
        // block multidegree across all monomials of the copy
        std::vector<int> bdeg((size_t)nblocks, 0);
        bool homogeneous = true, first = true;
        for (const auto& vec : iso->copies[(size_t)pi.copy]) {
            for (size_t i = 0; i < vec.size(); ++i) {
                if (vec[i].is_zero()) continue;
                std::vector<int> cur((size_t)nblocks, 0);
                for (int v = 0; v < ideal.nvars; ++v)
                    if (basis[i].e[(size_t)v] && block_of[(size_t)v] >= 0)
                        cur[(size_t)block_of[(size_t)v]] += basis[i].e[(size_t)v];
                if (first) {
                    bdeg = cur;
                    first = false;
                } else if (bdeg != cur) {
                    homogeneous = false;
                }
            }
        }
        if (homogeneous && nblocks > 0)
            for (int b = 0; b < nblocks; ++b)
                weights[(size_t)j][(size_t)b] = Rational(bdeg[(size_t)b]);
        weights[(size_t)j][(size_t)(
            nblocks + comb_index.at({pi.irreducible, pi.degree, pi.combination}))] = 1;
    }

    // Greedy elimination in parameter index order: a parameter whose weight
    // is independent of the already-chosen ones can be scaled to 1.
    std::vector<std::vector<Rational>> chosen;
    std::map<int, Cyclotomic> fixed;
    for (int j = 0; j < ideal.nparams; ++j) {
        auto probe = chosen;
        probe.push_back(weights[(size_t)j]);
        if (rank(probe) == probe.size()) {
            chosen.push_back(weights[(size_t)j]);
            ideal.params[(size_t)j].fixed_to_one = true;
            fixed[j] = Cyclotomic(1);
            std::ostringstream os;
            os << "assumed c" << (j + 1) << " nonzero and scaled it to 1";
            ideal.log.push_back(os.str());
        }
    }

    for (auto& gen : ideal.generators) {
        std::vector<Term<CPoly>> ts;
        for (const auto& t : gen.terms) {
            CPoly c = t.c.substitute(fixed);
            if (!c.is_zero()) ts.push_back({t.m, c});
        }
        gen = poly_normalize(std::move(ts), ideal.order);
    }
    return ideal;
}

} // namespace canoneq
