#include "canoneq/linrep.hpp"

#include <algorithm>
#include <functional>

namespace canoneq {

namespace {

struct Lcg {
    unsigned long long s;
    explicit Lcg(unsigned long long seed) : s(seed) {}
    long next(long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + (long)((s >> 33) % (unsigned long long)(hi - lo + 1));
    }
};

/// Row space in reduced echelon form with incremental insertion.
class IncrementalSpan {
  public:
    explicit IncrementalSpan(size_t width) : width_(width) {}

    size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<Cyclotomic>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Returns true if v enlarged the span.
    bool insert(std::vector<Cyclotomic> v) {
        reduce(v);
        size_t p = 0;
        while (p < width_ && v[p].is_zero()) ++p;
        if (p == width_) return false;
        Cyclotomic inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (!rows_[r][p].is_zero()) {
                Cyclotomic f = rows_[r][p];
                for (size_t j = 0; j < width_; ++j) rows_[r][j] -= f * v[j];
            }
        }
        size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + (long)at, std::move(v));
        pivots_.insert(pivots_.begin() + (long)at, p);
        return true;
    }

    void reduce(std::vector<Cyclotomic>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Cyclotomic& f = v[pivots_[r]];
            if (f.is_zero()) continue;
            Cyclotomic c = f;
            for (size_t j = 0; j < width_; ++j) v[j] -= c * rows_[r][j];
        }
    }

    // Coordinates of v in the row basis; throws if v is outside the span.
    std::vector<Cyclotomic> coordinates(const std::vector<Cyclotomic>& v) const {
        std::vector<Cyclotomic> coords(rows_.size());
        std::vector<Cyclotomic> rem = v;
        for (size_t r = 0; r < rows_.size(); ++r) {
            coords[r] = rem[pivots_[r]];
            if (coords[r].is_zero()) continue;
            for (size_t j = 0; j < width_; ++j) rem[j] -= coords[r] * rows_[r][j];
        }
        for (const auto& x : rem)
            if (!x.is_zero()) throw internal_error("vector outside the spanned module");
        return coords;
    }

  private:
    size_t width_;
    std::vector<std::vector<Cyclotomic>> rows_;
    std::vector<size_t> pivots_;
};

} // namespace

Matrix MatrixRep::image(int element) const {
    Matrix m = Matrix::identity(dim);
    for (int j : group->word(element)) m = m * gen_images[j];
    return m;
}

std::vector<Matrix> MatrixRep::all_images() const {
    std::vector<Matrix> images(group->order());
    for (int i = 0; i < group->order(); ++i) {
        auto [p, j] = group->parent(i);
        images[i] = p < 0 ? gen_images[j] : images[p] * gen_images[j];
    }
    images[group->identity()] = Matrix::identity(dim);
    return images;
}

Character MatrixRep::character() const {
    Character r{group, std::vector<Cyclotomic>(group->num_classes())};
    for (int c = 0; c < group->num_classes(); ++c) r.values[c] = image(group->class_rep(c)).trace();
    return r;
}

void MatrixRep::check_homomorphism(int samples, unsigned long seed) const {
    auto images = all_images();
    for (int i = 0; i < group->num_generators(); ++i)
        for (int j = 0; j < group->num_generators(); ++j) {
            int a = group->generator(i), b = group->generator(j);
            if (images[group->mul(a, b)] != images[a] * images[b])
                throw internal_error("representation fails on generator pair");
        }
    Lcg rng(seed);
    for (int t = 0; t < samples; ++t) {
        int a = (int)rng.next(0, group->order() - 1);
        int b = (int)rng.next(0, group->order() - 1);
        if (images[group->mul(a, b)] != images[a] * images[b])
            throw internal_error("representation fails homomorphism spot-check");
    }
}

MatrixRep regular_representation(const GroupModel& g) {
    MatrixRep rep;
    rep.group = &g;
    rep.dim = g.order();
    for (int j = 0; j < g.num_generators(); ++j) {
        int s = g.generator(j);
        Matrix m(g.order(), g.order());
        for (int b = 0; b < g.order(); ++b) m.at(g.mul(s, b), b) = Cyclotomic(1);
        rep.gen_images.push_back(std::move(m));
    }
    return rep;
}

Matrix isotypic_projection(const MatrixRep& rep, const Character& chi) {
    if (rep.group != chi.group) throw group_mismatch();
    const GroupModel& g = *rep.group;
    auto images = rep.all_images();
    Matrix acc(rep.dim, rep.dim);
    for (int y = 0; y < g.order(); ++y) {
        Cyclotomic c = chi.values[g.class_of(y)].conjugate();
        if (c.is_zero()) continue;
        for (int i = 0; i < rep.dim; ++i)
            for (int j = 0; j < rep.dim; ++j) {
                const Cyclotomic& v = images[y].at(i, j);
                if (!v.is_zero()) acc.at(i, j) += c * v;
            }
    }
    Cyclotomic scale = chi.values[0] / Cyclotomic(g.order());
    for (auto& v : acc.a) v *= scale;
    return acc;
}

namespace {

// v -> rho(x) v in the left regular representation.
std::vector<Cyclotomic> regular_apply(const GroupModel& g, int x,
                                      const std::vector<Cyclotomic>& v) {
    std::vector<Cyclotomic> w(v.size());
    for (int b = 0; b < (int)v.size(); ++b)
        if (!v[b].is_zero()) w[g.mul(x, b)] = v[b];
    return w;
}

// Eigenvalue multiplicities of rho_chi(g) from the character restriction:
// mult_s = (1/h) sum_t chi(g^t) zeta_h^{-st}.
std::vector<long> cyclic_multiplicities(const GroupModel& g, const Character& chi, int elem) {
    int h = g.element_order(elem);
    int c = g.class_of(elem);
    std::vector<long> mults;
    for (int s = 0; s < h; ++s) {
        Cyclotomic acc;
        for (int t = 0; t < h; ++t)
            acc += chi.values[g.power_class(c, t)] *
                   Cyclotomic::root_of_unity((unsigned)h, -(long)s * t);
        acc /= Cyclotomic(h);
        if (!acc.is_rational() || !is_integer(acc.rational_value()))
            throw internal_error("cyclic restriction multiplicity is not integral");
        mults.push_back(to_long(acc.rational_value()));
    }
    return mults;
}

struct IdempotentFactor {
    int element;
    int root_index; // eigenvalue zeta_h^root_index of rho(element)
};

// Apply (1/h) sum_t zeta_h^{-st} rho(g)^t to v.
std::vector<Cyclotomic> apply_eigen_idempotent(const GroupModel& g, const IdempotentFactor& f,
                                               std::vector<Cyclotomic> v) {
    int h = g.element_order(f.element);
    std::vector<Cyclotomic> acc(v.size());
    int cur = g.identity();
    for (int t = 0; t < h; ++t) {
        Cyclotomic c = Cyclotomic::root_of_unity((unsigned)h, -(long)f.root_index * t) *
                       Cyclotomic(rat(1, h));
        auto moved = regular_apply(g, cur, v);
        for (size_t i = 0; i < v.size(); ++i)
            if (!moved[i].is_zero()) acc[i] += c * moved[i];
        cur = g.mul(cur, f.element);
    }
    return acc;
}

} // namespace

MatrixRep extract_irreducible(const GroupModel& g, const Character& chi, unsigned long seed) {
    long n = to_long(chi.values[0].rational_value());
    MatrixRep rep;
    rep.group = &g;
    rep.dim = (int)n;

    if (n == 1) {
        for (int j = 0; j < g.num_generators(); ++j) {
            Matrix m(1, 1);
            m.at(0, 0) = chi.values[g.class_of(g.generator(j))];
            rep.gen_images.push_back(std::move(m));
        }
        rep.check_homomorphism();
        return rep;
    }

    // Rank-one eigenspace idempotents: single elements first, then commuting
    // pairs whose joint eigenspace has multiplicity one.
    std::vector<std::vector<IdempotentFactor>> candidates;
    std::vector<int> reps_by_order;
    for (int c = 0; c < g.num_classes(); ++c) reps_by_order.push_back(g.class_rep(c));
    std::sort(reps_by_order.begin(), reps_by_order.end(),
              [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
    for (int elem : reps_by_order) {
        if (g.element_order(elem) == 1) continue;
        auto mults = cyclic_multiplicities(g, chi, elem);
        for (int s = 0; s < (int)mults.size(); ++s)
            if (mults[s] == 1) candidates.push_back({{elem, s}});
    }
    if (candidates.empty()) {
        // joint eigenspaces of commuting pairs
        for (int elem : reps_by_order) {
            int h1 = g.element_order(elem);
            if (h1 == 1) continue;
            for (int other = 0; other < g.order() && candidates.size() < 64; ++other) {
                if (g.mul(elem, other) != g.mul(other, elem)) continue;
                int h2 = g.element_order(other);
                if (h2 == 1) continue;
                // joint multiplicities via the double character sum
                for (int s1 = 0; s1 < h1; ++s1) {
                    for (int s2 = 0; s2 < h2; ++s2) {
                        Cyclotomic acc;
                        int p1 = g.identity();
                        for (int t1 = 0; t1 < h1; ++t1) {
                            int p2 = p1;
                            for (int t2 = 0; t2 < h2; ++t2) {
                                acc += chi.values[g.class_of(p2)] *
                                       Cyclotomic::root_of_unity((unsigned)h1, -(long)s1 * t1) *
                                       Cyclotomic::root_of_unity((unsigned)h2, -(long)s2 * t2);
                                p2 = g.mul(p2, other);
                            }
                            p1 = g.mul(p1, elem);
                        }
                        acc /= Cyclotomic(h1 * h2);
                        if (acc == Cyclotomic(1))
                            candidates.push_back({{elem, s1}, {other, s2}});
                    }
                }
            }
            if (!candidates.empty()) break;
        }
    }
    if (candidates.empty())
        throw extraction_failed("no rank-one eigenspace idempotent found for this character");

    Lcg rng(seed);
    const int budget = 32;
    for (int attempt = 0; attempt < budget; ++attempt) {
        const auto& cand = candidates[attempt % candidates.size()];
        std::vector<Cyclotomic> v(g.order());
        for (auto& x : v) x = Cyclotomic(rng.next(-4, 4));
        for (const auto& f : cand) v = apply_eigen_idempotent(g, f, v);
        // project onto the chi-isotypic component
        std::vector<Cyclotomic> w(g.order());
        {
            std::vector<Cyclotomic> coeff(g.num_classes());
            for (int c = 0; c < g.num_classes(); ++c) coeff[c] = chi.values[c].conjugate();
            for (int y = 0; y < g.order(); ++y) {
                const Cyclotomic& c = coeff[g.class_of(y)];
                if (c.is_zero()) continue;
                auto moved = regular_apply(g, y, v);
                for (int i = 0; i < g.order(); ++i)
                    if (!moved[i].is_zero()) w[i] += c * moved[i];
            }
            Cyclotomic scale = chi.values[0] / Cyclotomic(g.order());
            for (auto& x : w) x *= scale;
        }
        bool zero = true;
        for (const auto& x : w)
            if (!x.is_zero()) zero = false;
        if (zero) continue;

        // spin the orbit of w
        IncrementalSpan span((size_t)g.order());
        span.insert(w);
        std::vector<std::vector<Cyclotomic>> queue{w};
        bool too_big = false;
        while (!queue.empty() && !too_big) {
            auto cur = std::move(queue.back());
            queue.pop_back();
            for (int j = 0; j < g.num_generators(); ++j) {
                auto moved = regular_apply(g, g.generator(j), cur);
                if (span.insert(moved)) {
                    if ((long)span.dim() > n) {
                        too_big = true;
                        break;
                    }
                    queue.push_back(std::move(moved));
                }
            }
        }
        if (too_big || (long)span.dim() != n) continue;

        // matrices of the generator actions in the spanned basis
        MatrixRep out;
        out.group = &g;
        out.dim = (int)n;
        bool ok = true;
        for (int j = 0; j < g.num_generators() && ok; ++j) {
            Matrix m((int)n, (int)n);
            for (long i = 0; i < n; ++i) {
                auto moved = regular_apply(g, g.generator(j), span.rows()[(size_t)i]);
                std::vector<Cyclotomic> coords;
                try {
                    coords = span.coordinates(moved);
                } catch (const internal_error&) {
                    ok = false;
                    break;
                }
                for (long r = 0; r < n; ++r) m.at((int)r, (int)i) = coords[(size_t)r];
            }
            out.gen_images.push_back(std::move(m));
        }
        if (!ok) continue;

        // exact trace check against the target character on every class
        bool traces_ok = true;
        for (int c = 0; c < g.num_classes() && traces_ok; ++c)
            if (out.image(g.class_rep(c)).trace() != chi.values[c]) traces_ok = false;
        if (!traces_ok) continue;
        out.check_homomorphism();
        return out;
    }
    throw extraction_failed("retry budget exhausted");
}

Matrix sym_matrix(const Matrix& m, int d) {
    int nvars = m.rows;
    auto basis = degree_monomials(nvars, d);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i].e] = (int)i;

    TermOrder ord{OrderKind::grevlex};
    // images of the variables: x_j -> sum_i M_ij x_i
    std::vector<Poly<Cyclotomic>> var_images(nvars);
    for (int j = 0; j < nvars; ++j) {
        std::vector<Term<Cyclotomic>> ts;
        for (int i = 0; i < nvars; ++i)
            if (!m.at(i, j).is_zero()) ts.push_back({Monomial::var(i, nvars), m.at(i, j)});
        var_images[j] = poly_normalize(std::move(ts), ord);
    }

    Matrix s((int)basis.size(), (int)basis.size());
    for (size_t col = 0; col < basis.size(); ++col) {
        Poly<Cyclotomic> prod;
        prod.terms.push_back({Monomial::one(nvars), Cyclotomic(1)});
        for (int v = 0; v < nvars; ++v)
            for (int k = 0; k < basis[col].e[v]; ++k) prod = poly_mul(prod, var_images[v], ord);
        for (const auto& t : prod.terms) s.at(index.at(t.m.e), (int)col) = t.c;
    }
    return s;
}

MatrixRep sym_action(const MatrixRep& rep, int d) {
    MatrixRep out;
    out.group = rep.group;
    for (const auto& m : rep.gen_images) out.gen_images.push_back(sym_matrix(m, d));
    out.dim = out.gen_images.empty() ? 0 : out.gen_images[0].rows;
    return out;
}

std::vector<std::vector<Poly<Cyclotomic>>> AlignedIsotypic::copies_as_polys(
    const TermOrder& ord) const {
    auto basis = degree_monomials(nvars, degree_d);
    std::vector<std::vector<Poly<Cyclotomic>>> out;
    for (const auto& copy : copies) {
        std::vector<Poly<Cyclotomic>> polys;
        for (const auto& vec : copy) {
            std::vector<Term<Cyclotomic>> ts;
            for (size_t i = 0; i < basis.size(); ++i)
                if (!vec[i].is_zero()) ts.push_back({basis[i], vec[i]});
            polys.push_back(poly_normalize(std::move(ts), ord));
        }
        out.push_back(std::move(polys));
    }
    return out;
}

AlignedIsotypic aligned_bases(const MatrixRep& symrep, const CharacterTable& table, int p,
                              const MatrixRep& reference, int nvars, int d) {
    const GroupModel& g = *symrep.group;
    const Character& chi = table.irreducibles[p];
    long n = to_long(chi.values[0].rational_value());
    int N = symrep.dim;

    // multiplicity of V_p in the symmetric power
    Cyclotomic mult_c = inner_product(symrep.character(), chi);
    if (!mult_c.is_rational() || !is_integer(mult_c.rational_value()))
        throw alignment_failed("multiplicity is not integral");
    long mult = to_long(mult_c.rational_value());

    AlignedIsotypic out;
    out.irreducible_index = p;
    out.reference = reference;
    out.nvars = nvars;
    out.degree_d = d;
    if (mult == 0) return out;

    auto sym_images = symrep.all_images();
    auto ref_images = reference.all_images();

    // p_{a,1} = (n/|G|) sum_t ref(t^{-1})[1][a] * Sym(t)
    std::vector<Matrix> ops;
    for (long alpha = 0; alpha < n; ++alpha) {
        Matrix acc(N, N);
        for (int t = 0; t < g.order(); ++t) {
            const Cyclotomic& r = ref_images[g.inv(t)].at(0, (int)alpha);
            if (r.is_zero()) continue;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    const Cyclotomic& v = sym_images[t].at(i, j);
                    if (!v.is_zero()) acc.at(i, j) += r * v;
                }
        }
        Cyclotomic scale = Cyclotomic(n) / Cyclotomic(g.order());
        for (auto& v : acc.a) v *= scale;
        ops.push_back(std::move(acc));
    }

    // column space of p_{1,1}: canonical basis via rref of the transpose
    std::vector<std::vector<Cyclotomic>> rows(N, std::vector<Cyclotomic>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) rows[j][i] = ops[0].at(i, j);
    auto piv = rref(rows);
    if ((long)piv.size() != mult)
        throw alignment_failed("rank of the row-1 projector does not match the multiplicity");

    for (size_t c = 0; c < piv.size(); ++c) {
        std::vector<std::vector<Cyclotomic>> copy;
        for (long alpha = 0; alpha < n; ++alpha) {
            std::vector<Cyclotomic> va(N);
            for (int i = 0; i < N; ++i) {
                Cyclotomic acc;
                for (int j = 0; j < N; ++j)
                    if (!rows[c][j].is_zero() && !ops[(size_t)alpha].at(i, j).is_zero())
                        acc += ops[(size_t)alpha].at(i, j) * rows[c][j];
                va[i] = acc;
            }
            copy.push_back(std::move(va));
        }
        out.copies.push_back(std::move(copy));
    }

    // Canonicalize: row-reduce the first copy's slot stack and transport the
    // same change of basis to every copy and to the reference matrices. This
    // keeps the slots sparse (echelon in the monomial basis) and the
    // coefficients small.
    if (n > 1) {
        std::vector<std::vector<Cyclotomic>> aug(out.copies[0]);
        for (long i = 0; i < n; ++i) {
            aug[(size_t)i].resize((size_t)(N + n));
            aug[(size_t)i][(size_t)(N + i)] = Cyclotomic(1);
        }
        rref(aug);
        Matrix t((int)n, (int)n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) t.at((int)i, (int)j) = aug[(size_t)i][(size_t)(N + j)];
        Matrix tt = t.transpose();
        Matrix tti = tt.inverse();
        for (auto& m : out.reference.gen_images) m = tti * m * tt;
        for (auto& copy : out.copies) {
            std::vector<std::vector<Cyclotomic>> fresh((size_t)n,
                                                       std::vector<Cyclotomic>((size_t)N));
            for (long a = 0; a < n; ++a)
                for (long gidx = 0; gidx < n; ++gidx) {
                    const Cyclotomic& f = t.at((int)a, (int)gidx);
                    if (f.is_zero()) continue;
                    for (int i = 0; i < N; ++i)
                        fresh[(size_t)a][(size_t)i] += f * copy[(size_t)gidx][(size_t)i];
                }
            copy = std::move(fresh);
        }
    }
    // Per-copy scale: pivot coefficient of each copy's first slot becomes 1.
    // Alignment is invariant under a scalar on a whole copy.
    for (auto& copy : out.copies) {
        Cyclotomic pivot;
        for (const auto& x : copy[0])
            if (!x.is_zero()) {
                pivot = x;
                break;
            }
        if (pivot.is_zero() || pivot.is_one()) continue;
        Cyclotomic inv = pivot.inverse();
        for (auto& vec : copy)
            for (auto& x : vec) x *= inv;
    }

    auto ref_images2 = out.reference.all_images();
    ref_images = std::move(ref_images2);

    // exact alignment check: Sym(s) w_a == sum_b ref(s)[b][a] w_b per copy
    for (int j = 0; j < g.num_generators(); ++j) {
        int s = g.generator(j);
        for (const auto& copy : out.copies) {
            for (long a = 0; a < n; ++a) {
                std::vector<Cyclotomic> lhs(N);
                for (int i = 0; i < N; ++i) {
                    Cyclotomic acc;
                    for (int k = 0; k < N; ++k)
                        if (!sym_images[s].at(i, k).is_zero() && !copy[(size_t)a][k].is_zero())
                            acc += sym_images[s].at(i, k) * copy[(size_t)a][k];
                    lhs[i] = acc;
                }
                std::vector<Cyclotomic> rhs(N);
                for (long b = 0; b < n; ++b) {
                    const Cyclotomic& r = ref_images[s].at((int)b, (int)a);
                    if (r.is_zero()) continue;
                    for (int i = 0; i < N; ++i) rhs[i] += r * copy[(size_t)b][i];
                }
                if (lhs != rhs) throw alignment_failed("copy does not transform by the reference matrices");
            }
        }
    }

    // joint independence of all copies
    std::vector<std::vector<Cyclotomic>> all;
    for (const auto& copy : out.copies)
        for (const auto& vec : copy) all.push_back(vec);
    if ((long)rank(all) != mult * n)
        throw alignment_failed("copies are not jointly independent");

    return out;
}

std::vector<std::vector<int>> block_supports(const MatrixRep& rep, const CharacterTable& table,
                                             unsigned long seed) {
    const GroupModel& g = *rep.group;
    Character chi = rep.character();
    auto mults = decompose(chi, table);
    std::vector<std::vector<int>> blocks;
    std::vector<int> covered((size_t)rep.dim, 0);
    for (int p = 0; p < (int)mults.size(); ++p) {
        if (mults[(size_t)p] == 0) continue;
        MatrixRep ref = extract_irreducible(g, table.irreducibles[(size_t)p], seed);
        AlignedIsotypic iso = aligned_bases(rep, table, p, ref, rep.dim, 1);
        for (const auto& copy : iso.copies) {
            std::vector<int> support;
            for (int v = 0; v < rep.dim; ++v) {
                bool used = false;
                for (const auto& vec : copy)
                    if (!vec[(size_t)v].is_zero()) used = true;
                if (used) {
                    support.push_back(v);
                    covered[(size_t)v] += 1;
                }
            }
            blocks.push_back(std::move(support));
        }
    }
    for (int c : covered)
        if (c != 1) return {}; // supports overlap: no usable scalings
    return blocks;
}

} // namespace canoneq
