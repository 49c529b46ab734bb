#include "canoneq/char_theory.hpp"

#include <algorithm>
#include <numeric>

#include "canoneq/gfp.hpp"
#include "canoneq/linalg.hpp"

namespace canoneq {

Cyclotomic Character::degree() const { return values.empty() ? Cyclotomic() : values[0]; }

Character Character::operator+(const Character& o) const {
    if (group != o.group) throw group_mismatch();
    Character r{group, values};
    for (size_t i = 0; i < values.size(); ++i) r.values[i] += o.values[i];
    return r;
}
Character Character::operator-(const Character& o) const {
    if (group != o.group) throw group_mismatch();
    Character r{group, values};
    for (size_t i = 0; i < values.size(); ++i) r.values[i] -= o.values[i];
    return r;
}
Character Character::operator*(const Character& o) const {
    if (group != o.group) throw group_mismatch();
    Character r{group, values};
    for (size_t i = 0; i < values.size(); ++i) r.values[i] *= o.values[i];
    return r;
}

Character trivial_character(const GroupModel& g) {
    return Character{&g, std::vector<Cyclotomic>(g.num_classes(), Cyclotomic(1))};
}

Character regular_character(const GroupModel& g) {
    Character r{&g, std::vector<Cyclotomic>(g.num_classes())};
    r.values[g.class_of(g.identity())] = Cyclotomic(g.order());
    return r;
}

Cyclotomic inner_product(const Character& a, const Character& b) {
    if (a.group != b.group || a.group == nullptr) throw group_mismatch();
    const GroupModel& g = *a.group;
    Cyclotomic sum;
    for (int c = 0; c < g.num_classes(); ++c)
        sum += Cyclotomic(g.class_size(c)) * a.values[c] * b.values[c].conjugate();
    return sum / Cyclotomic(g.order());
}

std::vector<long> decompose(const Character& chi, const CharacterTable& t) {
    if (chi.group != t.group) throw group_mismatch();
    std::vector<long> m;
    for (const auto& irr : t.irreducibles) {
        Cyclotomic ip = inner_product(chi, irr);
        if (!ip.is_rational() || !is_integer(ip.rational_value()) || ip.rational_value() < 0)
            throw not_a_character("multiplicity " + ip.str() + " is not a nonnegative integer");
        m.push_back(to_long(ip.rational_value()));
    }
    return m;
}

Character sym_power_character(const Character& chi, int d) {
    const GroupModel& g = *chi.group;
    Character r{&g, std::vector<Cyclotomic>(g.num_classes())};
    for (int c = 0; c < g.num_classes(); ++c) {
        const Cyclotomic& v1 = chi.values[c];
        const Cyclotomic& v2 = chi.values[g.power_class(c, 2)];
        if (d == 2) {
            r.values[c] = (v1 * v1 + v2) * Cyclotomic(rat(1, 2));
        } else if (d == 3) {
            const Cyclotomic& v3 = chi.values[g.power_class(c, 3)];
            r.values[c] = (v1 * v1 * v1 + Cyclotomic(3) * v1 * v2 + Cyclotomic(2) * v3) *
                          Cyclotomic(rat(1, 6));
        } else {
            throw error("sym_power_character: d must be 2 or 3");
        }
    }
    return r;
}

Character character_of_matrices(const GroupModel& g, const std::vector<Matrix>& gen_images) {
    if ((int)gen_images.size() != g.num_generators())
        throw error("character_of_matrices: one matrix per generator required");
    Character r{&g, std::vector<Cyclotomic>(g.num_classes())};
    std::vector<bool> class_done(g.num_classes(), false);
    int dim = gen_images.empty() ? 0 : gen_images[0].rows;
    for (int i = 0; i < g.order(); ++i) {
        int c = g.class_of(i);
        if (class_done[c]) continue;
        Matrix m = Matrix::identity(dim);
        for (int j : g.word(i)) m = m * gen_images[j];
        r.values[c] = m.trace();
        class_done[c] = true;
    }
    return r;
}

namespace {

// Class multiplication constants a[i][j][l]: K_i K_j = sum_l a[i][j][l] K_l.
std::vector<std::vector<std::vector<long>>> class_constants(const GroupModel& g) {
    int k = g.num_classes();
    std::vector<std::vector<std::vector<long>>> a(
        k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            a[g.class_of(x)][g.class_of(y)][g.class_of(g.mul(x, y))]++;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                if (a[i][j][l] % g.class_size(l) != 0)
                    throw internal_error("class constants are not integral");
                a[i][j][l] /= g.class_size(l);
            }
    return a;
}

using FpMat = std::vector<std::vector<Fp>>;

// Coordinates of the action of m on the row space of `basis` (which must be
// m-invariant): m * b_j = sum_i A[i][j] b_i.
FpMat restrict_action(const FpMat& m, const std::vector<std::vector<Fp>>& basis, uint64_t p) {
    size_t k = m.size(), d = basis.size();
    std::vector<std::vector<Fp>> sys(k, std::vector<Fp>(d + d, Fp(0, p)));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < d; ++j) sys[i][j] = basis[j][i];
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < k; ++i) {
            Fp acc(0, p);
            for (size_t l = 0; l < k; ++l) acc = acc + m[i][l] * basis[j][l];
            sys[i][d + j] = acc;
        }
    auto piv = rref(sys);
    FpMat a(d, std::vector<Fp>(d, Fp(0, p)));
    for (size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] >= (int)d) throw internal_error("subspace is not invariant");
        for (size_t j = 0; j < d; ++j) a[(size_t)piv[r]][j] = sys[r][d + j];
    }
    return a;
}

} // namespace

CharacterTable character_table(const GroupModel& g) {
    int k = g.num_classes();
    auto a = class_constants(g);

    uint64_t e = g.exponent();
    uint64_t p = find_prime_1_mod(e, std::max<uint64_t>(2 * (uint64_t)g.order(), e));

    // Class matrices over GF(p): (M_i)_{l j} = a[i][j][l].
    std::vector<FpMat> mats(k, FpMat(k, std::vector<Fp>(k, Fp(0, p))));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) mats[i][l][j] = Fp((uint64_t)a[i][j][l], p);

    // Candidate eigenvalues per class matrix, computed once on the full space.
    std::vector<std::vector<uint64_t>> eigen_candidates(k);
    for (int i = 0; i < k; ++i)
        for (uint64_t lam = 0; lam < p; ++lam) {
            FpMat m = mats[i];
            for (int d = 0; d < k; ++d) m[d][d] = m[d][d] - Fp(lam, p);
            if ((int)rank(std::move(m)) < k) eigen_candidates[i].push_back(lam);
        }

    // Refine the full space into common eigenspaces of all class matrices.
    std::vector<std::vector<std::vector<Fp>>> subspaces;
    {
        std::vector<std::vector<Fp>> full(k, std::vector<Fp>(k, Fp(0, p)));
        for (int i = 0; i < k; ++i) full[i][i] = Fp(1, p);
        subspaces.push_back(std::move(full));
    }
    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<std::vector<Fp>>> next;
        for (auto& sub : subspaces) {
            size_t d = sub.size();
            if (d == 1) {
                next.push_back(std::move(sub));
                continue;
            }
            FpMat act = restrict_action(mats[i], sub, p);
            size_t found = 0;
            for (uint64_t lam : eigen_candidates[i]) {
                FpMat m = act;
                for (size_t t = 0; t < d; ++t) m[t][t] = m[t][t] - Fp(lam, p);
                auto piv = rref(m);
                if (piv.size() == d) continue;
                std::vector<bool> is_piv(d, false);
                for (int c : piv) is_piv[c] = true;
                std::vector<std::vector<Fp>> eigenspace;
                for (size_t c = 0; c < d; ++c) {
                    if (is_piv[c]) continue;
                    std::vector<Fp> coord(d, Fp(0, p));
                    coord[c] = Fp(1, p);
                    for (size_t r = 0; r < piv.size(); ++r) coord[(size_t)piv[r]] = -m[r][c];
                    std::vector<Fp> vec(k, Fp(0, p));
                    for (size_t t = 0; t < d; ++t)
                        for (int x = 0; x < k; ++x) vec[x] = vec[x] + coord[t] * sub[t][x];
                    eigenspace.push_back(std::move(vec));
                }
                found += eigenspace.size();
                next.push_back(std::move(eigenspace));
            }
            if (found != d)
                throw internal_error("character table: class matrix not diagonalizable");
        }
        subspaces = std::move(next);
    }
    if ((int)subspaces.size() != k)
        throw internal_error("character table: eigenspace splitting incomplete");

    uint64_t z = element_of_order(e, p);

    CharacterTable table;
    table.group = &g;
    for (auto& sub : subspaces) {
        const std::vector<Fp>& v = sub[0];
        int nz = 0;
        while (field_is_zero(v[nz])) ++nz;
        std::vector<uint64_t> omega(k);
        for (int i = 0; i < k; ++i) {
            Fp num(0, p);
            for (int j = 0; j < k; ++j) num = num + mats[i][nz][j] * v[j];
            omega[i] = (num * field_inv(v[nz])).v;
        }
        // Degree via sum_i omega_i omega_{i*} / |C_i| = |G| / d^2.
        Fp s(0, p);
        for (int i = 0; i < k; ++i) {
            int istar = g.class_of(g.inv(g.class_rep(i)));
            s = s + Fp(omega[i], p) * Fp(omega[istar], p) *
                        field_inv(Fp((uint64_t)g.class_size(i), p));
        }
        if (field_is_zero(s)) throw internal_error("character degree: zero norm");
        uint64_t d2 = (Fp((uint64_t)g.order() % p, p) * field_inv(s)).v;
        uint64_t deg = 0;
        for (uint64_t d = 1; d <= p / 2; ++d)
            if ((uint64_t)((unsigned __int128)d * d % p) == d2) {
                deg = d;
                break;
            }
        if (!deg) throw internal_error("character degree: no square root");

        std::vector<uint64_t> chibar(k);
        for (int i = 0; i < k; ++i)
            chibar[i] =
                (Fp(deg, p) * Fp(omega[i], p) * field_inv(Fp((uint64_t)g.class_size(i), p))).v;

        // Exact lift: chi(g) = sum_s mult_s zeta_h^s, where mult_s is the
        // multiplicity of eigenvalue zeta_h^s of a representing matrix;
        // 0 <= mult_s <= deg < p pins it from its residue.
        Character chi{&g, std::vector<Cyclotomic>(k)};
        for (int i = 0; i < k; ++i) {
            uint64_t h = (uint64_t)g.element_order(g.class_rep(i));
            uint64_t zh = pow_mod(z, e / h, p);
            Fp hinv = field_inv(Fp(h, p));
            Cyclotomic value;
            uint64_t total = 0;
            for (uint64_t sdx = 0; sdx < h; ++sdx) {
                Fp acc(0, p);
                for (uint64_t t = 0; t < h; ++t) {
                    uint64_t zexp = pow_mod(zh, ((h - sdx) % h) * t % h, p);
                    acc = acc + Fp(chibar[g.power_class(i, (long)t)], p) * Fp(zexp, p);
                }
                uint64_t mult = (acc * hinv).v;
                if (mult > deg) throw internal_error("character lift: multiplicity exceeds degree");
                total += mult;
                if (mult)
                    value +=
                        Cyclotomic((long)mult) * Cyclotomic::root_of_unity((unsigned)h, (long)sdx);
            }
            if (total != deg)
                throw internal_error("character lift: multiplicities do not sum to degree");
            chi.values[i] = value;
        }
        table.irreducibles.push_back(std::move(chi));
    }

    std::sort(table.irreducibles.begin(), table.irreducibles.end(),
              [&](const Character& x, const Character& y) {
                  for (int i = 0; i < k; ++i) {
                      int c = Cyclotomic::cmp_embedding(x.values[i], y.values[i]);
                      if (c != 0) return c < 0;
                  }
                  return false;
              });

    Rational degsum(0);
    for (int i = 0; i < k; ++i) {
        for (int j = i; j < k; ++j) {
            Cyclotomic ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
            if (ip != Cyclotomic(i == j ? 1 : 0))
                throw internal_error("character table failed orthogonality check");
        }
        Rational d = table.irreducibles[i].values[0].rational_value();
        degsum += d * d;
    }
    if (degsum != g.order()) throw internal_error("character table: degree sum mismatch");

    return table;
}

} // namespace canoneq
