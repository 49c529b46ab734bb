#include "canoneq/surface_data.hpp"

#include <numeric>
#include <sstream>

namespace canoneq {

std::string Signature::str() const {
    std::ostringstream os;
    os << "(" << g0 << ";";
    for (size_t i = 0; i < branch_orders.size(); ++i)
        os << (i ? "," : " ") << branch_orders[i];
    os << ")";
    return os.str();
}

std::vector<std::string> validate_skg(const SurfaceKernelData& skg) {
    std::vector<std::string> violations;
    const GroupModel& g = *skg.group;

    if ((int)skg.a_elems.size() != skg.signature.g0 ||
        (int)skg.b_elems.size() != skg.signature.g0)
        violations.push_back("hyperbolic generator count does not match g0");
    if (skg.branch_elems.size() != skg.signature.branch_orders.size())
        violations.push_back("branch generator count does not match signature");

    for (size_t i = 0; i < skg.branch_elems.size() && i < skg.signature.branch_orders.size();
         ++i) {
        int ord = g.element_order(skg.branch_elems[i]);
        if (ord != skg.signature.branch_orders[i]) {
            std::ostringstream os;
            os << "order of branch generator " << (i + 1) << " is " << ord << ", signature wants "
               << skg.signature.branch_orders[i];
            violations.push_back(os.str());
        }
    }

    // product relation: prod [a_j, b_j] prod g_i = Id
    int prod = g.identity();
    for (size_t j = 0; j < skg.a_elems.size() && j < skg.b_elems.size(); ++j) {
        int a = skg.a_elems[j], b = skg.b_elems[j];
        int comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
        prod = g.mul(prod, comm);
    }
    for (int e : skg.branch_elems) prod = g.mul(prod, e);
    if (prod != g.identity()) violations.push_back("product relation fails");

    // generation: closure of the listed elements must be all of G
    std::vector<int> listed;
    listed.insert(listed.end(), skg.a_elems.begin(), skg.a_elems.end());
    listed.insert(listed.end(), skg.b_elems.begin(), skg.b_elems.end());
    listed.insert(listed.end(), skg.branch_elems.begin(), skg.branch_elems.end());
    std::vector<bool> seen((size_t)g.order(), false);
    std::vector<int> queue{g.identity()};
    seen[(size_t)g.identity()] = true;
    size_t head = 0, count = 1;
    while (head < queue.size()) {
        int cur = queue[head++];
        for (int s : listed) {
            int nxt = g.mul(cur, s);
            if (!seen[(size_t)nxt]) {
                seen[(size_t)nxt] = true;
                queue.push_back(nxt);
                ++count;
            }
        }
    }
    if ((int)count != g.order()) violations.push_back("listed elements do not generate the group");

    return violations;
}

Rational riemann_hurwitz_genus(long group_order, const Signature& sig) {
    Rational s(2 * sig.g0 - 2);
    for (int e : sig.branch_orders) s += Rational(1) - rat(1, e);
    return Rational(1) + Rational(group_order) * s / 2;
}

long count_fixed_points(const SurfaceKernelData& skg, int sigma, int u) {
    const GroupModel& g = *skg.group;
    if (sigma == g.identity()) throw error("count_fixed_points: sigma must be nontrivial");
    int h = g.element_order(sigma);
    if (u < 1 || u >= h || std::gcd(u, h) != 1)
        throw error("count_fixed_points: u must be a unit mod the order of sigma");
    int csig = g.class_of(sigma);
    Rational sum(0);
    for (size_t i = 0; i < skg.branch_elems.size(); ++i) {
        int m = skg.signature.branch_orders[i];
        if (m % h != 0) continue;
        long k = (long)(m / h) * u;
        if (g.power_class(g.class_of(skg.branch_elems[i]), k) == csig) sum += rat(1, m);
    }
    Rational total = Rational(g.centralizer_order(sigma)) * sum;
    if (!is_integer(total) || total < 0)
        throw non_integer_fix_count("fixed point count " + total.get_str() +
                                    " is not a nonnegative integer");
    return to_long(total);
}

DifferentialCharacter eichler_character(const SurfaceKernelData& skg, int d) {
    const GroupModel& g = *skg.group;
    Rational genus_r = riemann_hurwitz_genus(g.order(), skg.signature);
    if (!is_integer(genus_r) || genus_r < 2)
        throw error("eichler_character: genus " + genus_r.get_str() + " is not an integer >= 2");
    long genus = to_long(genus_r);

    DifferentialCharacter out;
    out.d = d;
    out.chi.group = &g;
    out.chi.values.assign((size_t)g.num_classes(), Cyclotomic());

    for (int c = 0; c < g.num_classes(); ++c) {
        int rep = g.class_rep(c);
        if (rep == g.identity()) {
            // Riemann-Roch dimensions
            out.chi.values[(size_t)c] =
                Cyclotomic(d == 1 ? genus : (2 * d - 1) * (genus - 1));
            continue;
        }
        int h = g.element_order(rep);
        Cyclotomic acc = d == 1 ? Cyclotomic(1) : Cyclotomic(0);
        for (int u = 1; u < h; ++u) {
            if (std::gcd(u, h) != 1) continue;
            long fix = count_fixed_points(skg, rep, u);
            if (fix == 0) continue;
            Cyclotomic zu = Cyclotomic::root_of_unity((unsigned)h, u);
            Cyclotomic numer = d == 1
                                   ? zu
                                   : Cyclotomic::root_of_unity((unsigned)h, (long)u * (d % h));
            acc += Cyclotomic(fix) * numer / (Cyclotomic(1) - zu);
        }
        out.chi.values[(size_t)c] = acc;
    }
    return out;
}

Character ideal_character(const SurfaceKernelData& skg, int d, const CharacterTable& table) {
    Character chi1 = eichler_character(skg, 1).chi;
    Character chid = eichler_character(skg, d).chi;
    Character id = sym_power_character(chi1, d) - chid;
    // must be a true character: decompose throws otherwise
    decompose(id, table);
    return id;
}

ScreenResult screen(const SurfaceKernelData& skg, const CharacterTable& table) {
    const GroupModel& g = *skg.group;
    ScreenResult r;
    r.genus = to_long(riemann_hurwitz_genus(g.order(), skg.signature));

    // hyperelliptic: a central involution with 2g+2 fixed points
    for (int c = 0; c < g.num_classes(); ++c) {
        int rep = g.class_rep(c);
        if (g.class_size(c) != 1 || g.element_order(rep) != 2) continue;
        if (count_fixed_points(skg, rep, 1) == 2 * r.genus + 2) r.hyperelliptic = true;
    }

    // cyclic trigonal: an order-3 element fixing g+2 points in total
    for (int c = 0; c < g.num_classes(); ++c) {
        int rep = g.class_rep(c);
        if (g.element_order(rep) != 3) continue;
        long total = count_fixed_points(skg, rep, 1) + count_fixed_points(skg, rep, 2);
        if (total == r.genus + 2) r.cyclic_trigonal_candidate = true;
    }

    // plane quintic necessary condition: genus 6 and chi_1 = Sym^2(V) * lambda
    // for a possibly reducible 3-dimensional character V and a linear
    // character lambda. The twist absorbs the linearization ambiguity of
    // O(2) on the Veronese surface (the group scales the quintic equation by
    // a character); without it the Fermat quintic itself fails the test.
    if (r.genus == 6) {
        Character chi1 = eichler_character(skg, 1).chi;
        std::vector<const Character*> small;
        std::vector<const Character*> linear;
        for (const auto& irr : table.irreducibles) {
            if (irr.values[0].rational_value() <= 3) small.push_back(&irr);
            if (irr.values[0] == Cyclotomic(1)) linear.push_back(&irr);
        }
        size_t n = small.size();
        auto deg_of = [&](const Character* c) { return to_long(c->values[0].rational_value()); };
        // multisets of total degree 3: singletons, pairs, triples
        std::vector<std::vector<const Character*>> combos;
        for (size_t i = 0; i < n; ++i) {
            if (deg_of(small[i]) == 3) combos.push_back({small[i]});
            for (size_t j = i; j < n; ++j) {
                if (deg_of(small[i]) + deg_of(small[j]) == 3)
                    combos.push_back({small[i], small[j]});
                for (size_t k = j; k < n; ++k)
                    if (deg_of(small[i]) + deg_of(small[j]) + deg_of(small[k]) == 3)
                        combos.push_back({small[i], small[j], small[k]});
            }
        }
        std::vector<Character> targets;
        for (const Character* lam : linear) targets.push_back(chi1 * *lam);
        for (const auto& combo : combos) {
            Character v{&g, std::vector<Cyclotomic>((size_t)g.num_classes())};
            for (const Character* part : combo) v = v + *part;
            Character s2 = sym_power_character(v, 2);
            for (const auto& target : targets)
                if (s2 == target) {
                    r.plane_quintic_candidate = true;
                    break;
                }
            if (r.plane_quintic_candidate) break;
        }
    }

    r.quadrics_suffice =
        !r.hyperelliptic && !r.cyclic_trigonal_candidate && !r.plane_quintic_candidate;
    return r;
}

} // namespace canoneq
