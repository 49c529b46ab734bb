#ifndef CANONEQ_SURFACE_DATA_HPP
#define CANONEQ_SURFACE_DATA_HPP

#include <string>

#include "canoneq/char_theory.hpp"

namespace canoneq {

struct Signature {
    int g0 = 0;
    std::vector<int> branch_orders; // e_1..e_r, each >= 2

    std::string str() const;
};

/// Surface kernel generators: elements a_1..a_g0, b_1..b_g0, g_1..g_r of G
/// with <all> = G, Order(g_i) = e_i and prod [a_j,b_j] prod g_i = Id.
struct SurfaceKernelData {
    const GroupModel* group = nullptr;
    Signature signature;
    std::vector<int> a_elems, b_elems; // g0 of each
    std::vector<int> branch_elems;     // r of them
};

/// All violations of the three defining conditions; empty means valid.
std::vector<std::string> validate_skg(const SurfaceKernelData& skg);

/// Genus from 2g - 2 = |G| (2 g0 - 2 + sum (1 - 1/e_i)).
Rational riemann_hurwitz_genus(long group_order, const Signature& sig);

/// Number of fixed points of sigma acting locally by z -> exp(2 pi i u/h) z,
/// from the branch data: |C(sigma)| * sum over branch generators g_i with
/// h | m_i and sigma ~ g_i^{m_i u / h} of 1/m_i.
long count_fixed_points(const SurfaceKernelData& skg, int sigma, int u);

struct DifferentialCharacter {
    int d = 1;
    Character chi;
};

/// Character of the action on d-fold holomorphic differentials via the
/// Eichler trace formula (identity class via Riemann-Roch).
DifferentialCharacter eichler_character(const SurfaceKernelData& skg, int d);

/// Character of the degree-d part of the canonical ideal:
/// Sym^d(chi_1) - chi_d, validated as a true character.
Character ideal_character(const SurfaceKernelData& skg, int d, const CharacterTable& table);

struct ScreenResult {
    long genus = 0;
    bool hyperelliptic = false;
    bool cyclic_trigonal_candidate = false;
    bool plane_quintic_candidate = false;
    bool quadrics_suffice = false;
};

/// Gonality screens: central involution with 2g+2 fixed points; order-3
/// element with g+2 fixed points; genus-6 Sym^2-of-3-dimensional test.
ScreenResult screen(const SurfaceKernelData& skg, const CharacterTable& table);

} // namespace canoneq

#endif
