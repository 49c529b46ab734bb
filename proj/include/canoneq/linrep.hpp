#ifndef CANONEQ_LINREP_HPP
#define CANONEQ_LINREP_HPP

#include "canoneq/char_theory.hpp"
#include "canoneq/polyring.hpp"

namespace canoneq {

/// A matrix representation given by one matrix per group generator and
/// extended to arbitrary elements along the BFS word map.
struct MatrixRep {
    const GroupModel* group = nullptr;
    int dim = 0;
    std::vector<Matrix> gen_images;

    Matrix image(int element) const;
    /// Images of every element, indexed like the GroupModel.
    std::vector<Matrix> all_images() const;
    Character character() const;
    /// Homomorphism spot-check on generator pairs plus `samples` random word
    /// pairs drawn from the given seed.
    void check_homomorphism(int samples = 50, unsigned long seed = 1) const;
};

/// Left regular representation: permutation matrices of left multiplication.
MatrixRep regular_representation(const GroupModel& g);

/// Projection onto the chi-isotypic component of rep:
/// (deg chi / |G|) sum_g conj(chi(g)) rho(g).
Matrix isotypic_projection(const MatrixRep& rep, const Character& chi);

/// Matrix generators of an irreducible representation with character chi,
/// built inside the regular representation: a seeded pseudo-random vector is
/// pushed through a rank-one eigenspace idempotent of a cyclic (or
/// commuting-pair) subgroup, projected to the chi-isotypic component, and
/// its orbit is spun into a basis. Retries with fresh vectors up to a budget.
MatrixRep extract_irreducible(const GroupModel& g, const Character& chi, unsigned long seed);

/// Action of x_j -> sum_i M_ij x_i on the degree-d monomial basis.
Matrix sym_matrix(const Matrix& m, int d);

/// Symmetric-power representation of rep on the degree-d monomial basis.
MatrixRep sym_action(const MatrixRep& rep, int d);

/// Ordered bases of the copies of the irreducible V_p inside a polynomial
/// representation, chosen so the group acts by the reference matrices on
/// every copy (exact equality, verified).
struct AlignedIsotypic {
    int irreducible_index = -1;
    MatrixRep reference;
    int nvars = 0;
    int degree_d = 0;
    // copies[c][k]: k-th basis polynomial of copy c, as a vector over the
    // degree-d monomial basis (degree_monomials(nvars, degree_d)).
    std::vector<std::vector<std::vector<Cyclotomic>>> copies;

    std::vector<std::vector<Poly<Cyclotomic>>> copies_as_polys(const TermOrder& ord) const;
};

AlignedIsotypic aligned_bases(const MatrixRep& symrep, const CharacterTable& table, int p,
                              const MatrixRep& reference, int nvars, int d);

/// Variable supports of the irreducible copies inside the degree-1 action.
/// Returns one sorted variable-index list per copy when the supports
/// partition the variables, and an empty list otherwise.
std::vector<std::vector<int>> block_supports(const MatrixRep& rep, const CharacterTable& table,
                                             unsigned long seed);

} // namespace canoneq

#endif
