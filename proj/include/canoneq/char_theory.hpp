#ifndef CANONEQ_CHAR_THEORY_HPP
#define CANONEQ_CHAR_THEORY_HPP

#include <vector>

#include "canoneq/cyclotomic.hpp"
#include "canoneq/perm_group.hpp"

namespace canoneq {

/// A class function with exact cyclotomic values, one per conjugacy class in
/// the GroupModel's class order.
struct Character {
    const GroupModel* group = nullptr;
    std::vector<Cyclotomic> values;

    const Cyclotomic& at_class(int c) const { return values[c]; }
    Cyclotomic degree() const; // value at the identity class
    Character operator+(const Character& o) const;
    Character operator-(const Character& o) const;
    Character operator*(const Character& o) const; // pointwise (tensor product)
    bool operator==(const Character& o) const { return values == o.values; }
};

struct CharacterTable {
    const GroupModel* group = nullptr;
    std::vector<Character> irreducibles; // sorted by (degree, embedding-lex values)
};

/// Irreducible character table via the Burnside-Dixon method: simultaneous
/// diagonalization of the class-multiplication matrices over GF(p) with
/// p = 1 (mod exp G), p > 2|G|, lifted exactly to Q(zeta_exp(G)).
CharacterTable character_table(const GroupModel& g);

/// (1/|G|) sum over classes of |class| a(c) conj(b(c)).
Cyclotomic inner_product(const Character& a, const Character& b);

/// Multiplicities of each irreducible in chi; throws not_a_character if any
/// inner product fails to be a nonnegative rational integer.
std::vector<long> decompose(const Character& chi, const CharacterTable& t);

/// Character of Sym^d of the representation with character chi, d = 2 or 3.
Character sym_power_character(const Character& chi, int d);

/// Identity-class index is always 0 in the fixed class order.
Character trivial_character(const GroupModel& g);
Character regular_character(const GroupModel& g);

/// Character of a matrix representation r (one matrix per group generator,
/// extended to all elements along the BFS word map): trace per class.
Character character_of_matrices(const GroupModel& g, const std::vector<Matrix>& gen_images);

} // namespace canoneq

#endif
