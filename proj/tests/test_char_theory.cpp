#include "doctest.h"

#include <set>

#include "canoneq/char_theory.hpp"
#include "fixtures.hpp"

using namespace canoneq;
using namespace canoneq::fixtures;

namespace {

std::multiset<long> degree_multiset(const CharacterTable& t) {
    std::multiset<long> degs;
    for (const auto& chi : t.irreducibles) degs.insert(to_long(chi.values[0].rational_value()));
    return degs;
}

} // namespace

TEST_CASE("S3 character table") {
    GroupModel g = GroupModel::enumerate(s3_generators());
    CharacterTable t = character_table(g);
    CHECK(degree_multiset(t) == std::multiset<long>{1, 1, 2});
    // brute-force oracle: the three irreducible characters of S3 on classes
    // ordered (identity, transpositions, 3-cycles)
    std::set<std::vector<std::string>> rows;
    for (const auto& chi : t.irreducibles) {
        std::vector<std::string> row;
        for (const auto& v : chi.values) row.push_back(v.str());
        rows.insert(row);
    }
    std::set<std::vector<std::string>> expected = {
        {"1", "1", "1"}, {"1", "-1", "1"}, {"2", "0", "-1"}};
    CHECK(rows == expected);
}

TEST_CASE("C2 character table") {
    GroupModel g = GroupModel::enumerate({perm({2, 1})});
    CharacterTable t = character_table(g);
    REQUIRE(t.irreducibles.size() == 2);
    std::set<std::vector<std::string>> rows;
    for (const auto& chi : t.irreducibles) rows.insert({chi.values[0].str(), chi.values[1].str()});
    CHECK(rows == std::set<std::vector<std::string>>{{"1", "1"}, {"1", "-1"}});
}

TEST_CASE("orthogonality and degree sums for D4, Q8, order-64 group") {
    for (auto gens : {d4_generators(), q8_generators(), g64_generators()}) {
        GroupModel g = GroupModel::enumerate(gens);
        CharacterTable t = character_table(g);
        REQUIRE((int)t.irreducibles.size() == g.num_classes());
        Rational degsum(0);
        for (size_t i = 0; i < t.irreducibles.size(); ++i) {
            for (size_t j = i; j < t.irreducibles.size(); ++j) {
                Cyclotomic ip = inner_product(t.irreducibles[i], t.irreducibles[j]);
                CHECK(ip == Cyclotomic(i == j ? 1 : 0));
            }
            Rational d = t.irreducibles[i].values[0].rational_value();
            degsum += d * d;
        }
        CHECK(degsum == g.order());
    }
}

TEST_CASE("the order-64 group has degree pattern 8x1 + 6x2 + 2x4") {
    GroupModel g = GroupModel::enumerate(g64_generators());
    CharacterTable t = character_table(g);
    std::multiset<long> expected{1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 4, 4};
    CHECK(degree_multiset(t) == expected);
}

TEST_CASE("regular character decomposes with multiplicities = degrees") {
    GroupModel g = GroupModel::enumerate(s3_generators());
    CharacterTable t = character_table(g);
    Character reg = regular_character(g);
    auto m = decompose(reg, t);
    for (size_t i = 0; i < m.size(); ++i)
        CHECK(m[i] == to_long(t.irreducibles[i].values[0].rational_value()));
    CHECK(inner_product(trivial_character(g), trivial_character(g)) == Cyclotomic(1));
}

TEST_CASE("decompose round-trips random nonnegative combinations") {
    GroupModel g = GroupModel::enumerate(d4_generators());
    CharacterTable t = character_table(g);
    unsigned long long s = 31;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<long> mults;
        Character sum{&g, std::vector<Cyclotomic>(g.num_classes())};
        for (const auto& irr : t.irreducibles) {
            s = s * 6364136223846793005ULL + 1442695040888963407ULL;
            long m = (long)((s >> 33) % 4);
            mults.push_back(m);
            for (int c = 0; c < g.num_classes(); ++c)
                sum.values[c] += Cyclotomic(m) * irr.values[c];
        }
        CHECK(decompose(sum, t) == mults);
    }
    // zero character decomposes to the zero vector
    Character zero{&g, std::vector<Cyclotomic>(g.num_classes())};
    auto z = decompose(zero, t);
    for (long m : z) CHECK(m == 0);
}

TEST_CASE("symmetric power characters") {
    GroupModel g = GroupModel::enumerate(s3_generators());
    CharacterTable t = character_table(g);
    Character triv = trivial_character(g);
    CHECK(sym_power_character(triv, 2) == triv);
    CHECK(sym_power_character(triv, 3) == triv);

    // dimension identity at the identity class
    for (const auto& chi : t.irreducibles) {
        long n = to_long(chi.values[0].rational_value());
        Character s2 = sym_power_character(chi, 2);
        Character s3 = sym_power_character(chi, 3);
        CHECK(s2.values[0] == Cyclotomic(n * (n + 1) / 2));
        CHECK(s3.values[0] == Cyclotomic(n * (n + 1) * (n + 2) / 6));
    }

    // Sym^2 of the 2-dimensional character of S3 = trivial + standard
    const Character* std2 = nullptr;
    for (const auto& chi : t.irreducibles)
        if (chi.values[0] == Cyclotomic(2)) std2 = &chi;
    REQUIRE(std2 != nullptr);
    auto m = decompose(sym_power_character(*std2, 2), t);
    long total = 0;
    for (size_t i = 0; i < m.size(); ++i)
        total += m[i] * to_long(t.irreducibles[i].values[0].rational_value());
    CHECK(total == 3);
    CHECK(decompose(*std2, t) != decompose(sym_power_character(*std2, 2), t));
}

TEST_CASE("character from matrix generators is a class function") {
    GroupModel g = GroupModel::enumerate(g64_generators());
    std::vector<Matrix> gens;
    for (int i = 0; i < g.num_generators(); ++i) gens.push_back(g.element(g.generator(i)).mat);
    Character chi = character_of_matrices(g, gens);
    CHECK(chi.values[0] == Cyclotomic(7));
    // its norm is a positive integer and its degree matches the dimension
    Cyclotomic norm = inner_product(chi, chi);
    CHECK(norm.is_rational());
    CHECK(is_integer(norm.rational_value()));
}

TEST_CASE("group mismatch raises") {
    GroupModel g1 = GroupModel::enumerate(s3_generators());
    GroupModel g2 = GroupModel::enumerate(c5_generators());
    Character a = trivial_character(g1), b = trivial_character(g2);
    CHECK_THROWS_AS(inner_product(a, b), group_mismatch);
}

TEST_CASE("decompose rejects class functions that are not characters") {
    GroupModel g = GroupModel::enumerate(s3_generators());
    CharacterTable t = character_table(g);
    // one irreducible minus another has a negative multiplicity
    Character bad = t.irreducibles[1] - t.irreducibles[0];
    CHECK_THROWS_AS(decompose(bad, t), not_a_character);
    // a half-integer multiple is not integral
    Character half{&g, std::vector<Cyclotomic>(g.num_classes())};
    for (int c = 0; c < g.num_classes(); ++c)
        half.values[(size_t)c] = t.irreducibles[0].values[(size_t)c] * Cyclotomic(rat(1, 2));
    CHECK_THROWS_AS(decompose(half, t), not_a_character);
}
