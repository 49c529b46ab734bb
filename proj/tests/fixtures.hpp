#ifndef CANONEQ_TEST_FIXTURES_HPP
#define CANONEQ_TEST_FIXTURES_HPP

#include <vector>

#include "canoneq/perm_group.hpp"

namespace canoneq::fixtures {

inline GroupElement perm(std::vector<int> images_1based) {
    for (auto& v : images_1based) --v;
    return GroupElement::from_perm(std::move(images_1based));
}

inline std::vector<GroupElement> s3_generators() {
    return {perm({2, 1, 3}), perm({2, 3, 1})};
}

inline std::vector<GroupElement> c5_generators() { return {perm({2, 3, 4, 5, 1})}; }

inline std::vector<GroupElement> d4_generators() {
    // rotation and reflection of the square
    return {perm({2, 3, 4, 1}), perm({2, 1, 4, 3})};
}

inline std::vector<GroupElement> q8_generators() {
    // quaternion group as 2x2 cyclotomic matrices: i -> [[i,0],[0,-i]], j -> [[0,-1],[1,0]]
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    Matrix mi(2, 2), mj(2, 2);
    mi.at(0, 0) = i;
    mi.at(1, 1) = -i;
    mj.at(0, 1) = Cyclotomic(-1);
    mj.at(1, 0) = Cyclotomic(1);
    return {GroupElement::from_matrix(mi), GroupElement::from_matrix(mj)};
}

// The two 7x7 generators of the order-64 group acting on a genus-7 surface;
// entries in Q(zeta_8).
inline std::vector<GroupElement> g64_generators() {
    auto z8 = [](long k) { return Cyclotomic::root_of_unity(8, k); };
    Matrix g1(7, 7), g2(7, 7);
    g1.at(0, 0) = Cyclotomic(-1);
    g1.at(1, 2) = Cyclotomic(1);
    g1.at(2, 1) = Cyclotomic(1);
    g1.at(3, 4) = Cyclotomic(1);
    g1.at(4, 3) = Cyclotomic(1);
    g1.at(5, 6) = Cyclotomic(1);
    g1.at(6, 5) = Cyclotomic(1);

    g2.at(0, 0) = z8(2);
    g2.at(1, 2) = -z8(1);
    g2.at(2, 1) = -z8(3);
    g2.at(3, 6) = Cyclotomic(1);
    g2.at(4, 5) = -z8(1);
    g2.at(5, 4) = -z8(3);
    g2.at(6, 3) = Cyclotomic(1);
    return {GroupElement::from_matrix(g1), GroupElement::from_matrix(g2)};
}

// Generators of the order-504 group acting on the genus-7 Macbeath surface;
// rational 7x7 matrices.
inline std::vector<GroupElement> macbeath_generators() {
    Matrix m1(7, 7), m2(7, 7);
    int diag[7] = {1, -1, -1, -1, 1, 1, -1};
    for (int i = 0; i < 7; ++i) m1.at(i, i) = Cyclotomic(diag[i]);
    int num[7][7] = {
        {0, 1, 1, -1, 0, -1, 0},
        {-1, -1, 1, 0, -1, 0, 0},
        {1, -1, 0, -1, 0, 0, -1},
        {-1, 0, -1, 0, 0, -1, -1},
        {0, 1, 0, 0, -1, 1, -1},
        {1, 0, 0, 1, -1, -1, 0},
        {0, 0, 1, 1, 1, 0, -1},
    };
    Rational half(1, 2);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (num[i][j]) m2.at(i, j) = Cyclotomic(Rational(num[i][j]) * half);
    return {GroupElement::from_matrix(m1), GroupElement::from_matrix(m2)};
}

} // namespace canoneq::fixtures

#endif
