#include "doctest.h"

#include <cmath>

#include "canoneq/cyclotomic.hpp"

using namespace canoneq;

namespace {

Cyclotomic zeta(unsigned n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

// Deterministic pseudo-random elements of small cyclotomic fields.
struct Lcg {
    unsigned long long s;
    explicit Lcg(unsigned long long seed) : s(seed) {}
    long next(long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + (long)((s >> 33) % (unsigned long long)(hi - lo + 1));
    }
};

Cyclotomic random_element(Lcg& rng) {
    static const unsigned orders[] = {1, 3, 4, 5, 7, 8, 12, 16};
    unsigned n = orders[rng.next(0, 7)];
    Cyclotomic a(0);
    for (unsigned e = 0; e < euler_phi(n); ++e)
        a += Cyclotomic(rat(rng.next(-3, 3), rng.next(1, 3))) * zeta(n, e);
    return a;
}

} // namespace

TEST_CASE("roots of unity reduce to canonical form") {
    CHECK(zeta(1, 0) == Cyclotomic(1));
    CHECK(zeta(4, 2) == Cyclotomic(-1));
    CHECK(zeta(8, 4) == Cyclotomic(-1));
    CHECK(zeta(2, 1) == Cyclotomic(-1));
    CHECK(zeta(6, 1) == -zeta(3, 2)); // zeta_6 = -zeta_3^2
    CHECK(zeta(4).order() == 4);
    CHECK(zeta(16, 8) == Cyclotomic(-1));
}

TEST_CASE("multiplication in and across orders") {
    // exponent addition with order minimization
    CHECK(zeta(16, -1) * zeta(16, -1) == zeta(8, -1));
    // (1 - zeta_3)(1 - zeta_3^2) = 3
    Cyclotomic a = Cyclotomic(1) - zeta(3, 1);
    Cyclotomic b = Cyclotomic(1) - zeta(3, 2);
    CHECK(a * b == Cyclotomic(3));
    // zeta_16^7 * zeta_16^-1 = zeta_8^3 = -zeta_8^-1
    CHECK(zeta(16, 7) * zeta(16, -1) == zeta(8, 3));
    CHECK(zeta(8, 3) == -zeta(8, -1));
}

TEST_CASE("inverse") {
    CHECK(zeta(5).inverse() == zeta(5, 4));
    CHECK(Cyclotomic(2).inverse() == Cyclotomic(rat(1, 2)));
    Cyclotomic a = Cyclotomic(1) + zeta(4);
    Cyclotomic inv = a.inverse();
    CHECK(a * inv == Cyclotomic(1));
    CHECK(inv == (Cyclotomic(1) - zeta(4)) * Cyclotomic(rat(1, 2)));
    CHECK_THROWS_AS(Cyclotomic(0).inverse(), division_by_zero);
}

TEST_CASE("conjugation") {
    CHECK(zeta(4).conjugate() == -zeta(4));
    CHECK(Cyclotomic(rat(3, 2)).conjugate() == Cyclotomic(rat(3, 2)));
    CHECK((zeta(7) + zeta(7, 2)).conjugate() == zeta(7, 6) + zeta(7, 5));
    Lcg rng(7);
    for (int i = 0; i < 50; ++i) {
        Cyclotomic a = random_element(rng), b = random_element(rng);
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    }
}

TEST_CASE("field axioms on random samples") {
    Lcg rng(42);
    for (int i = 0; i < 1000; ++i) {
        Cyclotomic a = random_element(rng), b = random_element(rng), c = random_element(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    }
}

TEST_CASE("embedding compatibility across orders") {
    // the same element built in Q(zeta_m) and Q(zeta_n), m | n
    CHECK(zeta(4) == zeta(8, 2));
    CHECK(zeta(4) == zeta(16, 4));
    CHECK(zeta(3) + Cyclotomic(1) == zeta(12, 4) + Cyclotomic(1));
    // arithmetic that lands in a subfield descends to it
    Cyclotomic s = zeta(16) + zeta(16, -1); // 2 cos(pi/8), order 16 element
    CHECK(s.order() == 16);
    Cyclotomic t = s * s; // 2 + 2 cos(pi/4) lies in Q(zeta_8)
    CHECK(t.order() == 8);
    CHECK(t == Cyclotomic(2) + zeta(8) + zeta(8, -1));
}

TEST_CASE("numeric approximation") {
    auto i_val = zeta(4).approx_d();
    CHECK(std::abs(i_val.real()) < 1e-15);
    CHECK(std::abs(i_val.imag() - 1.0) < 1e-15);
    auto w = zeta(3).approx_d();
    CHECK(std::abs(w.real() + 0.5) < 1e-15);
    CHECK(std::abs(w.imag() - 0.8660254037844386) < 1e-14);
    auto e8 = zeta(8).approx_d();
    double r = std::sqrt(2.0) / 2.0;
    CHECK(std::abs(e8.real() - r) < 1e-15);
    CHECK(std::abs(e8.imag() - r) < 1e-15);

    Lcg rng(5);
    for (int k = 0; k < 40; ++k) {
        Cyclotomic a = random_element(rng);
        auto v = (a * a.conjugate()).approx_d();
        CHECK(std::abs(v.imag()) < 1e-12);
        CHECK(v.real() > -1e-12);
    }
}

TEST_CASE("embedding comparison is deterministic and sane") {
    CHECK(Cyclotomic::cmp_embedding(Cyclotomic(0), Cyclotomic(1)) < 0);
    CHECK(Cyclotomic::cmp_embedding(Cyclotomic(2), Cyclotomic(1)) > 0);
    CHECK(Cyclotomic::cmp_embedding(zeta(4), zeta(4)) == 0);
    // -zeta_4 has smaller imaginary part than zeta_4, equal real part
    CHECK(Cyclotomic::cmp_embedding(-zeta(4), zeta(4)) < 0);
}

TEST_CASE("k-th roots of rational times root of unity") {
    // c^2 = zeta_8^-1 has roots +-zeta_16^-1
    auto roots = Cyclotomic::kth_roots(zeta(8, -1), 2);
    REQUIRE(roots.has_value());
    REQUIRE(roots->size() == 2);
    for (const auto& r : *roots) CHECK(r * r == zeta(8, -1));
    bool has = false;
    for (const auto& r : *roots)
        if (r == zeta(16, -1)) has = true;
    CHECK(has);

    // c^2 = 4 -> +-2
    auto sq = Cyclotomic::kth_roots(Cyclotomic(4), 2);
    REQUIRE(sq.has_value());
    CHECK(sq->size() == 2);
    for (const auto& r : *sq) CHECK(r * r == Cyclotomic(4));

    // c^2 = -1 -> +-i
    auto im = Cyclotomic::kth_roots(Cyclotomic(-1), 2);
    REQUIRE(im.has_value());
    for (const auto& r : *im) CHECK(r * r == Cyclotomic(-1));

    // 2 is not a rational square
    CHECK(!Cyclotomic::kth_roots(Cyclotomic(2), 2).has_value());
    // 1 + zeta_5 is not of monomial form
    CHECK(!Cyclotomic::kth_roots(Cyclotomic(1) + zeta(5), 3).has_value());
    // 0 -> {0}
    auto z = Cyclotomic::kth_roots(Cyclotomic(0), 3);
    REQUIRE(z.has_value());
    CHECK(z->size() == 1);
    CHECK((*z)[0].is_zero());
}

TEST_CASE("printing canonical text") {
    CHECK(Cyclotomic(0).str() == "0");
    CHECK(Cyclotomic(rat(-1, 2)).str() == "-1/2");
    CHECK(zeta(16, 7).str() == "z16^7");
    CHECK((zeta(8) * Cyclotomic(rat(-1, 2)) + Cyclotomic(3)).str() == "-1/2*z8 + 3");
    CHECK(zeta(16, -1).str() == "-z16^7");
}
