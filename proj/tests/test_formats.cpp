#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>

#include "canoneq/formats.hpp"
#include "fixtures.hpp"

using namespace canoneq;
using namespace canoneq::fixtures;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("canoneq_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("scalar expressions parse and round-trip") {
    CHECK(parse_scalar("z16^7") == Cyclotomic::root_of_unity(16, 7));
    CHECK(parse_scalar("-1/2*z8 + 3") ==
          Cyclotomic(rat(-1, 2)) * Cyclotomic::root_of_unity(8, 1) + Cyclotomic(3));
    CHECK(parse_scalar("i") == Cyclotomic::root_of_unity(4, 1));
    CHECK(parse_scalar("z16^-1") == Cyclotomic::root_of_unity(16, -1));
    CHECK(parse_scalar("(1 - z3) * (1 - z3^2)") == Cyclotomic(3));
    CHECK(parse_scalar("2^-2") == Cyclotomic(rat(1, 4)));
    CHECK(parse_scalar("  7/  3") == Cyclotomic(rat(7, 3)));

    // round trip through the canonical printer
    unsigned long long s = 4242;
    auto next = [&](long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + (long)((s >> 33) % (unsigned long long)(hi - lo + 1));
    };
    for (int trial = 0; trial < 60; ++trial) {
        unsigned orders[] = {1, 3, 4, 8, 16, 7};
        unsigned n = orders[next(0, 5)];
        Cyclotomic a(0);
        for (unsigned e = 0; e < euler_phi(n); ++e)
            a += Cyclotomic(rat(next(-5, 5), next(1, 4))) * Cyclotomic::root_of_unity(n, e);
        CHECK(parse_scalar(a.str()) == a);
    }
    CHECK_THROWS_AS(parse_scalar("z16^7 +"), parse_error);
    CHECK_THROWS_AS(parse_scalar("q5"), parse_error);
}

TEST_CASE("polynomial expressions round-trip") {
    RingNames names;
    names.vars = {"x0", "x1", "x2"};
    names.params = {"c1", "c2"};

    PPoly f = parse_ppoly("x0^2 + c1*x1*x2 - (1/2*z8)*x2^2 + (c1*c2 - 1)*x0*x1", names);
    CHECK(f.terms.size() == 4);
    std::string printed = ppoly_str(f, names);
    PPoly again = parse_ppoly(printed, names);
    CHECK(poly_sub(f, again, names.order).is_zero());

    Poly<Cyclotomic> g = parse_poly("x0*x2 - x1^2", names);
    CHECK(g.terms.size() == 2);
    CHECK(parse_poly(poly_str(g, names), names).terms == g.terms);
    CHECK_THROWS_AS(parse_poly("c1*x0", names), parse_error);
}

TEST_CASE("group files round-trip for both backends") {
    TempDir tmp;

    GroupFileData perm_data{Backend::permutation, 3, s3_generators(), {}};
    save_group_file(tmp.file("s3.group"), perm_data);
    GroupFileData loaded = load_group_file(tmp.file("s3.group"));
    REQUIRE(loaded.generators.size() == 2);
    CHECK(loaded.generators[0] == perm_data.generators[0]);
    CHECK(loaded.generators[1] == perm_data.generators[1]);
    GroupModel g = GroupModel::enumerate(loaded.generators);
    CHECK(g.order() == 6);

    GroupFileData mat_data{Backend::matrix, 7, g64_generators(), {}};
    save_group_file(tmp.file("g64.group"), mat_data);
    GroupFileData mloaded = load_group_file(tmp.file("g64.group"));
    CHECK(mloaded.generators[0] == mat_data.generators[0]);
    CHECK(mloaded.generators[1] == mat_data.generators[1]);
}

TEST_CASE("skg file resolves words against the group") {
    TempDir tmp;
    save_group_file(tmp.file("g64.group"), {Backend::matrix, 7, g64_generators(), {}});
    SkgFileData skg_data;
    skg_data.group_path = "g64.group";
    skg_data.signature = {0, {2, 4, 16}};
    skg_data.branch_words = {"g1", "g2", "(g1*g2)^-1"};
    save_skg_file(tmp.file("g64.skg"), skg_data);

    SkgFileData loaded = load_skg_file(tmp.file("g64.skg"));
    CHECK(loaded.signature.g0 == 0);
    REQUIRE(loaded.signature.branch_orders.size() == 3);
    GroupFileData gf = load_group_file(loaded.group_path);
    GroupModel g = GroupModel::enumerate(gf.generators);
    SurfaceKernelData skg = resolve_skg(loaded, g);
    CHECK(validate_skg(skg).empty());
}

TEST_CASE("character table file round-trips with validation") {
    TempDir tmp;
    GroupModel g = GroupModel::enumerate(s3_generators());
    CharacterTable t = character_table(g);
    save_table_file(tmp.file("s3.table"), t);
    CharacterTable loaded = load_table_file(tmp.file("s3.table"), g);
    REQUIRE(loaded.irreducibles.size() == t.irreducibles.size());
    for (size_t i = 0; i < t.irreducibles.size(); ++i)
        CHECK(loaded.irreducibles[i].values == t.irreducibles[i].values);
}

TEST_CASE("ideal files round-trip the golden family shape") {
    TempDir tmp;
    ParamIdeal ideal;
    ideal.nvars = 4;
    ideal.nparams = 2;
    ideal.params.push_back({0, 0, 0, false});
    ideal.params.push_back({0, 0, 1, false});
    RingNames names;
    names.vars = {"x0", "x1", "x2", "x3"};
    names.params = {"c1", "c2"};
    ideal.generators.push_back(parse_ppoly("c1*x0*x2 - c2*x1^2", names));
    ideal.generators.push_back(parse_ppoly("c1*x0*x3 - c2*x1*x2", names));
    ideal.nonvanishing.push_back(CPoly::param(0));

    save_ideal_file(tmp.file("fam.ideal"), ideal);
    IdealFileData loaded = load_ideal_file(tmp.file("fam.ideal"));
    REQUIRE(loaded.generators.size() == 2);
    CHECK(loaded.names.vars == names.vars);
    REQUIRE(loaded.assume_nonzero.size() == 1);
    CHECK(loaded.assume_nonzero[0] == CPoly::param(0));
    CHECK(poly_sub(loaded.generators[0], ideal.generators[0], ideal.order).is_zero());
}

TEST_CASE("maps files round-trip") {
    TempDir tmp;
    Cyclotomic one(1);
    Matrix m(2, 2);
    m.at(0, 1) = -Cyclotomic::root_of_unity(8, 3);
    m.at(1, 0) = one;
    save_maps_file(tmp.file("m.maps"), {m});
    auto loaded = load_maps_file(tmp.file("m.maps"));
    REQUIRE(loaded.size() == 1);
    CHECK(loaded[0] == m);
}
