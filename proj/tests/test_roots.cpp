#include <doctest.h>

#include "epsolve/roots.hpp"
#include "test_util.hpp"

using namespace epsolve;

namespace {

UniPoly upoly(std::initializer_list<long> coeffs_low_first) {
    std::vector<Rational> c;
    for (long v : coeffs_low_first) c.emplace_back(v);
    return UniPoly(std::move(c));
}

UniPoly linear(const Rational& root) {
    return UniPoly(std::vector<Rational>{-root, Rational(1)});
}

const Rational kWidth(Integer(1), Integer("1000000000000"));

} // namespace

TEST_CASE("simplest rational in interval") {
    CHECK(simplest_rational_in(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(simplest_rational_in(Rational(-1, 10), Rational(1, 10)) == Rational(0));
    CHECK(simplest_rational_in(Rational(7), Rational(7)) == Rational(7));
    CHECK(simplest_rational_in(Rational(29, 10), Rational(31, 10)) == Rational(3));
    CHECK(simplest_rational_in(Rational(-31, 10), Rational(-29, 10)) == Rational(-3));
    // a tight interval around 19/7 should recover 19/7
    Rational lo = Rational(19, 7) - Rational(1, 1000000), hi = Rational(19, 7) + Rational(1, 1000000);
    CHECK(simplest_rational_in(lo, hi) == Rational(19, 7));
}

TEST_CASE("sturm counting on a cubic with known roots") {
    UniPoly p = linear(Rational(1)) * linear(Rational(2)) * linear(Rational(3));
    CHECK(count_distinct_real_roots(p) == 3);
    CHECK(count_distinct_real_roots_in(p, Rational(0), Rational(2)) == 2);   // (0,2] holds 1,2
    CHECK(count_distinct_real_roots_in(p, Rational(1), Rational(3)) == 2);   // (1,3] holds 2,3
    CHECK(count_distinct_real_roots(upoly({1, 0, 1})) == 0);                 // x^2 + 1
}

TEST_CASE("multiplicity-aware counting") {
    UniPoly p = linear(Rational(1)) * linear(Rational(1)) * upoly({1, 0, 1});
    CHECK(count_real_roots_with_multiplicity(p) == 2);
    CHECK(count_distinct_real_roots(p) == 1);
}

TEST_CASE("isolation certifies rational roots exactly") {
    UniPoly p = linear(Rational(1, 2)) * linear(Rational(-3)) * linear(Rational(19, 7));
    auto roots = isolate_real_roots(p, kWidth);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].exact);
    CHECK(roots[0].value == Rational(-3));
    CHECK(roots[1].exact);
    CHECK(roots[1].value == Rational(1, 2));
    CHECK(roots[2].exact);
    CHECK(roots[2].value == Rational(19, 7));
}

TEST_CASE("isolation brackets irrational roots") {
    auto roots = isolate_real_roots(upoly({-2, 0, 1}), kWidth);   // x^2 - 2
    REQUIRE(roots.size() == 2);
    CHECK(!roots[0].exact);
    CHECK(!roots[1].exact);
    CHECK(roots[1].hi - roots[1].lo <= kWidth);
    // sqrt(2) = 1.41421356237309504880...
    CHECK(roots[1].lo < Rational(141422, 100000));
    CHECK(roots[1].hi > Rational(141421, 100000));
    // square-free part is taken internally: repeated roots don't duplicate
    UniPoly rep = upoly({-2, 0, 1}) * upoly({-2, 0, 1});
    CHECK(isolate_real_roots(rep, kWidth).size() == 2);
}

TEST_CASE("isolation of clustered roots") {
    // roots at 0, 1/1024, 1/1023: nearby but distinct
    UniPoly p = linear(Rational(0)) * linear(Rational(1, 1024)) * linear(Rational(1, 1023));
    auto roots = isolate_real_roots(p, kWidth);
    REQUIRE(roots.size() == 3);
    for (const auto& r : roots) CHECK(r.exact);
    CHECK(roots[0].value == Rational(0));
    CHECK(roots[1].value == Rational(1, 1024));
    CHECK(roots[2].value == Rational(1, 1023));
}

TEST_CASE("multiplicity profile: EP collapse shapes") {
    // s^11 - 2 s^9 = s^9 (s^2 - 2)
    UniPoly p = upoly({0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 1});
    auto profile = multiplicity_profile(p);
    CHECK(profile.multiplicity_of(Rational(0)) == 9);
    CHECK(profile.multiplicity_of_quad(Rational(2)) == 1);
    CHECK(profile.degree == 11);

    // (s-1)^3
    UniPoly q = linear(Rational(1)) * linear(Rational(1)) * linear(Rational(1));
    auto profile3 = multiplicity_profile(q);
    REQUIRE(profile3.entries.size() == 1);
    CHECK(profile3.multiplicity_of(Rational(1)) == 3);
}

TEST_CASE("multiplicity profile: unfolded fixture") {
    // s^5 (s^2 - 19/100)^2 (s^2 - 2)
    UniPoly s = UniPoly::variable();
    UniPoly quad19 = upoly({0, 0, 1});
    quad19 = quad19 - UniPoly::constant(Rational(19, 100));
    UniPoly quad2 = upoly({-2, 0, 1});
    UniPoly p = s * s * s * s * s * quad19 * quad19 * quad2;
    auto profile = multiplicity_profile(p);
    CHECK(profile.multiplicity_of(Rational(0)) == 5);
    CHECK(profile.multiplicity_of_quad(Rational(19, 100)) == 2);
    CHECK(profile.multiplicity_of_quad(Rational(2)) == 1);
    int total = 0;
    for (const auto& [f, m] : profile.squarefree) total += m * f.degree();
    CHECK(total == profile.degree);
}

TEST_CASE("profile leaves higher factors unevaluated") {
    // s^3 - 2 is irreducible over Q
    auto profile = multiplicity_profile(upoly({-2, 0, 0, 1}));
    REQUIRE(profile.entries.size() == 1);
    CHECK(profile.entries[0].kind == ProfileEntry::Kind::factor);
    CHECK(profile.entries[0].factor.degree() == 3);
    CHECK(profile.entries[0].multiplicity == 1);
}

TEST_CASE("random multiplicity profiles sum to the degree") {
    std::mt19937_64 gen(23);
    std::uniform_int_distribution<int> mult(1, 3), nroots(1, 4);
    for (int iter = 0; iter < 20; ++iter) {
        UniPoly p = UniPoly::one();
        int expected_degree = 0;
        const int k = nroots(gen);
        for (int i = 0; i < k; ++i) {
            const int m = mult(gen);
            UniPoly f = linear(testutil::rand_rational(gen, 6, 3));
            for (int j = 0; j < m; ++j) p = p * f;
            expected_degree += m;
        }
        auto profile = multiplicity_profile(p);
        CHECK(profile.degree == expected_degree);
        int total = 0;
        for (const auto& e : profile.entries) total += e.multiplicity * e.factor_degree();
        // colliding random roots merge multiplicities; degree sum still exact
        CHECK(total == expected_degree);
    }
}
