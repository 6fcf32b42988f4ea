#include <doctest.h>

#include "epsolve/eplocate.hpp"
#include "epsolve/spectra.hpp"
#include "test_util.hpp"

using namespace epsolve;

namespace {

ModelSpec well(int n) {
    ModelSpec spec;
    spec.family = Family::BoundaryWell;
    spec.n = n;
    spec.shift = 0;
    return spec;
}

} // namespace

TEST_CASE("figure-1 path: EPs at exactly t = +-1 with the nine-fold collapse") {
    auto sec = secular_on_path(well(11), parse_path("t,-t,t,-t"));
    auto report = ep_on_path(sec);
    CHECK(!report.discriminant_identically_zero);
    REQUIRE(report.points.size() == 2);

    CHECK(report.points[0].location.exact);
    CHECK(report.points[0].location.value == Rational(-1));
    CHECK(report.points[1].location.exact);
    CHECK(report.points[1].location.value == Rational(1));

    for (const auto& p : report.points) {
        REQUIRE(p.profile.has_value());
        CHECK(p.profile->multiplicity_of(Rational(0)) == 9);
        CHECK(p.profile->multiplicity_of_quad(Rational(2)) == 1);
        CHECK(p.profile->degree == 11);
    }
}

TEST_CASE("figure-5 path: the weakest surviving degeneracy at t = +-1") {
    auto sec = secular_on_path(well(11), parse_path("9/10,-t,t,-t"));
    auto report = ep_on_path(sec);
    REQUIRE(!report.discriminant_identically_zero);

    // exact rational EPs +-1 plus six irrational locations
    // (+-sqrt(69/50) ~ +-1.1747, +-1.8362, +-2.7027)
    int exact_count = 0;
    for (const auto& p : report.points)
        if (p.location.exact) ++exact_count;
    CHECK(exact_count == 2);
    CHECK(report.points.size() == 8);

    for (const auto& p : report.points) {
        if (!p.location.exact) {
            CHECK(!p.profile.has_value());
            CHECK(p.location.hi - p.location.lo <= Rational(Integer(1), Integer("1000000000000")));
            continue;
        }
        CHECK(abs(p.location.value) == 1);
        REQUIRE(p.profile.has_value());
        CHECK(p.profile->multiplicity_of(Rational(0)) == 5);
        CHECK(p.profile->multiplicity_of_quad(Rational(19, 100)) == 2);
        CHECK(p.profile->multiplicity_of_quad(Rational(2)) == 1);
    }
}

TEST_CASE("figure-2 path: the exact inner multiplicity at t = -1 is seven") {
    auto sec = secular_on_path(well(11), parse_path("t,-t,t,-9/10"));
    UniPoly at = eval_at_t(sec, Rational(-1));
    auto profile = multiplicity_profile(at);
    CHECK(profile.multiplicity_of(Rational(0)) == 7);
    CHECK(profile.multiplicity_of_quad(Rational(19, 100)) == 1);
    CHECK(profile.multiplicity_of_quad(Rational(219, 100)) == 1);

    auto report = ep_on_path(sec);
    bool has_minus_one = false;
    for (const auto& p : report.points)
        if (p.location.exact && p.location.value == Rational(-1)) has_minus_one = true;
    CHECK(has_minus_one);
}

TEST_CASE("single-coupling N=5 path") {
    ModelSpec spec = well(5);
    auto sec = secular_on_path(spec, parse_path("t"));
    auto report = ep_on_path(sec);
    // disc factors as (t-1)^3 (t+1)^3 (t^2-3)^3 up to a constant
    REQUIRE(report.points.size() == 4);
    CHECK(report.points[1].location.exact);
    CHECK(report.points[1].location.value == Rational(-1));
    CHECK(report.points[2].location.exact);
    CHECK(report.points[2].location.value == Rational(1));
    CHECK(!report.points[0].location.exact);   // -sqrt(3)
    CHECK(!report.points[3].location.exact);   // +sqrt(3)
    CHECK(report.points[0].location.lo < Rational(-17320, 10000));
    CHECK(report.points[0].location.hi > Rational(-17321, 10000));

    // profile at t = 1: s^3 (s^2 - 2)
    REQUIRE(report.points[2].profile.has_value());
    CHECK(report.points[2].profile->multiplicity_of(Rational(0)) == 3);
    CHECK(report.points[2].profile->multiplicity_of_quad(Rational(2)) == 1);
}

TEST_CASE("soundness: every exact EP certifies a nontrivial gcd") {
    auto sec = secular_on_path(well(11), parse_path("9/10,-t,t,-t"));
    auto report = ep_on_path(sec);
    for (const auto& p : report.points) {
        if (!p.location.exact) continue;
        UniPoly slice = eval_at_t(sec, p.location.value);
        CHECK(gcd(slice, slice.derivative()).degree() >= 1);
    }
}

TEST_CASE("completeness spot check at rational points") {
    auto sec = secular_on_path(well(11), parse_path("t,-t,t,-t"));
    auto report = ep_on_path(sec);
    auto has_exact = [&](const Rational& t) {
        for (const auto& p : report.points)
            if (p.location.exact && p.location.value == t) return true;
        return false;
    };
    // the two rational EPs are reported...
    CHECK(has_exact(Rational(1)));
    CHECK(has_exact(Rational(-1)));
    // ...and random non-EP rationals have trivial gcd and are absent
    std::mt19937_64 gen(71);
    std::uniform_int_distribution<int> num(-60, 60);
    for (int iter = 0; iter < 10; ++iter) {
        Rational t(num(gen), 30);
        t.canonicalize();
        if (abs(t) == 1) continue;
        UniPoly slice = eval_at_t(sec, t);
        CHECK(gcd(slice, slice.derivative()).degree() == 0);
        CHECK(!has_exact(t));
    }
}

TEST_CASE("identically degenerate family is flagged, not dropped") {
    // (s - t)^2 as a handcrafted secular input
    BiPoly sq(std::vector<UniPoly>{UniPoly(std::vector<Rational>{0, 0, 1}),
                                   UniPoly(std::vector<Rational>{0, -2}), UniPoly::one()});
    auto report = ep_on_path(sq);
    CHECK(report.discriminant_identically_zero);
    CHECK(report.points.empty());
}

TEST_CASE("agreement between sweep events and exact EP locations") {
    auto spec = well(11);
    auto path = parse_path("t,-t,t,-t");
    auto res = sweep(spec, path, GridSpec{-1.5, 1.5, 0.01});
    auto events = detect_complexification(spec, path, res, 1e-6);
    auto report = ep_on_path(secular_on_path(spec, path));
    for (const auto& ev : events) {
        bool contained = false;
        for (const auto& p : report.points) {
            const Rational mid = p.location.midpoint();
            if (Rational(ev.t_lo) <= mid && mid <= Rational(ev.t_hi)) contained = true;
        }
        CHECK(contained);
    }
}
