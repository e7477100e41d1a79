#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tbcc/bounds.hpp"

using namespace tbcc;

namespace {

WeightSpectrum code1_spectrum() {
    WeightSpectrum s;
    s.d_min = 6;
    s.w_max = 10;
    s.counts = {{6, 12}, {7, 36}, {8, 72}, {9, 180}, {10, 396}};
    return s;
}

}  // namespace

TEST_CASE("q function against reference values") {
    CHECK(qfunc(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(qfunc(1.0) == doctest::Approx(0.158655253931457).epsilon(1e-12));
    CHECK(qfunc(3.0) == doctest::Approx(0.001349898031630095).epsilon(1e-12));
    CHECK(qfunc(5.0) == doctest::Approx(2.866515718791939e-7).epsilon(1e-11));
}

TEST_CASE("union bound evaluations frozen against high-precision quadrature") {
    WeightSpectrum single;
    single.d_min = 6;
    single.w_max = 6;
    single.counts = {{6, 12}};
    CHECK(union_bound(single, 0.5, 4.25) ==
          doctest::Approx(3.87279602162157e-4).epsilon(1e-10));

    CHECK(union_bound(code1_spectrum(), 0.5, 4.25) ==
          doctest::Approx(9.54625752965762e-4).epsilon(1e-10));

    WeightSpectrum empty;
    CHECK(union_bound(empty, 0.5, 4.0) == 0.0);
}

TEST_CASE("union bound crossing for the 6x6 reference code") {
    const WeightSpectrum s = code1_spectrum();
    const double crossing = bound_crossing(
        [&s](double db) { return union_bound(s, 0.5, db); }, 1e-3, 2.0, 7.0);
    CHECK(crossing == doctest::Approx(4.2296).epsilon(0.003));
    CHECK(std::abs(crossing - 4.25) < 0.3);
}

TEST_CASE("solid angle fraction normalizes and brackets") {
    CHECK(solid_angle_fraction(72, 3.14159265358979) == doctest::Approx(1.0).epsilon(1e-12));
    // half-space
    CHECK(solid_angle_fraction(72, std::acos(0.0)) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(solid_angle_fraction(3, 1.0) ==
          doctest::Approx(0.5 * (1 - std::cos(1.0))).epsilon(1e-12));  // closed form in 3D
    CHECK(solid_angle_fraction(72, 0.3) > 0.0);
    CHECK(solid_angle_fraction(72, 0.3) < solid_angle_fraction(72, 0.4));
}

TEST_CASE("sphere packing bound: angle solve and frozen values") {
    const SplbResult r = sphere_packing_lower_bound(72, 36, 2.5);
    CHECK(r.residual < 1e-12);
    CHECK(r.theta == doctest::Approx(0.81950041796506).epsilon(1e-10));
    CHECK(r.pw == doctest::Approx(1.97351295093926e-3).epsilon(1e-6));

    CHECK(sphere_packing_lower_bound(72, 36, 2.0).pw ==
          doctest::Approx(9.13165680471726e-3).epsilon(1e-6));
    CHECK(sphere_packing_lower_bound(72, 36, 2.85).pw ==
          doctest::Approx(5.46568278932597e-4).epsilon(1e-6));
    CHECK(sphere_packing_lower_bound(72, 36, 3.0).pw ==
          doctest::Approx(2.97236879809845e-4).epsilon(1e-6));
}

TEST_CASE("sphere packing bound is monotone in Eb/N0") {
    double prev = 1.0;
    for (double db = 0.5; db <= 4.0; db += 0.5) {
        const double pw = sphere_packing_lower_bound(72, 36, db).pw;
        CHECK(pw < prev);
        prev = pw;
    }
}

TEST_CASE("sphere packing crossing sits below the union bound crossing") {
    const double splb_crossing = bound_crossing(
        [](double db) { return sphere_packing_lower_bound(72, 36, db).pw; }, 1e-3, 1.0, 4.0);
    CHECK(std::abs(splb_crossing - 2.85) < 0.35);

    const WeightSpectrum s = code1_spectrum();
    const double ub_crossing = bound_crossing(
        [&s](double db) { return union_bound(s, 0.5, db); }, 1e-3, 2.0, 7.0);
    const double gap = ub_crossing - splb_crossing;
    CHECK(std::abs(gap - 1.4) < 0.25);
}

TEST_CASE("crossing requires a bracketing interval") {
    CHECK(bound_crossing([](double db) { return std::pow(10.0, -db); }, 1e-3, 1.0, 5.0) ==
          doctest::Approx(3.0).epsilon(1e-2));
    CHECK_THROWS_AS(bound_crossing([](double) { return 0.5; }, 1e-3, 1.0, 5.0),
                    std::domain_error);
}
