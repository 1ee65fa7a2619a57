#include <cmath>

#include "circlepack/errors.hpp"
#include "circlepack/lens.hpp"
#include "doctest.h"

using namespace circlepack;

namespace {

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

}  // namespace

TEST_CASE("closed-form radii R/(2n(n+1))") {
    CHECK(lens::closed_form(1, 1.0) == 0.25);
    CHECK(lens::closed_form(2, 1.0) == 1.0 / 12.0);
    CHECK(lens::closed_form(3, 1.0) == 1.0 / 24.0);
    CHECK(lens::closed_form(4, 1.0) == 1.0 / 40.0);
    CHECK(lens::closed_form(1, 3.0) == 0.75);
    CHECK_THROWS_AS(lens::closed_form(0, 1.0), InvalidInput);
    CHECK_THROWS_AS(lens::closed_form(2, -1.0), InvalidInput);
}

TEST_CASE("recurrence-driven packing matches the closed form") {
    lens::Spec spec{1.0, 200};
    PackingSequence seq = lens::pack(spec);
    REQUIRE(seq.circles.size() == 200);
    for (const PackedCircle& c : seq.circles)
        CHECK(rel_err(c.radius, lens::closed_form(c.index, 1.0)) < 1e-12);
}

TEST_CASE("chain hugs the symmetry axis and climbs toward the pinch point") {
    lens::Spec spec{1.0, 60};
    PackingSequence seq = lens::pack(spec);
    CHECK(seq.circles[0].center.x == 0.0);
    CHECK(seq.circles[0].center.y == doctest::Approx(0.25).epsilon(1e-14));
    double prev_top = 0.0;
    for (const PackedCircle& c : seq.circles) {
        CHECK(std::fabs(c.center.x) < 1e-13);
        double top = c.center.y + c.radius;
        CHECK(top > prev_top);
        CHECK(top < 1.0 + 1e-12);  // never crosses the big circles' tangency point
        prev_top = top;
    }
}

TEST_CASE("packing verifies geometrically") {
    lens::Spec spec{2.0, 80};
    PackingSequence seq = lens::pack(spec);
    VerificationReport report = lens::verify(seq, spec, 1e-9);
    CHECK(report.pass);
    CHECK(report.max_residual < 1e-12);
}

TEST_CASE("radii scale linearly with the big-circle radius") {
    PackingSequence s1 = lens::pack({1.0, 30});
    PackingSequence s2 = lens::pack({7.0, 30});
    for (size_t i = 0; i < s1.circles.size(); ++i) {
        CHECK(rel_err(s2.circles[i].radius, 7.0 * s1.circles[i].radius) < 1e-13);
        CHECK(rel_err(s2.circles[i].center.y, 7.0 * s1.circles[i].center.y) < 1e-13);
    }
}

TEST_CASE("verification catches a corrupted lens circle") {
    lens::Spec spec{1.0, 10};
    PackingSequence seq = lens::pack(spec);
    seq.circles[3].radius *= 1.0 + 1e-6;
    VerificationReport report = lens::verify(seq, spec, 1e-9);
    CHECK(!report.pass);
}

TEST_CASE("invalid lens specs are rejected") {
    CHECK_THROWS_AS(lens::pack({0.0, 5}), InvalidInput);
    CHECK_THROWS_AS(lens::pack({-2.0, 5}), InvalidInput);
    CHECK_THROWS_AS(lens::pack({1.0, 0}), InvalidInput);
}
