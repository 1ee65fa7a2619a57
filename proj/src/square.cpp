#include "circlepack/square.hpp"

#include <cmath>

#include "circlepack/errors.hpp"
#include "circlepack/geometry.hpp"

namespace circlepack::square {

namespace {

void check_side(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw InvalidInput("square: side must be positive and finite");
}

// Root of 297 t^3 - 234 t^2 + 57 t - 4 in (0, 1/4): bisection bracketed away
// from the endpoints, then a few Newton polish steps.
double solve_first_radius_cubic() {
    auto f = [](double t) { return ((297.0 * t - 234.0) * t + 57.0) * t - 4.0; };
    auto df = [](double t) { return (891.0 * t - 468.0) * t + 57.0; };
    double lo = 1e-9, hi = 0.25 - 1e-9;
    if (!(f(lo) < 0.0 && f(hi) > 0.0))
        throw InternalCheckFailed("square: cubic bracket lost its sign change");
    for (int i = 0; i < 100; ++i) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    double t = 0.5 * (lo + hi);
    for (int i = 0; i < 3; ++i) t -= f(t) / df(t);
    return t;
}

}  // namespace

double first_radius_mode_a(double x) {
    check_side(x);
    return x / 4.0;
}

Point first_center_mode_a(double x) {
    check_side(x);
    return {3.0 * x / 4.0, x / std::sqrt(2.0)};
}

double recurrence_step(double r, double x) {
    check_side(x);
    if (!(r > 0.0) || !std::isfinite(r))
        throw InvalidInput("square: radius must be positive and finite");
    if (r > x / 2.0)
        throw InvalidInput("square: radius exceeds x/2; recurrence square root is undefined");
    double root = std::sqrt(x * r - 2.0 * r * r);
    return x * (r * r + x * r - 2.0 * r * root) / (9.0 * r * r - 2.0 * x * r + x * x);
}

double first_radius_mode_b(double x) {
    check_side(x);
    double t = solve_first_radius_cubic();
    if (std::fabs(t - 4.0 / 33.0) > 1e-12)
        throw InternalCheckFailed("square: cubic root does not match 4/33");
    return 4.0 * x / 33.0;
}

Point first_center_mode_b(double x) {
    check_side(x);
    double r = 4.0 * x / 33.0;
    double cy = 20.0 * x / 33.0;
    // Independent expression for the center height; they must agree.
    double alt = (9.0 * x * r - 13.0 * r * r) / (x + 4.0 * r);
    if (std::fabs(alt - cy) > 1e-12 * x)
        throw InternalCheckFailed("square: mode-b center height cross-check failed");
    return {4.0 * x / 11.0, cy};
}

double closed_form_mode_b(int n, double x) {
    check_side(x);
    if (n < 1) throw InvalidInput("square: index must be >= 1");
    double nn = n;
    return 4.0 * x / ((4.0 * nn + 12.0) * nn + 17.0);
}

PackingSequence pack(const Spec& spec) {
    check_side(spec.side);
    if (spec.count < 1) throw InvalidInput("square: count must be >= 1");
    double x = spec.side;
    PlacedCircle bottom_semi{{x / 2.0, 0.0}, x / 2.0};
    PlacedCircle corner_arc{{x, 0.0}, x};
    PackingSequence seq;
    seq.circles.reserve(spec.count);
    double r = spec.mode == Mode::a ? first_radius_mode_a(x) : first_radius_mode_b(x);
    for (int i = 1; i <= spec.count; ++i) {
        if (i > 1) r = recurrence_step(r, x);
        PlacedCircle c = geom::place_tangent_circle(bottom_semi, corner_arc, r,
                                                    Tangency::external, Tangency::internal,
                                                    Branch::upper);
        seq.circles.push_back({i, r, c.center, true, 0.0});
    }
    return seq;
}

VerificationReport verify(const PackingSequence& seq, const Spec& spec, double rel_tol) {
    double x = spec.side;
    VerificationReport rep;
    rep.tolerance = rel_tol * x;
    PlacedCircle bottom_semi{{x / 2.0, 0.0}, x / 2.0};
    PlacedCircle corner_arc{{x, 0.0}, x};
    PlacedCircle left_semi{{0.0, x / 2.0}, x / 2.0};
    for (size_t i = 0; i < seq.circles.size(); ++i) {
        const PackedCircle& pc = seq.circles[i];
        PlacedCircle c{pc.center, pc.radius};
        rep.add(pc.index, "bottom semicircle",
                geom::tangency_residual(c, bottom_semi, Tangency::external));
        rep.add(pc.index, "corner arc",
                geom::tangency_residual(c, corner_arc, Tangency::internal));
        if (i == 0) {
            if (spec.mode == Mode::a) {
                rep.add(pc.index, "right side",
                        geom::line_tangency_residual(c, Line{{x, 0.0}, {0.0, 1.0}}));
            } else {
                rep.add(pc.index, "left semicircle",
                        geom::tangency_residual(c, left_semi, Tangency::internal));
            }
        } else {
            const PackedCircle& prev = seq.circles[i - 1];
            rep.add(pc.index, "previous circle",
                    geom::tangency_residual(c, {prev.center, prev.radius}, Tangency::external));
        }
        double out = std::max({pc.radius - pc.center.x, pc.radius - pc.center.y,
                               pc.center.x + pc.radius - x, pc.center.y + pc.radius - x, 0.0});
        rep.add(pc.index, "inside square", out);
    }
    return rep;
}

}  // namespace circlepack::square
