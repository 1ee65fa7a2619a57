#include "circlepack/sector.hpp"

#include <cmath>
#include <numbers>

#include "circlepack/errors.hpp"
#include "circlepack/geometry.hpp"

namespace circlepack::sector {

namespace {

constexpr double kTinyRadius = 1e-300;

void check_inputs(double theta, double R) {
    if (!(R > 0.0) || !std::isfinite(R))
        throw InvalidInput("sector: radius must be positive and finite");
    if (!std::isfinite(theta) || !(theta > 0.0) || !(theta < std::numbers::pi))
        throw InvalidAngle("sector: opening angle must lie strictly between 0 and pi");
}

double sq(double v) { return v * v; }

}  // namespace

double first_radius(const Spec& spec) {
    check_inputs(spec.central_angle, spec.radius);
    double s = std::sin(spec.central_angle / 2.0);
    return spec.radius * s / (1.0 + s);
}

double next_radius(double theta, double R) {
    check_inputs(theta, R);
    double s = std::sin(theta / 2.0);
    return R * (s * s + 3.0 * s - std::sqrt(2.0) * std::sin(theta)) / sq(1.0 + 3.0 * s);
}

StepResult step(double theta, double R) {
    check_inputs(theta, R);
    double s = std::sin(theta / 2.0);
    double sin_t = std::sin(theta);
    double num = s * s + 3.0 * s - std::sqrt(2.0) * sin_t;
    double r = R * num / sq(1.0 + 3.0 * s);
    double next_theta =
        2.0 * std::asin(num / (std::sqrt(2.0) * sin_t + 8.0 * s * s + 3.0 * s + 1.0));
    return {r, next_theta};
}

double next_radius_outer(double theta, double R) {
    check_inputs(theta, R);
    double s = std::sin(theta / 2.0);
    return R * (s * s + 3.0 * s + std::sqrt(2.0) * std::sin(theta)) / sq(1.0 + 3.0 * s);
}

PackingSequence pack(const Spec& spec) {
    check_inputs(spec.central_angle, spec.radius);
    if (spec.count < 1) throw InvalidInput("sector: count must be >= 1");
    double R = spec.radius;
    PackingSequence seq;
    seq.circles.reserve(spec.count);
    double r = first_radius(spec);
    double theta = spec.central_angle;
    for (int i = 1; i <= spec.count; ++i) {
        if (i > 1) {
            StepResult next = step(theta, R);
            r = next.radius;
            theta = next.angle;
        }
        if (r < kTinyRadius) {
            seq.truncated = true;
            break;
        }
        double half = theta / 2.0;
        double d = R - r;
        seq.circles.push_back({i, r, {d * std::cos(half), d * std::sin(half)}, true, theta});
    }
    return seq;
}

VerificationReport verify(const PackingSequence& seq, const Spec& spec, double rel_tol) {
    double R = spec.radius;
    VerificationReport rep;
    rep.tolerance = rel_tol * R;
    PlacedCircle arc{{0.0, 0.0}, R};
    Line base_side{{0.0, 0.0}, {1.0, 0.0}};
    Line open_side{{0.0, 0.0}, {std::cos(spec.central_angle), std::sin(spec.central_angle)}};
    for (size_t i = 0; i < seq.circles.size(); ++i) {
        const PackedCircle& pc = seq.circles[i];
        PlacedCircle c{pc.center, pc.radius};
        rep.add(pc.index, "arc", geom::tangency_residual(c, arc, Tangency::internal));
        rep.add(pc.index, "base side", geom::line_tangency_residual(c, base_side));
        if (i == 0) {
            rep.add(pc.index, "opening side", geom::line_tangency_residual(c, open_side));
        } else {
            const PackedCircle& prev = seq.circles[i - 1];
            rep.add(pc.index, "previous circle",
                    geom::tangency_residual(c, {prev.center, prev.radius}, Tangency::external));
            // Later circles must stay clear of the opening side.
            double nx = -open_side.direction.y, ny = open_side.direction.x;
            double dist = std::fabs(pc.center.x * nx + pc.center.y * ny);
            rep.add(pc.index, "clear of opening side", std::max(0.0, pc.radius - dist));
        }
        // Subtended-angle consistency doubles as a length residual.
        rep.add(pc.index, "subtended angle",
                std::fabs(std::sin(pc.subtended_angle / 2.0) * (R - pc.radius) - pc.radius));
    }
    return rep;
}

}  // namespace circlepack::sector
