#pragma once

#include "circlepack/types.hpp"

namespace circlepack::sector {

// Circular sector of radius R and opening angle in (0, pi), frame: apex at
// the origin, one side along +x, the other at the opening angle. The chain
// starts with the inscribed circle tangent to both sides and the arc, then
// descends toward the +x side; circle i subtends angle theta_i at the apex
// and sits on the bisector of its own sub-sector (angle theta_i/2).
struct Spec {
    double radius = 1.0;
    double central_angle = 0.0;  // radians, (0, pi)
    int count = 1;
};

struct StepResult {
    double radius;
    double angle;  // radians subtended by the new circle
};

double first_radius(const Spec& spec);  // R*sin(t/2)/(1 + sin(t/2))

// Next radius and subtended angle from the current subtended angle.
double next_radius(double theta, double R);
StepResult step(double theta, double R);

// The other quadratic root for the next radius. It does not continue the
// inward chain (for openings above a right angle it is even smaller than the
// first radius), so packing never uses it; exposed for tests only.
double next_radius_outer(double theta, double R);

// Radii below 1e-300 stop the sequence early (truncated flag) to keep the
// values out of subnormal range.
PackingSequence pack(const Spec& spec);

VerificationReport verify(const PackingSequence& seq, const Spec& spec, double rel_tol);

}  // namespace circlepack::sector
