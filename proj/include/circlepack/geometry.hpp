#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "circlepack/types.hpp"

namespace circlepack::geom {

// Center of a new circle of radius r_new tangent to both fixed circles, via
// two-distance trilateration. `branch` picks which of the two intersection
// points (see Branch). Throws NoIntersection when the distance constraints
// are inconsistent.
PlacedCircle place_tangent_circle(const PlacedCircle& c1, const PlacedCircle& c2,
                                  double r_new, Tangency tangency1, Tangency tangency2,
                                  Branch branch);

// |dist(centers) - (r1 + r2)| for external, |dist(centers) - |r1 - r2|| for
// internal tangency. Exactly symmetric in its circle arguments.
double tangency_residual(const PlacedCircle& c1, const PlacedCircle& c2, Tangency kind);

// |perpendicular distance(center, line) - radius|.
double line_tangency_residual(const PlacedCircle& c, const Line& line);

struct TangentConstraint {
    PlacedCircle circle;
    Tangency kind;
};

// Brute-force radius solver: finds the radius whose trilaterated placement
// against the first two constraints also meets the third constraint (a third
// circle, or a line when `line` is given). Scans both placement branches over
// the bracket, bisects every sign change, and returns the smallest root.
// Defaults: bracket (1e-9*scale, smallest fixed radius) with scale = largest
// fixed radius. Never consults the closed-form tangent-circle algebra.
double bisect_tangent_radius(const std::vector<TangentConstraint>& fixed,
                             const std::optional<Line>& line = std::nullopt,
                             std::optional<std::pair<double, double>> bracket = std::nullopt);

}  // namespace circlepack::geom
