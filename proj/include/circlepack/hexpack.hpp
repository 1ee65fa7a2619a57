#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace circlepack::hexpack {

// Identical circles packed in a regular hexagon, n circles tangent to each
// side (n >= 2). Counts are exact integers; lengths and density are binary64.
struct Spec {
    std::int64_t n = 2;
    double r = 1.0;
};

struct Metrics {
    std::int64_t count = 0;         // total circles: 3n^2 - 3n + 1
    std::int64_t voids = 0;         // bounded uncovered pockets: 6(n^2 - n + 1)
    double side = 0.0;              // hexagon side: 2r(n + 1/sqrt(3) - 1)
    double circumradius = 0.0;      // circle through the outer ring: (2n - 1)r
    double string_length = 0.0;     // taut loop around the arrangement: 2(6n + pi - 6)r
    double density = 0.0;           // covered-area fraction
};

Metrics metrics(const Spec& spec);

// Covered-area fraction; independent of the circle radius, strictly
// increasing in n, and bounded above by density_limit().
double density(std::int64_t n);

// (n, density) rows for n in [n_min, n_max].
std::vector<std::pair<std::int64_t, double>> density_curve(std::int64_t n_min,
                                                           std::int64_t n_max);

// Supremum of density(n): pi*sqrt(3)/6.
double density_limit();

}  // namespace circlepack::hexpack
