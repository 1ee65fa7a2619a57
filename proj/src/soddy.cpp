#include "circlepack/soddy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "circlepack/errors.hpp"

namespace circlepack::soddy {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

double sq(double v) { return v * v; }

}  // namespace

double circumscribing_radius(double a, double b, double c) {
    if (!positive_finite(a) || !positive_finite(b) || !positive_finite(c))
        throw InvalidTriple("circumscribing_radius: radii must be positive and finite");
    // The smallest radius must exceed the line-limit radius of the two larger
    // ones, or the three circles flatten out and nothing circumscribes them.
    double lo = std::min({a, b, c});
    double hi = std::max({a, b, c});
    double mid = a + b + c - lo - hi;
    if (!(lo > inner_tangent_radius_with_line(hi, mid)))
        throw InvalidTriple(
            "circumscribing_radius: smallest radius " + std::to_string(lo) +
            " is too small relative to the other two; no circumscribing circle exists");
    double p = a * b * c;
    double s = a * b + b * c + c * a;
    double denom = 2.0 * std::sqrt(p * (a + b + c)) - s;
    if (!(denom > 0.0))
        throw InvalidTriple("circumscribing_radius: degenerate configuration (denominator <= 0)");
    return p / denom;
}

InscribedPair third_inscribed_radii(double a, double b, double R) {
    if (!positive_finite(a) || !positive_finite(b) || !positive_finite(R))
        throw InvalidInput("third_inscribed_radii: inputs must be positive and finite");
    if (a >= R || b >= R)
        throw InvalidInput("third_inscribed_radii: a and b must be smaller than R");
    if (a > b) std::swap(a, b);  // symmetric in (a, b); sort for bit-exact symmetry

    bool degenerate = std::fabs(R - (a + b)) <= 1e-12 * R;
    if (!degenerate && a + b > R)
        throw NoRealSolution("third_inscribed_radii: a + b exceeds R; no real solution");

    double disc = degenerate ? 0.0 : a * b * R * (R - a - b);
    double root = std::sqrt(disc);
    double base = a * R + b * R - a * b;
    double den = sq(a * R + b * R + a * b) - 4.0 * a * b * R * R;
    InscribedPair out;
    out.c_min = a * b * R * (base - 2.0 * root) / den;
    out.c_max = a * b * R * (base + 2.0 * root) / den;
    out.degenerate = degenerate || out.c_min == out.c_max;
    if (!(out.c_min > 0.0) || !(out.c_max >= out.c_min))
        throw InternalCheckFailed("third_inscribed_radii: roots out of order or nonpositive");
    return out;
}

double inner_tangent_radius(double a, double b, double c) {
    if (!positive_finite(a) || !positive_finite(b) || !positive_finite(c))
        throw InvalidInput("inner_tangent_radius: radii must be positive and finite");
    double p = a * b * c;
    double s = a * b + b * c + c * a;
    return p / (2.0 * std::sqrt(p * (a + b + c)) + s);
}

double inner_tangent_radius_with_line(double a, double b) {
    if (!positive_finite(a) || !positive_finite(b))
        throw InvalidInput("inner_tangent_radius_with_line: radii must be positive and finite");
    return a * b / sq(std::sqrt(a) + std::sqrt(b));
}

}  // namespace circlepack::soddy
