#pragma once

namespace circlepack::soddy {

// Both radii for a third circle inscribed in a circumscribing circle of
// radius R alongside two mutually tangent circles of radii a and b. c_min
// fills the smaller pocket, c_max the larger; degenerate means R = a + b
// within tolerance, which collapses the two roots into one value.
struct InscribedPair {
    double c_min = 0.0;
    double c_max = 0.0;
    bool degenerate = false;
};

// Radius of the circle that internally touches three mutually externally
// tangent circles of radii a, b, c (any argument order), enclosing them.
// Throws InvalidTriple when no such circle exists.
double circumscribing_radius(double a, double b, double c);

// Solves for the third circle tangent to circles a and b and internally
// tangent to the circumscribing circle R. Requires a + b <= R (up to a
// 1e-12*R degeneracy band); throws NoRealSolution beyond it.
InscribedPair third_inscribed_radii(double a, double b, double R);

// Radius of the small circle externally tangent to all three given mutually
// tangent circles, nestled in their central pore.
double inner_tangent_radius(double a, double b, double c);

// Limit of inner_tangent_radius as the third circle flattens into a common
// tangent line of the other two: a*b/(sqrt(a)+sqrt(b))^2. Computed in closed
// form to avoid cancellation with huge third radii.
double inner_tangent_radius_with_line(double a, double b);

}  // namespace circlepack::soddy
