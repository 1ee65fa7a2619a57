#pragma once

#include "circlepack/types.hpp"

namespace circlepack::square {

// Two bounded regions inside a square of side x, frame: origin at the
// bottom-left vertex, +x along the bottom side, +y along the left side.
// Mode a: one semicircle on the bottom side plus the quarter circle centered
// at the bottom-right vertex; the chain descends between them toward that
// vertex, starting from the circle tangent to the right side.
// Mode b: semicircles on the bottom AND left sides plus the same quarter
// circle; the first circle is pinned by both semicircles, and the chain then
// descends along the same channel as mode a.
enum class Mode { a, b };

struct Spec {
    double side = 1.0;
    Mode mode = Mode::a;
    int count = 1;
};

double first_radius_mode_a(double x);  // x/4
Point first_center_mode_a(double x);   // (3x/4, x/sqrt(2))

// Next chain radius given the current one (shared by both modes).
double recurrence_step(double r, double x);

// First mode-b radius 4x/33, cross-checked against a numeric solve of its
// defining cubic 297 t^3 - 234 t^2 + 57 t - 4 = 0 on (0, 1/4).
double first_radius_mode_b(double x);
Point first_center_mode_b(double x);  // (4x/11, 20x/33)

// Direct mode-b radius: 4x/(4n^2 + 12n + 17).
double closed_form_mode_b(int n, double x);

PackingSequence pack(const Spec& spec);

// Tangency + containment residuals for every circle against the region
// boundaries and its predecessor. Tolerance is relative to the side length.
VerificationReport verify(const PackingSequence& seq, const Spec& spec, double rel_tol);

}  // namespace circlepack::square
