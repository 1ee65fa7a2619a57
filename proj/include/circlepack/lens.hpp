#pragma once

#include "circlepack/types.hpp"

namespace circlepack::lens {

// Chain between two externally tangent identical circles (radius R each) and
// their common tangent line. Frame: tangent line is the x-axis, big-circle
// centers at (-R, R) and (R, R). The first chain circle touches the line;
// each next one nests in the pore above its predecessor, all centered on the
// symmetry axis x = 0.
struct Spec {
    double radius = 1.0;
    int count = 1;
};

double closed_form(int n, double R);  // R/(2n(n+1))

PackingSequence pack(const Spec& spec);

VerificationReport verify(const PackingSequence& seq, const Spec& spec, double rel_tol);

}  // namespace circlepack::lens
