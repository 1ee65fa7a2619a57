#pragma once

#include "circlepack/types.hpp"

namespace circlepack::lune {

// Two externally tangent circles (radii a, b) inscribed in a circumscribing
// circle of radius R split its interior into a minor and a major region.
// Frame: circumscribing circle centered at the origin, b-circle center on the
// +x axis at (R-b, 0), a-circle center in the upper half plane at the angle
// fixed by the tangency triangle. Chains seed from the a-circle: the minor
// chain takes the small root every step; the major chain rides the large root
// while it grows, emits one crossing value from the attained maximum, then
// descends with the small root (so no radius in its output repeats).
struct Spec {
    double R = 1.0;
    double a = 0.0;
    double b = 0.0;
    int minor_count = 0;
    int major_count = 0;
};

enum class Phase { ascending, at_max, descending };

struct MajorChainState {
    Phase phase = Phase::ascending;  // phase after the last emitted circle
    double r_max = 0.0;              // fixed-point radius 4bR(R-b)/(R+b)^2
};

enum class Resonance { Resonant, NonResonant };

// Center of the seed a-circle in the packing frame (upper half plane).
Point seed_center(double a, double b, double R);

// Small root of the inscribed-circle pair for (r, b) inside R.
double minor_step(double r, double b, double R);
// Large root; bounded above by R - b.
double major_step(double r, double b, double R);

// Fixed point of major_step: 4bR(R-b)/(R+b)^2. Seeding the major chain here
// makes every large-root iterate equal to it (twin-circle configuration).
double max_major_radius(double b, double R);

// NonResonant when r sits at the fixed point (within 1e-12*R); any other
// seed makes the large-root iteration oscillate, which is Resonant.
Resonance classify_resonance(double r, double b, double R);

struct PackResult {
    PackingSequence minor;
    PackingSequence major;
    MajorChainState major_state;
};

PackResult pack_lune(const Spec& spec);

VerificationReport verify(const PackResult& result, const Spec& spec, double rel_tol);

}  // namespace circlepack::lune
