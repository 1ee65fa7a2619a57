#include "circlepack/lune.hpp"

#include <algorithm>
#include <cmath>

#include "circlepack/errors.hpp"
#include "circlepack/geometry.hpp"
#include "circlepack/soddy.hpp"

namespace circlepack::lune {

namespace {

void check_pair(double b, double R) {
    if (!(R > 0.0) || !std::isfinite(R) || !(b > 0.0) || !std::isfinite(b))
        throw InvalidInput("lune: radii must be positive and finite");
    if (b >= R) throw InvalidInput("lune: b must be smaller than R");
}

// Both trilateration branches against the b-circle and the circumscribing
// circle mirror across the x axis; the predecessor decides the side, with a
// fixed preference when the two sides are indistinguishable (degenerate
// symmetric configurations).
PlacedCircle place_chain_circle(const PlacedCircle& b_circle, const PlacedCircle& outer,
                                double r, const PlacedCircle& prev, Branch tie_side,
                                double R) {
    PlacedCircle up = geom::place_tangent_circle(b_circle, outer, r, Tangency::external,
                                                 Tangency::internal, Branch::upper);
    PlacedCircle lo = geom::place_tangent_circle(b_circle, outer, r, Tangency::external,
                                                 Tangency::internal, Branch::lower);
    double res_up = geom::tangency_residual(up, prev, Tangency::external);
    double res_lo = geom::tangency_residual(lo, prev, Tangency::external);
    if (std::fabs(res_up - res_lo) <= 1e-12 * R) return tie_side == Branch::upper ? up : lo;
    return res_up < res_lo ? up : lo;
}

}  // namespace

// The a-circle is tangent externally to the b-circle and internally to the
// circumscribing circle; its center goes in the upper half plane.
Point seed_center(double a, double b, double R) {
    double da = R - a;  // distance from origin
    double db = R - b;
    double cos_phi = (da * da + db * db - (a + b) * (a + b)) / (2.0 * da * db);
    cos_phi = std::min(1.0, std::max(-1.0, cos_phi));
    double phi = std::acos(cos_phi);
    return {da * std::cos(phi), da * std::sin(phi)};
}

double minor_step(double r, double b, double R) {
    return soddy::third_inscribed_radii(r, b, R).c_min;
}

double major_step(double r, double b, double R) {
    return soddy::third_inscribed_radii(r, b, R).c_max;
}

double max_major_radius(double b, double R) {
    check_pair(b, R);
    return 4.0 * b * R * (R - b) / ((R + b) * (R + b));
}

Resonance classify_resonance(double r, double b, double R) {
    check_pair(b, R);
    if (!(r > 0.0) || !std::isfinite(r))
        throw InvalidInput("lune: radius must be positive and finite");
    return std::fabs(r - max_major_radius(b, R)) <= 1e-12 * R ? Resonance::NonResonant
                                                              : Resonance::Resonant;
}

PackResult pack_lune(const Spec& spec) {
    double R = spec.R, a = spec.a, b = spec.b;
    check_pair(b, R);
    if (!(a > 0.0) || !std::isfinite(a)) throw InvalidInput("lune: a must be positive and finite");
    if (a >= R) throw InvalidInput("lune: a must be smaller than R");
    if (a + b > R * (1.0 + 1e-12))
        throw InvalidInput("lune: a + b must not exceed R");
    if (spec.minor_count < 0 || spec.major_count < 0)
        throw InvalidInput("lune: counts must be nonnegative");

    bool degenerate = std::fabs(R - (a + b)) <= 1e-12 * R;
    PlacedCircle outer{{0.0, 0.0}, R};
    PlacedCircle b_circle{{R - b, 0.0}, b};
    PlacedCircle seed{seed_center(a, b, R), a};

    PackResult out;
    out.minor.degenerate = degenerate;
    out.major.degenerate = degenerate;
    out.major_state.r_max = max_major_radius(b, R);

    // Minor region: small root every step, staying on the seed's side.
    {
        double r = a;
        PlacedCircle prev = seed;
        for (int i = 1; i <= spec.minor_count; ++i) {
            r = minor_step(r, b, R);
            PlacedCircle c = place_chain_circle(b_circle, outer, r, prev, Branch::upper, R);
            out.minor.circles.push_back({i, r, c.center, true, 0.0});
            prev = c;
        }
    }

    // Major region: large root while strictly increasing and within R - b;
    // the first value that breaks the climb is the crossing value from the
    // attained maximum, and the small root takes over after it.
    {
        double eps = 1e-17 * R;
        double bound = (R - b) + eps;
        double r = a;
        Phase phase = Phase::ascending;
        PlacedCircle prev = seed;
        for (int i = 1; i <= spec.major_count; ++i) {
            double next;
            if (phase == Phase::ascending) {
                next = major_step(r, b, R);
                if (!(next > r + eps && next <= bound)) phase = Phase::at_max;
            } else {
                next = minor_step(r, b, R);
                phase = Phase::descending;
            }
            PlacedCircle c = place_chain_circle(b_circle, outer, next, prev, Branch::lower, R);
            out.major.circles.push_back({i, next, c.center, true, 0.0});
            prev = c;
            r = next;
        }
        out.major_state.phase = phase;
    }
    return out;
}

VerificationReport verify(const PackResult& result, const Spec& spec, double rel_tol) {
    double R = spec.R;
    VerificationReport rep;
    rep.tolerance = rel_tol * R;
    PlacedCircle outer{{0.0, 0.0}, R};
    PlacedCircle b_circle{{R - spec.b, 0.0}, spec.b};
    PlacedCircle seed{seed_center(spec.a, spec.b, R), spec.a};
    for (const PackingSequence* chain : {&result.minor, &result.major}) {
        PlacedCircle prev = seed;
        for (const PackedCircle& pc : chain->circles) {
            PlacedCircle c{pc.center, pc.radius};
            rep.add(pc.index, "reference circle",
                    geom::tangency_residual(c, b_circle, Tangency::external));
            rep.add(pc.index, "circumscribing circle",
                    geom::tangency_residual(c, outer, Tangency::internal));
            rep.add(pc.index, "previous circle",
                    geom::tangency_residual(c, prev, Tangency::external));
            prev = c;
        }
    }
    return rep;
}

}  // namespace circlepack::lune
