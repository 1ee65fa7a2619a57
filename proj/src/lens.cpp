#include "circlepack/lens.hpp"

#include <cmath>

#include "circlepack/errors.hpp"
#include "circlepack/geometry.hpp"
#include "circlepack/soddy.hpp"

namespace circlepack::lens {

double closed_form(int n, double R) {
    if (n < 1) throw InvalidInput("lens: index must be >= 1");
    if (!(R > 0.0) || !std::isfinite(R))
        throw InvalidInput("lens: radius must be positive and finite");
    return R / (2.0 * n * (n + 1.0));
}

PackingSequence pack(const Spec& spec) {
    if (spec.count < 1) throw InvalidInput("lens: count must be >= 1");
    double R = spec.radius;
    if (!(R > 0.0) || !std::isfinite(R))
        throw InvalidInput("lens: radius must be positive and finite");
    PlacedCircle left{{-R, R}, R};
    PlacedCircle right{{R, R}, R};
    PackingSequence seq;
    seq.circles.reserve(spec.count);
    double r = soddy::inner_tangent_radius_with_line(R, R);
    for (int i = 1; i <= spec.count; ++i) {
        if (i > 1) r = soddy::inner_tangent_radius(R, R, r);
        PlacedCircle c = geom::place_tangent_circle(left, right, r, Tangency::external,
                                                    Tangency::external, Branch::lower);
        seq.circles.push_back({i, r, c.center, true, 0.0});
    }
    return seq;
}

VerificationReport verify(const PackingSequence& seq, const Spec& spec, double rel_tol) {
    double R = spec.radius;
    VerificationReport rep;
    rep.tolerance = rel_tol * R;
    PlacedCircle left{{-R, R}, R};
    PlacedCircle right{{R, R}, R};
    Line tangent_line{{0.0, 0.0}, {1.0, 0.0}};
    for (size_t i = 0; i < seq.circles.size(); ++i) {
        const PackedCircle& pc = seq.circles[i];
        PlacedCircle c{pc.center, pc.radius};
        rep.add(pc.index, "left circle", geom::tangency_residual(c, left, Tangency::external));
        rep.add(pc.index, "right circle", geom::tangency_residual(c, right, Tangency::external));
        if (i == 0) {
            rep.add(pc.index, "tangent line", geom::line_tangency_residual(c, tangent_line));
        } else {
            const PackedCircle& prev = seq.circles[i - 1];
            rep.add(pc.index, "previous circle",
                    geom::tangency_residual(c, {prev.center, prev.radius}, Tangency::external));
        }
        rep.add(pc.index, "symmetry axis", std::fabs(pc.center.x));
        rep.add(pc.index, "above line", std::max(0.0, pc.radius - pc.center.y));
    }
    return rep;
}

}  // namespace circlepack::lens
