#include "circlepack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "circlepack/errors.hpp"

namespace circlepack::geom {

namespace {

double constraint_distance(const PlacedCircle& c, double r_new, Tangency kind) {
    return kind == Tangency::external ? c.radius + r_new : std::fabs(c.radius - r_new);
}

double distance(const Point& p, const Point& q) {
    return std::hypot(q.x - p.x, q.y - p.y);
}

}  // namespace

PlacedCircle place_tangent_circle(const PlacedCircle& c1, const PlacedCircle& c2,
                                  double r_new, Tangency tangency1, Tangency tangency2,
                                  Branch branch) {
    if (!(r_new > 0.0) || !std::isfinite(r_new))
        throw InvalidInput("place_tangent_circle: r_new must be positive and finite");
    double d1 = constraint_distance(c1, r_new, tangency1);
    double d2 = constraint_distance(c2, r_new, tangency2);
    double dx = c2.center.x - c1.center.x;
    double dy = c2.center.y - c1.center.y;
    double len = std::hypot(dx, dy);
    if (len == 0.0)
        throw NoIntersection("place_tangent_circle: fixed circles are concentric");
    double along = (d1 * d1 - d2 * d2 + len * len) / (2.0 * len);
    double h2 = d1 * d1 - along * along;
    if (h2 < 0.0) {
        // Allow grazing contact to survive rounding; reject anything worse.
        double scale = std::max({d1, d2, len});
        double band = 1e-12 * scale;
        if (h2 < -band * band)
            throw NoIntersection("place_tangent_circle: distance constraints do not intersect");
        h2 = 0.0;
    }
    double h = std::sqrt(h2);
    double ux = dx / len, uy = dy / len;
    // Canonical perpendicular: rotate the center-to-center direction by +90
    // degrees, then flip so it points toward positive y (positive x on ties),
    // making `upper` independent of the order of the fixed circles.
    double px = -uy, py = ux;
    if (py < 0.0 || (py == 0.0 && px < 0.0)) {
        px = -px;
        py = -py;
    }
    double side = branch == Branch::upper ? 1.0 : -1.0;
    return {{c1.center.x + along * ux + side * h * px,
             c1.center.y + along * uy + side * h * py},
            r_new};
}

double tangency_residual(const PlacedCircle& c1, const PlacedCircle& c2, Tangency kind) {
    double d = distance(c1.center, c2.center);
    double want = kind == Tangency::external ? c1.radius + c2.radius
                                             : std::fabs(c1.radius - c2.radius);
    return std::fabs(d - want);
}

double line_tangency_residual(const PlacedCircle& c, const Line& line) {
    double nx = -line.direction.y, ny = line.direction.x;
    double n = std::hypot(nx, ny);
    if (n == 0.0)
        throw InvalidInput("line_tangency_residual: line direction must be nonzero");
    double dist = std::fabs((c.center.x - line.point.x) * nx +
                            (c.center.y - line.point.y) * ny) / n;
    return std::fabs(dist - c.radius);
}

namespace {

// Signed mismatch of the third constraint for the circle of radius r placed
// against the first two constraints on the given branch. nullopt when the
// placement itself is infeasible at this radius.
std::optional<double> third_mismatch(const std::vector<TangentConstraint>& fixed,
                                     const std::optional<Line>& line, double r,
                                     Branch branch) {
    PlacedCircle cand;
    try {
        cand = place_tangent_circle(fixed[0].circle, fixed[1].circle, r,
                                    fixed[0].kind, fixed[1].kind, branch);
    } catch (const NoIntersection&) {
        return std::nullopt;
    }
    if (line) {
        double nx = -line->direction.y, ny = line->direction.x;
        double n = std::hypot(nx, ny);
        if (n == 0.0)
            throw InvalidInput("bisect_tangent_radius: line direction must be nonzero");
        double dist = std::fabs((cand.center.x - line->point.x) * nx +
                                (cand.center.y - line->point.y) * ny) / n;
        return dist - r;
    }
    const TangentConstraint& third = fixed[2];
    double d = std::hypot(cand.center.x - third.circle.center.x,
                          cand.center.y - third.circle.center.y);
    double want = third.kind == Tangency::external ? third.circle.radius + r
                                                   : std::fabs(third.circle.radius - r);
    return d - want;
}

}  // namespace

double bisect_tangent_radius(const std::vector<TangentConstraint>& fixed,
                             const std::optional<Line>& line,
                             std::optional<std::pair<double, double>> bracket) {
    size_t needed = line ? 2 : 3;
    if (fixed.size() != needed)
        throw InvalidInput("bisect_tangent_radius: need exactly two fixed circles plus a "
                           "line, or exactly three fixed circles");
    double scale = 0.0, smallest = std::numeric_limits<double>::infinity();
    for (const auto& f : fixed) {
        if (!(f.circle.radius > 0.0) || !std::isfinite(f.circle.radius))
            throw InvalidInput("bisect_tangent_radius: fixed radii must be positive and finite");
        scale = std::max(scale, f.circle.radius);
        smallest = std::min(smallest, f.circle.radius);
    }
    double lo = bracket ? bracket->first : 1e-9 * scale;
    double hi = bracket ? bracket->second : smallest;
    if (!(lo > 0.0) || !(hi > lo))
        throw InvalidInput("bisect_tangent_radius: bracket must satisfy 0 < lo < hi");

    constexpr int kSegments = 256;
    constexpr int kMaxIter = 200;
    double tol = 1e-13 * scale;
    double best = std::numeric_limits<double>::infinity();

    for (Branch branch : {Branch::upper, Branch::lower}) {
        double prev_r = lo;
        std::optional<double> prev_f = third_mismatch(fixed, line, prev_r, branch);
        for (int seg = 1; seg <= kSegments; ++seg) {
            double cur_r = lo + (hi - lo) * seg / kSegments;
            std::optional<double> cur_f = third_mismatch(fixed, line, cur_r, branch);
            if (prev_f && cur_f && *prev_f * *cur_f <= 0.0) {
                double a = prev_r, fa = *prev_f;
                double b = cur_r;
                for (int it = 0; it < kMaxIter && (b - a) > tol; ++it) {
                    double mid = 0.5 * (a + b);
                    std::optional<double> fm = third_mismatch(fixed, line, mid, branch);
                    if (!fm) break;  // infeasible pocket inside the segment; give up on it
                    if (fa * *fm <= 0.0) {
                        b = mid;
                    } else {
                        a = mid;
                        fa = *fm;
                    }
                }
                best = std::min(best, 0.5 * (a + b));
            }
            prev_r = cur_r;
            prev_f = cur_f;
        }
    }

    if (!std::isfinite(best))
        throw NoRoot("bisect_tangent_radius: no tangency root inside the bracket");
    return best;
}

}  // namespace circlepack::geom
