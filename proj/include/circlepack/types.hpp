#pragma once

#include <algorithm>
#include <vector>

namespace circlepack {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct PlacedCircle {
    Point center;
    double radius = 0.0;
};

// Infinite line through `point` along `direction` (need not be unit length).
struct Line {
    Point point;
    Point direction;
};

enum class Tangency { external, internal };

// Which of the two trilateration intersection points to take: `upper` is the
// one offset along the canonical perpendicular (positive-y side) of the
// segment joining the two fixed centers.
enum class Branch { upper, lower };

struct PackedCircle {
    int index = 0;  // 1-based position in the chain
    double radius = 0.0;
    Point center;
    bool center_known = true;
    double subtended_angle = 0.0;  // radians; used by sector chains only
};

struct PackingSequence {
    std::vector<PackedCircle> circles;
    bool truncated = false;   // stopped early at the tiny-radius cutoff
    bool degenerate = false;  // degenerate region (lune with a + b = R)
};

struct ResidualEntry {
    int index;               // circle the residual belongs to (1-based)
    const char* constraint;  // which tangency/containment produced it
    double residual;         // length units of the region
};

struct VerificationReport {
    std::vector<ResidualEntry> residuals;
    double max_residual = 0.0;
    double tolerance = 0.0;  // absolute, in region length units
    bool pass = true;

    void add(int index, const char* constraint, double residual) {
        residuals.push_back({index, constraint, residual});
        max_residual = std::max(max_residual, residual);
        pass = max_residual <= tolerance;
    }

    // Largest offender, for error messages.
    const ResidualEntry* worst() const {
        const ResidualEntry* w = nullptr;
        for (const auto& e : residuals)
            if (!w || e.residual > w->residual) w = &e;
        return w;
    }
};

}  // namespace circlepack
