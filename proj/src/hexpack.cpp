#include "circlepack/hexpack.hpp"

#include <cmath>
#include <numbers>

#include "circlepack/errors.hpp"

namespace circlepack::hexpack {

namespace {

// Counts use int64; 3n^2 stays exact well past this bound.
constexpr std::int64_t kMaxN = 1'000'000'000;

void check_n(std::int64_t n) {
    if (n < 2) throw InvalidInput("hexpack: n must be >= 2");
    if (n > kMaxN) throw InvalidInput("hexpack: n too large for exact counts");
}

}  // namespace

Metrics metrics(const Spec& spec) {
    check_n(spec.n);
    if (!(spec.r > 0.0) || !std::isfinite(spec.r))
        throw InvalidInput("hexpack: r must be positive and finite");
    std::int64_t n = spec.n;
    double nn = static_cast<double>(n);
    double r = spec.r;
    Metrics m;
    m.count = 3 * n * n - 3 * n + 1;
    m.voids = 6 * (n * n - n + 1);
    m.side = 2.0 * r * (nn + 1.0 / std::sqrt(3.0) - 1.0);
    m.circumradius = (2.0 * nn - 1.0) * r;
    m.string_length = 2.0 * (6.0 * nn + std::numbers::pi - 6.0) * r;
    m.density = density(n);
    return m;
}

double density(std::int64_t n) {
    check_n(n);
    double nn = static_cast<double>(n);
    double num = 3.0 * nn * nn - 3.0 * nn + 1.0;
    double den = std::sqrt(3.0) * (nn - 1.0) + 1.0;
    return std::numbers::pi * std::sqrt(3.0) / 6.0 * num / (den * den);
}

std::vector<std::pair<std::int64_t, double>> density_curve(std::int64_t n_min,
                                                           std::int64_t n_max) {
    if (n_min < 2 || n_min > n_max)
        throw InvalidRange("hexpack: need 2 <= n_min <= n_max");
    check_n(n_max);
    std::vector<std::pair<std::int64_t, double>> rows;
    rows.reserve(static_cast<size_t>(n_max - n_min + 1));
    for (std::int64_t n = n_min; n <= n_max; ++n) rows.emplace_back(n, density(n));
    return rows;
}

double density_limit() { return std::numbers::pi * std::sqrt(3.0) / 6.0; }

}  // namespace circlepack::hexpack
