// circlepack: pack, verify, and render chains of tangent circles in
// arc-bounded plane regions. One subcommand per region; CSV/JSON/SVG output.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "circlepack/errors.hpp"
#include "circlepack/hexpack.hpp"
#include "circlepack/lens.hpp"
#include "circlepack/lune.hpp"
#include "circlepack/render.hpp"
#include "circlepack/sector.hpp"
#include "circlepack/square.hpp"
#include "circlepack/types.hpp"

namespace {

namespace cp = circlepack;

struct OutputConfig {
    std::string format = "csv";
    std::string out;  // empty means standard output
    int precision = 17;
    bool verify = true;
    double tolerance = 1e-9;  // relative to the region scale
};

void add_output_flags(CLI::App* sub, OutputConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "svg"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Write to this file instead of standard output");
    sub->add_option("--precision", cfg.precision, "Significant digits in numeric output")
        ->check(CLI::Range(4, 17))
        ->capture_default_str();
    sub->add_flag("--verify,!--no-verify", cfg.verify,
                  "Check tangency and containment residuals before emitting");
    sub->add_option("--tolerance", cfg.tolerance,
                    "Relative residual tolerance used by --verify")
        ->capture_default_str();
}

int emit(const OutputConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output file: " << cfg.out << '\n';
        return 1;
    }
    file << text;
    file.close();
    if (!file) {
        std::cerr << "error: failed writing output file: " << cfg.out << '\n';
        return 1;
    }
    return 0;
}

// 0 when the report passes, otherwise 2 after naming the worst offender.
int check_report(const cp::VerificationReport& report) {
    if (report.pass) return 0;
    if (const cp::ResidualEntry* w = report.worst())
        std::cerr << "verification failure: circle " << w->index << " violates \""
                  << w->constraint << "\" with residual " << w->residual << " (tolerance "
                  << report.tolerance << ")\n";
    else
        std::cerr << "verification failure\n";
    return 2;
}

int run_square(cp::square::Mode mode, double side, int count, const OutputConfig& cfg) {
    cp::square::Spec spec{side, mode, count};
    cp::PackingSequence seq = cp::square::pack(spec);
    if (cfg.verify)
        if (int rc = check_report(cp::square::verify(seq, spec, cfg.tolerance))) return rc;
    std::string text;
    if (cfg.format == "csv")
        text = mode == cp::square::Mode::b
                   ? cp::render::csv_square_b(seq, side, cfg.precision)
                   : cp::render::csv_chain(seq, cfg.precision, false);
    else if (cfg.format == "json")
        text = cp::render::json_square(seq, spec, cfg.precision);
    else
        text = cp::render::svg_square(seq, spec);
    return emit(cfg, text);
}

int run_sector(double radius, double angle_deg, int count, const OutputConfig& cfg) {
    cp::sector::Spec spec{radius, angle_deg * std::numbers::pi / 180.0, count};
    cp::PackingSequence seq = cp::sector::pack(spec);
    if (cfg.verify)
        if (int rc = check_report(cp::sector::verify(seq, spec, cfg.tolerance))) return rc;
    std::string text;
    if (cfg.format == "csv")
        text = cp::render::csv_chain(seq, cfg.precision, true);
    else if (cfg.format == "json")
        text = cp::render::json_sector(seq, spec, cfg.precision);
    else
        text = cp::render::svg_sector(seq, spec);
    return emit(cfg, text);
}

int run_lens(double radius, int count, const OutputConfig& cfg) {
    cp::lens::Spec spec{radius, count};
    cp::PackingSequence seq = cp::lens::pack(spec);
    if (cfg.verify)
        if (int rc = check_report(cp::lens::verify(seq, spec, cfg.tolerance))) return rc;
    std::string text;
    if (cfg.format == "csv")
        text = cp::render::csv_chain(seq, cfg.precision, false);
    else if (cfg.format == "json")
        text = cp::render::json_lens(seq, spec.radius, cfg.precision);
    else
        text = cp::render::svg_lens(seq, spec.radius);
    return emit(cfg, text);
}

int run_lune(double R, double a, double b, int minor_count, int major_count,
             const OutputConfig& cfg) {
    cp::lune::Spec spec{R, a, b, minor_count, major_count};
    cp::lune::PackResult result = cp::lune::pack_lune(spec);
    if (cfg.verify)
        if (int rc = check_report(cp::lune::verify(result, spec, cfg.tolerance))) return rc;
    std::string text;
    if (cfg.format == "csv")
        text = cp::render::csv_lune(result.minor, result.major, cfg.precision);
    else if (cfg.format == "json")
        text = cp::render::json_lune(result, spec, cfg.precision);
    else
        text = cp::render::svg_lune(result, spec);
    return emit(cfg, text);
}

int run_hex(std::int64_t n, double r, const OutputConfig& cfg) {
    cp::hexpack::Spec spec{n, r};
    cp::hexpack::Metrics m = cp::hexpack::metrics(spec);
    std::string text;
    if (cfg.format == "csv")
        text = cp::render::csv_hex(spec, m, cfg.precision);
    else if (cfg.format == "json")
        text = cp::render::json_hex(spec, m, cfg.precision);
    else
        text = cp::render::svg_hex(spec, m);
    return emit(cfg, text);
}

int run_hex_curve(std::int64_t n_min, std::int64_t n_max, const OutputConfig& cfg) {
    auto rows = cp::hexpack::density_curve(n_min, n_max);
    if (cfg.format == "svg") {
        std::cerr << "error: hex-curve does not support --format svg\n";
        return 1;
    }
    std::string text = cfg.format == "csv" ? cp::render::csv_hex_curve(rows, cfg.precision)
                                           : cp::render::json_hex_curve(rows, cfg.precision);
    return emit(cfg, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chains of tangent circles packed in arc-bounded plane regions"};
    app.require_subcommand(1);

    OutputConfig cfg;

    double side = 1.0;
    int count = 1;
    CLI::App* square_a = app.add_subcommand(
        "square-a", "Chain between a half-side semicircle and a corner quarter circle");
    square_a->add_option("--side", side, "Square side length")->capture_default_str();
    square_a->add_option("--count", count, "Number of chain circles")->capture_default_str();
    add_output_flags(square_a, cfg);

    CLI::App* square_b = app.add_subcommand(
        "square-b", "Same channel with a second semicircle pinning the first circle");
    square_b->add_option("--side", side, "Square side length")->capture_default_str();
    square_b->add_option("--count", count, "Number of chain circles")->capture_default_str();
    add_output_flags(square_b, cfg);

    double radius = 1.0;
    double angle_deg = 90.0;
    CLI::App* sector = app.add_subcommand(
        "sector", "Chain descending from the inscribed circle of a circular sector");
    sector->add_option("--radius", radius, "Sector radius")->capture_default_str();
    sector->add_option("--angle-deg", angle_deg, "Opening angle in degrees, (0, 180)")
        ->capture_default_str();
    sector->add_option("--count", count, "Number of chain circles")->capture_default_str();
    add_output_flags(sector, cfg);

    CLI::App* lens = app.add_subcommand(
        "lens", "Chain between two tangent identical circles and their common tangent line");
    lens->add_option("--radius", radius, "Radius of the two identical circles")
        ->capture_default_str();
    lens->add_option("--count", count, "Number of chain circles")->capture_default_str();
    add_output_flags(lens, cfg);

    double lune_R = 1.0, lune_a = 0.0, lune_b = 0.0;
    int minor_count = 0, major_count = 0;
    CLI::App* lune = app.add_subcommand(
        "lune", "Minor/major chains seeded by two tangent circles inside a third");
    lune->add_option("--R", lune_R, "Circumscribing circle radius")->capture_default_str();
    lune->add_option("--a", lune_a, "Seed circle radius")->required();
    lune->add_option("--b", lune_b, "Reference circle radius")->required();
    lune->add_option("--minor", minor_count, "Minor chain length")->capture_default_str();
    lune->add_option("--major", major_count, "Major chain length")->capture_default_str();
    add_output_flags(lune, cfg);

    std::int64_t hex_n = 2;
    double hex_r = 1.0;
    CLI::App* hex = app.add_subcommand(
        "hex", "Counts, lengths, and density of identical circles in a regular hexagon");
    hex->add_option("--n", hex_n, "Circles tangent to each hexagon side (>= 2)")
        ->capture_default_str();
    hex->add_option("--r", hex_r, "Circle radius")->capture_default_str();
    add_output_flags(hex, cfg);

    std::int64_t n_min = 2, n_max = 10;
    CLI::App* hex_curve =
        app.add_subcommand("hex-curve", "Density as a function of the hexagon ring count");
    hex_curve->add_option("--n-min", n_min, "First ring count")->capture_default_str();
    hex_curve->add_option("--n-max", n_max, "Last ring count")->capture_default_str();
    add_output_flags(hex_curve, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*square_a) return run_square(cp::square::Mode::a, side, count, cfg);
        if (*square_b) return run_square(cp::square::Mode::b, side, count, cfg);
        if (*sector) return run_sector(radius, angle_deg, count, cfg);
        if (*lens) return run_lens(radius, count, cfg);
        if (*lune) return run_lune(lune_R, lune_a, lune_b, minor_count, major_count, cfg);
        if (*hex) return run_hex(hex_n, hex_r, cfg);
        if (*hex_curve) return run_hex_curve(n_min, n_max, cfg);
    } catch (const cp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
