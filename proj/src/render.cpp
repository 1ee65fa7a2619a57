#include "circlepack/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "circlepack/errors.hpp"
#include "circlepack/lune.hpp"

namespace circlepack::render {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

std::string fmt_int(std::int64_t v) { return std::to_string(v); }

}  // namespace

std::string format_double(double v, int precision) {
    if (precision < 4 || precision > 17)
        throw InvalidInput("render: precision must lie in [4, 17]");
    char buf[64];
    std::to_chars_result res =
        precision >= 17
            ? std::to_chars(buf, buf + sizeof buf, v)
            : std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

// ---- CSV ----

namespace {

void csv_circle_row(std::ostringstream& out, const PackedCircle& c, int precision) {
    out << c.index << ',' << format_double(c.radius, precision) << ','
        << format_double(c.center.x, precision) << ','
        << format_double(c.center.y, precision);
}

}  // namespace

std::string csv_chain(const PackingSequence& seq, int precision, bool with_theta) {
    std::ostringstream out;
    out << (with_theta ? "index,radius,cx,cy,theta_deg" : "index,radius,cx,cy") << '\n';
    for (const PackedCircle& c : seq.circles) {
        csv_circle_row(out, c, precision);
        if (with_theta) out << ',' << format_double(c.subtended_angle * kRadToDeg, precision);
        out << '\n';
    }
    return out.str();
}

std::string csv_square_b(const PackingSequence& seq, double side, int precision) {
    std::ostringstream out;
    out << "index,radius,cx,cy,closed_form\n";
    for (const PackedCircle& c : seq.circles) {
        csv_circle_row(out, c, precision);
        out << ',' << format_double(square::closed_form_mode_b(c.index, side), precision)
            << '\n';
    }
    return out.str();
}

std::string csv_lune(const PackingSequence& minor, const PackingSequence& major,
                     int precision) {
    std::ostringstream out;
    out << "index,radius,cx,cy,chain\n";
    for (const PackedCircle& c : minor.circles) {
        csv_circle_row(out, c, precision);
        out << ",minor\n";
    }
    for (const PackedCircle& c : major.circles) {
        csv_circle_row(out, c, precision);
        out << ",major\n";
    }
    return out.str();
}

std::string csv_hex(const hexpack::Spec& spec, const hexpack::Metrics& m, int precision) {
    std::ostringstream out;
    out << "n,r,N,Nv,side,R,L,density\n";
    out << fmt_int(spec.n) << ',' << format_double(spec.r, precision) << ','
        << fmt_int(m.count) << ',' << fmt_int(m.voids) << ','
        << format_double(m.side, precision) << ','
        << format_double(m.circumradius, precision) << ','
        << format_double(m.string_length, precision) << ','
        << format_double(m.density, precision) << '\n';
    return out.str();
}

std::string csv_hex_curve(const std::vector<std::pair<std::int64_t, double>>& rows,
                          int precision) {
    std::ostringstream out;
    out << "n,density\n";
    for (const auto& [n, rho] : rows)
        out << fmt_int(n) << ',' << format_double(rho, precision) << '\n';
    return out.str();
}

// ---- JSON ----

namespace {

void json_circle(std::ostringstream& out, const PackedCircle& c, int precision) {
    out << "{\"index\":" << c.index << ",\"radius\":" << format_double(c.radius, precision)
        << ",\"cx\":" << format_double(c.center.x, precision)
        << ",\"cy\":" << format_double(c.center.y, precision);
}

void json_circle_array(std::ostringstream& out, const PackingSequence& seq, int precision) {
    out << '[';
    for (size_t i = 0; i < seq.circles.size(); ++i) {
        if (i) out << ',';
        json_circle(out, seq.circles[i], precision);
        out << '}';
    }
    out << ']';
}

const char* bool_str(bool v) { return v ? "true" : "false"; }

}  // namespace

std::string json_square(const PackingSequence& seq, const square::Spec& spec, int precision) {
    std::ostringstream out;
    bool mode_b = spec.mode == square::Mode::b;
    out << "{\"region\":\"" << (mode_b ? "square-b" : "square-a") << "\",\"side\":"
        << format_double(spec.side, precision) << ",\"count\":" << seq.circles.size()
        << ",\"circles\":[";
    for (size_t i = 0; i < seq.circles.size(); ++i) {
        if (i) out << ',';
        json_circle(out, seq.circles[i], precision);
        if (mode_b)
            out << ",\"closed_form\":"
                << format_double(square::closed_form_mode_b(seq.circles[i].index, spec.side),
                                 precision);
        out << '}';
    }
    out << "]}";
    return out.str();
}

std::string json_sector(const PackingSequence& seq, const sector::Spec& spec, int precision) {
    std::ostringstream out;
    out << "{\"region\":\"sector\",\"radius\":" << format_double(spec.radius, precision)
        << ",\"angle_deg\":" << format_double(spec.central_angle * kRadToDeg, precision)
        << ",\"count\":" << seq.circles.size()
        << ",\"truncated\":" << bool_str(seq.truncated) << ",\"circles\":[";
    for (size_t i = 0; i < seq.circles.size(); ++i) {
        if (i) out << ',';
        json_circle(out, seq.circles[i], precision);
        out << ",\"theta_deg\":"
            << format_double(seq.circles[i].subtended_angle * kRadToDeg, precision) << '}';
    }
    out << "]}";
    return out.str();
}

std::string json_lens(const PackingSequence& seq, double radius, int precision) {
    std::ostringstream out;
    out << "{\"region\":\"lens\",\"radius\":" << format_double(radius, precision)
        << ",\"count\":" << seq.circles.size() << ",\"circles\":";
    json_circle_array(out, seq, precision);
    out << '}';
    return out.str();
}

namespace {

const char* phase_str(lune::Phase p) {
    switch (p) {
        case lune::Phase::ascending: return "ascending";
        case lune::Phase::at_max: return "at_max";
        default: return "descending";
    }
}

}  // namespace

std::string json_lune(const lune::PackResult& result, const lune::Spec& spec, int precision) {
    std::ostringstream out;
    lune::Resonance res = lune::classify_resonance(spec.a, spec.b, spec.R);
    out << "{\"region\":\"lune\",\"R\":" << format_double(spec.R, precision)
        << ",\"a\":" << format_double(spec.a, precision)
        << ",\"b\":" << format_double(spec.b, precision)
        << ",\"r_max\":" << format_double(result.major_state.r_max, precision)
        << ",\"resonance\":\""
        << (res == lune::Resonance::NonResonant ? "non_resonant" : "resonant")
        << "\",\"final_phase\":\"" << phase_str(result.major_state.phase)
        << "\",\"degenerate\":" << bool_str(result.minor.degenerate) << ",\"minor\":";
    json_circle_array(out, result.minor, precision);
    out << ",\"major\":";
    json_circle_array(out, result.major, precision);
    out << '}';
    return out.str();
}

std::string json_hex(const hexpack::Spec& spec, const hexpack::Metrics& m, int precision) {
    std::ostringstream out;
    out << "{\"region\":\"hex\",\"n\":" << fmt_int(spec.n)
        << ",\"r\":" << format_double(spec.r, precision) << ",\"N\":" << fmt_int(m.count)
        << ",\"Nv\":" << fmt_int(m.voids) << ",\"side\":" << format_double(m.side, precision)
        << ",\"R\":" << format_double(m.circumradius, precision)
        << ",\"L\":" << format_double(m.string_length, precision)
        << ",\"density\":" << format_double(m.density, precision) << '}';
    return out.str();
}

std::string json_hex_curve(const std::vector<std::pair<std::int64_t, double>>& rows,
                           int precision) {
    std::ostringstream out;
    out << "{\"region\":\"hex-curve\",\"points\":[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ',';
        out << "{\"n\":" << fmt_int(rows[i].first)
            << ",\"density\":" << format_double(rows[i].second, precision) << '}';
    }
    out << "]}";
    return out.str();
}

// ---- SVG ----

namespace {

// Emits math-frame coordinates inside a y-flipped group, so arc sweep flag 1
// traverses counterclockwise in the math frame.
class Svg {
public:
    Svg(double minx, double miny, double maxx, double maxy)
        : minx_(minx), miny_(miny), maxx_(maxx), maxy_(maxy),
          stroke_(0.002 * std::max(maxx - minx, maxy - miny)) {}

    std::string num(double v) const { return format_double(v, 17); }

    void boundary_path(const std::string& d) {
        body_ << "<path d=\"" << d << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\""
              << num(stroke_) << "\"/>\n";
    }

    void boundary_circle(Point c, double r) {
        body_ << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r)
              << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"" << num(stroke_)
              << "\"/>\n";
    }

    void boundary_segment(Point a, Point b) {
        body_ << "<line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x)
              << "\" y2=\"" << num(b.y) << "\" stroke=\"#444444\" stroke-width=\""
              << num(stroke_) << "\"/>\n";
    }

    void packed_circle(Point c, double r) {
        body_ << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"" << num(r)
              << "\" fill=\"#3b82f6\" fill-opacity=\"0.3\" stroke=\"#1d4ed8\" stroke-width=\""
              << num(stroke_) << "\"/>\n";
    }

    void packed_sequence(const PackingSequence& seq) {
        for (const PackedCircle& c : seq.circles) packed_circle(c.center, c.radius);
    }

    std::string finish() const {
        double margin = 0.02 * std::max(maxx_ - minx_, maxy_ - miny_);
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(minx_ - margin)
            << ' ' << num(-(maxy_ + margin)) << ' ' << num(maxx_ - minx_ + 2.0 * margin) << ' '
            << num(maxy_ - miny_ + 2.0 * margin) << "\">\n<g transform=\"scale(1,-1)\">\n"
            << body_.str() << "</g>\n</svg>\n";
        return out.str();
    }

private:
    double minx_, miny_, maxx_, maxy_;
    double stroke_;
    std::ostringstream body_;
};

}  // namespace

std::string svg_square(const PackingSequence& seq, const square::Spec& spec) {
    double x = spec.side;
    Svg svg(0.0, 0.0, x, x);
    std::string xs = svg.num(x), hs = svg.num(x / 2.0);
    svg.boundary_path("M 0 0 H " + xs + " V " + xs + " H 0 Z");
    // Semicircle on the bottom side, bulging up (clockwise in the math frame).
    svg.boundary_path("M 0 0 A " + hs + ' ' + hs + " 0 0 0 " + xs + " 0");
    if (spec.mode == square::Mode::b) {
        // Semicircle on the left side, bulging right (counterclockwise).
        svg.boundary_path("M 0 0 A " + hs + ' ' + hs + " 0 0 1 0 " + xs);
    }
    // Quarter circle centered on the bottom-right vertex.
    svg.boundary_path("M 0 0 A " + xs + ' ' + xs + " 0 0 0 " + xs + ' ' + xs);
    svg.packed_sequence(seq);
    return svg.finish();
}

std::string svg_sector(const PackingSequence& seq, const sector::Spec& spec) {
    double R = spec.radius;
    double theta = spec.central_angle;
    double ax = R * std::cos(theta), ay = R * std::sin(theta);
    double maxy = theta >= std::numbers::pi / 2.0 ? R : ay;
    Svg svg(std::min(0.0, ax), 0.0, R, maxy);
    svg.boundary_path("M 0 0 L " + svg.num(R) + " 0 A " + svg.num(R) + ' ' + svg.num(R) +
                      " 0 0 1 " + svg.num(ax) + ' ' + svg.num(ay) + " Z");
    svg.packed_sequence(seq);
    return svg.finish();
}

std::string svg_lens(const PackingSequence& seq, double radius) {
    double R = radius;
    Svg svg(-2.0 * R, 0.0, 2.0 * R, 2.0 * R);
    svg.boundary_segment({-2.0 * R, 0.0}, {2.0 * R, 0.0});
    svg.boundary_circle({-R, R}, R);
    svg.boundary_circle({R, R}, R);
    svg.packed_sequence(seq);
    return svg.finish();
}

std::string svg_lune(const lune::PackResult& result, const lune::Spec& spec) {
    double R = spec.R;
    Svg svg(-R, -R, R, R);
    svg.boundary_circle({0.0, 0.0}, R);
    svg.boundary_circle({R - spec.b, 0.0}, spec.b);
    svg.boundary_circle(lune::seed_center(spec.a, spec.b, R), spec.a);
    svg.packed_sequence(result.minor);
    svg.packed_sequence(result.major);
    return svg.finish();
}

std::string svg_hex(const hexpack::Spec& spec, const hexpack::Metrics& m) {
    double a = m.side;
    Svg svg(-a, -a, a, a);
    std::ostringstream d;
    for (int k = 0; k < 6; ++k) {
        double ang = k * std::numbers::pi / 3.0;
        d << (k == 0 ? "M " : " L ") << svg.num(a * std::cos(ang)) << ' '
          << svg.num(a * std::sin(ang));
    }
    d << " Z";
    svg.boundary_path(d.str());
    svg.boundary_circle({0.0, 0.0}, m.circumradius);
    (void)spec;
    return svg.finish();
}

}  // namespace circlepack::render
