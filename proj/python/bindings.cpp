// Python bindings for the circle-packing library. Submodules mirror the C++
// namespaces; library errors surface as ValueError (invalid input) or
// RuntimeError (everything else).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "circlepack/errors.hpp"
#include "circlepack/geometry.hpp"
#include "circlepack/hexpack.hpp"
#include "circlepack/lens.hpp"
#include "circlepack/lune.hpp"
#include "circlepack/render.hpp"
#include "circlepack/sector.hpp"
#include "circlepack/soddy.hpp"
#include "circlepack/square.hpp"
#include "circlepack/types.hpp"

namespace py = pybind11;
namespace cp = circlepack;

PYBIND11_MODULE(circlepack, m) {
    m.doc() = "Chains of tangent circles packed in arc-bounded plane regions";

    // Registration order matters: the translator registered last runs first,
    // so InvalidInput (and its subclasses) take precedence over plain Error.
    py::register_exception<cp::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<cp::InvalidInput>(m, "InvalidInput", PyExc_ValueError);

    py::class_<cp::Point>(m, "Point")
        .def(py::init<>())
        .def(py::init([](double x, double y) { return cp::Point{x, y}; }), py::arg("x"),
             py::arg("y"))
        .def_readwrite("x", &cp::Point::x)
        .def_readwrite("y", &cp::Point::y)
        .def("__repr__", [](const cp::Point& p) {
            std::ostringstream out;
            out << "Point(" << p.x << ", " << p.y << ")";
            return out.str();
        });

    py::class_<cp::PlacedCircle>(m, "PlacedCircle")
        .def(py::init<>())
        .def(py::init([](cp::Point center, double radius) {
                 return cp::PlacedCircle{center, radius};
             }),
             py::arg("center"), py::arg("radius"))
        .def_readwrite("center", &cp::PlacedCircle::center)
        .def_readwrite("radius", &cp::PlacedCircle::radius);

    py::class_<cp::Line>(m, "Line")
        .def(py::init([](cp::Point point, cp::Point direction) {
                 return cp::Line{point, direction};
             }),
             py::arg("point"), py::arg("direction"))
        .def_readwrite("point", &cp::Line::point)
        .def_readwrite("direction", &cp::Line::direction);

    py::enum_<cp::Tangency>(m, "Tangency")
        .value("external", cp::Tangency::external)
        .value("internal", cp::Tangency::internal);

    py::enum_<cp::Branch>(m, "Branch")
        .value("upper", cp::Branch::upper)
        .value("lower", cp::Branch::lower);

    py::class_<cp::PackedCircle>(m, "PackedCircle")
        .def_readonly("index", &cp::PackedCircle::index)
        .def_readonly("radius", &cp::PackedCircle::radius)
        .def_readonly("center", &cp::PackedCircle::center)
        .def_readonly("center_known", &cp::PackedCircle::center_known)
        .def_readonly("subtended_angle", &cp::PackedCircle::subtended_angle);

    py::class_<cp::PackingSequence>(m, "PackingSequence")
        .def_readonly("circles", &cp::PackingSequence::circles)
        .def_readonly("truncated", &cp::PackingSequence::truncated)
        .def_readonly("degenerate", &cp::PackingSequence::degenerate)
        .def("__len__", [](const cp::PackingSequence& s) { return s.circles.size(); });

    py::class_<cp::ResidualEntry>(m, "ResidualEntry")
        .def_readonly("index", &cp::ResidualEntry::index)
        .def_property_readonly(
            "constraint", [](const cp::ResidualEntry& e) { return std::string(e.constraint); })
        .def_readonly("residual", &cp::ResidualEntry::residual);

    py::class_<cp::VerificationReport>(m, "VerificationReport")
        .def_readonly("residuals", &cp::VerificationReport::residuals)
        .def_readonly("max_residual", &cp::VerificationReport::max_residual)
        .def_readonly("tolerance", &cp::VerificationReport::tolerance)
        .def_property_readonly("passed",
                               [](const cp::VerificationReport& r) { return r.pass; })
        .def("worst", [](const cp::VerificationReport& r) -> std::optional<cp::ResidualEntry> {
            const cp::ResidualEntry* w = r.worst();
            if (!w) return std::nullopt;
            return *w;
        });

    // ---- soddy ----
    py::module_ soddy = m.def_submodule("soddy", "Tangent-circle radius algebra");
    py::class_<cp::soddy::InscribedPair>(soddy, "InscribedPair")
        .def_readonly("c_min", &cp::soddy::InscribedPair::c_min)
        .def_readonly("c_max", &cp::soddy::InscribedPair::c_max)
        .def_readonly("degenerate", &cp::soddy::InscribedPair::degenerate);
    soddy.def("circumscribing_radius", &cp::soddy::circumscribing_radius, py::arg("a"),
              py::arg("b"), py::arg("c"));
    soddy.def("third_inscribed_radii", &cp::soddy::third_inscribed_radii, py::arg("a"),
              py::arg("b"), py::arg("R"));
    soddy.def("inner_tangent_radius", &cp::soddy::inner_tangent_radius, py::arg("a"),
              py::arg("b"), py::arg("c"));
    soddy.def("inner_tangent_radius_with_line", &cp::soddy::inner_tangent_radius_with_line,
              py::arg("a"), py::arg("b"));

    // ---- geometry ----
    py::module_ geom = m.def_submodule("geom", "Placement and residual primitives");
    py::class_<cp::geom::TangentConstraint>(geom, "TangentConstraint")
        .def(py::init([](cp::PlacedCircle circle, cp::Tangency kind) {
                 return cp::geom::TangentConstraint{circle, kind};
             }),
             py::arg("circle"), py::arg("kind"))
        .def_readwrite("circle", &cp::geom::TangentConstraint::circle)
        .def_readwrite("kind", &cp::geom::TangentConstraint::kind);
    geom.def("place_tangent_circle", &cp::geom::place_tangent_circle, py::arg("c1"),
             py::arg("c2"), py::arg("r_new"), py::arg("tangency1"), py::arg("tangency2"),
             py::arg("branch"));
    geom.def("tangency_residual", &cp::geom::tangency_residual, py::arg("c1"), py::arg("c2"),
             py::arg("kind"));
    geom.def("line_tangency_residual", &cp::geom::line_tangency_residual, py::arg("circle"),
             py::arg("line"));
    geom.def("bisect_tangent_radius", &cp::geom::bisect_tangent_radius, py::arg("fixed"),
             py::arg("line") = std::nullopt, py::arg("bracket") = std::nullopt);

    // ---- square ----
    py::module_ square = m.def_submodule("square", "Chains in the square arc regions");
    py::enum_<cp::square::Mode>(square, "Mode")
        .value("a", cp::square::Mode::a)
        .value("b", cp::square::Mode::b);
    py::class_<cp::square::Spec>(square, "Spec")
        .def(py::init([](double side, cp::square::Mode mode, int count) {
                 return cp::square::Spec{side, mode, count};
             }),
             py::arg("side") = 1.0, py::arg("mode") = cp::square::Mode::a,
             py::arg("count") = 1)
        .def_readwrite("side", &cp::square::Spec::side)
        .def_readwrite("mode", &cp::square::Spec::mode)
        .def_readwrite("count", &cp::square::Spec::count);
    square.def("first_radius_mode_a", &cp::square::first_radius_mode_a, py::arg("x"));
    square.def("first_center_mode_a", &cp::square::first_center_mode_a, py::arg("x"));
    square.def("recurrence_step", &cp::square::recurrence_step, py::arg("r"), py::arg("x"));
    square.def("first_radius_mode_b", &cp::square::first_radius_mode_b, py::arg("x"));
    square.def("first_center_mode_b", &cp::square::first_center_mode_b, py::arg("x"));
    square.def("closed_form_mode_b", &cp::square::closed_form_mode_b, py::arg("n"),
               py::arg("x"));
    square.def("pack", &cp::square::pack, py::arg("spec"));
    square.def("verify", &cp::square::verify, py::arg("seq"), py::arg("spec"),
               py::arg("rel_tol") = 1e-9);

    // ---- sector ----
    py::module_ sector = m.def_submodule("sector", "Chains in circular sectors");
    py::class_<cp::sector::Spec>(sector, "Spec")
        .def(py::init([](double radius, double central_angle, int count) {
                 return cp::sector::Spec{radius, central_angle, count};
             }),
             py::arg("radius") = 1.0, py::arg("central_angle") = 0.0, py::arg("count") = 1)
        .def_readwrite("radius", &cp::sector::Spec::radius)
        .def_readwrite("central_angle", &cp::sector::Spec::central_angle)
        .def_readwrite("count", &cp::sector::Spec::count);
    py::class_<cp::sector::StepResult>(sector, "StepResult")
        .def_readonly("radius", &cp::sector::StepResult::radius)
        .def_readonly("angle", &cp::sector::StepResult::angle);
    sector.def("first_radius", &cp::sector::first_radius, py::arg("spec"));
    sector.def("next_radius", &cp::sector::next_radius, py::arg("theta"), py::arg("R"));
    sector.def("step", &cp::sector::step, py::arg("theta"), py::arg("R"));
    sector.def("next_radius_outer", &cp::sector::next_radius_outer, py::arg("theta"),
               py::arg("R"));
    sector.def("pack", &cp::sector::pack, py::arg("spec"));
    sector.def("verify", &cp::sector::verify, py::arg("seq"), py::arg("spec"),
               py::arg("rel_tol") = 1e-9);

    // ---- lens ----
    py::module_ lens = m.def_submodule("lens", "Chain above two tangent identical circles");
    py::class_<cp::lens::Spec>(lens, "Spec")
        .def(py::init([](double radius, int count) {
                 return cp::lens::Spec{radius, count};
             }),
             py::arg("radius") = 1.0, py::arg("count") = 1)
        .def_readwrite("radius", &cp::lens::Spec::radius)
        .def_readwrite("count", &cp::lens::Spec::count);
    lens.def("closed_form", &cp::lens::closed_form, py::arg("n"), py::arg("R"));
    lens.def("pack", &cp::lens::pack, py::arg("spec"));
    lens.def("verify", &cp::lens::verify, py::arg("seq"), py::arg("spec"),
             py::arg("rel_tol") = 1e-9);

    // ---- lune ----
    py::module_ lune = m.def_submodule("lune", "Minor/major chains between nested circles");
    py::enum_<cp::lune::Phase>(lune, "Phase")
        .value("ascending", cp::lune::Phase::ascending)
        .value("at_max", cp::lune::Phase::at_max)
        .value("descending", cp::lune::Phase::descending);
    py::enum_<cp::lune::Resonance>(lune, "Resonance")
        .value("Resonant", cp::lune::Resonance::Resonant)
        .value("NonResonant", cp::lune::Resonance::NonResonant);
    py::class_<cp::lune::Spec>(lune, "Spec")
        .def(py::init([](double R, double a, double b, int minor_count, int major_count) {
                 return cp::lune::Spec{R, a, b, minor_count, major_count};
             }),
             py::arg("R") = 1.0, py::arg("a") = 0.0, py::arg("b") = 0.0,
             py::arg("minor_count") = 0, py::arg("major_count") = 0)
        .def_readwrite("R", &cp::lune::Spec::R)
        .def_readwrite("a", &cp::lune::Spec::a)
        .def_readwrite("b", &cp::lune::Spec::b)
        .def_readwrite("minor_count", &cp::lune::Spec::minor_count)
        .def_readwrite("major_count", &cp::lune::Spec::major_count);
    py::class_<cp::lune::MajorChainState>(lune, "MajorChainState")
        .def_readonly("phase", &cp::lune::MajorChainState::phase)
        .def_readonly("r_max", &cp::lune::MajorChainState::r_max);
    py::class_<cp::lune::PackResult>(lune, "PackResult")
        .def_readonly("minor", &cp::lune::PackResult::minor)
        .def_readonly("major", &cp::lune::PackResult::major)
        .def_readonly("major_state", &cp::lune::PackResult::major_state);
    lune.def("seed_center", &cp::lune::seed_center, py::arg("a"), py::arg("b"), py::arg("R"));
    lune.def("minor_step", &cp::lune::minor_step, py::arg("r"), py::arg("b"), py::arg("R"));
    lune.def("major_step", &cp::lune::major_step, py::arg("r"), py::arg("b"), py::arg("R"));
    lune.def("max_major_radius", &cp::lune::max_major_radius, py::arg("b"), py::arg("R"));
    lune.def("classify_resonance", &cp::lune::classify_resonance, py::arg("r"), py::arg("b"),
             py::arg("R"));
    lune.def("pack_lune", &cp::lune::pack_lune, py::arg("spec"));
    lune.def("verify", &cp::lune::verify, py::arg("result"), py::arg("spec"),
             py::arg("rel_tol") = 1e-9);

    // ---- hexpack ----
    py::module_ hexpack = m.def_submodule("hexpack", "Identical circles in a regular hexagon");
    py::class_<cp::hexpack::Spec>(hexpack, "Spec")
        .def(py::init([](std::int64_t n, double r) {
                 return cp::hexpack::Spec{n, r};
             }),
             py::arg("n") = 2, py::arg("r") = 1.0)
        .def_readwrite("n", &cp::hexpack::Spec::n)
        .def_readwrite("r", &cp::hexpack::Spec::r);
    py::class_<cp::hexpack::Metrics>(hexpack, "Metrics")
        .def_readonly("count", &cp::hexpack::Metrics::count)
        .def_readonly("voids", &cp::hexpack::Metrics::voids)
        .def_readonly("side", &cp::hexpack::Metrics::side)
        .def_readonly("circumradius", &cp::hexpack::Metrics::circumradius)
        .def_readonly("string_length", &cp::hexpack::Metrics::string_length)
        .def_readonly("density", &cp::hexpack::Metrics::density);
    hexpack.def("metrics", &cp::hexpack::metrics, py::arg("spec"));
    hexpack.def("density", &cp::hexpack::density, py::arg("n"));
    hexpack.def("density_curve", &cp::hexpack::density_curve, py::arg("n_min"),
                py::arg("n_max"));
    hexpack.def("density_limit", &cp::hexpack::density_limit);

    // ---- render ----
    py::module_ render = m.def_submodule("render", "CSV/JSON/SVG emitters");
    render.def("format_double", &cp::render::format_double, py::arg("value"),
               py::arg("precision") = 17);
    render.def("csv_chain", &cp::render::csv_chain, py::arg("seq"), py::arg("precision") = 17,
               py::arg("with_theta") = false);
    render.def("json_square", &cp::render::json_square, py::arg("seq"), py::arg("spec"),
               py::arg("precision") = 17);
    render.def("json_sector", &cp::render::json_sector, py::arg("seq"), py::arg("spec"),
               py::arg("precision") = 17);
    render.def("json_lens", &cp::render::json_lens, py::arg("seq"), py::arg("radius"),
               py::arg("precision") = 17);
    render.def("json_lune", &cp::render::json_lune, py::arg("result"), py::arg("spec"),
               py::arg("precision") = 17);
    render.def("json_hex", &cp::render::json_hex, py::arg("spec"), py::arg("metrics"),
               py::arg("precision") = 17);
    render.def("svg_square", &cp::render::svg_square, py::arg("seq"), py::arg("spec"));
    render.def("svg_sector", &cp::render::svg_sector, py::arg("seq"), py::arg("spec"));
    render.def("svg_lens", &cp::render::svg_lens, py::arg("seq"), py::arg("radius"));
    render.def("svg_lune", &cp::render::svg_lune, py::arg("result"), py::arg("spec"));
    render.def("svg_hex", &cp::render::svg_hex, py::arg("spec"), py::arg("metrics"));
}
