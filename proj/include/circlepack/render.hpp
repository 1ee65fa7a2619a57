#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "circlepack/hexpack.hpp"
#include "circlepack/lune.hpp"
#include "circlepack/sector.hpp"
#include "circlepack/square.hpp"
#include "circlepack/types.hpp"

namespace circlepack::render {

// Locale-independent decimal rendering: shortest round-trip form at
// precision >= 17, otherwise general form with that many significant digits.
std::string format_double(double v, int precision);

// ---- CSV ----

// Plain chains: header index,radius,cx,cy with an extra theta_deg column for
// sector packings.
std::string csv_chain(const PackingSequence& seq, int precision, bool with_theta);
// Mode-b square chain: trailing closed_form column for the direct-formula
// cross-check.
std::string csv_square_b(const PackingSequence& seq, double side, int precision);
// Both lune chains with a trailing chain column (minor|major).
std::string csv_lune(const PackingSequence& minor, const PackingSequence& major,
                     int precision);
std::string csv_hex(const hexpack::Spec& spec, const hexpack::Metrics& m, int precision);
std::string csv_hex_curve(const std::vector<std::pair<std::int64_t, double>>& rows,
                          int precision);

// ---- JSON ----

std::string json_square(const PackingSequence& seq, const square::Spec& spec, int precision);
std::string json_sector(const PackingSequence& seq, const sector::Spec& spec, int precision);
std::string json_lens(const PackingSequence& seq, double radius, int precision);
std::string json_lune(const lune::PackResult& result, const lune::Spec& spec, int precision);
std::string json_hex(const hexpack::Spec& spec, const hexpack::Metrics& m, int precision);
std::string json_hex_curve(const std::vector<std::pair<std::int64_t, double>>& rows,
                           int precision);

// ---- SVG ----
// Region boundary stroked, packed circles filled translucently; viewBox is
// the region bounding box plus a 2% margin, stroke width 0.2% of the major
// dimension. Output is byte-deterministic for identical inputs.

std::string svg_square(const PackingSequence& seq, const square::Spec& spec);
std::string svg_sector(const PackingSequence& seq, const sector::Spec& spec);
std::string svg_lens(const PackingSequence& seq, double radius);
std::string svg_lune(const lune::PackResult& result, const lune::Spec& spec);
std::string svg_hex(const hexpack::Spec& spec, const hexpack::Metrics& m);

}  // namespace circlepack::render
