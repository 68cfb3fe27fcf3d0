#pragma once

#include <string>
#include <string_view>

#include "plurigreen/complex_core.hpp"
#include "plurigreen/green.hpp"
#include "plurigreen/monge_ampere.hpp"

namespace plurigreen {

/// "<real>[+|-]<real>i", a bare "<real>" or a bare "<real>i"; no spaces. Throws ParseError.
Complex parse_complex(std::string_view text);

/// Comma-separated complex literals.
ComplexPoint parse_point(std::string_view text);

/// "c1,c2,w1,w2,w3,w4": two complex centre coordinates and four half-widths.
GridRegion parse_region(std::string_view text, double step);

/// {"domain": "bidisc"|"polydisc"|"ball", "n": int, "poles": [{"a_re", "a_im", "weight"}, ...]}.
/// Poles are placed at (a, 0, ..., 0). Throws ParseError for malformed input and the
/// validation errors of PoleConfiguration otherwise.
PoleConfiguration parse_pole_config(std::string_view json_text);
PoleConfiguration load_pole_config(const std::string& path);

/// %.17g, with "inf", "-inf" and "nan" spelled out.
std::string format_double(double x);

}  // namespace plurigreen
