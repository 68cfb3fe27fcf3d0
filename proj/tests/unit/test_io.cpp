#include <doctest.h>

#include <cmath>

#include "plurigreen/errors.hpp"
#include "plurigreen/io.hpp"

using namespace plurigreen;

TEST_CASE("complex literals") {
    CHECK(parse_complex("0.5") == Complex(0.5, 0.0));
    CHECK(parse_complex("-0.5") == Complex(-0.5, 0.0));
    CHECK(parse_complex("0.3+0.2i") == Complex(0.3, 0.2));
    CHECK(parse_complex("-0.3-0.2i") == Complex(-0.3, -0.2));
    CHECK(parse_complex("1e-3-2.5e-2i") == Complex(1e-3, -2.5e-2));
    CHECK(parse_complex("0.25i") == Complex(0.0, 0.25));
    CHECK(parse_complex("+0.1+0i") == Complex(0.1, 0.0));
    for (const char* bad : {"", "i", "0.3+i", "0.3 +0.2i", "abc", "0.3+0.2", "0.3++0.2i", "nan", "inf"}) {
        CHECK_THROWS_AS(parse_complex(bad), ParseError);
    }
}

TEST_CASE("points and regions") {
    CHECK(parse_point("0,0.3") == ComplexPoint{0.0, 0.3});
    CHECK(parse_point("0.1-0.1i,0.2i,0") == ComplexPoint{Complex(0.1, -0.1), Complex(0.0, 0.2), 0.0});
    CHECK_THROWS_AS(parse_point("0,,1"), ParseError);
    const auto r = parse_region("0,0.1i,0.2,0.2,0.3,0.3", 0.1);
    CHECK(r.center == ComplexPoint{0.0, Complex(0.0, 0.1)});
    CHECK(r.half_widths[3] == 0.3);
    CHECK_THROWS_AS(parse_region("0,0,1,1,1", 0.1), ParseError);
    CHECK_THROWS_AS(parse_region("0,0,1,1,1,1", 0.0), InvalidParameter);
}

TEST_CASE("pole configuration files") {
    const auto cfg = parse_pole_config(
        R"({"domain": "bidisc", "n": 2, "poles": [{"a_re": 0.5, "a_im": 0.0, "weight": 2.0},
                                                  {"a_re": -0.5, "a_im": 0.1, "weight": 1.0}]})");
    CHECK(cfg.size() == 2);
    CHECK(cfg.poles()[1].location == ComplexPoint{Complex(-0.5, 0.1), 0.0});
    CHECK(cfg.weights() == std::vector<double>{2.0, 1.0});
    const auto poly = parse_pole_config(R"({"domain": "polydisc", "n": 3, "poles": [{"a_re": 0.2, "a_im": 0, "weight": 1}]})");
    CHECK(poly.domain() == DomainTag::polydisc(3));
    CHECK(poly.poles()[0].location.size() == 3);
    CHECK_THROWS_AS(parse_pole_config("{"), ParseError);
    CHECK_THROWS_AS(parse_pole_config(R"({"domain": "annulus", "n": 2, "poles": []})"), ParseError);
    CHECK_THROWS_AS(parse_pole_config(R"({"domain": "bidisc", "n": 3, "poles": []})"), ParseError);
    CHECK_THROWS_AS(parse_pole_config(R"({"domain": "bidisc", "n": 2, "poles": [{"a_re": 0.5}]})"), ParseError);
    CHECK_THROWS_AS(parse_pole_config(R"({"domain": "bidisc", "n": 2, "poles": [{"a_re": 0.5, "a_im": 0, "weight": -1}]})"),
                    InvalidParameter);
    CHECK_THROWS_AS(parse_pole_config(R"({"domain": "bidisc", "n": 2, "poles": [{"a_re": 1.5, "a_im": 0, "weight": 1}]})"),
                    DomainViolation);
    CHECK_THROWS_AS(load_pole_config("/nonexistent/config.json"), ParseError);
}

TEST_CASE("number formatting") {
    CHECK(format_double(std::log(0.15)) == "-1.8971199848858813");
    CHECK(format_double(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_double(std::nan("")) == "nan");
    CHECK(std::stod(format_double(0.1)) == 0.1);
}
