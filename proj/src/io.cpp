#include "plurigreen/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "plurigreen/errors.hpp"

namespace plurigreen {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ParseError("malformed complex literal '" + std::string(whole) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    if (text.empty()) throw ParseError("empty complex literal");
    if (text.back() != 'i') return {parse_real(text, text), 0.0};
    const auto body = text.substr(0, text.size() - 1);
    // The sign separating the parts is the last +/- not at the start and not after an exponent marker.
    std::size_t split_at = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    if (split_at == std::string_view::npos) return {0.0, parse_real(body, text)};
    return {parse_real(body.substr(0, split_at), text), parse_real(body.substr(split_at), text)};
}

ComplexPoint parse_point(std::string_view text) {
    std::vector<Complex> coords;
    for (auto part : split(text, ',')) coords.push_back(parse_complex(part));
    return ComplexPoint(std::move(coords));
}

GridRegion parse_region(std::string_view text, double step) {
    const auto parts = split(text, ',');
    if (parts.size() != 6) throw ParseError("region needs c1,c2,w1,w2,w3,w4");
    GridRegion r;
    r.center = ComplexPoint{parse_complex(parts[0]), parse_complex(parts[1])};
    for (int k = 0; k < 4; ++k) r.half_widths[k] = parse_real(parts[k + 2], text);
    r.step = step;
    r.validate();
    return r;
}

PoleConfiguration parse_pole_config(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed pole configuration: ") + e.what());
    }
    try {
        const auto kind = doc.at("domain").get<std::string>();
        const auto n = doc.at("n").get<std::size_t>();
        DomainTag domain;
        if (kind == "bidisc") {
            if (n != 2) throw ParseError("bidisc needs n = 2");
            domain = DomainTag::bidisc();
        } else if (kind == "polydisc") {
            domain = DomainTag::polydisc(n);
        } else if (kind == "ball") {
            domain = DomainTag::unit_ball(n);
        } else {
            throw ParseError("unknown domain '" + kind + "'");
        }
        std::vector<Pole> poles;
        for (const auto& p : doc.at("poles")) {
            ComplexPoint loc = ComplexPoint::zeros(n);
            loc[0] = Complex(p.at("a_re").get<double>(), p.at("a_im").get<double>());
            poles.push_back({std::move(loc), p.at("weight").get<double>()});
        }
        return PoleConfiguration(domain, std::move(poles));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("pole configuration: ") + e.what());
    }
}

PoleConfiguration load_pole_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pole_config(buf.str());
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace plurigreen
