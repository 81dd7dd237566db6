#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pentaflow/curve.hpp"
#include "pentaflow/errors.hpp"
#include "pentaflow/polygon.hpp"

namespace pentaflow {

/// 17 significant digits: enough for a lossless double round-trip, so golden
/// CSV files are byte-stable.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Polygon CSV: one `x,y` vertex per line, cyclic order, no header.
inline Polygon parse_polygon_csv(std::istream& in, const std::string& origin = "<stream>") {
    std::vector<Point2> verts;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        double x = 0.0, y = 0.0;
        char trailing = '\0';
        const int got = std::sscanf(line.c_str(), " %lf , %lf %c", &x, &y, &trailing);
        if (got < 2 || (got == 3 && trailing != '\r')) {
            throw InvalidInput(origin + ":" + std::to_string(lineno) +
                               ": expected `x,y`, got `" + line + "`");
        }
        verts.push_back({x, y});
    }
    return Polygon(std::move(verts));
}

inline Polygon read_polygon_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open polygon file: " + path.string());
    }
    return parse_polygon_csv(in, path.string());
}

inline std::string polygon_to_csv(const Polygon& poly) {
    std::string out;
    for (const Point2& p : poly.vertices()) {
        out += format_double(p.x);
        out += ',';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

inline void write_polygon_csv(const std::filesystem::path& path, const Polygon& poly) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidInput("cannot write polygon file: " + path.string());
    }
    out << polygon_to_csv(poly);
}

/// Curve config JSON:
///   {"type": "theta_fourier",
///    "terms": [{"amp": r, "freq": int, "phase": r, "kind": "cos"|"sin"}, ...]}
inline ThetaFourierCurve curve_from_json(const nlohmann::json& spec) {
    if (!spec.is_object() || spec.value("type", "") != "theta_fourier") {
        throw InvalidInput("curve config: expected {\"type\": \"theta_fourier\", ...}");
    }
    std::vector<FourierTerm> terms;
    for (const nlohmann::json& t : spec.value("terms", nlohmann::json::array())) {
        FourierTerm term;
        term.amplitude = t.at("amp").get<double>();
        term.frequency = t.at("freq").get<int>();
        term.phase = t.value("phase", 0.0);
        const std::string kind = t.value("kind", "cos");
        if (kind == "cos") {
            term.kind = FourierTerm::Kind::cos;
        } else if (kind == "sin") {
            term.kind = FourierTerm::Kind::sin;
        } else {
            throw InvalidInput("curve config: kind must be \"cos\" or \"sin\", got \"" + kind + "\"");
        }
        terms.push_back(term);
    }
    return ThetaFourierCurve(std::move(terms));
}

inline ThetaFourierCurve load_curve_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open curve config: " + path.string());
    }
    nlohmann::json spec;
    try {
        in >> spec;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("curve config " + path.string() + ": " + e.what());
    }
    return curve_from_json(spec);
}

inline nlohmann::json curve_to_json(const ThetaFourierCurve& curve) {
    nlohmann::json terms = nlohmann::json::array();
    for (const FourierTerm& t : curve.terms()) {
        terms.push_back({{"amp", t.amplitude},
                         {"freq", t.frequency},
                         {"phase", t.phase},
                         {"kind", t.kind == FourierTerm::Kind::cos ? "cos" : "sin"}});
    }
    return {{"type", "theta_fourier"}, {"terms", terms}};
}

} // namespace pentaflow
