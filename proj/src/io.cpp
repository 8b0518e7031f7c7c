#include "landau/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "landau/errors.hpp"

namespace landau::io {

namespace {

double parse_real(const std::string& s, const std::string& whole) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size()) fail(Errc::PreconditionViolation, "not a complex literal: '" + whole + "'");
    return v;
}

} // namespace

std::complex<double> parse_complex(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) fail(Errc::PreconditionViolation, "empty complex literal");
    if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
    s.pop_back();
    // split at the last sign that is not a leading sign or an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, parse_real(s, text)};
    return {parse_real(s.substr(0, split), text), parse_real(s.substr(split), text)};
}

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

ProfileDocument parse_profile(const json& doc) {
    if (!doc.is_object()) fail(Errc::PreconditionViolation, "profile document must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        fail(Errc::MissingParameter, "profile document needs a string 'kind'");
    ProfileDocument out;
    out.kind = doc["kind"].get<std::string>();
    for (const char* key : {"q", "B", "kappa", "t0", "t1"}) {
        if (!doc.contains(key)) continue;
        if (!doc[key].is_number()) fail(Errc::PreconditionViolation, std::string("'") + key + "' must be a number");
        out.params.set(key, doc[key].get<double>());
    }
    if (doc.contains("params")) {
        const json& p = doc["params"];
        if (!p.is_object()) fail(Errc::PreconditionViolation, "'params' must be an object");
        for (auto it = p.begin(); it != p.end(); ++it) {
            if (it->is_number())
                out.params.set(it.key(), it->get<double>());
            else if (it->is_array())
                out.params.set(it.key(), it->get<std::vector<double>>());
            else
                fail(Errc::PreconditionViolation, "param '" + it.key() + "' must be a number or an array");
        }
    }
    return out;
}

ProfileDocument read_profile(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::PreconditionViolation, "cannot read profile '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        fail(Errc::PreconditionViolation, "profile '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_profile(doc);
}

json profile_schema() {
    json number = {{"type", "number"}};
    return {
        {"$schema", "https://json-schema.org/draft/2020-12/schema"},
        {"title", "landau-td parameter profile"},
        {"type", "object"},
        {"required", {"kind"}},
        {"properties",
         {{"kind",
           {{"enum", {"constant", "exponential", "exponential-mass", "exponential-frequency", "sinusoidal",
                      "tabulated"}}}},
          {"q", number},
          {"B", number},
          {"kappa", {{"type", "number"}, {"exclusiveMinimum", 0}}},
          {"t0", number},
          {"t1", number},
          {"params",
           {{"type", "object"},
            {"additionalProperties", {{"oneOf", {number, {{"type", "array"}, {"items", number}}}}}}}}}},
    };
}

json to_json(const CheckReport& r) {
    json details = json::array();
    for (const auto& [key, value] : r.details) details.push_back({{"key", key}, {"value", value}});
    return {{"name", r.name},
            {"max_residual", r.max_residual},
            {"tolerance", std::isfinite(r.tolerance) ? json(r.tolerance) : json("inf")},
            {"passed", r.passed},
            {"details", details}};
}

json to_json(const StateVector& s) {
    json coeffs = json::array();
    for (int p = 0; p <= s.cutoff; ++p)
        for (int m = 0; m <= s.cutoff; ++m) {
            std::complex<double> c = s.at(p, m);
            if (c != 0.0) coeffs.push_back({p, m, c.real(), c.imag()});
        }
    return {{"family", s.family},
            {"params", s.params},
            {"cutoff", s.cutoff},
            {"norm_deficit", s.norm_deficit},
            {"coeffs", coeffs}};
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
    for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << fmt(row[k]);
        out << '\n';
    }
}

} // namespace landau::io
