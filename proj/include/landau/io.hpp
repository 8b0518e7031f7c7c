#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "landau/coherent.hpp"
#include "landau/profiles.hpp"
#include "landau/verify.hpp"

namespace landau::io {

using json = nlohmann::json;

// "a+bi", "a-bi", "a", "bi", "i", "-2.5e-1+1e-3i"; whitespace ignored
std::complex<double> parse_complex(const std::string& text);

// %.17g, with nan/inf spelled as such
std::string fmt(double x);

struct ProfileDocument {
    std::string kind;
    ParamTable params;  // includes q, B, kappa, t0, t1
};

ProfileDocument parse_profile(const json& doc);
ProfileDocument read_profile(const std::string& path);
json profile_schema();

json to_json(const CheckReport& r);
json to_json(const StateVector& s);

// header row then one row per record; every field through fmt
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

} // namespace landau::io
