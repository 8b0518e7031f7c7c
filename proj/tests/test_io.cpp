#include <doctest.h>

#include <cmath>
#include <sstream>

#include "landau/io.hpp"

using namespace landau;
using landau::io::json;

TEST_CASE("complex literals") {
    using io::parse_complex;
    CHECK(parse_complex("0.3+0.1i") == cplx(0.3, 0.1));
    CHECK(parse_complex("0.3-0.1i") == cplx(0.3, -0.1));
    CHECK(parse_complex(" -2.5 ") == cplx(-2.5, 0));
    CHECK(parse_complex("-2i") == cplx(0, -2));
    CHECK(parse_complex("i") == cplx(0, 1));
    CHECK(parse_complex("-i") == cplx(0, -1));
    CHECK(parse_complex("1-i") == cplx(1, -1));
    CHECK(parse_complex("1e-3+2.5E+1j") == cplx(1e-3, 25));
    CHECK(parse_complex("-1.5e-2-3e2i") == cplx(-1.5e-2, -300));
    for (const char* bad : {"", "abc", "1+2", "1+2k", "0.3+0.1ii", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_complex(bad), Error);
    }
}

TEST_CASE("number formatting round-trips") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) CHECK(std::stod(io::fmt(x)) == x);
    CHECK(io::fmt(std::nan("")) == "nan");
    CHECK(io::fmt(-INFINITY) == "-inf");
}

TEST_CASE("profile documents") {
    auto doc = io::parse_profile(json::parse(R"({"kind": "sinusoidal", "q": 1, "B": 0.5, "kappa": 2,
        "params": {"M0": 1, "omega0": 1.5, "times": [0, 1, 2]}})"));
    CHECK(doc.kind == "sinusoidal");
    CHECK(doc.params.get("B") == 0.5);
    CHECK(doc.params.get("kappa") == 2);
    CHECK(doc.params.get("omega0") == 1.5);
    CHECK(doc.params.array("times").size() == 3);

    CHECK_THROWS_AS(io::parse_profile(json::parse("[1, 2]")), Error);
    CHECK_THROWS_AS(io::parse_profile(json::parse(R"({"q": 1})")), Error);
    CHECK_THROWS_AS(io::parse_profile(json::parse(R"({"kind": "constant", "B": "strong"})")), Error);
    CHECK_THROWS_AS(io::parse_profile(json::parse(R"({"kind": "constant", "params": {"M": {"x": 1}}})")), Error);
    CHECK_THROWS_AS(io::read_profile("/nonexistent/profile.json"), Error);

    auto schema = io::profile_schema();
    CHECK(schema["required"][0] == "kind");
    CHECK(schema["properties"]["kind"]["enum"].size() >= 5);
}

TEST_CASE("report and state serialization") {
    auto r = make_report("demo", 0.5, INFINITY, {{"a", 1.0}});
    json j = io::to_json(r);
    CHECK(j["name"] == "demo");
    CHECK(j["tolerance"] == "inf");
    CHECK(j["passed"] == true);
    CHECK(j["details"][0]["key"] == "a");

    auto s = su2_state(0.5, cplx(0.0, 1.0), 1);
    json js = io::to_json(s);
    CHECK(js["family"] == "su2");
    CHECK(js["cutoff"] == 1);
    CHECK(js["coeffs"].size() == 2);
    for (const auto& c : js["coeffs"]) CHECK(c.size() == 4);
}

TEST_CASE("CSV layout") {
    std::ostringstream out;
    io::write_csv(out, {"t", "rho"}, {{0.0, 1.0}, {0.5, std::nan("")}});
    CHECK(out.str() == "t,rho\n0,1\n0.5,nan\n");
}
