#include <doctest.h>

#include <rquant/serialize.hpp>
#include <rquant/svg.hpp>

#include <sstream>
#include <stdexcept>

using namespace rquant;

namespace {

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t count = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("fifteen-digit float formatting is stable") {
    CHECK(float15(0.5) == "0.5");
    CHECK(float15(1.0 / 54) == "0.0185185185185185");
    CHECK(rounded15(1.0 / 54) == doctest::Approx(1.0 / 54).epsilon(1e-14));
    // Round-tripping the rounded value is a fixed point.
    double v = 0.09259259259259259;
    CHECK(rounded15(rounded15(v)) == rounded15(v));
}

TEST_CASE("flexible rational parsing accepts fractions, decimals, exponents") {
    CHECK(parse_rat_flexible("1/3") == frac(1, 3));
    CHECK(parse_rat_flexible("-5/54") == frac(-5, 54));
    CHECK(parse_rat_flexible("0.5") == frac(1, 2));
    CHECK(parse_rat_flexible("-0.25") == frac(-1, 4));
    CHECK(parse_rat_flexible("1e-9") == rat_pow(frac(1, 10), 9));
    CHECK(parse_rat_flexible("2.5e-3") == frac(1, 400));
    CHECK(parse_rat_flexible("1.5E2") == frac(150, 1));
    CHECK(parse_rat_flexible("10") == frac(10, 1));
    CHECK(parse_rat_flexible("0") == frac(0, 1));
    CHECK_THROWS_AS(parse_rat_flexible(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat_flexible("."), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat_flexible("1e"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat_flexible("1ee4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat_flexible("abc"), std::invalid_argument);
}

TEST_CASE("optimal report JSON carries the documented shape") {
    auto specs = enumerate_optimal_sets(3, 10);
    auto j = optimal_report_json(3, specs);
    CHECK(j["n"] == 3);
    CHECK(j["ell"] == 1);
    CHECK(j["count"] == "1");
    CHECK(j["vn"]["num"] == "1");
    CHECK(j["vn"]["den"] == "54");
    CHECK(j["vn"]["float"].get<double>() == doctest::Approx(1.0 / 54).epsilon(1e-14));
    REQUIRE(j["sets"].size() == 1);
    REQUIRE(j["sets"][0]["points"].size() == 3);

    // Exact strings round-trip through the field parser to the original
    // points.
    auto pts = optimal_set(specs[0]);
    for (size_t i = 0; i < pts.size(); ++i) {
        auto& pj = j["sets"][0]["points"][i];
        CHECK(parse_quad(pj["exact"][0].get<std::string>()) == pts[i].x);
        CHECK(parse_quad(pj["exact"][1].get<std::string>()) == pts[i].y);
        CHECK(pj["float"][0].get<double>() == doctest::Approx(to_double(pts[i].x)).epsilon(1e-14));
    }

    // Spec block reflects the regime machinery.
    auto sj = j["sets"][0]["spec"];
    CHECK(sj["regime"] == "A");
    CHECK(sj["level"] == 1);
    CHECK(sj["J"].is_array());
    CHECK(sj["variants"].is_object());

    // Regime B example with a variant map.
    auto specs2 = enumerate_optimal_sets(2, 10);
    auto j2 = optimal_report_json(2, specs2);
    CHECK(j2["count"] == "3");
    REQUIRE(j2["sets"].size() == 3);
    CHECK(j2["sets"][0]["spec"]["variants"][""] == "topMedian");
    CHECK(j2["sets"][1]["spec"]["variants"][""] == "leftMedian");
    CHECK(j2["sets"][2]["spec"]["variants"][""] == "rightMedian");
}

TEST_CASE("optimal report CSV has the documented header and rows") {
    auto specs = enumerate_optimal_sets(2, 10);
    std::string csv = optimal_report_csv(2, specs);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind("# n=2 ell=0 count=3 vn=5/54", 0) == 0);
    REQUIRE(std::getline(in, line));
    CHECK(line == "set,point,x_exact,y_exact,x_float,y_float");
    size_t rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 6); // three sets of two points
    CHECK(count_occurrences(csv, "√3") > 0);
}

TEST_CASE("error table: exact header, exact fractions in rows") {
    std::string csv = error_table_csv(9);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "n,vn_num,vn_den,vn_float,n2vn_float,dim_est");
    std::vector<std::string> rows;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(line);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].rfind("1,1,6,", 0) == 0);
    CHECK(rows[1].rfind("2,5,54,", 0) == 0);
    CHECK(rows[6].rfind("7,11,1458,", 0) == 0);
    CHECK(rows[8].rfind("9,1,486,", 0) == 0);

    auto j = error_table_json(9);
    REQUIRE(j.size() == 9);
    CHECK(j[3]["vn_num"] == "23");
    CHECK(j[3]["vn_den"] == "1458");
    CHECK(j[3]["n"] == 4);
}

TEST_CASE("coefficient table serializes scan rows verbatim") {
    auto rows = accumulation_scan(frac(3, 2), 5);
    std::string csv = coefficient_table_csv(rows);
    std::istringstream in(csv);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "level,n,scaled_num,scaled_den,scaled_float,gap_float");
    size_t count = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++count;
    CHECK(count == 5);

    auto j = coefficient_table_json(rows);
    REQUIRE(j.size() == 5);
    CHECK(j[1]["n"] == 13);
    CHECK(j[1]["level"] == 2);
    CHECK(j[0]["n"] == 4);
}

TEST_CASE("svg rendering is byte-deterministic and structurally sound") {
    auto pts = optimal_set(canonical_spec(9));
    RenderSpec spec;
    spec.depth = 3;
    std::string a = render_svg(pts, spec);
    std::string b = render_svg(pts, spec);
    CHECK(a == b);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(a, "<circle") == 9);
    // Levels 0..3 outline 1 + 3 + 9 + 27 = 40 triangles.
    CHECK(count_occurrences(a, "<polygon") == 40);
    CHECK(a.find("timestamp") == std::string::npos);

    RenderSpec labeled = spec;
    labeled.show_labels = true;
    std::string c = render_svg(pts, labeled);
    CHECK(count_occurrences(c, "<text") == 9);
    CHECK(c != a);

    RenderSpec bad = spec;
    bad.depth = 9;
    CHECK_THROWS_AS(render_svg(pts, bad), std::invalid_argument);
    bad = spec;
    bad.width_px = 32;
    CHECK_THROWS_AS(render_svg(pts, bad), std::invalid_argument);
    bad = spec;
    bad.point_radius_px = 0;
    CHECK_THROWS_AS(render_svg(pts, bad), std::invalid_argument);

    // Tighter canvases shrink the byte count but keep the structure.
    RenderSpec narrow = spec;
    narrow.width_px = 200;
    std::string d = render_svg(pts, narrow);
    CHECK(count_occurrences(d, "<circle") == 9);
    CHECK(d != a);
}
