#include "rquant/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace rquant {

std::string float15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

double rounded15(double v) { return std::strtod(float15(v).c_str(), nullptr); }

nlohmann::ordered_json spec_to_json(const OptimalSetSpec& spec) {
    nlohmann::ordered_json j;
    j["n"] = spec.n;
    j["level"] = spec.level;
    j["regime"] = spec.reg == Regime::A ? "A" : (spec.reg == Regime::B ? "B" : "C");
    j["J"] = spec.J;
    nlohmann::ordered_json vars(nlohmann::ordered_json::value_t::object);
    for (const auto& [w, v] : spec.variants) vars[w] = std::string(variant_name(v));
    j["variants"] = std::move(vars);
    return j;
}

nlohmann::ordered_json optimal_report_json(long long n, const std::vector<OptimalSetSpec>& specs) {
    Rat vn = quantization_error(n);
    nlohmann::ordered_json j;
    j["n"] = n;
    j["ell"] = ell(n);
    j["count"] = count_optimal_sets(n).get_str();
    j["vn"] = {{"num", vn.get_num().get_str()},
               {"den", vn.get_den().get_str()},
               {"float", rounded15(to_double(vn))}};
    nlohmann::ordered_json sets(nlohmann::ordered_json::value_t::array);
    for (const OptimalSetSpec& spec : specs) {
        nlohmann::ordered_json entry;
        entry["spec"] = spec_to_json(spec);
        nlohmann::ordered_json pts(nlohmann::ordered_json::value_t::array);
        for (const PointQ& p : optimal_set(spec)) {
            nlohmann::ordered_json pj;
            pj["exact"] = {format_quad(p.x), format_quad(p.y)};
            pj["float"] = {rounded15(to_double(p.x)), rounded15(to_double(p.y))};
            pts.push_back(std::move(pj));
        }
        entry["points"] = std::move(pts);
        sets.push_back(std::move(entry));
    }
    j["sets"] = std::move(sets);
    return j;
}

std::string optimal_report_csv(long long n, const std::vector<OptimalSetSpec>& specs) {
    Rat vn = quantization_error(n);
    std::string out;
    out += "# n=" + std::to_string(n) + " ell=" + std::to_string(ell(n)) +
           " count=" + count_optimal_sets(n).get_str() + " vn=" + to_string(vn) +
           " vn_float=" + float15(to_double(vn)) + "\n";
    out += "set,point,x_exact,y_exact,x_float,y_float\n";
    for (size_t s = 0; s < specs.size(); ++s) {
        std::vector<PointQ> pts = optimal_set(specs[s]);
        for (size_t i = 0; i < pts.size(); ++i) {
            out += std::to_string(s) + "," + std::to_string(i) + "," + format_quad(pts[i].x) +
                   "," + format_quad(pts[i].y) + "," + float15(to_double(pts[i].x)) + "," +
                   float15(to_double(pts[i].y)) + "\n";
        }
    }
    return out;
}

std::string error_table_csv(long long n_max) {
    std::string out = "n,vn_num,vn_den,vn_float,n2vn_float,dim_est\n";
    for (const DimensionRecord& r : dimension_scan(n_max)) {
        out += std::to_string(r.n) + "," + r.vn.get_num().get_str() + "," +
               r.vn.get_den().get_str() + "," + float15(to_double(r.vn)) + "," +
               float15(to_double(r.scaled)) + "," + float15(r.dim_est) + "\n";
    }
    return out;
}

nlohmann::json error_table_json(long long n_max) {
    nlohmann::json rows = nlohmann::json::array();
    for (const DimensionRecord& r : dimension_scan(n_max)) {
        rows.push_back({{"n", r.n},
                        {"vn_num", r.vn.get_num().get_str()},
                        {"vn_den", r.vn.get_den().get_str()},
                        {"vn_float", rounded15(to_double(r.vn))},
                        {"n2vn_float", rounded15(to_double(r.scaled))},
                        {"dim_est", rounded15(r.dim_est)}});
    }
    return rows;
}

std::string coefficient_table_csv(const std::vector<AccumulationRecord>& rows) {
    std::string out = "level,n,scaled_num,scaled_den,scaled_float,gap_float\n";
    for (const AccumulationRecord& r : rows) {
        out += std::to_string(r.level) + "," + std::to_string(r.n) + "," +
               r.scaled.get_num().get_str() + "," + r.scaled.get_den().get_str() + "," +
               float15(to_double(r.scaled)) + "," + float15(to_double(r.gap)) + "\n";
    }
    return out;
}

nlohmann::json coefficient_table_json(const std::vector<AccumulationRecord>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const AccumulationRecord& r : rows) {
        out.push_back({{"level", r.level},
                       {"n", r.n},
                       {"scaled_num", r.scaled.get_num().get_str()},
                       {"scaled_den", r.scaled.get_den().get_str()},
                       {"scaled_float", rounded15(to_double(r.scaled))},
                       {"gap_float", rounded15(to_double(r.gap))}});
    }
    return out;
}

Rat parse_rat_flexible(const std::string& s) {
    if (s.find('/') != std::string::npos) return rat_from_string(s);
    size_t epos = s.find_first_of("eE");
    std::string mantissa = epos == std::string::npos ? s : s.substr(0, epos);
    long exp10 = 0;
    if (epos != std::string::npos) {
        try {
            size_t used = 0;
            exp10 = std::stol(s.substr(epos + 1), &used);
            if (used != s.size() - epos - 1) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("parse_rat_flexible: bad exponent in " + s);
        }
    }
    size_t dot = mantissa.find('.');
    std::string digits = mantissa;
    long frac_digits = 0;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        frac_digits = static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("parse_rat_flexible: malformed number " + s);
    Rat base = rat_from_string(digits);
    return base * rat_pow(Rat(10), exp10 - frac_digits);
}

}  // namespace rquant
