#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "rquant/asymptotics.hpp"
#include "rquant/measure.hpp"
#include "rquant/optimal.hpp"
#include "rquant/oracle.hpp"
#include "rquant/serialize.hpp"
#include "rquant/svg.hpp"

namespace {

using namespace rquant;

constexpr long long kMaxN = 1000000;
constexpr size_t kAllCap = 10000;

int run_optimal(long long n, bool all, long long index, bool index_given,
                const std::string& format) {
    std::vector<OptimalSetSpec> specs;
    if (all) {
        Int count = count_optimal_sets(n);
        if (count > static_cast<long>(kAllCap)) {
            std::cerr << "count overflow: n=" << n << " has " << count.get_str()
                      << " optimal sets; --all is capped at " << kAllCap << "\n";
            return 1;
        }
        specs = enumerate_optimal_sets(n, kAllCap);
    } else if (index_given) {
        if (index < 0) {
            std::cerr << "--index must be nonnegative\n";
            return 1;
        }
        Int count = count_optimal_sets(n);
        if (Int(static_cast<long>(index)) >= count) {
            std::cerr << "index " << index << " out of range: only " << count.get_str()
                      << " optimal sets\n";
            return 1;
        }
        OptimalSetEnumerator en(n);
        for (long long i = 0; i < index; ++i) en.next();
        specs.push_back(*en.next());
    } else {
        specs.push_back(canonical_spec(n));
    }
    if (format == "json") {
        std::cout << optimal_report_json(n, specs).dump(2) << "\n";
    } else {
        std::cout << optimal_report_csv(n, specs);
    }
    return 0;
}

int run_verify(long long n, const std::string& eps_str, int max_depth) {
    Rat eps = parse_rat_flexible(eps_str);
    std::vector<PointQ> points = optimal_set(canonical_spec(n));
    DistortionEnclosure enc = distortion_enclosure(points, eps, max_depth);
    Rat vn = quantization_error(n);

    std::cout << "n = " << n << " (level " << ell(n) << ", "
              << (regime(n) == Regime::A ? "regime A" : regime(n) == Regime::B ? "regime B"
                                                                               : "regime C")
              << ")\n";
    std::cout << "V_n = " << to_string(vn) << " = " << float15(to_double(vn)) << "\n";
    if (enc.exact) {
        std::cout << "enclosure: exact value " << format_quad(*enc.value) << " at depth "
                  << enc.depth_used << "\n";
    } else {
        std::cout << "enclosure: [" << to_string(enc.lo) << ", " << to_string(enc.hi)
                  << "] at depth " << enc.depth_used << " (width "
                  << float15(to_double(Rat(enc.hi - enc.lo))) << ")\n";
    }
    bool ok = enc.exact ? (*enc.value == QuadNum(vn)) : (enc.lo <= vn && vn <= enc.hi);
    if (!ok) {
        std::cout << "result: MISMATCH\n";
        return 2;
    }
    std::cout << (enc.exact ? "result: EXACT MATCH\n" : "result: CONTAINED\n");
    return 0;
}

int run_lloyd(long long n, int restarts, int depth, uint64_t seed, bool general,
              const GeneralIfs& ifs) {
    LloydState best = kmeans_best_of(ifs, static_cast<int>(n), restarts, depth, seed);
    std::cout << "mode: " << (general ? "general" : "standard") << "\n";
    std::cout << "n = " << n << ", restarts = " << restarts << ", depth = " << depth
              << ", seed = " << seed << "\n";
    std::cout << "surrogate distortion = " << float15(best.surrogate) << "\n";
    std::cout << "corrected distortion = " << float15(best.corrected)
              << (best.single_owner ? "" : "  (single ownership NOT certified)") << "\n";
    std::cout << "iterations = " << best.iterations << (best.converged ? " (converged)" : "")
              << "\n";
    if (!general) {
        double vn = to_double(quantization_error(n));
        std::cout << "closed-form V_n = " << float15(vn) << "\n";
        std::cout << "gap = " << float15(best.corrected - vn) << "\n";
    } else {
        std::cout << "best-found distortion (no closed form in general mode)\n";
    }
    for (size_t i = 0; i < best.centers.size(); ++i)
        std::cout << "point " << i << ": " << float15(best.centers[i][0]) << " "
                  << float15(best.centers[i][1]) << "\n";
    return 0;
}

int run_render(long long n, const RenderSpec& spec, const std::string& out_path) {
    std::vector<PointQ> points = optimal_set(canonical_spec(n));
    std::string svg = render_svg(points, spec);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 1;
    }
    out << svg;
    if (!out.good()) {
        std::cerr << "error: write failed for " << out_path << "\n";
        return 1;
    }
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimal quantization of the self-similar R-triangle measure"};
    app.require_subcommand(1);
    std::function<int()> action;

    // optimal
    auto* opt = app.add_subcommand("optimal", "construct optimal n-point sets");
    long long opt_n = 1;
    bool opt_canonical = false, opt_all = false;
    long long opt_index = -1;
    std::string opt_format = "json";
    opt->add_option("--n", opt_n, "number of points")->required()->check(CLI::Range(1LL, kMaxN));
    opt->add_flag("--canonical", opt_canonical, "canonical set only (default)");
    opt->add_flag("--all", opt_all, "every optimal set (count must be <= 10000)");
    auto* opt_index_o = opt->add_option("--index", opt_index, "k-th set in enumeration order");
    opt->add_option("--format", opt_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    opt->callback([&, opt_index_o] {
        bool index_given = opt_index_o->count() > 0;
        if (opt_canonical + opt_all + index_given > 1)
            throw CLI::ValidationError("optimal", "--canonical, --all, --index are exclusive");
        action = [&, index_given] {
            return run_optimal(opt_n, opt_all, opt_index, index_given, opt_format);
        };
    });

    // error-table
    auto* tab = app.add_subcommand("error-table", "exact V_n table with dimension estimates");
    long long tab_nmax = 100;
    std::string tab_format = "csv";
    tab->add_option("--n-max", tab_nmax, "table rows n = 1..n_max")
        ->required()
        ->check(CLI::Range(1LL, kMaxN));
    tab->add_option("--format", tab_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    tab->callback([&] {
        action = [&] {
            if (tab_format == "json")
                std::cout << error_table_json(tab_nmax).dump(2) << "\n";
            else
                std::cout << error_table_csv(tab_nmax);
            return 0;
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "check the canonical set against certified bounds");
    long long ver_n = 1;
    std::string ver_eps = "0";
    int ver_depth = 12;
    ver->add_option("--n", ver_n, "number of points")->required()->check(CLI::Range(1LL, kMaxN));
    ver->add_option("--epsilon", ver_eps, "target enclosure width (rational or decimal)");
    ver->add_option("--max-depth", ver_depth, "subdivision depth limit")
        ->check(CLI::Range(0, 30));
    ver->callback([&] { action = [&] { return run_verify(ver_n, ver_eps, ver_depth); }; });

    // lloyd
    auto* llo = app.add_subcommand("lloyd", "Lloyd search on the atomic surrogate");
    long long llo_n = 1;
    int llo_restarts = 32, llo_depth = 7;
    uint64_t llo_seed = 1;
    std::string r1 = "1/3", r2 = "1/3", r3 = "1/3", p1 = "1/3", p2 = "1/3", p3 = "1/3";
    std::string family = "S";
    llo->add_option("--n", llo_n, "number of centers")->required()->check(CLI::Range(1LL, 4096LL));
    llo->add_option("--restarts", llo_restarts, "random restarts")->check(CLI::Range(1, 100000));
    llo->add_option("--depth", llo_depth, "surrogate depth (3^depth atoms)")
        ->check(CLI::Range(0, 12));
    llo->add_option("--seed", llo_seed, "RNG seed");
    auto* fr1 = llo->add_option("--r1", r1, "contraction ratio of map 1 (general mode)");
    auto* fr2 = llo->add_option("--r2", r2, "contraction ratio of map 2");
    auto* fr3 = llo->add_option("--r3", r3, "contraction ratio of map 3");
    auto* fp1 = llo->add_option("--p1", p1, "probability of map 1");
    auto* fp2 = llo->add_option("--p2", p2, "probability of map 2");
    auto* fp3 = llo->add_option("--p3", p3, "probability of map 3");
    auto* ffam = llo->add_option("--family", family, "vertex frame: S or T")
                     ->check(CLI::IsMember({"S", "T"}));
    llo->callback([&, fr1, fr2, fr3, fp1, fp2, fp3, ffam] {
        bool general = fr1->count() || fr2->count() || fr3->count() || fp1->count() ||
                       fp2->count() || fp3->count() || ffam->count();
        action = [&, general] {
            GeneralIfs ifs =
                general ? make_ifs({parse_rat_flexible(r1), parse_rat_flexible(r2),
                                    parse_rat_flexible(r3)},
                                   {parse_rat_flexible(p1), parse_rat_flexible(p2),
                                    parse_rat_flexible(p3)},
                                   family == "T" ? Family::T : Family::S)
                        : standard_ifs();
            return run_lloyd(llo_n, llo_restarts, llo_depth, llo_seed, general, ifs);
        };
    });

    // asymptotics
    auto* asy = app.add_subcommand("asymptotics", "dimension and coefficient scans");
    asy->require_subcommand(1);
    auto* dim = asy->add_subcommand("dimension", "V_n scan with dimension estimates");
    long long dim_nmax = 100;
    std::string dim_format = "csv";
    dim->add_option("--n-max", dim_nmax, "scan n = 1..n_max")
        ->required()
        ->check(CLI::Range(1LL, kMaxN));
    dim->add_option("--format", dim_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    dim->callback([&] {
        action = [&] {
            if (dim_format == "json")
                std::cout << error_table_json(dim_nmax).dump(2) << "\n";
            else
                std::cout << error_table_csv(dim_nmax);
            return 0;
        };
    });
    auto* coe = asy->add_subcommand("coefficient", "scaled errors along n = floor(x 3^l)");
    std::string coe_x = "1";
    int coe_levels = 8;
    std::string coe_format = "csv";
    coe->add_option("--x", coe_x, "x in [1, 2], rational or decimal")->required();
    coe->add_option("--levels", coe_levels, "levels l = 1..levels")->check(CLI::Range(1, 24));
    coe->add_option("--format", coe_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    coe->callback([&] {
        action = [&] {
            auto rows = accumulation_scan(parse_rat_flexible(coe_x), coe_levels);
            if (coe_format == "json")
                std::cout << coefficient_table_json(rows).dump(2) << "\n";
            else
                std::cout << coefficient_table_csv(rows);
            return 0;
        };
    });

    // render
    auto* ren = app.add_subcommand("render", "SVG of the subdivision and the canonical set");
    long long ren_n = 1;
    RenderSpec ren_spec;
    std::string ren_out = "out.svg";
    ren->add_option("--n", ren_n, "number of points")->required()->check(CLI::Range(1LL, kMaxN));
    ren->add_option("--depth", ren_spec.depth, "triangle outline depth")->check(CLI::Range(0, 8));
    ren->add_option("--width-px", ren_spec.width_px, "image width in pixels")
        ->check(CLI::Range(64, 8192));
    ren->add_option("--point-radius-px", ren_spec.point_radius_px, "point marker radius")
        ->check(CLI::Range(1, 64));
    ren->add_flag("--labels", ren_spec.show_labels, "label points with their index");
    ren->add_option("--out", ren_out, "output path (default out.svg)");
    ren->callback([&] { action = [&] { return run_render(ren_n, ren_spec, ren_out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        return action ? action() : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
