#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "dtri/bct.hpp"
#include "dtri/diverse_min.hpp"
#include "dtri/diverse_sum.hpp"
#include "dtri/instances.hpp"
#include "dtri/io.hpp"
#include "dtri/oracle.hpp"

namespace dtri::cli {

namespace {

// Decimal string held exactly: value = num / den with den a power of ten.
// Bounds that gate integral DPs are floored/ceiled exactly, never through a
// binary double.
struct Decimal {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Decimal parse(const std::string& s) {
        if (s.empty()) throw InputError("empty decimal");
        Decimal d;
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        bool seen_dot = false, seen_digit = false;
        for (; i < s.size(); ++i) {
            if (s[i] == '.') {
                if (seen_dot) throw InputError("malformed decimal: " + s);
                seen_dot = true;
                continue;
            }
            if (s[i] < '0' || s[i] > '9') throw InputError("malformed decimal: " + s);
            seen_digit = true;
            if (d.num > (std::int64_t{1} << 50))
                throw InputError("decimal out of range: " + s);
            d.num = d.num * 10 + (s[i] - '0');
            if (seen_dot) d.den *= 10;
        }
        if (!seen_digit) throw InputError("malformed decimal: " + s);
        if (neg) d.num = -d.num;
        return d;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // floor(num/den * mult) exactly.
    std::int64_t floor_times(std::int64_t mult) const {
        __int128 p = static_cast<__int128>(num) * mult;
        __int128 q = den;
        __int128 f = p >= 0 ? p / q : -((-p + q - 1) / q);
        return static_cast<std::int64_t>(f);
    }
};

struct Options {
    std::string format = "json";
    std::uint64_t seed = 0;
};

void emit(const RunReport& report, const Options& opt, std::ostream& out) {
    if (opt.format == "json")
        out << report_to_json(report) << "\n";
    else
        out << report_to_text(report);
}

std::vector<std::vector<Diagonal>> diag_lists(const std::vector<Triangulation>& ts) {
    std::vector<std::vector<Diagonal>> out;
    for (const auto& t : ts) out.push_back(t.diagonals());
    return out;
}

RunReport base_report(const std::string& command, const Polygon& poly) {
    RunReport r;
    r.command = command;
    r.n = poly.n();
    r.diagonal_count = static_cast<int>(poly.diagonal_universe().size());
    return r;
}

std::string join_args(int argc, const char* const* argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += " ";
        s += argv[i];
    }
    return s;
}

void fill_solution(RunReport& r, const DiverseSolution& sol,
                   const DecomposableMeasure* quality) {
    r.triangulations = diag_lists(sol.triangulations);
    r.sum_sd = sol.sum_sd;
    r.min_sd = sol.min_sd;
    r.certificate = sol.certificate;
    if (quality)
        for (const auto& t : sol.triangulations) r.quality.push_back(evaluate_measure(*quality, t));
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write file: " + path);
    f << content;
}

int run_inner(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"diverse polygon triangulations"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for randomized generators");

    const std::string cmdline = join_args(argc, argv);
    auto t0 = std::chrono::steady_clock::now();
    auto elapsed_ms = [&t0] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    // validate
    auto* validate = app.add_subcommand("validate", "check and normalize a polygon");
    std::string validate_file;
    validate->add_option("file", validate_file)->required();
    validate->callback([&] {
        auto poly = read_polygon_file(validate_file);
        RunReport r = base_report(cmdline, *poly);
        r.timing_ms = elapsed_ms();
        emit(r, opt, out);
    });

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "count all triangulations");
    std::string enum_file;
    std::int64_t enum_limit = kEnumLimit;
    enumerate->add_option("file", enum_file)->required();
    enumerate->add_option("--limit", enum_limit, "abort past this many triangulations");
    enumerate->callback([&] {
        auto poly = read_polygon_file(enum_file);
        auto res = enumerate_all(poly, enum_limit);
        RunReport r = base_report(cmdline, *poly);
        r.count = res.count;
        r.timing_ms = elapsed_ms();
        emit(r, opt, out);
    });

    // mwt
    auto* mwt = app.add_subcommand("mwt", "measure-minimal triangulation");
    std::string mwt_file, mwt_measure = "euclidean";
    mwt->add_option("file", mwt_file)->required();
    mwt->add_option("--measure", mwt_measure, "measure name or table:<file>");
    mwt->callback([&] {
        auto poly = read_polygon_file(mwt_file);
        auto m = resolve_measure(mwt_measure);
        auto t = sigma_star_witness(poly, m);
        RunReport r = base_report(cmdline, *poly);
        r.triangulations = diag_lists({t});
        r.values = {evaluate_measure(m, t)};
        r.quality = r.values;
        r.timing_ms = elapsed_ms();
        emit(r, opt, out);
    });

    // bct
    auto* bct = app.add_subcommand("bct", "bi-criteria triangulation");
    std::string bct_file, bct_weight, bct_quality, bct_bound, bct_sense = "min";
    int bct_k = 1;
    double bct_eps = 0.0;
    bct->add_option("file", bct_file)->required();
    bct->add_option("--weight", bct_weight)->required();
    bct->add_option("--quality", bct_quality)->required();
    bct->add_option("--bound", bct_bound)->required();
    bct->add_option("--k", bct_k);
    bct->add_option("--epsilon", bct_eps, "enable the FPTAS for real-valued quality");
    bct->add_option("--sense", bct_sense)->check(CLI::IsMember({"min", "max"}));
    bct->callback([&] {
        auto poly = read_polygon_file(bct_file);
        BctInstance inst;
        inst.polygon = poly;
        inst.weight = resolve_measure(bct_weight);
        inst.quality = resolve_measure(bct_quality);
        Decimal bound = Decimal::parse(bct_bound);
        inst.bound = inst.quality.integral() ? static_cast<double>(bound.floor_times(1))
                                             : bound.to_double();
        inst.sense = bct_sense == "max" ? Sense::Maximize : Sense::Minimize;
        inst.k = bct_k;
        KBestList res = solve_bct(inst, bct_eps > 0 ? std::optional<double>(bct_eps)
                                                    : std::nullopt);
        RunReport r = base_report(cmdline, *poly);
        r.values = res.values;
        r.triangulations = diag_lists(res.witnesses);
        for (const auto& t : res.witnesses) r.quality.push_back(evaluate_measure(inst.quality, t));
        r.timing_ms = elapsed_ms();
        emit(r, opt, out);
    });

    // sum-dnt
    auto* sdnt = app.add_subcommand("sum-dnt", "diverse nice triangulations (sum)");
    std::string sdnt_file, sdnt_measure = "const0", sdnt_alpha = "1";
    int sdnt_k = 2;
    double sdnt_eps = 0.0;
    bool sdnt_oracle = false;
    sdnt->add_option("file", sdnt_file)->required();
    sdnt->add_option("--k", sdnt_k)->required();
    sdnt->add_option("--measure", sdnt_measure);
    sdnt->add_option("--alpha", sdnt_alpha);
    sdnt->add_option("--epsilon", sdnt_eps);
    sdnt->add_flag("--exact-oracle", sdnt_oracle, "brute-force reference solver");
    sdnt->callback([&] {
        auto poly = read_polygon_file(sdnt_file);
        DntInstance inst;
        inst.polygon = poly;
        inst.sigma = resolve_measure(sdnt_measure);
        Decimal alpha = Decimal::parse(sdnt_alpha);
        inst.alpha = alpha.to_double();
        if (inst.alpha < 1.0) throw InputError("alpha must be at least 1");
        inst.k = sdnt_k;
        if (sdnt_eps > 0) inst.eps = sdnt_eps;
        DiverseSolution sol;
        if (sdnt_oracle) {
            sol = oracle_sum_dnt(poly, inst.sigma, inst.alpha, inst.k);
        } else if (alpha.num == alpha.den && inst.sigma.combiner() == Combiner::Sum) {
            sol = diverse_optimal_quality(inst);
        } else {
            sol = local_search_swap(inst, greedy_sum_dnt(inst));
        }
        RunReport r = base_report(cmdline, *poly);
        fill_solution(r, sol, &inst.sigma);
        r.timing_ms = elapsed_ms();
        emit(r, opt, out);
    });

    // min-dt
    auto* mdt = app.add_subcommand("min-dt", "diverse triangulations (min)");
    std::string mdt_file;
    int mdt_k = 2;
    mdt->add_option("file", mdt_file)->required();
    mdt->add_option("--k", mdt_k)->required();
    mdt->callback([&] {
        auto poly = read_polygon_file(mdt_file);
        auto sol = min_dt(poly, mdt_k);
        RunReport r = base_report(cmdline, *poly);
        fill_solution(r, sol, nullptr);
        r.timing_ms = elapsed_ms();
        emit(r, opt, out);
    });

    // gen
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);
    std::string gen_out, gen_table;
    int gen_q = 3, gen_n = 8;
    std::int64_t gen_scale = 1000;
    std::vector<std::int64_t> gen_values;

    auto* gspiral = gen->add_subcommand("spiral", "q independent quadrilaterals");
    gspiral->add_option("--q", gen_q)->required();
    gspiral->add_option("--out", gen_out);
    gspiral->callback([&] {
        auto poly = gen_spiral(gen_q);
        write_output(gen_out, polygon_to_json(*poly) + "\n", out);
    });

    auto* gkites = gen->add_subcommand("kites", "subset-sum kite tower");
    gkites->add_option("--values", gen_values, "kite values")->required()->delimiter(',');
    gkites->add_option("--out", gen_out);
    gkites->add_option("--table", gen_table, "write the excess measure table here");
    gkites->callback([&] {
        auto inst = gen_kites(gen_values);
        write_output(gen_out, polygon_to_json(*inst.polygon) + "\n", out);
        if (!gen_table.empty())
            write_output(gen_table, measure_table_to_json(*inst.polygon, inst.excess) + "\n", out);
    });

    auto* gconvex = gen->add_subcommand("convex", "regular n-gon on the grid");
    gconvex->add_option("--n", gen_n)->required();
    gconvex->add_option("--scale", gen_scale);
    gconvex->add_option("--out", gen_out);
    gconvex->callback([&] {
        auto poly = gen_convex_regular(gen_n, gen_scale);
        write_output(gen_out, polygon_to_json(*poly) + "\n", out);
    });

    auto* grandom = gen->add_subcommand("random", "seeded random simple polygon");
    grandom->add_option("--n", gen_n)->required();
    grandom->add_option("--out", gen_out);
    grandom->callback([&] {
        auto poly = gen_random_simple(gen_n, opt.seed);
        write_output(gen_out, polygon_to_json(*poly) + "\n", out);
    });

    // render
    auto* render = app.add_subcommand("render", "SVG rendering");
    std::string render_file, render_tri, render_out;
    render->add_option("file", render_file)->required();
    render->add_option("--tri", render_tri, "triangulation JSON file to overlay");
    render->add_option("--out", render_out)->required();
    render->callback([&] {
        auto poly = read_polygon_file(render_file);
        std::vector<Triangulation> layers;
        if (!render_tri.empty()) {
            std::ifstream f(render_tri);
            if (!f) throw InputError("cannot open file: " + render_tri);
            std::ostringstream ss;
            ss << f.rdbuf();
            layers = read_triangulations(ss.str(), poly);
        }
        write_output(render_out, render_svg(*poly, layers), out);
    });

    // Global options (--format, --seed) may appear after the subcommand.
    for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
        s->fallthrough();
        for (CLI::App* s2 : s->get_subcommands([](const CLI::App*) { return true; }))
            s2->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        int code = app.exit(e, dummy, dummy);
        if (code == 0) {
            out << dummy.str();
            return 0;  // --help
        }
        err << dummy.str();
        return 3;
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        return run_inner(argc, argv, out, err);
    } catch (const Infeasible& e) {
        err << "infeasible: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 5;
    } catch (const InputError& e) {
        err << "invalid input: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace dtri::cli
