#pragma once

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "errors.hpp"
#include "hyperbolic.hpp"
#include "io.hpp"
#include "lfunction.hpp"
#include "numeric.hpp"
#include "transfermat.hpp"
#include "zerofinder.hpp"
#include "zerogeom.hpp"
#include "zetacore.hpp"

namespace selzeta::cli {

enum ExitCode : int { kOk = 0, kInvalidConfig = 2, kNumericalFailure = 3, kBoundNotProven = 4 };

struct RunConfig {
    std::optional<double> b;
    int n = kDefaultNMax;
    double kappa = kDefaultKappa;
    std::optional<std::vector<double>> rect;  // sigma_min, sigma_max, t_min, t_max
    double grid_step = 0.0;                   // 0 = default vertical seed spacing
    double tol = 1e-9;
    std::string output;                       // empty = standard output
    std::string format = "csv";
    unsigned threads = 0;

    int m = 0;                                // spectrum: 0 = every even m up to n
    int generator = 0;                        // character, 0 = trivial
    std::string s;                            // evaluation point
    std::string input;                        // zero CSV
    double height = 4.0 * std::numbers::pi;   // rescaled window height
    double tau = 0.0;
    double eps = 0.0;
    double kappa_height = kDefaultKappa;
    double t0 = 0.0, t1 = 2.0 * std::numbers::pi, dt = 1e-3;
    double T = 0.0;
    double k2 = 0.95;
    bool audit = false;
    bool curves = false;
    bool rescaled = false;
};

namespace detail {

inline void reject(const std::string& msg) { throw DomainError(msg); }

// Fills cfg from a JSON object; unknown keys are an error.
inline void apply_json(RunConfig& cfg, const nlohmann::json& j) {
    if (!j.is_object()) reject("config: top level must be an object");
    for (const auto& [key, v] : j.items()) {
        auto num = [&]() {
            if (!v.is_number()) reject("config: '" + key + "' must be a number");
            return v.get<double>();
        };
        auto whole = [&]() {
            if (!v.is_number_integer()) reject("config: '" + key + "' must be a whole number");
            return v.get<long>();
        };
        auto text = [&]() {
            if (!v.is_string()) reject("config: '" + key + "' must be a string");
            return v.get<std::string>();
        };
        auto flag = [&]() {
            if (!v.is_boolean()) reject("config: '" + key + "' must be true or false");
            return v.get<bool>();
        };
        if (key == "b") cfg.b = num();
        else if (key == "n") cfg.n = static_cast<int>(whole());
        else if (key == "kappa") cfg.kappa = num();
        else if (key == "rect") {
            if (!v.is_array() || v.size() != 4) reject("config: 'rect' must be an array of four numbers");
            std::vector<double> r;
            for (const auto& x : v) {
                if (!x.is_number()) reject("config: 'rect' must be an array of four numbers");
                r.push_back(x.get<double>());
            }
            cfg.rect = r;
        } else if (key == "grid_step") cfg.grid_step = num();
        else if (key == "tol") cfg.tol = num();
        else if (key == "output") cfg.output = text();
        else if (key == "format") cfg.format = text();
        else if (key == "threads") {
            const long t = whole();
            if (t < 0) reject("config: 'threads' must be non-negative");
            cfg.threads = static_cast<unsigned>(t);
        } else if (key == "m") cfg.m = static_cast<int>(whole());
        else if (key == "generator") cfg.generator = static_cast<int>(whole());
        else if (key == "s") cfg.s = text();
        else if (key == "input") cfg.input = text();
        else if (key == "height") cfg.height = num();
        else if (key == "tau") cfg.tau = num();
        else if (key == "eps") cfg.eps = num();
        else if (key == "kappa_height") cfg.kappa_height = num();
        else if (key == "t0") cfg.t0 = num();
        else if (key == "t1") cfg.t1 = num();
        else if (key == "dt") cfg.dt = num();
        else if (key == "T") cfg.T = num();
        else if (key == "k2") cfg.k2 = num();
        else if (key == "audit") cfg.audit = flag();
        else if (key == "curves") cfg.curves = flag();
        else if (key == "rescaled") cfg.rescaled = flag();
        else reject("config: unknown key '" + key + "'");
    }
}

inline RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) reject("config: cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        reject(std::string("config: ") + e.what());
    }
    RunConfig cfg;
    apply_json(cfg, j);
    return cfg;
}

inline double need_b(const RunConfig& c) {
    if (!c.b) reject("missing --b");
    return *c.b;
}

inline void check_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (c.format == f) return;
    reject("format '" + c.format + "' not supported here");
}

inline Rect need_rect(const RunConfig& c) {
    if (!c.rect) reject("missing --rect");
    const auto& r = *c.rect;
    if (r.size() != 4) reject("--rect takes four numbers");
    const Rect out{r[0], r[1], r[2], r[3]};
    if (!out.valid()) reject("--rect must satisfy sigma_min < sigma_max and t_min < t_max");
    return out;
}

inline cplx need_s(const RunConfig& c) {
    cplx s;
    if (c.s.empty() || !parse_complex(c.s, s)) reject("--s must be a complex number such as 0.3+2i");
    return s;
}

inline ZeroSet read_zero_file(const std::string& path, double b) {
    std::ifstream in(path);
    if (!in) reject("cannot open '" + path + "'");
    ZeroSet zs;
    zs.zeros = read_zeros_csv(in);
    zs.b = b;
    zs.dedup_radius = kDefaultDedupRadius;
    if (!zs.zeros.empty()) {
        double lo = zs.zeros.front().s.imag(), hi = lo, slo = zs.zeros.front().s.real(), shi = slo;
        for (const auto& z : zs.zeros) {
            lo = std::min(lo, z.s.imag());
            hi = std::max(hi, z.s.imag());
            slo = std::min(slo, z.s.real());
            shi = std::max(shi, z.s.real());
        }
        zs.rect = {slo, shi, lo, hi};
    }
    return zs;
}

// key,value report (csv) or a flat JSON object
class Report {
public:
    void add(const std::string& key, double v) { items_.emplace_back(key, format_double(v)); json_[key] = v; }
    void add(const std::string& key, long v) { items_.emplace_back(key, std::to_string(v)); json_[key] = v; }
    void add(const std::string& key, bool v) { items_.emplace_back(key, v ? "true" : "false"); json_[key] = v; }
    void add(const std::string& key, const std::string& v) { items_.emplace_back(key, v); json_[key] = v; }

    void write(std::ostream& os, const std::string& format) const {
        if (format == "json") {
            os << json_.dump(2) << '\n';
            return;
        }
        os << "key,value\n";
        for (const auto& [k, v] : items_) os << k << ',' << v << '\n';
    }

private:
    std::vector<std::pair<std::string, std::string>> items_;
    nlohmann::ordered_json json_ = nlohmann::ordered_json::object();
};

inline SearchOptions search_options(const RunConfig& c) {
    SearchOptions o;
    o.dt = c.grid_step;
    o.residual_tol = c.tol;
    o.threads = c.threads;
    o.audit = c.audit;
    if (!(c.tol > 0.0)) reject("--tol must be positive");
    if (c.grid_step < 0.0) reject("--grid-step must be positive");
    return o;
}

}  // namespace detail

// Runs one subcommand; output goes to `out` unless the config names a file.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    std::string config_path;
    // the config file supplies defaults, flags given on the command line win
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config_path = args[i + 1];
    try {
        if (!config_path.empty()) cfg = detail::load_config_file(config_path);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidConfig;
    }

    CLI::App app{"Zeros of the Selberg zeta function of symmetric three-funnel surfaces"};
    app.name("selzeta");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", config_path, "JSON file with default settings");
    app.add_option("--threads", cfg.threads, "worker threads, 0 = SELZETA_THREADS or all cores");
    app.add_option("--output,-o", cfg.output, "output file, default standard output");
    app.add_option("--format", cfg.format, "csv, json or svg");

    std::vector<double> rect_arg;
    auto add_b = [&](CLI::App* sc) { sc->add_option("--b", cfg.b, "half length of the boundary geodesics"); };
    auto add_n = [&](CLI::App* sc) { sc->add_option("--n", cfg.n, "truncation order (even)"); };
    auto add_rect = [&](CLI::App* sc) {
        sc->add_option("--rect", rect_arg, "sigma_min sigma_max t_min t_max")->expected(4);
    };

    auto* surface = app.add_subcommand("surface", "geometric constants of the surface");
    add_b(surface);
    surface->add_option("--kappa", cfg.kappa);

    auto* spectrum = app.add_subcommand("spectrum", "length spectrum as CSV");
    add_b(spectrum);
    add_n(spectrum);
    spectrum->add_option("--m", cfg.m, "word length, 0 = all even lengths up to n");
    spectrum->add_option("--generator", cfg.generator, "twist by the character of this generator (0 = none)");

    auto* eval = app.add_subcommand("eval", "evaluate Z_n(s)");
    add_b(eval);
    add_n(eval);
    eval->add_option("--s", cfg.s, "point, e.g. 0.3+2i");

    auto* delta = app.add_subcommand("delta", "largest real zero of Z_n");
    add_b(delta);
    add_n(delta);

    auto* zeros = app.add_subcommand("zeros", "zeros of Z_n in a rectangle");
    add_b(zeros);
    add_n(zeros);
    add_rect(zeros);
    zeros->add_option("--grid-step", cfg.grid_step, "vertical seed spacing");
    zeros->add_option("--tol", cfg.tol, "residual tolerance");
    zeros->add_flag("--audit", cfg.audit, "check the count against the argument principle");

    auto* rescale = app.add_subcommand("rescale", "rescale a zero CSV");
    add_b(rescale);
    rescale->add_option("--input", cfg.input, "zero CSV");

    auto* curves = app.add_subcommand("curves", "sample the four limit curves");
    curves->add_option("--t0", cfg.t0);
    curves->add_option("--t1", cfg.t1);
    curves->add_option("--dt", cfg.dt);

    auto* compare = app.add_subcommand("compare", "Hausdorff distance of rescaled zeros to the curves");
    add_b(compare);
    compare->add_option("--input", cfg.input, "zero CSV");
    compare->add_option("--height", cfg.height, "rescaled window height");

    auto* translate = app.add_subcommand("translate", "almost period report");
    add_b(translate);
    add_n(translate);
    add_rect(translate);
    translate->add_option("--input", cfg.input, "zero CSV instead of a search");
    translate->add_option("--tau", cfg.tau, "vertical translation");
    translate->add_option("--eps", cfg.eps, "matching tolerance");

    auto* lattice = app.add_subcommand("lattice", "distance of b times the low zeros to the lattice");
    add_b(lattice);
    add_n(lattice);
    lattice->add_option("--kappa-height", cfg.kappa_height, "window half height before rescaling");

    auto* lfun = app.add_subcommand("lfunction", "twisted zeta function");
    add_b(lfun);
    add_n(lfun);
    lfun->add_option("--generator", cfg.generator, "generator of the character (1, 2 or 3)");
    lfun->add_option("--s", cfg.s, "evaluate at this point");
    add_rect(lfun);
    lfun->add_option("--grid-step", cfg.grid_step);
    lfun->add_option("--tol", cfg.tol);

    auto* plot = app.add_subcommand("plot", "SVG of zeros and curves");
    add_b(plot);
    plot->add_option("--input", cfg.input, "zero CSV");
    add_rect(plot);
    plot->add_flag("--curves", cfg.curves, "overlay the limit curves");
    plot->add_flag("--rescaled", cfg.rescaled, "plot rescaled zeros");
    plot->add_option("--height", cfg.height, "rescaled window height");

    auto* bound = app.add_subcommand("bound", "explicit truncation bound");
    add_b(bound);
    add_n(bound);
    bound->add_option("--T", cfg.T, "height of the rectangle");
    bound->add_option("--kappa", cfg.kappa);
    bound->add_option("--k2", cfg.k2);

    auto* polys = app.add_subcommand("polynomials", "P_0..P_6 and trace polynomials as JSON");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kInvalidConfig;
    }
    if (!rect_arg.empty()) cfg.rect = rect_arg;

    std::ofstream file;
    std::ostream* os = &out;
    try {
        if (!cfg.output.empty()) {
            file.open(cfg.output);
            if (!file) detail::reject("cannot write '" + cfg.output + "'");
            os = &file;
        }
        if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "svg") detail::reject("unknown format '" + cfg.format + "'");

        if (*surface) {
            detail::check_format(cfg, {"csv", "json"});
            const auto sp = make_surface(detail::need_b(cfg), cfg.kappa);
            detail::Report r;
            r.add("b", sp.b);
            r.add("theta", sp.theta);
            for (int j = 1; j <= 3; ++j) r.add("eps" + std::to_string(j), sp.eps[static_cast<std::size_t>(j - 1)]);
            for (int j = 1; j <= 3; ++j) r.add("c" + std::to_string(j), sp.c[static_cast<std::size_t>(j - 1)]);
            r.add("kappa", sp.kappa);
            r.add("hexagon_side", hexagon_side(sp.b));
            r.write(*os, cfg.format);
        } else if (*spectrum) {
            detail::check_format(cfg, {"csv", "json"});
            const auto sp = make_surface(detail::need_b(cfg), cfg.kappa);
            const auto chi = Character::from_generator(cfg.generator);
            std::vector<int> ms;
            if (cfg.m != 0) {
                check_word_length(cfg.m, kDefaultMaxWordLength);
                ms.push_back(cfg.m);
            } else {
                check_n_max(cfg.n, kDefaultMaxWordLength);
                for (int m = 2; m <= cfg.n; m += 2) ms.push_back(m);
            }
            std::vector<LengthSpectrum> spectra(ms.size());
            parallel_for(ms.size(), cfg.threads, [&](std::size_t i) { spectra[i] = twisted_spectrum(ms[i], sp, chi); });
            if (cfg.format == "json") {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& s : spectra) {
                    nlohmann::json e = nlohmann::json::array();
                    for (const auto& x : s.entries) e.push_back({{"length", x.length}, {"count", x.count}});
                    j.push_back({{"m", s.m}, {"entries", e}});
                }
                *os << j.dump(2) << '\n';
            } else {
                write_spectrum_csv(*os, spectra);
            }
        } else if (*eval) {
            detail::check_format(cfg, {"csv", "json"});
            const cplx s = detail::need_s(cfg);
            const auto table = make_coefficient_table(make_surface(detail::need_b(cfg), cfg.kappa), std::max(cfg.n, 0), cfg.threads);
            const cplx v = evaluate_Zn(s, cfg.n, table);
            if (cfg.format == "json")
                *os << nlohmann::json{{"s", {s.real(), s.imag()}}, {"value", {v.real(), v.imag()}}}.dump() << '\n';
            else
                *os << format_complex(v) << '\n';
        } else if (*delta) {
            detail::check_format(cfg, {"csv", "json"});
            const auto table = make_coefficient_table(make_surface(detail::need_b(cfg), cfg.kappa), cfg.n, cfg.threads);
            const double d = find_real_delta(table, cfg.n);
            if (cfg.format == "json")
                *os << nlohmann::json{{"delta", d}}.dump() << '\n';
            else
                *os << format_double(d) << '\n';
        } else if (*zeros) {
            detail::check_format(cfg, {"csv", "json"});
            const Rect rect = detail::need_rect(cfg);
            auto opts = detail::search_options(cfg);
            const auto table = make_coefficient_table(make_surface(detail::need_b(cfg), cfg.kappa), cfg.n, cfg.threads);
            const ZeroSet zs = find_zeros_rect(table, cfg.n, rect, opts);
            if (cfg.format == "json") {
                nlohmann::ordered_json j;
                j["b"] = zs.b;
                j["n_used"] = zs.n_used;
                j["rect"] = {zs.rect.sigma_min, zs.rect.sigma_max, zs.rect.t_min, zs.rect.t_max};
                j["zeros"] = nlohmann::json::array();
                for (const auto& z : zs.zeros)
                    j["zeros"].push_back({{"re", z.s.real()}, {"im", z.s.imag()}, {"residual", z.residual},
                                          {"iterations", z.iterations}, {"multiplicity", z.multiplicity}});
                if (zs.audit) j["audit"] = {{"winding_total", zs.audit->winding_total}, {"found_total", zs.audit->found_total}};
                *os << j.dump(2) << '\n';
            } else {
                write_zeros_csv(*os, zs);
            }
            if (zs.audit && zs.audit->winding_total != zs.audit->found_total) {
                err << "audit mismatch: winding " << zs.audit->winding_total << ", found " << zs.audit->found_total << '\n';
                return kNumericalFailure;
            }
        } else if (*rescale) {
            detail::check_format(cfg, {"csv"});
            const double b = detail::need_b(cfg);
            if (cfg.input.empty()) detail::reject("missing --input");
            write_points_csv(*os, rescale_zeros(detail::read_zero_file(cfg.input, b), b));
        } else if (*curves) {
            detail::check_format(cfg, {"csv"});
            write_curves_csv(*os, cfg.t0, cfg.t1, cfg.dt);
        } else if (*compare) {
            detail::check_format(cfg, {"csv", "json"});
            const double b = detail::need_b(cfg);
            if (cfg.input.empty()) detail::reject("missing --input");
            const auto cc = compare_with_curves(rescale_zeros(detail::read_zero_file(cfg.input, b), b), cfg.height, 1e-3, cfg.threads);
            detail::Report r;
            r.add("b", b);
            r.add("height", cc.height);
            r.add("hausdorff", cc.hausdorff.distance);
            r.add("zeros_to_curves", cc.hausdorff.a_to_b);
            r.add("curves_to_zeros", cc.hausdorff.b_to_a);
            r.add("zeros_in_window", static_cast<long>(cc.hausdorff.a_count));
            r.add("curve_samples", static_cast<long>(cc.hausdorff.b_count));
            r.add("discretization", cc.discretization);
            r.write(*os, cfg.format);
        } else if (*translate) {
            detail::check_format(cfg, {"csv", "json"});
            const double b = detail::need_b(cfg);
            ZeroSet zs;
            if (!cfg.input.empty()) {
                zs = detail::read_zero_file(cfg.input, b);
                if (cfg.rect) zs.rect = detail::need_rect(cfg);
            } else {
                const auto table = make_coefficient_table(make_surface(b, cfg.kappa), cfg.n, cfg.threads);
                zs = find_zeros_rect(table, cfg.n, detail::need_rect(cfg), detail::search_options(cfg));
            }
            const auto rep = almost_period_test(zs, cfg.tau, cfg.eps);
            detail::Report r;
            r.add("tau", rep.tau);
            r.add("eps", rep.eps);
            r.add("window_start", rep.window_start);
            r.add("window_height", rep.window_height);
            r.add("base_count", static_cast<long>(rep.base_count));
            r.add("shifted_count", static_cast<long>(rep.shifted_count));
            r.add("matched", static_cast<long>(rep.matched));
            r.add("unmatched", static_cast<long>(rep.unmatched));
            r.add("max_distance", rep.max_distance);
            r.add("pass", rep.pass);
            r.write(*os, cfg.format);
        } else if (*lattice) {
            detail::check_format(cfg, {"csv", "json"});
            const double b = detail::need_b(cfg);
            const auto table = make_coefficient_table(make_surface(b, cfg.kappa), cfg.n, cfg.threads);
            const ZetaSeries f(table, cfg.n);
            const double d = find_real_delta(f);
            SearchOptions o = detail::search_options(cfg);
            o.delta = d;
            const double top = cfg.kappa_height + std::numbers::pi / b;
            ZeroSet zs = find_zeros(f, Rect{-kStripMargin, d + kStripMargin, 0.0, top}, o, b);
            zs.b = b;
            const auto lc = lattice_compare(zs, b, d, cfg.kappa_height, cfg.threads);
            detail::Report r;
            r.add("b", b);
            r.add("delta", d);
            r.add("window_half_height", lc.height);
            r.add("hausdorff", lc.hausdorff.distance);
            r.add("zeros_to_lattice", lc.hausdorff.a_to_b);
            r.add("lattice_to_zeros", lc.hausdorff.b_to_a);
            r.add("zeros_in_window", static_cast<long>(lc.hausdorff.a_count));
            r.add("lattice_points", static_cast<long>(lc.hausdorff.b_count));
            r.write(*os, cfg.format);
        } else if (*lfun) {
            detail::check_format(cfg, {"csv", "json"});
            const double b = detail::need_b(cfg);
            const auto sp = make_surface(b, cfg.kappa);
            const int g = cfg.generator == 0 ? 1 : cfg.generator;
            const auto tw = make_twisted_table(sp, Character::from_generator(g), cfg.n, cfg.threads);
            if (!cfg.s.empty()) {
                const cplx v = evaluate_L(detail::need_s(cfg), cfg.n, tw);
                *os << format_complex(v) << '\n';
            } else {
                const Rect rect = detail::need_rect(cfg);
                SearchOptions o = detail::search_options(cfg);
                // the strip is the one of the untwisted function
                const auto table = make_coefficient_table(sp, cfg.n, cfg.threads);
                o.delta = find_real_delta(table, cfg.n);
                const ZetaSeries f(tw.table, cfg.n);
                ZeroSet zs = find_zeros(f, rect, o, b);
                zs.n_used = cfg.n;
                write_zeros_csv(*os, zs, g);
            }
        } else if (*plot) {
            detail::check_format(cfg, {"svg"});
            const double b = detail::need_b(cfg);
            SvgPlot p;
            std::vector<cplx> pts;
            if (!cfg.input.empty()) pts = detail::read_zero_file(cfg.input, b).points();
            if (cfg.rescaled) {
                p.points = rescale_zeros(pts, b);
                p.re_min = -0.1;
                p.re_max = 0.8;
                p.im_min = 0.0;
                p.im_max = cfg.height;
                if (cfg.rect) {
                    const Rect r = detail::need_rect(cfg);
                    p.re_min = r.sigma_min;
                    p.re_max = r.sigma_max;
                    p.im_min = r.t_min;
                    p.im_max = r.t_max;
                }
                p.curves = cfg.curves;
                p.title = "rescaled zeros, b = " + format_double(b);
            } else {
                if (cfg.curves) detail::reject("--curves needs --rescaled");
                const Rect r = detail::need_rect(cfg);
                p.points = pts;
                p.re_min = r.sigma_min;
                p.re_max = r.sigma_max;
                p.im_min = r.t_min;
                p.im_max = r.t_max;
                p.title = "zeros, b = " + format_double(b);
            }
            write_svg(*os, p);
        } else if (*bound) {
            detail::check_format(cfg, {"csv", "json"});
            const auto tb = truncation_bound(detail::need_b(cfg), cfg.n, cfg.T, cfg.kappa, cfg.k2);
            detail::Report r;
            r.add("eta", tb.eta);
            r.add("k0", tb.k0);
            r.add("k1", tb.k1);
            r.add("inequality_lhs", tb.inequality_lhs);
            r.add("inequality_rhs", tb.inequality_rhs);
            r.add("inequality_holds", tb.inequality_holds);
            r.write(*os, cfg.format);
            if (!tb.inequality_holds) {
                err << "bound not proven: the sufficient inequality fails for these parameters\n";
                return kBoundNotProven;
            }
        } else if (*polys) {
            detail::check_format(cfg, {"json"});
            nlohmann::json j;
            j["P"] = polynomials_json(extract_polynomials());
            j["d"] = nlohmann::json::array();
            for (int k = 1; k <= 7; ++k) j["d"].push_back(polynomial_json(trace_poly_dk(k)));
            *os << j.dump(2) << '\n';
        }
    } catch (const BoundNotProven& e) {
        err << "bound not proven: " << e.what() << '\n';
        return kBoundNotProven;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidConfig;
    } catch (const StateError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidConfig;
    }
    return kOk;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace selzeta::cli
