// Command-line front end: parse a skew product, run the symmetry
// pipeline and emit JSON reports, PGM renders and numeric verification.

#include "skewsym/skewsym.hpp"
#include "skewsym/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace skewsym;
namespace fs = std::filesystem;

struct Options {
    std::string map;
    std::string out;
    std::uint64_t seed = 1;
    int samples = 0; // 0: per-operation defaults
    double tol = 0.0;
    std::int64_t max_order = 12;
    int depth = 4;
    bool strict = false;
    bool no_timestamp = false;
    // render
    std::string fiber = "1";
    int res = 512;
    double window_width = 4.0;
    std::string window_center = "0";
};

std::string read_map_text(const std::string& arg) {
    if (fs::exists(arg) && fs::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string s = ss.str();
        while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
        return s;
    }
    return arg;
}

Cplx parse_complex_arg(const std::string& text) {
    detail::ExprParser p(text);
    ExprPtr e = p.parse_expression();
    if (!p.at_end()) throw ParseError("trailing input", p.pos());
    SkewPoly v = lower_expr(e);
    if (v.w_degree() > 0 || v.min_z_exponent() != 0 ||
        (!v.is_zero() && v.terms().rbegin()->first.first > 0))
        throw error("expected a constant");
    return v.is_zero() ? Cplx(0) : v.terms().begin()->second.to_complex();
}

void emit(const Options& opt, const Json& j, const std::string& filename) {
    if (opt.out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    fs::create_directories(opt.out);
    fs::path path = fs::path(opt.out) / filename;
    std::ofstream f(path);
    f << j.dump(2) << "\n";
    std::cout << path.string() << "\n";
}

Json header_json(const Options& opt) {
    Json j;
    j["schema"] = kReportSchema;
    if (!opt.no_timestamp) {
        auto now = std::chrono::system_clock::now();
        j["generated_at"] =
            std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    }
    j["seed"] = opt.seed;
    return j;
}

int uncertain_exit(const Options& opt, bool uncertain) {
    return (uncertain && opt.strict) ? 2 : 0;
}

struct ElementSample {
    std::string label;
    Cplx mu, nu;
};

std::vector<ElementSample> sample_group_elements(const SymmetryGroup& g, std::uint64_t seed) {
    std::vector<ElementSample> out;
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    auto from_turns = [&](const TurnPair& t, const std::string& label) {
        out.push_back({label, t.first.to_complex(), t.second.to_complex()});
    };
    switch (g.kind) {
        case SymmetryGroup::Kind::FullTorus:
            for (int i = 0; i < 2; ++i) {
                double a = angle(rng), b = angle(rng);
                out.push_back({"torus point", Cplx(std::cos(a), std::sin(a)),
                               Cplx(std::cos(b), std::sin(b))});
            }
            break;
        case SymmetryGroup::Kind::OneDimFamily: {
            // solve a*x + b*y = 0 (mod 1), family x = -b t, y = a t
            for (int i = 0; i < 2; ++i) {
                double t = angle(rng);
                double x = -double(g.char_vec[1]) * t, y = double(g.char_vec[0]) * t;
                out.push_back({"family point", Cplx(std::cos(x), std::sin(x)),
                               Cplx(std::cos(y), std::sin(y))});
            }
            // a torsion representative: chi = e^{2 pi i /(e)}-th root shifts
            if (g.torsion > 1) {
                // point with chi(v)^torsion = 1 but chi(v) != 1: use the dual basis
                // (k/e, 0) or (0, k/e) depending on the character
                if (g.char_vec[0] != 0 && std::abs(g.char_vec[0]) == 1) {
                    from_turns({RationalTurn(1, g.torsion * g.char_vec[0]), RationalTurn(0, 1)},
                               "torsion representative");
                } else if (std::abs(g.char_vec[1]) == 1) {
                    from_turns({RationalTurn(0, 1), RationalTurn(1, g.torsion * g.char_vec[1])},
                               "torsion representative");
                }
            }
            break;
        }
        case SymmetryGroup::Kind::Finite: {
            if (g.d1 > 1) from_turns(g.gen1, "generator 1");
            from_turns(g.gen2, "generator 2");
            break;
        }
    }
    return out;
}

Json run_verification(const SkewProduct& f, const SymmetryAnalysis& an, const Options& opt,
                      bool& all_ok) {
    int samples = opt.samples > 0 ? opt.samples : 512;
    double tol = opt.tol > 0 ? opt.tol : 1e-3;
    Json checks = Json::array();
    all_ok = true;
    // perturbing this coordinate by a small angle leaves the group
    // (no perturbation test for the full torus: every pair is a symmetry)
    bool perturb_mu = true, do_perturb = true;
    switch (an.group.kind) {
        case SymmetryGroup::Kind::FullTorus: do_perturb = false; break;
        case SymmetryGroup::Kind::OneDimFamily: perturb_mu = an.group.char_vec[0] != 0; break;
        case SymmetryGroup::Kind::Finite: break;
    }
    for (const ElementSample& el : sample_group_elements(an.group, opt.seed)) {
        SymmetryCheck c = verify_symmetry_numeric(f, el.mu, el.nu, samples, tol, opt.seed);
        checks.push_back(verify_to_json(c, el.label));
        all_ok = all_ok && c.pass;
        if (!do_perturb) continue;
        // angle-perturbed non-element: must fail
        Cplx mu_p = perturb_mu ? el.mu * std::polar(1.0, 0.05) : el.mu;
        Cplx nu_p = perturb_mu ? el.nu : el.nu * std::polar(1.0, 0.05);
        SymmetryCheck cp = verify_symmetry_numeric(f, mu_p, nu_p, samples, tol, opt.seed);
        Json jp = verify_to_json(cp, el.label + " (perturbed +0.05 rad)");
        jp["expected"] = "fail";
        checks.push_back(jp);
        all_ok = all_ok && !cp.pass;
    }
    return checks;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry groups of Julia sets of polynomial skew products"};
    app.set_config("--config");
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_map = true) {
        if (needs_map)
            cmd->add_option("--map", opt.map, "map expression \"(p(z), q(z,w))\" or file")
                ->required();
        cmd->add_option("--out", opt.out, "output directory (default: stdout)");
        cmd->add_option("--seed", opt.seed, "RNG seed for all sampling");
        cmd->add_option("--samples", opt.samples, "sample count (0 = per-operation default)");
        cmd->add_option("--tol", opt.tol, "tolerance (0 = per-operation default)");
        cmd->add_option("--max-order", opt.max_order, "max turn order for brute force");
        cmd->add_option("--depth", opt.depth, "iterate depth for brute force");
        cmd->add_flag("--strict", opt.strict, "exit 2 on uncertain results");
        cmd->add_flag("--no-timestamp", opt.no_timestamp, "omit timestamps (byte-stable output)");
    };

    CLI::App* cmd_normalize = app.add_subcommand("normalize", "centroid translation and scaling");
    add_common(cmd_normalize);
    CLI::App* cmd_sym = app.add_subcommand("symmetries", "compute the symmetry group");
    add_common(cmd_sym);
    CLI::App* cmd_classify = app.add_subcommand("classify", "classify infinite-symmetry maps");
    add_common(cmd_classify);
    CLI::App* cmd_render = app.add_subcommand("render", "render a fiberwise Julia slice");
    add_common(cmd_render);
    cmd_render->add_option("--fiber", opt.fiber, "base point z (constant expression)");
    cmd_render->add_option("--res", opt.res, "image resolution");
    cmd_render->add_option("--width", opt.window_width, "window width");
    cmd_render->add_option("--center", opt.window_center, "window center (constant expression)");
    CLI::App* cmd_verify = app.add_subcommand("verify", "numeric + symbolic verification");
    add_common(cmd_verify);
    CLI::App* cmd_report = app.add_subcommand("report", "full pipeline report");
    add_common(cmd_report);

    app.require_subcommand(1);
    CLI11_PARSE(app, argc, argv);

    try {
        MapExpression expr = parse_map_expression(read_map_text(opt.map));
        SkewProduct f = to_skew_product(expr);

        int fsamples = opt.samples > 0 ? opt.samples : 2000;
        double ftol = opt.tol > 0 ? opt.tol : 1e-6;

        if (cmd_normalize->parsed()) {
            Json j = header_json(opt);
            j["input"] = input_to_json(expr, f);
            NormalizedSkew nf = normalize(f);
            j["normalization"] = normalization_to_json(nf);
            emit(opt, j, "normalize.json");
            return 0;
        }

        if (cmd_sym->parsed()) {
            Json j = header_json(opt);
            j["input"] = input_to_json(expr, f);
            SymmetryAnalysis an = symmetry_group(f, fsamples, ftol, opt.seed);
            j["normalization"] = normalization_to_json(an.norm);
            j["symmetries"] = analysis_to_json(an);
            emit(opt, j, "symmetries.json");
            return uncertain_exit(opt, !an.status.exact());
        }

        if (cmd_classify->parsed()) {
            Json j = header_json(opt);
            j["input"] = input_to_json(expr, f);
            ClassificationReport rep = classify(f, true, fsamples, ftol, opt.seed);
            j["normalization"] = normalization_to_json(rep.analysis.norm);
            j["symmetries"] = analysis_to_json(rep.analysis);
            j["classification"] = classification_to_json(rep);
            emit(opt, j, "classify.json");
            return uncertain_exit(opt,
                                  rep.uncertain || rep.compactness == Compactness::Uncertain);
        }

        if (cmd_render->parsed()) {
            Cplx z = parse_complex_arg(opt.fiber);
            Cplx center = parse_complex_arg(opt.window_center);
            GreenEvaluator ev(f);
            JuliaSlice slice = render_slice(ev, z, center, opt.window_width, opt.res);
            std::string dir = opt.out.empty() ? "." : opt.out;
            fs::create_directories(dir);
            fs::path img = fs::path(dir) / "render.pgm";
            write_pgm(slice, img.string());
            Json j = header_json(opt);
            j["input"] = input_to_json(expr, f);
            j["render"] = Json{{"fiber", Json::array({z.real(), z.imag()})},
                               {"center", Json::array({center.real(), center.imag()})},
                               {"width", opt.window_width},
                               {"resolution", opt.res},
                               {"band_tol", slice.band_tol},
                               {"iteration_cap", ev.iteration_cap()},
                               {"tol", ev.tolerance()},
                               {"bounded_fraction", slice.bounded_fraction},
                               {"boundary_points", slice.boundary_points.size()},
                               {"all_bounded_flag", slice.all_bounded},
                               {"all_escaping_flag", slice.all_escaping},
                               {"image", img.string()}};
            Json sidecar = j;
            std::ofstream side(fs::path(dir) / "render.json");
            side << sidecar.dump(2) << "\n";
            std::cout << img.string() << "\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            Json j = header_json(opt);
            j["input"] = input_to_json(expr, f);
            SymmetryAnalysis an = symmetry_group(f, fsamples, ftol, opt.seed);
            j["symmetries"] = analysis_to_json(an);
            bool ok = true;
            j["numeric_verification"] = run_verification(f, an, opt, ok);
            // symbolic cross-check against the brute-force oracle
            Json bf;
            try {
                std::vector<TurnPair> oracle =
                    brute_force_group(f, opt.max_order, opt.depth);
                Json els = Json::array();
                for (const TurnPair& t : oracle) els.push_back(turn_pair_to_json(t));
                bf["max_order"] = opt.max_order;
                bf["depth"] = opt.depth;
                bf["elements"] = els;
                bool agree = true;
                for (const TurnPair& t : oracle)
                    if (!an.group.contains(t)) agree = false;
                bf["contained_in_group"] = agree;
                ok = ok && agree;
            } catch (const error& e) {
                bf["skipped"] = e.what();
            }
            j["brute_force"] = bf;
            j["all_passed"] = ok;
            emit(opt, j, "verify.json");
            return ok ? 0 : (opt.strict ? 2 : 0);
        }

        // report: everything
        Json j = header_json(opt);
        j["input"] = input_to_json(expr, f);
        ClassificationReport rep = classify(f, true, fsamples, ftol, opt.seed);
        j["normalization"] = normalization_to_json(rep.analysis.norm);
        j["symmetries"] = analysis_to_json(rep.analysis);
        j["classification"] = classification_to_json(rep);
        bool ok = true;
        j["numeric_verification"] = run_verification(f, rep.analysis, opt, ok);
        j["verification_passed"] = ok;
        emit(opt, j, "report.json");
        return uncertain_exit(opt, rep.uncertain || rep.compactness == Compactness::Uncertain);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const skewsym::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
