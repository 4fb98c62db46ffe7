#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "quasigap/acceptance.hpp"
#include "quasigap/diophantine.hpp"
#include "quasigap/patches.hpp"
#include "quasigap/pointset.hpp"
#include "quasigap/steinhaus.hpp"
#include "quasigap/windowpartition.hpp"

namespace fs = std::filesystem;
using namespace quasigap;
using ordered_json = nlohmann::ordered_json;

namespace {

mpq_class parse_rational(const std::string& text) {
    Surd v = Surd::parse(text);
    if (!v.is_rational()) throw ConfigError("expected a rational value, got " + text);
    return v.rational();
}

void write_file(const fs::path& path, const std::string& content) {
    if (!path.parent_path().empty()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path.string());
    out << content;
    std::cout << "wrote " << path.string() << "\n";
}

Scheme load_scheme(const std::string& config_path, unsigned precision_override) {
    SchemeConfig cfg = SchemeConfig::load(config_path);
    if (precision_override > 0 && cfg.mode.is_surrogate())
        cfg.mode.precision_bits = precision_override;
    return Scheme::build(cfg);
}

// Step plot of one integer series against r; axes plus a polyline.
std::string svg_step_plot(const std::vector<std::pair<mpq_class, long>>& series,
                          const std::string& label) {
    const double width = 640, height = 360, margin = 48;
    double rmin = series.front().first.get_d(), rmax = series.back().first.get_d();
    long vmax = 1;
    for (const auto& [r, v] : series) vmax = std::max(vmax, v);
    auto xp = [&](double r) {
        return margin + (width - 2 * margin) * (rmax > rmin ? (r - rmin) / (rmax - rmin) : 0.5);
    };
    auto yp = [&](double v) { return height - margin - (height - 2 * margin) * v / (double)vmax; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " " << height
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin
       << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
       << height - margin << "\" stroke=\"black\"/>\n";
    os << "<path fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" d=\"";
    for (size_t i = 0; i < series.size(); ++i) {
        double x = xp(series[i].first.get_d());
        double y = yp((double)series[i].second);
        os << (i == 0 ? "M" : "L") << x << " " << y << " ";
        if (i + 1 < series.size()) os << "L" << xp(series[i + 1].first.get_d()) << " " << y << " ";
    }
    os << "\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
       << "\" text-anchor=\"middle\" font-size=\"12\">r</text>\n";
    os << "<text x=\"" << margin << "\" y=\"" << margin - 10 << "\" font-size=\"12\">" << label
       << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

LinearFormSystem forms_of(const Scheme& s, bool window_normalized) {
    LinearFormSystem l;
    l.d = s.d();
    l.k = s.k();
    l.rows = window_normalized ? s.lprime() : s.alpha();
    return l;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cut-and-project point sets, patch frequency spectra, and the "
                 "three-distance toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    unsigned precision_bits = 0;
    int threads = 0;
    int digits = 12;
    app.add_option("--threads", threads, "worker threads (default: QUASIGAP_THREADS or all)");
    app.add_option("--precision-bits", precision_bits,
                   "override surrogate precision bits from the config");

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        if (needs_config)
            sub->add_option("--config", config_path, "scheme config JSON")->required();
        sub->add_option("--out-dir", out_dir, "output directory (default .)");
        sub->add_option("--digits", digits, "decimal digits in reports");
    };

    auto* gen = app.add_subcommand("gen", "generate the point set as CSV");
    std::string ball_radius = "50";
    add_common(gen, true);
    gen->add_option("--ball-radius", ball_radius, "sup-norm radius R");

    auto* patches_cmd = app.add_subcommand("patches", "empirical patch spectrum as JSON");
    std::string r_value = "1";
    int patch_type = 2;
    std::string omega_name = "hypercube";
    add_common(patches_cmd, true);
    patches_cmd->add_option("--r", r_value, "patch radius");
    patches_cmd->add_option("--ball-radius", ball_radius, "center ball radius R");
    patches_cmd->add_option("--type", patch_type, "patch type (1 or 2)");
    patches_cmd->add_option("--omega", omega_name,
                            "omega preset: hypercube|hypercube-closed|theorem13");

    auto* spectrum_cmd = app.add_subcommand("spectrum", "analytic frequency spectrum as CSV");
    add_common(spectrum_cmd, true);
    spectrum_cmd->add_option("--r", r_value, "patch radius");
    spectrum_cmd->add_option("--type", patch_type, "patch type (1 or 2)");
    spectrum_cmd->add_option("--omega", omega_name, "omega preset");

    auto* scan_cmd = app.add_subcommand("scan", "analytic spectrum over an r-grid");
    std::string r_min = "1", r_max = "20", r_step = "1";
    bool svg = false;
    add_common(scan_cmd, true);
    scan_cmd->add_option("--r-min", r_min, "grid start");
    scan_cmd->add_option("--r-max", r_max, "grid end (inclusive)");
    scan_cmd->add_option("--r-step", r_step, "grid step");
    scan_cmd->add_option("--type", patch_type, "patch type (1 or 2)");
    scan_cmd->add_option("--omega", omega_name, "omega preset");
    scan_cmd->add_flag("--svg", svg, "also emit a step plot");

    auto* stein_cmd = app.add_subcommand("steinhaus", "three-distance suite as CSV");
    std::string alpha_lit = "(-1+1*sqrt(5))/2";
    long n_max = 50;
    add_common(stein_cmd, false);
    stein_cmd->add_option("--alpha", alpha_lit, "rotation as a surd literal");
    stein_cmd->add_option("--n-max", n_max, "largest N");

    auto* dioph_cmd = app.add_subcommand("dioph", "Diophantine reports as JSON");
    std::string dioph_op;
    std::string d_gamma, d_c = "1/5", d_x = "5", d_psi = "logpower:1", d_eps = "1", d_r = "10";
    std::string d_omega = "hypercube";
    int d_depth = 16, d_dim = 2;
    long d_nbound = 100, d_height = 1000, d_q = 13, d_p = 5;
    add_common(dioph_cmd, false);
    dioph_cmd->add_option("--op", dioph_op, "cf|dirichlet|badapprox|transference|hyp|thm13|gaps")
        ->required();
    dioph_cmd->add_option("--config", config_path,
                          "scheme config (dirichlet/badapprox/transference/hyp/gaps)");
    dioph_cmd->add_option("--alpha", alpha_lit, "surd literal (cf, thm13 base)");
    dioph_cmd->add_option("--depth", d_depth, "cf partial quotients");
    dioph_cmd->add_option("--n-bound", d_nbound, "dirichlet N");
    dioph_cmd->add_option("--height", d_height, "scan height H");
    dioph_cmd->add_option("--c", d_c, "transference C");
    dioph_cmd->add_option("--x", d_x, "transference X");
    dioph_cmd->add_option("--psi", d_psi, "constant:<q> or logpower:<eps>");
    dioph_cmd->add_option("--q", d_q, "thm13 q");
    dioph_cmd->add_option("--p", d_p, "thm13 p");
    dioph_cmd->add_option("--thm13-d", d_dim, "thm13 dimension d >= 2");
    dioph_cmd->add_option("--eps", d_eps, "thm13 epsilon");
    dioph_cmd->add_option("--gamma", d_gamma, "thm13 gamma (default alpha1/q^(2d+eps))");
    dioph_cmd->add_option("--r", d_r, "gaps radius");
    dioph_cmd->add_option("--omega", d_omega, "gaps omega preset");

    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
    std::string only;
    verify_cmd->add_option("--only", only, "comma-separated criterion ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (threads == 0) {
            if (const char* env = std::getenv("QUASIGAP_THREADS")) threads = std::atoi(env);
        }
        if (threads > 0) omp_set_num_threads(threads);

        if (gen->parsed()) {
            Scheme s = load_scheme(config_path, precision_bits);
            auto pts = generate(s, parse_rational(ball_radius));
            write_file(fs::path(out_dir) / "points.csv", points_csv(s, pts, digits));
        } else if (patches_cmd->parsed()) {
            Scheme s = load_scheme(config_path, precision_bits);
            OmegaSpec omega = OmegaSpec::from_preset(omega_name, s.d());
            auto spec = empirical_spectrum(s, parse_rational(r_value),
                                           parse_rational(ball_radius),
                                           patch_type == 1 ? PatchType::type1 : PatchType::type2,
                                           omega);
            write_file(fs::path(out_dir) / "spectrum.json", spectrum_json(spec));
        } else if (spectrum_cmd->parsed()) {
            Scheme s = load_scheme(config_path, precision_bits);
            OmegaSpec omega = OmegaSpec::from_preset(omega_name, s.d());
            mpq_class r = parse_rational(r_value);
            PatchType t = patch_type == 1 ? PatchType::type1 : PatchType::type2;
            auto spec = analytic_spectrum(s, r, t, omega);
            write_file(fs::path(out_dir) / "spectrum.csv",
                       spectrum_csv_header() + spectrum_csv_row(r, t, spec, digits));
        } else if (scan_cmd->parsed()) {
            Scheme s = load_scheme(config_path, precision_bits);
            OmegaSpec omega = OmegaSpec::from_preset(omega_name, s.d());
            PatchType t = patch_type == 1 ? PatchType::type1 : PatchType::type2;
            mpq_class lo = parse_rational(r_min), hi = parse_rational(r_max),
                      step = parse_rational(r_step);
            if (sgn(step) <= 0) throw ConfigError("r-step must be positive");
            std::string csv = spectrum_csv_header();
            std::vector<std::pair<mpq_class, long>> series;
            for (mpq_class r = lo; r <= hi; r += step) {
                auto spec = analytic_spectrum(s, r, t, omega);
                csv += spectrum_csv_row(r, t, spec, digits);
                series.emplace_back(r, (long)spec.frequencies.size());
            }
            write_file(fs::path(out_dir) / "scan.csv", csv);
            if (svg && !series.empty())
                write_file(fs::path(out_dir) / "scan.svg",
                           svg_step_plot(series, "distinct frequencies"));
        } else if (stein_cmd->parsed()) {
            Surd alpha = Surd::parse(alpha_lit);
            std::string csv = steinhaus_csv_header();
            for (long n = 1; n <= n_max; ++n) csv += steinhaus_csv_row(alpha, n, digits);
            write_file(fs::path(out_dir) / "steinhaus.csv", csv);
        } else if (dioph_cmd->parsed()) {
            ordered_json j;
            if (dioph_op == "cf") {
                ContinuedFraction f = cf(Surd::parse(alpha_lit), d_depth);
                j["op"] = "cf";
                j["alpha"] = alpha_lit;
                ordered_json qs = ordered_json::array();
                for (const auto& q : f.quotients) qs.push_back(q.get_str());
                j["quotients"] = qs;
                j["terminated"] = f.terminated;
                if (f.period_start) {
                    j["period_start"] = *f.period_start;
                    ordered_json per = ordered_json::array();
                    for (const auto& q : f.period) per.push_back(q.get_str());
                    j["period"] = per;
                }
            } else if (dioph_op == "dirichlet") {
                if (config_path.empty()) throw ConfigError("dirichlet needs --config");
                Scheme s = load_scheme(config_path, precision_bits);
                LinearFormSystem l = forms_of(s, false);
                IVec n = dirichlet_witness(l, d_nbound);
                j["op"] = "dirichlet";
                j["n_bound"] = d_nbound;
                j["witness"] = n;
                j["distance"] = l.dist_to_lattice(n).to_decimal(digits);
            } else if (dioph_op == "badapprox") {
                if (config_path.empty()) throw ConfigError("badapprox needs --config");
                Scheme s = load_scheme(config_path, precision_bits);
                auto rep = bad_approx_constant(forms_of(s, false), d_height);
                j["op"] = "badapprox";
                j["height"] = rep.height;
                j["value"] = rep.value.to_literal();
                j["value_decimal"] = rep.value.to_decimal(digits);
                j["exact"] = rep.exact;
                j["witness"] = rep.witness;
            } else if (dioph_op == "transference") {
                if (config_path.empty())
                    throw ConfigError("transference needs --config for d,k");
                Scheme s = load_scheme(config_path, precision_bits);
                Transference t =
                    transference(parse_rational(d_c), parse_rational(d_x), s.d(), s.k());
                j["op"] = "transference";
                j["h"] = t.h.get_str();
                j["c1"] = t.c1.get_str();
                j["x1"] = t.x1.get_str();
            } else if (dioph_op == "hyp") {
                if (config_path.empty()) throw ConfigError("hyp needs --config");
                Scheme s = load_scheme(config_path, precision_bits);
                PsiProfile psi;
                auto colon = d_psi.find(':');
                std::string kind = d_psi.substr(0, colon);
                std::string arg = colon == std::string::npos ? "1" : d_psi.substr(colon + 1);
                if (kind == "constant")
                    psi = PsiProfile::constant(parse_rational(arg));
                else if (kind == "logpower")
                    psi = PsiProfile::logpower(parse_rational(arg));
                else
                    throw ConfigError("psi must be constant:<q> or logpower:<eps>");
                auto rep = check_hypotheses_51_52(forms_of(s, true), psi, d_height);
                j["op"] = "hyp";
                j["psi"] = rep.psi;
                j["height"] = rep.height;
                j["pass_5_1"] = rep.pass51;
                j["pass_5_2"] = rep.pass52;
                if (rep.first_violation) {
                    j["first_violation"] =
                        ordered_json{{"n", rep.first_violation->n},
                                     {"form", rep.first_violation->form},
                                     {"omitted", rep.first_violation->omitted},
                                     {"which", rep.first_violation->which}};
                }
            } else if (dioph_op == "thm13") {
                Thm13Params p;
                p.d = d_dim;
                p.epsilon = parse_rational(d_eps);
                p.q = d_q;
                p.p = d_p;
                p.alpha1 = Surd::parse(alpha_lit);
                if (d_gamma.empty()) {
                    unsigned long ev = p.epsilon.get_den().get_ui();
                    unsigned long eu = mpz_class(p.epsilon.get_num()).get_ui();
                    unsigned long expo = 2 * (unsigned long)p.d * ev + eu;
                    mpz_class qpow;
                    mpz_pow_ui(qpow.get_mpz_t(), mpz_class(p.q).get_mpz_t(),
                               (expo + ev - 1) / ev);
                    p.gamma = p.alpha1 / Surd(qpow);
                } else {
                    p.gamma = Surd::parse(d_gamma);
                }
                auto alpha = thm13_alpha(p);
                j["op"] = "thm13";
                ordered_json arr = ordered_json::array();
                for (const auto& a : alpha) arr.push_back(a.to_literal());
                j["alpha"] = arr;
                std::vector<long> warmups{d_q * 2, d_q * 3};
                mpq_class c = thm13_calibrate_c(p, warmups);
                j["calibrated_c"] = c.get_str();
                mpq_class lo, hi;
                thm13_rstar(p, c, lo, hi);
                j["r_star"] = lo.get_d();
                SVec l1(alpha.begin(), alpha.end());
                j["gap_count_at_r_star"] =
                    consecutive_gap_count(l1, lo, OmegaSpec::theorem13(p.d));
            } else if (dioph_op == "gaps") {
                if (config_path.empty()) throw ConfigError("gaps needs --config");
                Scheme s = load_scheme(config_path, precision_bits);
                SVec l1(s.d());
                for (int jx = 0; jx < s.d(); ++jx) l1[jx] = s.alpha().at(0, jx);
                OmegaSpec omega = OmegaSpec::from_preset(d_omega, s.d());
                auto gaps = consecutive_gaps(l1, parse_rational(d_r), omega);
                std::set<Surd> distinct(gaps.begin(), gaps.end());
                j["op"] = "gaps";
                j["r"] = d_r;
                j["distinct_gap_count"] = distinct.size();
                ordered_json arr = ordered_json::array();
                for (const auto& g : distinct) arr.push_back(g.to_literal());
                j["gaps"] = arr;
            } else {
                throw ConfigError("unknown dioph op: " + dioph_op);
            }
            write_file(fs::path(out_dir) / ("dioph_" + dioph_op + ".json"), j.dump(2) + "\n");
        } else if (verify_cmd->parsed()) {
            AcceptanceOptions opts;
            size_t pos = 0;
            while (pos < only.size()) {
                size_t comma = only.find(',', pos);
                if (comma == std::string::npos) comma = only.size();
                opts.only.push_back(std::stoi(only.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            bool ok = run_acceptance(opts, std::cout);
            return ok ? 0 : 1;
        }
        return 0;
    } catch (const SingularShift& e) {
        std::cerr << "singular shift: " << e.what() << "\n";
        return 3;
    } catch (const AmbiguousComparison& e) {
        std::cerr << "ambiguous comparison: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
