// fockso - numerics for Gaussian-weighted spaces of entire functions:
// reproducing kernels, kernel-smoothed (Berezin) averages, disk-mean
// oscillation estimators, Hankel finite sections and quantitative checks.
//
// Every command is deterministic: the same argv and config produce
// byte-identical output. Data goes to stdout (or --out); diagnostics and
// timings go to stderr.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fockso/berezin.hpp"
#include "fockso/config.hpp"
#include "fockso/hankel.hpp"
#include "fockso/report_io.hpp"
#include "fockso/spaces.hpp"
#include "fockso/stablefun.hpp"
#include "fockso/symbols.hpp"
#include "fockso/verify.hpp"

namespace {

using namespace fockso;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolated = 3;

struct Cli {
    RunConfig cfg;
    std::string config_path;
    std::string out_path;

    std::optional<int> m, N, L, directions;
    std::optional<double> p, r, delta, R, rho, tol_vanish;
    std::optional<std::string> format;

    void resolve()
    {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        if (m) cfg.m = *m;
        if (p) cfg.p = *p;
        if (r) cfg.r = *r;
        if (delta) cfg.lattice_delta = *delta;
        if (R) cfg.lattice_R = *R;
        if (rho) cfg.berezin.rho = *rho;
        if (N) cfg.N = *N;
        if (L) cfg.L = *L;
        if (directions) cfg.directions = *directions;
        if (tol_vanish) cfg.tol_vanish = *tol_vanish;
        if (format) cfg.format = *format;
        cfg.validate();
    }

    void emit(const std::string& text) const
    {
        if (out_path.empty()) {
            std::fputs(text.c_str(), stdout);
        } else {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw error("cannot open output file '" + out_path + "'");
            out << text;
        }
    }
};

void add_common(CLI::App* cmd, Cli& cli)
{
    cmd->add_option("--config", cli.config_path, "config file of key = value pairs");
    cmd->add_option("--out", cli.out_path, "write data output to this file");
    cmd->add_option("--format", cli.format, "output format: csv or json (default csv)");
}

std::vector<double> parse_radii(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw error("empty radii list");
    return out;
}

SymbolExpr resolve_symbol(const std::string& text)
{
    for (const auto& e : builtin_catalog())
        if (e.name == text) return e.symbol;
    return parse_symbol(text);
}

std::string report_output(const Cli& cli, const OscillationReport& rep)
{
    if (cli.cfg.format == "json") return oscillation_report_json(rep).dump(2) + "\n";
    return oscillation_report_csv(rep);
}

int run_lemma_report(const Cli& cli, const LemmaReport& rep)
{
    if (cli.cfg.format == "json")
        cli.emit(lemma_report_json(rep).dump(2) + "\n");
    else
        cli.emit(lemma_report_text(rep));
    std::fprintf(stderr, "runtime: %.3fs\n", rep.runtime_seconds);
    return rep.verdict == "bounded" ? kExitOk : kExitViolated;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fockso: kernel, oscillation and Hankel numerics on "
                 "Gaussian-weighted spaces of entire functions"};
    app.require_subcommand(1);
    Cli cli;

    std::function<int()> action;

    // ---- kernel ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("kernel", "evaluate the reproducing kernel K^m(v, z)");
        auto z = std::make_shared<std::string>("0");
        auto v = std::make_shared<std::string>("0");
        cmd->add_option("--m", cli.m, "Sobolev order (default 0)");
        cmd->add_option("--z", *z, "kernel parameter z, complex literal a+bi")->required();
        cmd->add_option("--v", *v, "evaluation point v, complex literal a+bi")->required();
        add_common(cmd, cli);
        cmd->callback([&cli, z, v, &action] {
            action = [&cli, z, v] {
                cli.resolve();
                LogComplex k = kernel(cli.cfg.m, parse_complex(*z), parse_complex(*v));
                std::ostringstream out;
                if (cli.cfg.format == "json") {
                    ordered_json j{{"meta", {{"m", cli.cfg.m}, {"z", *z}, {"v", *v}}},
                                   {"data",
                                    {{"value", {k.value().real(), k.value().imag()}},
                                     {"logmag", k.logmag},
                                     {"phase", k.phase}}}};
                    out << j.dump(2) << "\n";
                } else {
                    cd val = k.logmag <= 700.0 ? k.value() : cd(0.0, 0.0);
                    out << "value_re,value_im,logmag,phase\n"
                        << fmt(val.real()) << ',' << fmt(val.imag()) << ',' << fmt(k.logmag)
                        << ',' << fmt(k.phase) << '\n';
                }
                cli.emit(out.str());
                return kExitOk;
            };
        });
    }

    // ---- norm ------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("norm", "weighted p-norm of a symbol");
        auto sym = std::make_shared<std::string>();
        cmd->add_option("--symbol", *sym, "symbol expression or catalog name")->required();
        cmd->add_option("--m", cli.m, "Sobolev order (default 0)");
        cmd->add_option("--p", cli.p, "norm exponent (default 2)");
        add_common(cmd, cli);
        cmd->callback([&cli, sym, &action] {
            action = [&cli, sym] {
                cli.resolve();
                double n = norm_pm(resolve_symbol(*sym), cli.cfg.p, cli.cfg.m, cli.cfg.quad);
                std::ostringstream out;
                if (cli.cfg.format == "json") {
                    ordered_json j{{"meta", {{"symbol", *sym}, {"p", cli.cfg.p}, {"m", cli.cfg.m}}},
                                   {"data", {{"norm", n}}}};
                    out << j.dump(2) << "\n";
                } else {
                    out << "p,m,norm\n"
                        << fmt(cli.cfg.p) << ',' << cli.cfg.m << ',' << fmt(n) << '\n';
                }
                cli.emit(out.str());
                return kExitOk;
            };
        });
    }

    // ---- project ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("project", "orthogonal projection coefficients");
        auto sym = std::make_shared<std::string>();
        auto L = std::make_shared<int>(16);
        cmd->add_option("--symbol", *sym, "symbol expression or catalog name")->required();
        cmd->add_option("--m", cli.m, "Sobolev order (default 0)");
        cmd->add_option("--L", *L, "truncation: coefficients 0..L (default 16)");
        add_common(cmd, cli);
        cmd->callback([&cli, sym, L, &action] {
            action = [&cli, sym, L] {
                cli.resolve();
                CoeffVector c = project(resolve_symbol(*sym), cli.cfg.m, *L, cli.cfg.quad);
                std::ostringstream out;
                if (cli.cfg.format == "json") {
                    ordered_json data = ordered_json::array();
                    for (size_t k = 0; k < c.coeffs.size(); ++k)
                        data.push_back({k, c.coeffs[k].real(), c.coeffs[k].imag()});
                    ordered_json j{{"meta", {{"symbol", *sym}, {"m", cli.cfg.m}, {"L", *L}}},
                                   {"data", std::move(data)}};
                    out << j.dump(2) << "\n";
                } else {
                    out << "k,c_re,c_im\n";
                    for (size_t k = 0; k < c.coeffs.size(); ++k)
                        out << k << ',' << fmt(c.coeffs[k].real()) << ','
                            << fmt(c.coeffs[k].imag()) << '\n';
                }
                cli.emit(out.str());
                return kExitOk;
            };
        });
    }

    // ---- berezin ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("berezin",
                                       "kernel-smoothed average of a symbol on the lattice");
        auto sym = std::make_shared<std::string>();
        auto z = std::make_shared<std::string>();
        auto absp = std::make_shared<bool>(false);
        cmd->add_option("--symbol", *sym, "symbol expression or catalog name")->required();
        cmd->add_option("--m", cli.m, "Sobolev order (default 0)");
        cmd->add_option("--z", *z, "single evaluation point (default: full lattice)");
        cmd->add_option("--rho", cli.rho, "truncation radius (default 8)");
        cmd->add_flag("--abs-p", *absp, "average |g|^p instead of g (uses --p)");
        cmd->add_option("--p", cli.p, "exponent for --abs-p (default 2)");
        cmd->add_option("--delta", cli.delta, "lattice spacing (default r/2)");
        cmd->add_option("--R", cli.R, "lattice truncation radius (default 12)");
        add_common(cmd, cli);
        cmd->callback([&cli, sym, z, absp, &action] {
            action = [&cli, sym, z, absp] {
                cli.resolve();
                SymbolExpr g = resolve_symbol(*sym);
                SymbolExpr target = g;
                BerezinGrid grid;
                grid.m = cli.cfg.m;
                grid.symbol = *sym;
                grid.rho = cli.cfg.berezin.rho;
                auto eval_at = [&](cd zz) -> BerezinValue {
                    if (*absp) {
                        detail::check_berezin_admissible(g);
                        detail::BerezinField field(g, zz, cli.cfg.m, cli.cfg.berezin.rho,
                                                   cli.cfg.berezin.quad);
                        cd val = field.integrate([&](cd v) {
                            return cd(std::pow(std::abs(eval_symbol(g, v)), cli.cfg.p), 0.0);
                        });
                        return {val, field.tail_bound()};
                    }
                    return berezin(g, zz, cli.cfg.m, cli.cfg.berezin);
                };
                if (!z->empty()) {
                    grid.points = {parse_complex(*z)};
                    grid.values.resize(1);
                    grid.tail_bounds.resize(1);
                    BerezinValue bv = eval_at(grid.points[0]);
                    grid.values[0] = bv.value;
                    grid.tail_bounds[0] = bv.tail_bound;
                } else {
                    grid.points = lattice_points(cli.cfg.lattice());
                    grid.values.resize(grid.points.size());
                    grid.tail_bounds.resize(grid.points.size());
                    parallel_for(grid.points.size(), [&](size_t i) {
                        BerezinValue bv = eval_at(grid.points[i]);
                        grid.values[i] = bv.value;
                        grid.tail_bounds[i] = bv.tail_bound;
                    });
                }
                cli.emit(cli.cfg.format == "json" ? berezin_grid_json(grid).dump(2) + "\n"
                                                  : berezin_grid_csv(grid));
                return kExitOk;
            };
        });
    }

    // ---- bmo / bo --------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("bmo", "disk-mean oscillation sweep over the lattice");
        auto sym = std::make_shared<std::string>();
        cmd->add_option("--symbol", *sym, "symbol expression or catalog name")->required();
        cmd->add_option("--p", cli.p, "oscillation exponent (default 2)");
        cmd->add_option("--r", cli.r, "disk radius (default 1)");
        cmd->add_option("--delta", cli.delta, "lattice spacing (default r/2)");
        cmd->add_option("--R", cli.R, "lattice truncation radius (default 12)");
        add_common(cmd, cli);
        cmd->callback([&cli, sym, &action] {
            action = [&cli, sym] {
                cli.resolve();
                OscillationReport rep = bmo_norm(resolve_symbol(*sym), cli.cfg.r, cli.cfg.p,
                                                 cli.cfg.lattice(), cli.cfg.quad);
                cli.emit(report_output(cli, rep));
                std::fprintf(stderr, "sup_value = %.6g at %s\n", rep.sup_value,
                             fmt(rep.argmax).c_str());
                return kExitOk;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("bo", "sup-oscillation sweep (continuous symbols)");
        auto sym = std::make_shared<std::string>();
        cmd->add_option("--symbol", *sym, "symbol expression or catalog name")->required();
        cmd->add_option("--r", cli.r, "disk radius (default 1)");
        cmd->add_option("--delta", cli.delta, "lattice spacing (default r/2)");
        cmd->add_option("--R", cli.R, "lattice truncation radius (default 12)");
        add_common(cmd, cli);
        cmd->callback([&cli, sym, &action] {
            action = [&cli, sym] {
                cli.resolve();
                OscillationReport rep =
                    bo_norm(resolve_symbol(*sym), cli.cfg.r, cli.cfg.lattice(), cli.cfg.quad);
                cli.emit(report_output(cli, rep));
                std::fprintf(stderr, "sup_value = %.6g at %s\n", rep.sup_value,
                             fmt(rep.argmax).c_str());
                return kExitOk;
            };
        });
    }

    // ---- vanish ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("vanish", "vanishing profile of an estimator");
        auto sym = std::make_shared<std::string>();
        auto est = std::make_shared<std::string>("bmo");
        cmd->add_option("--estimator", *est, "bmo, ba or bo (default bmo)");
        cmd->add_option("--symbol", *sym, "symbol expression or catalog name")->required();
        cmd->add_option("--p", cli.p, "exponent (default 2)");
        cmd->add_option("--r", cli.r, "disk radius (default 1)");
        cmd->add_option("--tol-vanish", cli.tol_vanish, "vanishing tolerance (default 1e-3)");
        cmd->add_option("--delta", cli.delta, "lattice spacing (default r/2)");
        cmd->add_option("--R", cli.R, "lattice truncation radius (default 12)");
        add_common(cmd, cli);
        cmd->callback([&cli, sym, est, &action] {
            action = [&cli, sym, est] {
                cli.resolve();
                OscillationReport rep = vanishing_profile(
                    estimator_from_name(*est), resolve_symbol(*sym), cli.cfg.r, cli.cfg.p,
                    cli.cfg.lattice(), cli.cfg.quad, cli.cfg.tol_vanish);
                if (cli.cfg.format == "json")
                    cli.emit(oscillation_report_json(rep).dump(2) + "\n");
                else
                    cli.emit(profile_csv(rep));
                std::fprintf(stderr, "vanishing_consistent = %s\n",
                             rep.vanishing_consistent ? "yes" : "no");
                return kExitOk;
            };
        });
    }

    // ---- carleson --------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("carleson", "disk mass of |g|^p dA on the lattice");
        auto sym = std::make_shared<std::string>();
        auto mode = std::make_shared<std::string>("bounded");
        cmd->add_option("--symbol", *sym, "symbol expression or catalog name")->required();
        cmd->add_option("--p", cli.p, "exponent (default 2)");
        cmd->add_option("--r", cli.r, "disk radius (default 1)");
        cmd->add_option("--mode", *mode, "bounded or vanishing (default bounded)");
        cmd->add_option("--tol-vanish", cli.tol_vanish, "vanishing tolerance (default 1e-3)");
        cmd->add_option("--delta", cli.delta, "lattice spacing (default r/2)");
        cmd->add_option("--R", cli.R, "lattice truncation radius (default 12)");
        add_common(cmd, cli);
        cmd->callback([&cli, sym, mode, &action] {
            action = [&cli, sym, mode] {
                cli.resolve();
                CarlesonMode cm;
                if (*mode == "bounded") cm = CarlesonMode::Bounded;
                else if (*mode == "vanishing") cm = CarlesonMode::Vanishing;
                else throw error("carleson mode must be bounded or vanishing");
                OscillationReport rep =
                    carleson_lattice_check(resolve_symbol(*sym), cli.cfg.p, cli.cfg.r,
                                           cli.cfg.lattice(), cm, cli.cfg.quad,
                                           cli.cfg.tol_vanish);
                cli.emit(report_output(cli, rep));
                std::fprintf(stderr, "max_mass = %.6g at %s\n", rep.sup_value,
                             fmt(rep.argmax).c_str());
                return kExitOk;
            };
        });
    }

    // ---- hankel-norm -----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("hankel-norm", "finite-section Hankel norm at p = 2");
        auto sym = std::make_shared<std::string>();
        cmd->add_option("--symbol", *sym, "symbol expression or catalog name")->required();
        cmd->add_option("--m", cli.m, "Sobolev order (default 0)");
        cmd->add_option("--N", cli.N, "domain truncation (default 16)");
        cmd->add_option("--L", cli.L, "projection truncation (default 4N)");
        add_common(cmd, cli);
        cmd->callback([&cli, sym, &action] {
            action = [&cli, sym] {
                cli.resolve();
                const int N = cli.cfg.N;
                const int L = cli.cfg.L > 0 ? cli.cfg.L : 4 * N;
                HankelSection s = build_section(resolve_symbol(*sym), cli.cfg.m, N, L,
                                                cli.cfg.quad, cli.cfg.eigen_tol);
                const double norm = section_norm(s);
                std::ostringstream out;
                if (cli.cfg.format == "json") {
                    ordered_json j = hankel_section_json(s);
                    j["meta"]["symbol"] = *sym;
                    j["meta"]["section_norm"] = norm;
                    out << j.dump(2) << "\n";
                } else {
                    out << "m,N,L,section_norm\n"
                        << s.m << ',' << s.N << ',' << s.L << ',' << fmt(norm) << '\n';
                }
                cli.emit(out.str());
                return kExitOk;
            };
        });
    }

    // ---- hankel-probe ----------------------------------------------------
    {
        auto* cmd = app.add_subcommand("hankel-probe",
                                       "|H_g k_z| along rays (compactness probe)");
        auto sym = std::make_shared<std::string>();
        auto radii = std::make_shared<std::string>("0,2,4,6,8");
        cmd->add_option("--symbol", *sym, "symbol expression or catalog name")->required();
        cmd->add_option("--m", cli.m, "Sobolev order (default 0)");
        cmd->add_option("--radii", *radii, "comma-separated radii (default 0,2,4,6,8)");
        cmd->add_option("--L", cli.L, "projection truncation (default: kernel truncation)");
        cmd->add_option("--directions", cli.directions,
                        "ray count (default 8; radial symbols use 1)");
        cmd->add_option("--tol-vanish", cli.tol_vanish, "verdict tolerance (default 1e-3)");
        add_common(cmd, cli);
        cmd->callback([&cli, sym, radii, &action] {
            action = [&cli, sym, radii] {
                cli.resolve();
                SymbolExpr g = resolve_symbol(*sym);
                std::vector<cd> dirs;
                if (cli.directions && !is_radial(g))
                    for (int d = 0; d < cli.cfg.directions; ++d)
                        dirs.push_back(std::polar(1.0, 2.0 * M_PI * d / cli.cfg.directions));
                ProbeCurve curve = kernel_probe(g, cli.cfg.m, parse_radii(*radii), dirs,
                                                cli.cfg.L, cli.cfg.quad);
                std::ostringstream out;
                if (cli.cfg.format == "json") {
                    ordered_json j = probe_curve_json(curve);
                    j["meta"]["symbol"] = *sym;
                    if (curve.radii.size() >= 4) {
                        CompactnessVerdict v = compactness_verdict(curve, cli.cfg.tol_vanish);
                        j["meta"]["compact_consistent"] = v.compact_consistent;
                        j["meta"]["final_max"] = v.final_max;
                    }
                    out << j.dump(2) << "\n";
                } else {
                    out << probe_curve_csv(curve);
                }
                cli.emit(out.str());
                if (curve.radii.size() >= 4) {
                    CompactnessVerdict v = compactness_verdict(curve, cli.cfg.tol_vanish);
                    std::fprintf(stderr, "%s\n", v.summary.c_str());
                }
                return kExitOk;
            };
        });
    }

    // ---- verify ----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("verify", "quantitative checks with verdicts");
        cmd->require_subcommand(1);

        {
            auto* sub = cmd->add_subcommand("lemma21", "growth integral boundedness");
            auto pprime = std::make_shared<double>(2.0);
            auto c = std::make_shared<double>(1.0);
            auto d = std::make_shared<int>(0);
            auto sigma = std::make_shared<double>(1.0);
            auto ngrid = std::make_shared<int>(25);
            sub->add_option("--m", cli.m, "Sobolev order (default 0)");
            sub->add_option("--pprime", *pprime, "exponent p' > 0 (default 2)");
            sub->add_option("--c", *c, "Gaussian rate c > 0 (default 1)");
            sub->add_option("--d", *d, "even radial exponent >= 0 (default 0)");
            sub->add_option("--sigma", *sigma, "lower end of the |z| grid (default 1)");
            sub->add_option("--grid", *ngrid, "grid size (default 25)");
            add_common(sub, cli);
            sub->callback([&cli, pprime, c, d, sigma, ngrid, &action] {
                action = [&cli, pprime, c, d, sigma, ngrid] {
                    cli.resolve();
                    return run_lemma_report(cli, check_lemma21(cli.cfg.m, *pprime, *c, *d,
                                                               *sigma, *ngrid, cli.cfg.quad));
                };
            });
        }
        {
            auto* sub = cmd->add_subcommand("lemma23", "series envelope against e^y");
            auto t = std::make_shared<double>(0.0);
            auto ymin = std::make_shared<double>(1.0);
            auto ymax = std::make_shared<double>(50.0);
            auto ny = std::make_shared<int>(50);
            auto M = std::make_shared<double>(1.0);
            sub->add_option("--t", *t, "series exponent t (default 0)");
            sub->add_option("--ymin", *ymin, "grid start (default 1)");
            sub->add_option("--ymax", *ymax, "grid end (default 50)");
            sub->add_option("--grid", *ny, "grid size (default 50)");
            sub->add_option("--M", *M, "verdict region y >= M (default 1)");
            add_common(sub, cli);
            sub->callback([&cli, t, ymin, ymax, ny, M, &action] {
                action = [&cli, t, ymin, ymax, ny, M] {
                    cli.resolve();
                    return run_lemma_report(cli,
                                            check_lemma23_series(*t, *ymin, *ymax, *ny, *M));
                };
            });
        }
        {
            auto* sub = cmd->add_subcommand("kernel-bound", "pointwise kernel growth bound");
            auto pairs = std::make_shared<int>(10000);
            auto rmax = std::make_shared<double>(12.0);
            sub->add_option("--m", cli.m, "Sobolev order (default 0)");
            sub->add_option("--pairs", *pairs, "number of (z, v) pairs (default 10000)");
            sub->add_option("--rmax", *rmax, "grid radius (default 12)");
            add_common(sub, cli);
            sub->callback([&cli, pairs, rmax, &action] {
                action = [&cli, pairs, rmax] {
                    cli.resolve();
                    return run_lemma_report(cli, check_kernel_bound(cli.cfg.m, *pairs, *rmax));
                };
            });
        }
        for (bool vanishing : {false, true}) {
            auto* sub = cmd->add_subcommand(vanishing ? "thm32" : "thm28",
                                            vanishing
                                                ? "vanishing-oscillation equivalences"
                                                : "bounded-oscillation equivalences");
            auto sym = std::make_shared<std::string>();
            sub->add_option("--symbol", *sym, "catalog symbol name")->required();
            sub->add_option("--m", cli.m, "Sobolev order (default 0)");
            sub->add_option("--p", cli.p, "exponent (default 2)");
            sub->add_option("--r", cli.r, "disk radius (default 1)");
            sub->add_option("--tol-vanish", cli.tol_vanish, "vanishing tolerance");
            sub->add_option("--delta", cli.delta, "lattice spacing (default r/2)");
            sub->add_option("--R", cli.R, "lattice truncation radius (default 12)");
            add_common(sub, cli);
            sub->callback([&cli, sym, vanishing, &action] {
                action = [&cli, sym, vanishing] {
                    cli.resolve();
                    return run_lemma_report(
                        cli, check_equivalence_thm(vanishing
                                                       ? EquivalenceTheorem::Vanishing32
                                                       : EquivalenceTheorem::Bounded28,
                                                   *sym, cli.cfg.p, cli.cfg.r, cli.cfg.m,
                                                   cli.cfg.lattice(), cli.cfg.berezin,
                                                   cli.cfg.quad, cli.cfg.tol_vanish));
                };
            });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const parse_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const error& e) {
        const std::string what = e.what();
        std::fprintf(stderr, "error: %s\n", what.c_str());
        return what.rfind("config", 0) == 0 || what.find("cannot open config") == 0
                   ? kExitUsage
                   : kExitComputation;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitComputation;
    }
}
