#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fockso/berezin.hpp"
#include "fockso/common.hpp"
#include "fockso/spaces.hpp"
#include "fockso/stablefun.hpp"
#include "fockso/symbols.hpp"

namespace fockso {

/// Outcome of one quantitative check: the measured ratio extrema across the
/// parameter grid, the verdict against the budget, and the raw profile.
/// runtime_seconds is diagnostic only and never enters serialized output,
/// which must stay byte-reproducible.
struct LemmaReport {
    std::string lemma_id;
    std::vector<std::pair<std::string, std::string>> params;
    double ratio_min = 0.0;
    double ratio_max = 0.0;
    cd argmax{0.0, 0.0};
    std::string verdict; // "bounded" or "violated"
    double budget = 0.0;
    std::vector<std::pair<double, double>> profile; // (grid coordinate, measured value)
    std::vector<std::pair<std::string, std::string>> notes;
    double runtime_seconds = 0.0;
};

namespace detail {

inline double median_of(std::vector<double> v)
{
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

struct StopWatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

/// SplitMix64; fixed seeds keep every grid bit-reproducible.
struct DetRng {
    uint64_t state;
    explicit DetRng(uint64_t seed) : state(seed) {}
    uint64_t next()
    {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

} // namespace detail

/// Growth-integral check: the ratio
///   int |e^{conj(z)w} - Q_m(conj(z)w)|^{p'} e^{-c|w|^2} |w|^d dA(w)
///     / ( |z|^d e^{(p'^2/(4c)) |z|^2} )
/// must stay bounded over |z| in [sigma, 10]. The integrand peaks at
/// w* = (p'/(2c)) z with Gaussian width 1/sqrt(c); a disk rule centered
/// there (wide enough to cover the origin too) integrates it in log scale.
/// d is restricted to even non-negative integers.
inline LemmaReport check_lemma21(int m, double pprime, double c, int d, double sigma,
                                 int n_grid = 25, const QuadConfig& cfg = {})
{
    detail::StopWatch watch;
    KernelParams check(m);
    if (pprime <= 0.0 || c <= 0.0 || sigma <= 0.0)
        throw error("growth check needs p' > 0, c > 0, sigma > 0");
    if (d < 0 || d % 2 != 0)
        throw error("growth check restricts d to even integers >= 0 (quadrature exactness)");
    if (sigma > 10.0) throw error("grid is |z| in [sigma, 10]; sigma must be <= 10");

    const double zmax = 10.0;
    const double radius = 10.0 / std::sqrt(c) + pprime * zmax / (2.0 * c);
    QuadConfig dcfg = cfg;
    dcfg.panels = std::max(cfg.panels, static_cast<int>(std::ceil(radius)));

    LemmaReport rep;
    rep.lemma_id = "growth-integral";
    rep.params = {{"m", std::to_string(m)}, {"pprime", fmt(pprime)},   {"c", fmt(c)},
                  {"d", std::to_string(d)}, {"sigma", fmt(sigma)},     {"n_grid", std::to_string(n_grid)}};

    std::vector<double> ratios(n_grid);
    for (int i = 0; i < n_grid; ++i) {
        const double zr = (n_grid == 1) ? sigma : sigma + (zmax - sigma) * i / (n_grid - 1);
        const cd z(zr, 0.0);
        const cd wstar = (pprime / (2.0 * c)) * z;
        DiskRule rule = build_disk_rule(wstar, radius, dcfg);
        LogComplex integral = integrate_disk_log(rule, [&](cd w) -> LogComplex {
            const cd zw = std::conj(z) * w;
            const double aw = std::abs(w);
            if (aw == 0.0) return LogComplex::zero();
            const LogComplex em = exp_remainder_em(m, zw);
            if (em.is_zero()) return LogComplex::zero();
            double lg = pprime * (em.logmag + m * std::log(std::abs(zw))) +
                        d * std::log(aw) - c * aw * aw;
            return LogComplex::make(lg, 0.0);
        });
        const double denom = d * std::log(zr) + (pprime * pprime / (4.0 * c)) * zr * zr;
        const double ratio = std::exp(integral.logmag - denom);
        if (!std::isfinite(ratio))
            throw error("growth check overflow despite log scale at |z| = " + fmt(zr) +
                        " (m=" + std::to_string(m) + ", p'=" + fmt(pprime) + ", c=" + fmt(c) +
                        ", d=" + std::to_string(d) + ")");
        ratios[i] = ratio;
        rep.profile.emplace_back(zr, ratio);
        if (i == 0 || ratio > rep.ratio_max) {
            rep.ratio_max = ratio;
            rep.argmax = z;
        }
        if (i == 0 || ratio < rep.ratio_min) rep.ratio_min = ratio;
    }
    rep.budget = 10.0 * detail::median_of(ratios);
    rep.verdict = (rep.ratio_max <= rep.budget) ? "bounded" : "violated";
    rep.runtime_seconds = watch.seconds();
    return rep;
}

/// Series-comparison check: S(y, t) = sum_k (y/(k+1))^t y^k / k! must be
/// within constant multiples of e^y. Terms are summed in log scale with a
/// max shift; the series is cut when terms fall below 1e-18 of the running
/// maximum.
inline LemmaReport check_lemma23_series(double t, double ymin, double ymax, int n_grid,
                                        double M = 1.0)
{
    detail::StopWatch watch;
    if (!(ymin > 0.0) || ymax < ymin) throw error("series check needs 0 < ymin <= ymax");
    if (ymax > 700.0) throw error("series check limited to y <= 700 (log-scale summation)");

    LemmaReport rep;
    rep.lemma_id = "series-envelope";
    rep.params = {{"t", fmt(t)},       {"ymin", fmt(ymin)}, {"ymax", fmt(ymax)},
                  {"n_grid", std::to_string(n_grid)}, {"M", fmt(M)}};

    std::vector<double> in_region;
    bool first = true, first_region = true;
    for (int i = 0; i < n_grid; ++i) {
        const double y = (n_grid == 1) ? ymin : ymin + (ymax - ymin) * i / (n_grid - 1);
        const double ly = std::log(y);
        std::vector<double> lt;
        double lt_max = -1e300;
        const int kcap = static_cast<int>(y + 60.0 * std::sqrt(y) + 200.0);
        for (int k = 0; k <= kcap; ++k) {
            const double l = t * (ly - std::log(k + 1.0)) + k * ly - std::lgamma(k + 1.0);
            lt.push_back(l);
            lt_max = std::max(lt_max, l);
            if (k > y && l < lt_max - 45.0) break;
        }
        double acc = 0.0;
        for (double l : lt) acc += std::exp(l - lt_max);
        const double ratio = std::exp(lt_max + std::log(acc) - y);
        rep.profile.emplace_back(y, ratio);
        if (first || ratio > rep.ratio_max) {
            rep.ratio_max = ratio;
            rep.argmax = cd(y, 0.0);
        }
        if (first || ratio < rep.ratio_min) rep.ratio_min = ratio;
        first = false;
        if (y >= M) {
            in_region.push_back(ratio);
            first_region = false;
        }
    }
    if (first_region) throw error("series check grid has no points with y >= M");

    const double med = detail::median_of(in_region);
    rep.budget = 10.0 * med;
    double rmax = *std::max_element(in_region.begin(), in_region.end());
    double rmin = *std::min_element(in_region.begin(), in_region.end());
    rep.verdict = (rmax <= rep.budget && rmin >= med / 10.0) ? "bounded" : "violated";
    rep.notes.emplace_back("region_min", fmt(rmin));
    rep.notes.emplace_back("region_max", fmt(rmax));
    rep.runtime_seconds = watch.seconds();
    return rep;
}

/// Pointwise kernel bound: ratio
///   |E_m(z conj(v))| (1 + |z||v|)^m / e^{|z|^2/2 + |v|^2/2 - |z-v|^2/8}
/// over a deterministic grid of pairs with |z|, |v| <= rmax. The grid leads
/// with diagonal pairs z = v = t (where the m = 0 ratio is exactly 1).
/// Divergence detection splits the pairs at the median of |z||v|: the bound
/// fails only if the far half grows past the near half.
inline LemmaReport check_kernel_bound(int m, int n_pairs = 10000, double rmax = 12.0)
{
    detail::StopWatch watch;
    KernelParams check(m);
    detail::DetRng rng(0x5eedULL + static_cast<uint64_t>(m));

    LemmaReport rep;
    rep.lemma_id = "kernel-pointwise-bound";
    rep.params = {{"m", std::to_string(m)},
                  {"n_pairs", std::to_string(n_pairs)},
                  {"rmax", fmt(rmax)}};

    std::vector<std::pair<cd, cd>> pairs;
    const int n_diag = 32;
    for (int i = 0; i < n_diag; ++i) {
        const double tt = rmax * i / (n_diag - 1.0);
        pairs.emplace_back(cd(tt, 0.0), cd(tt, 0.0));
    }
    while (pairs.size() < static_cast<size_t>(n_pairs)) {
        const cd z = std::polar(rmax * std::sqrt(rng.uniform()), 2.0 * M_PI * rng.uniform());
        const cd v = std::polar(rmax * std::sqrt(rng.uniform()), 2.0 * M_PI * rng.uniform());
        pairs.emplace_back(z, v);
    }

    std::vector<double> prod, ratio;
    prod.reserve(pairs.size());
    ratio.reserve(pairs.size());
    bool first = true;
    for (const auto& [z, v] : pairs) {
        const double az = std::abs(z), av = std::abs(v);
        const LogComplex em = exp_remainder_em(m, z * std::conj(v));
        const double lr = em.logmag + m * std::log1p(az * av) -
                          (0.5 * az * az + 0.5 * av * av - 0.125 * std::norm(z - v));
        const double r = std::exp(lr);
        if (!std::isfinite(r)) throw error("kernel bound ratio overflow at z=" + fmt(z));
        prod.push_back(az * av);
        ratio.push_back(r);
        if (first || r > rep.ratio_max) {
            rep.ratio_max = r;
            rep.argmax = z;
        }
        if (first || r < rep.ratio_min) rep.ratio_min = r;
        first = false;
    }

    const double split = detail::median_of(prod);
    double near = 0.0, far = 0.0;
    for (size_t i = 0; i < ratio.size(); ++i) {
        if (prod[i] <= split)
            near = std::max(near, ratio[i]);
        else
            far = std::max(far, ratio[i]);
    }
    rep.budget = 10.0 * near;
    rep.verdict = (far <= rep.budget) ? "bounded" : "violated";
    rep.notes.emplace_back("near_max", fmt(near));
    rep.notes.emplace_back("far_max", fmt(far));
    // coarse |z||v|-binned profile of the running max
    {
        const int nb = 12;
        std::vector<double> bm(nb, 0.0);
        for (size_t i = 0; i < ratio.size(); ++i) {
            int b = std::min(nb - 1, static_cast<int>(prod[i] / (rmax * rmax) * nb));
            bm[b] = std::max(bm[b], ratio[i]);
        }
        for (int b = 0; b < nb; ++b)
            rep.profile.emplace_back(rmax * rmax * (b + 1.0) / nb, bm[b]);
    }
    rep.runtime_seconds = watch.seconds();
    return rep;
}

enum class EquivalenceTheorem { Bounded28, Vanishing32 };

/// Desk-scale equivalence sweep for a catalog symbol: evaluates, over the
/// lattice points with |z| >= z_min,
///   (A) the kernel-smoothed mean oscillation B_m(|g - B_m g(z)|^p)(z),
///   (B) the disk mean of |g - (disk mean of g)|^p,
///   (C) the disk mean of |g - B_m g(z)|^p,
/// and checks that the three bounded (resp. vanishing) verdicts agree with
/// each other and with the catalog tag.
inline LemmaReport check_equivalence_thm(EquivalenceTheorem thm, const std::string& name,
                                         double p, double r, int m,
                                         const LatticeSpec& lattice,
                                         const BerezinConfig& bcfg = {},
                                         const QuadConfig& qcfg = {}, double tol_vanish = 1e-3)
{
    detail::StopWatch watch;
    const CatalogEntry& entry = catalog_entry(name);
    const SymbolExpr& g = entry.symbol;

    std::vector<cd> pts;
    for (const cd& z : lattice_points(lattice))
        if (std::abs(z) >= bcfg.z_min) pts.push_back(z);
    if (pts.empty()) throw error("no lattice points with |z| >= z_min");

    std::vector<double> va(pts.size()), vb(pts.size()), vc(pts.size());
    const bool plain = !has_indicator(g);
    DiskRule base = plain ? build_disk_rule(cd(0.0, 0.0), r, qcfg) : DiskRule{};
    parallel_for(pts.size(), [&](size_t i) {
        const cd z = pts[i];
        detail::BerezinField field(g, z, m, bcfg.rho, bcfg.quad);
        const cd bz = field.integrate([&](cd v) { return eval_symbol(g, v); });
        va[i] = field
                    .integrate([&](cd v) {
                        return cd(std::pow(std::abs(eval_symbol(g, v) - bz), p), 0.0);
                    })
                    .real();
        DiskRule rule = plain ? base.translated(z) : detail::disk_rule_for(g, z, r, qcfg);
        const cd mu = integrate_disk(rule, [&](cd v) { return eval_symbol(g, v); }) /
                      (M_PI * r * r);
        vb[i] = detail::disk_mean_centered(g, rule, r, p, mu);
        vc[i] = detail::disk_mean_centered(g, rule, r, p, bz);
    });

    auto repA = detail::make_report(pts, va);
    auto repB = detail::make_report(pts, vb);
    auto repC = detail::make_report(pts, vc);

    LemmaReport rep;
    rep.lemma_id = (thm == EquivalenceTheorem::Bounded28) ? "equivalence-bounded"
                                                          : "equivalence-vanishing";
    rep.params = {{"symbol", name},     {"p", fmt(p)},
                  {"r", fmt(r)},        {"m", std::to_string(m)},
                  {"z_min", fmt(bcfg.z_min)}, {"tol_vanish", fmt(tol_vanish)}};

    bool verdictA, verdictB, verdictC;
    std::optional<bool> expected;
    if (thm == EquivalenceTheorem::Bounded28) {
        verdictA = !detail::profile_diverges(repA.profile);
        verdictB = !detail::profile_diverges(repB.profile);
        verdictC = !detail::profile_diverges(repC.profile);
        expected = entry.tags.bmo;
    } else {
        verdictA = detail::profile_vanishes(repA.profile, tol_vanish);
        verdictB = detail::profile_vanishes(repB.profile, tol_vanish);
        verdictC = detail::profile_vanishes(repC.profile, tol_vanish);
        expected = entry.tags.vmo;
    }

    bool agree = (verdictA == verdictB) && (verdictB == verdictC) &&
                 (!expected || verdictA == *expected);
    rep.verdict = agree ? "bounded" : "violated";
    rep.ratio_max = repA.sup_value;
    rep.ratio_min = repA.values.empty()
                        ? 0.0
                        : *std::min_element(repA.values.begin(), repA.values.end());
    rep.argmax = repA.argmax;
    rep.profile = repA.profile;
    auto flag = [](bool b) { return b ? std::string("yes") : std::string("no"); };
    rep.notes.emplace_back("berezin_oscillation", flag(verdictA));
    rep.notes.emplace_back("disk_oscillation", flag(verdictB));
    rep.notes.emplace_back("disk_berezin_center", flag(verdictC));
    if (expected) rep.notes.emplace_back("tag_expected", flag(*expected));
    rep.notes.emplace_back("sup_B", fmt(repB.sup_value));
    rep.notes.emplace_back("sup_C", fmt(repC.sup_value));
    rep.runtime_seconds = watch.seconds();
    return rep;
}

} // namespace fockso
