#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "fockso/common.hpp"
#include "fockso/parallel.hpp"
#include "fockso/quadrature.hpp"
#include "fockso/stablefun.hpp"
#include "fockso/symbols.hpp"

namespace fockso {

inline constexpr int kMaxCoeffLen = 4096;

/// f = sum_k coeffs[k] * b_k with b_k(v) = sqrt(m!/(k+m)!) v^k, the
/// orthonormal monomial basis of the order-m space. Under the adopted
/// normalization, norm(f)^2 = sum |coeffs[k]|^2.
struct CoeffVector {
    int m = 0;
    std::vector<cd> coeffs;

    CoeffVector() = default;
    CoeffVector(int order, std::vector<cd> c) : m(order), coeffs(std::move(c))
    {
        KernelParams check(m);
        if (coeffs.size() > kMaxCoeffLen) throw error("coefficient vector longer than 4096");
    }

    static CoeffVector basis(int m, int k)
    {
        std::vector<cd> c(k + 1, cd(0.0, 0.0));
        c[k] = 1.0;
        return CoeffVector(m, std::move(c));
    }
};

/// Evaluates sum c_k b_k(v) by the stable ratio recurrence
/// b_{k+1} = b_k * v / sqrt(k+m+1); |b_k(v)| <= exp(|v|^2/2) keeps this in
/// double range for every quadrature node the library uses.
inline cd eval_coeff(const CoeffVector& f, cd v)
{
    cd acc = 0.0, bk = 1.0;
    for (size_t k = 0; k < f.coeffs.size(); ++k) {
        acc += f.coeffs[k] * bk;
        bk *= v / std::sqrt(static_cast<double>(k + f.m + 1));
    }
    return acc;
}

/// Square lattice {delta (j + i k)} clipped to |.| <= R, enumerated row by
/// row so sweeps are deterministic.
struct LatticeSpec {
    double delta = 0.5;
    double R = 12.0;

    LatticeSpec() = default;
    LatticeSpec(double d, double radius) : delta(d), R(radius)
    {
        if (delta <= 0.0 || R <= 0.0 || delta > R)
            throw error("lattice needs 0 < delta <= R");
    }
};

inline std::vector<cd> lattice_points(const LatticeSpec& lat)
{
    const int J = static_cast<int>(std::floor(lat.R / lat.delta));
    std::vector<cd> pts;
    for (int k = -J; k <= J; ++k)
        for (int j = -J; j <= J; ++j) {
            cd z(lat.delta * j, lat.delta * k);
            if (std::abs(z) <= lat.R + 1e-12) pts.push_back(z);
        }
    return pts;
}

/// Result of a lattice sweep of a pointwise estimator: the sampled sup (a
/// lower bound for the true one), where it was attained, the per-point data
/// and a |z|-binned max profile for divergence/vanishing detection.
struct OscillationReport {
    double sup_value = 0.0;
    cd argmax{0.0, 0.0};
    std::vector<std::pair<double, double>> profile; // (bin upper edge, max over bin)
    std::vector<cd> points;
    std::vector<double> values;
    bool vanishing_consistent = false;
    double tol_vanish = 0.0;
};

namespace detail {

inline OscillationReport make_report(std::vector<cd> points, std::vector<double> values,
                                     double bin_width = 1.0)
{
    OscillationReport rep;
    rep.points = std::move(points);
    rep.values = std::move(values);
    double rmax = 0.0;
    for (const cd& z : rep.points) rmax = std::max(rmax, std::abs(z));
    const int nbins = std::max(1, static_cast<int>(std::ceil(rmax / bin_width - 1e-12)));
    std::vector<double> binmax(nbins, -1.0);
    for (size_t i = 0; i < rep.points.size(); ++i) {
        int b = std::min(nbins - 1,
                         static_cast<int>(std::floor(std::abs(rep.points[i]) / bin_width)));
        binmax[b] = std::max(binmax[b], rep.values[i]);
        if (i == 0 || rep.values[i] > rep.sup_value) {
            rep.sup_value = rep.values[i];
            rep.argmax = rep.points[i];
        }
    }
    for (int b = 0; b < nbins; ++b)
        if (binmax[b] >= 0.0) rep.profile.emplace_back(bin_width * (b + 1), binmax[b]);
    return rep;
}

/// Last three profile bins below tol and monotone non-increasing.
inline bool profile_vanishes(const std::vector<std::pair<double, double>>& profile, double tol)
{
    if (profile.size() < 3) return false;
    size_t n = profile.size();
    double a = profile[n - 3].second, b = profile[n - 2].second, c = profile[n - 1].second;
    double slack = 1e-12 + 1e-9 * std::abs(a);
    return a < tol && b < tol && c < tol && b <= a + slack && c <= b + slack;
}

/// Growth detector used for bounded-vs-diverging verdicts on profiles over
/// a finite window: diverging when the tail bins keep rising and the last
/// bin sits well above the mid-sweep level. A 10x-median budget would
/// misread decaying profiles (compact support) as violations.
inline bool profile_diverges(const std::vector<std::pair<double, double>>& profile)
{
    if (profile.size() < 4) return false;
    size_t n = profile.size();
    double a = profile[n - 3].second, b = profile[n - 2].second, c = profile[n - 1].second;
    if (!(b >= a * (1.0 - 1e-9) && c >= b * (1.0 - 1e-9))) return false;
    double mid = profile[(n - 1) / 2].second;
    return c > 2.0 * mid + 1e-12;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Norms and inner products.

namespace detail {

inline void check_norm_admissible(const SymbolExpr& g, double p)
{
    // |g|^p grows like exp(p s |v|^2) against the weight exp(-(p/2)|v|^2);
    // integrability needs s < 1/2, with margin for quadrature tails.
    double s = max_expq_total(g);
    if (s >= 0.45)
        throw error("symbol grows like exp(" + fmt(s) +
                    "|v|^2); rejected by the admissibility check (needs < 0.45)");
    (void)p;
}

} // namespace detail

/// norm(g)_{p,m} = { w_{p,m} int |g|^p |v|^{mp} e^{-(p/2)|v|^2} dA }^{1/p}
/// with w_{p,m} = (p/2)^{mp/2+1} / (pi Gamma(mp/2+1)). After t = (p/2)|v|^2
/// the weight becomes t^{mp/2} e^{-t} and the prefactors collapse so that
/// norm(1) = 1 exactly; the Gauss rule then integrates polynomial symbols
/// exactly as well.
template <class Eval>
double norm_pm_eval(Eval&& geval, double p, int m, const QuadConfig& cfg)
{
    KernelParams check(m);
    if (p < 1.0) throw error("norm exponent p must be >= 1");
    const double alpha = 0.5 * m * p;
    PlaneRule rule = build_plane_rule_alpha(alpha, cfg.n_radial, cfg.n_angular);
    const double scale = std::sqrt(2.0 / p); // v = scale * u
    double acc = 0.0, comp = 0.0;
    const double wtheta = 2.0 * M_PI / rule.n_angular;
    for (int i = 0; i < rule.n_radial; ++i) {
        const double r = std::sqrt(rule.t_nodes[i]);
        const double w = 0.5 * rule.t_weights[i] * wtheta;
        for (int j = 0; j < rule.n_angular; ++j) {
            const cd v = scale * std::polar(r, wtheta * j);
            const double fv = std::pow(std::abs(geval(v)), p);
            if (!std::isfinite(fv))
                throw error("non-finite integrand at plane node v = " + fmt(v));
            const double term = w * fv;
            double t = acc + term;
            if (std::abs(acc) >= std::abs(term))
                comp += (acc - t) + term;
            else
                comp += (term - t) + acc;
            acc = t;
        }
    }
    acc += comp;
    const double normp = acc / (M_PI * std::tgamma(alpha + 1.0));
    return std::pow(normp, 1.0 / p);
}

inline double norm_pm(const SymbolExpr& g, double p, int m, const QuadConfig& cfg = {})
{
    detail::check_norm_admissible(g, p);
    return norm_pm_eval([&](cd v) { return eval_symbol(g, v); }, p, m, cfg);
}

inline double norm_pm(const CoeffVector& f, double p, int m, const QuadConfig& cfg = {})
{
    if (f.m != m) throw error("coefficient vector order does not match requested m");
    return norm_pm_eval([&](cd v) { return eval_coeff(f, v); }, p, m, cfg);
}

/// <f, g>_{2,m} = (1/(pi m!)) int f conj(g) |v|^{2m} e^{-|v|^2} dA.
/// The 1/(pi m!) normalization is what makes the monomial basis orthonormal
/// and the kernel reproducing; see README for the bookkeeping.
template <class F, class G>
cd inner_2m_eval(F&& feval, G&& geval, int m, const QuadConfig& cfg)
{
    KernelParams check(m);
    PlaneRule rule = build_plane_rule(m, cfg.n_radial, cfg.n_angular);
    cd val = integrate_plane(rule, [&](cd v) { return feval(v) * std::conj(geval(v)); });
    return val / (M_PI * factorial(m));
}

inline cd inner_2m(const SymbolExpr& f, const SymbolExpr& g, int m, const QuadConfig& cfg = {})
{
    return inner_2m_eval([&](cd v) { return eval_symbol(f, v); },
                         [&](cd v) { return eval_symbol(g, v); }, m, cfg);
}

inline cd inner_2m(const CoeffVector& f, const CoeffVector& g)
{
    if (f.m != g.m) throw error("coefficient vectors have different orders");
    cd acc = 0.0;
    size_t n = std::min(f.coeffs.size(), g.coeffs.size());
    for (size_t k = 0; k < n; ++k) acc += f.coeffs[k] * std::conj(g.coeffs[k]);
    return acc;
}

inline cd inner_2m(const SymbolExpr& f, const CoeffVector& g, const QuadConfig& cfg = {})
{
    return inner_2m_eval([&](cd v) { return eval_symbol(f, v); },
                         [&](cd v) { return eval_coeff(g, v); }, g.m, cfg);
}

/// Projection coefficients c_l = <g, b_l>_{2,m} for l <= L. The basis values
/// at each node come from the same ratio recurrence as eval_coeff, so one
/// pass over the nodes fills the whole vector.
inline CoeffVector project(const SymbolExpr& g, int m, int L, const QuadConfig& cfg = {})
{
    KernelParams check(m);
    if (L < 0 || L >= kMaxCoeffLen) throw error("projection truncation outside [0, 4095]");
    detail::check_norm_admissible(g, 2.0);

    PlaneRule rule = build_plane_rule(m, cfg.n_radial, cfg.n_angular);
    std::vector<cd> acc(L + 1, cd(0.0, 0.0));
    const double wtheta = 2.0 * M_PI / rule.n_angular;
    std::vector<cd> bvals(L + 1);
    for (int i = 0; i < rule.n_radial; ++i) {
        const double r = std::sqrt(rule.t_nodes[i]);
        const double w = 0.5 * rule.t_weights[i] * wtheta;
        for (int j = 0; j < rule.n_angular; ++j) {
            const cd v = std::polar(r, wtheta * j);
            cd bk = 1.0;
            for (int l = 0; l <= L; ++l) {
                bvals[l] = bk;
                bk *= v / std::sqrt(static_cast<double>(l + m + 1));
            }
            const cd gv = eval_symbol(g, v);
            for (int l = 0; l <= L; ++l) acc[l] += w * gv * std::conj(bvals[l]);
        }
    }
    const double norm = M_PI * factorial(m);
    for (cd& c : acc) c /= norm;
    return CoeffVector(m, std::move(acc));
}

// ---------------------------------------------------------------------------
// Disk means and the oscillation estimators.

namespace detail {

/// Builds the rule for B(z; r), snapping panel edges onto indicator circles
/// concentric with z and falling back to a 4x panel refinement when a
/// discontinuity circle crosses the disk off-center.
inline DiskRule disk_rule_for(const SymbolExpr& g, cd z, double r, const QuadConfig& cfg)
{
    std::vector<std::pair<cd, double>> circles;
    indicator_circles(g, circles);
    std::vector<double> snap;
    bool refine = false;
    for (const auto& [c0, rho] : circles) {
        const double dist = std::abs(z - c0);
        if (dist <= 1e-9) {
            if (rho < r) snap.push_back(rho);
        } else if (std::abs(dist - rho) <= r) {
            refine = true;
        }
    }
    return build_disk_rule(z, r, cfg, snap, refine);
}

} // namespace detail

/// Linear disk mean (1/(pi r^2)) int_{B(z;r)} g dA.
inline cd disk_mean_linear(const SymbolExpr& g, cd z, double r, const QuadConfig& cfg = {})
{
    if (r <= 0.0) throw error("disk mean needs r > 0");
    DiskRule rule = detail::disk_rule_for(g, z, r, cfg);
    return integrate_disk(rule, [&](cd v) { return eval_symbol(g, v); }) / (M_PI * r * r);
}

/// p-mean (1/(pi r^2)) int_{B(z;r)} |g|^p dA.
inline double disk_mean_p(const SymbolExpr& g, cd z, double r, double p,
                          const QuadConfig& cfg = {})
{
    if (r <= 0.0) throw error("disk mean needs r > 0");
    if (p < 1.0) throw error("disk mean exponent p must be >= 1");
    DiskRule rule = detail::disk_rule_for(g, z, r, cfg);
    return integrate_disk_real(rule, [&](cd v) { return std::pow(std::abs(eval_symbol(g, v)), p); }) /
           (M_PI * r * r);
}

namespace detail {

/// Mean of |g - mu|^p over B(z;r) given a prebuilt rule.
inline double disk_mean_centered(const SymbolExpr& g, const DiskRule& rule, double r, double p,
                                 cd mu)
{
    return integrate_disk_real(
               rule, [&](cd v) { return std::pow(std::abs(eval_symbol(g, v) - mu), p); }) /
           (M_PI * r * r);
}

} // namespace detail

/// Pointwise mean oscillation { (1/(pi r^2)) int_{B(z;r)} |g - mean|^p }^{1/p}.
inline double disk_oscillation(const SymbolExpr& g, cd z, double r, double p,
                               const QuadConfig& cfg = {})
{
    DiskRule rule = detail::disk_rule_for(g, z, r, cfg);
    cd mu = integrate_disk(rule, [&](cd v) { return eval_symbol(g, v); }) / (M_PI * r * r);
    return std::pow(detail::disk_mean_centered(g, rule, r, p, mu), 1.0 / p);
}

/// Sampled BMO estimator: sup over the lattice of the pointwise disk
/// oscillation. The result is a lower bound for the true sup; the binned
/// profile feeds the divergence/vanishing detectors.
inline OscillationReport bmo_norm(const SymbolExpr& g, double r, double p,
                                  const LatticeSpec& lattice, const QuadConfig& cfg = {})
{
    if (p < 1.0) throw error("bmo estimator needs p >= 1");
    std::vector<cd> pts = lattice_points(lattice);
    std::vector<double> vals(pts.size());
    // No-indicator case shares one translated rule across the sweep.
    const bool plain = !has_indicator(g);
    DiskRule base = plain ? build_disk_rule(cd(0.0, 0.0), r, cfg) : DiskRule{};
    parallel_for(pts.size(), [&](size_t i) {
        if (plain) {
            DiskRule rule = base.translated(pts[i]);
            cd mu = integrate_disk(rule, [&](cd v) { return eval_symbol(g, v); }) / (M_PI * r * r);
            vals[i] = std::pow(detail::disk_mean_centered(g, rule, r, p, mu), 1.0 / p);
        } else {
            vals[i] = disk_oscillation(g, pts[i], r, p, cfg);
        }
    });
    return detail::make_report(std::move(pts), std::move(vals));
}

/// Pointwise sup_{v in B(z;r)} |g(v) - g(z)| sampled at the disk-rule nodes
/// plus a 64-point boundary ring; for the atoms of the language the sup
/// lives on the boundary or along radial rays, so this sampling is tight.
inline double bo_oscillation(const SymbolExpr& g, cd z, double r, const QuadConfig& cfg = {})
{
    DiskRule rule = build_disk_rule(z, r, cfg);
    const cd gz = eval_symbol(g, z);
    double m = 0.0;
    for (const cd& v : rule.nodes) m = std::max(m, std::abs(eval_symbol(g, v) - gz));
    for (int j = 0; j < 64; ++j) {
        const cd v = z + std::polar(r, 2.0 * M_PI * (j + 0.5) / 64.0);
        m = std::max(m, std::abs(eval_symbol(g, v) - gz));
    }
    return m;
}

inline OscillationReport bo_norm(const SymbolExpr& g, double r, const LatticeSpec& lattice,
                                 const QuadConfig& cfg = {})
{
    if (has_indicator(g))
        throw error("bo estimator rejects indicator-bearing symbols (not continuous)");
    std::vector<cd> pts = lattice_points(lattice);
    std::vector<double> vals(pts.size());
    parallel_for(pts.size(), [&](size_t i) { vals[i] = bo_oscillation(g, pts[i], r, cfg); });
    return detail::make_report(std::move(pts), std::move(vals));
}

enum class Estimator { Bmo, Ba, Bo };

inline Estimator estimator_from_name(std::string_view name)
{
    if (name == "bmo") return Estimator::Bmo;
    if (name == "ba") return Estimator::Ba;
    if (name == "bo") return Estimator::Bo;
    throw error("unknown estimator '" + std::string(name) + "' (expected bmo, ba or bo)");
}

/// |z|-binned vanishing profile of the chosen estimator. The report is
/// flagged vanishing-consistent when the last three bins sit below tol and
/// do not increase.
inline OscillationReport vanishing_profile(Estimator est, const SymbolExpr& g, double r,
                                           double p, const LatticeSpec& lattice,
                                           const QuadConfig& cfg = {}, double tol_vanish = 1e-3)
{
    OscillationReport rep;
    switch (est) {
    case Estimator::Bmo:
        rep = bmo_norm(g, r, p, lattice, cfg);
        break;
    case Estimator::Bo:
        rep = bo_norm(g, r, lattice, cfg);
        break;
    case Estimator::Ba: {
        std::vector<cd> pts = lattice_points(lattice);
        std::vector<double> vals(pts.size());
        parallel_for(pts.size(), [&](size_t i) { vals[i] = disk_mean_p(g, pts[i], r, p, cfg); });
        rep = detail::make_report(std::move(pts), std::move(vals));
        break;
    }
    }
    rep.tol_vanish = tol_vanish;
    rep.vanishing_consistent = detail::profile_vanishes(rep.profile, tol_vanish);
    return rep;
}

} // namespace fockso
