#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "fockso/common.hpp"
#include "fockso/logcomplex.hpp"
#include "fockso/sym_eigen.hpp"

namespace fockso {

struct QuadConfig {
    int n_radial = 64;
    int n_angular = 128;
    int panels = 8;
};

/// Gauss rule for the weight t^alpha e^{-t} on (0, inf), plus a uniform
/// angular rule. With t = |v|^2 this discretizes plane integrals against
/// |v|^{2 alpha} e^{-|v|^2} dA:
///
///   int f(v) |v|^{2a} e^{-|v|^2} dA
///     = (1/2) sum_i sum_j w_i (2 pi / n_angular) f(sqrt(t_i) e^{i theta_j}).
///
/// The radial part is exact on t^k for k <= 2 n_radial - 1; the angular part
/// kills every charge not divisible by n_angular.
struct PlaneRule {
    double alpha = 0.0;
    int n_radial = 0;
    int n_angular = 0;
    std::vector<double> t_nodes;
    std::vector<double> t_weights; // sum = Gamma(alpha + 1)
};

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix of the monic
/// generalized Laguerre recurrence, weights come from the first eigenvector
/// components scaled by the zeroth moment Gamma(alpha + 1).
inline PlaneRule build_plane_rule_alpha(double alpha, int n_radial, int n_angular)
{
    if (alpha <= -1.0) throw error("plane rule weight exponent must exceed -1");
    if (n_radial < 1) throw error("plane rule needs n_radial >= 1");
    if (n_angular < 2) throw error("plane rule needs n_angular >= 2");

    std::vector<double> d(n_radial), e(n_radial), z(n_radial, 0.0);
    for (int k = 0; k < n_radial; ++k) {
        d[k] = 2.0 * k + alpha + 1.0;
        e[k] = (k + 1 < n_radial) ? std::sqrt((k + 1.0) * (k + 1.0 + alpha)) : 0.0;
    }
    // tridiag_eigen_first_row expects e[i] to couple i and i+1; shift down.
    std::vector<double> sub(n_radial, 0.0);
    for (int k = 1; k < n_radial; ++k) sub[k - 1] = e[k - 1];
    z[0] = 1.0;
    tridiag_eigen_first_row(d, sub, z);

    std::vector<int> order(n_radial);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });

    PlaneRule rule;
    rule.alpha = alpha;
    rule.n_radial = n_radial;
    rule.n_angular = n_angular;
    rule.t_nodes.resize(n_radial);
    rule.t_weights.resize(n_radial);
    const double mu0 = std::tgamma(alpha + 1.0);
    for (int i = 0; i < n_radial; ++i) {
        rule.t_nodes[i] = d[order[i]];
        rule.t_weights[i] = mu0 * z[order[i]] * z[order[i]];
    }
    return rule;
}

inline PlaneRule build_plane_rule(int m, int n_radial, int n_angular)
{
    if (m < 0) throw error("plane rule order must be non-negative");
    return build_plane_rule_alpha(static_cast<double>(m), n_radial, n_angular);
}

/// int f(v) |v|^{2 alpha} e^{-|v|^2} dA, linear scale, deterministic
/// fixed-order Neumaier summation. Throws on a non-finite integrand value.
template <class F>
cd integrate_plane(const PlaneRule& rule, F&& f)
{
    cd sum = 0.0, comp = 0.0;
    const double wtheta = 2.0 * M_PI / rule.n_angular;
    for (int i = 0; i < rule.n_radial; ++i) {
        const double r = std::sqrt(rule.t_nodes[i]);
        const double w = 0.5 * rule.t_weights[i] * wtheta;
        for (int j = 0; j < rule.n_angular; ++j) {
            const double th = wtheta * j;
            const cd v = std::polar(r, th);
            const cd fv = f(v);
            if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag()))
                throw error("non-finite integrand at plane node v = " + fmt(v));
            const cd term = w * fv;
            cd t = sum + term;
            if (std::abs(sum) >= std::abs(term))
                comp += (sum - t) + term;
            else
                comp += (term - t) + sum;
            sum = t;
        }
    }
    return sum + comp;
}

/// Log-scale variant: logf(v) gives the integrand as a LogComplex; weights
/// are folded in log space and the whole sum is shifted by the running
/// maximum, so magnitudes up to exp(700) survive.
template <class LF>
LogComplex integrate_plane_log(const PlaneRule& rule, LF&& logf)
{
    const double wtheta = 2.0 * M_PI / rule.n_angular;
    std::vector<LogComplex> vals;
    vals.reserve(static_cast<size_t>(rule.n_radial) * rule.n_angular);
    double shift = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < rule.n_radial; ++i) {
        const double r = std::sqrt(rule.t_nodes[i]);
        const double lw = std::log(0.5 * rule.t_weights[i] * wtheta);
        for (int j = 0; j < rule.n_angular; ++j) {
            const cd v = std::polar(r, wtheta * j);
            LogComplex lf = logf(v);
            if (std::isnan(lf.logmag) || lf.logmag == std::numeric_limits<double>::infinity())
                throw error("non-finite integrand at plane node v = " + fmt(v));
            lf.logmag += lw;
            shift = std::max(shift, lf.logmag);
            vals.push_back(lf);
        }
    }
    if (shift == -std::numeric_limits<double>::infinity()) return LogComplex::zero();
    cd acc = 0.0;
    for (const LogComplex& lf : vals)
        if (!lf.is_zero()) acc += std::polar(std::exp(lf.logmag - shift), lf.phase);
    if (acc == cd(0.0, 0.0)) return LogComplex::zero();
    return LogComplex::make(shift + std::log(std::abs(acc)), std::arg(acc));
}

/// Composite polar product rule on the Euclidean disk B(center; radius).
/// Radial panels carry Gauss-Legendre nodes (the area factor rho is folded
/// into the weights); the angular rule is uniform with a half-step offset,
/// which keeps kinked integrands like |Re v| a notch more accurate.
/// Weights sum to pi * radius^2.
struct DiskRule {
    cd center{0.0, 0.0};
    double radius = 0.0;
    int n_radial = 0;
    int n_angular = 0;
    int panels = 0;
    std::vector<cd> nodes;
    std::vector<double> weights;

    DiskRule translated(cd new_center) const
    {
        DiskRule r = *this;
        const cd dz = new_center - center;
        r.center = new_center;
        for (cd& v : r.nodes) v += dz;
        return r;
    }
};

namespace detail {

/// Gauss-Legendre nodes/weights on [-1, 1] via Golub-Welsch.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w)
{
    std::vector<double> d(n, 0.0), sub(n, 0.0), z(n, 0.0);
    for (int k = 1; k < n; ++k) sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    z[0] = 1.0;
    tridiag_eigen_first_row(d, sub, z);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return d[i] < d[j]; });
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        x[i] = d[order[i]];
        w[i] = 2.0 * z[order[i]] * z[order[i]];
    }
}

} // namespace detail

/// snap_radii lists radial discontinuities (distances from center) to pin
/// panel edges on; refine4 quadruples the panel count, the documented
/// fallback when a discontinuity circle crosses the disk off-center.
inline DiskRule build_disk_rule(cd center, double radius, const QuadConfig& cfg,
                                const std::vector<double>& snap_radii = {},
                                bool refine4 = false)
{
    if (radius <= 0.0) throw error("disk rule needs a positive radius");
    if (cfg.n_radial < 1 || cfg.n_angular < 2 || cfg.panels < 1)
        throw error("disk rule sizes must be positive");

    int panels = cfg.panels * (refine4 ? 4 : 1);
    std::vector<double> edges;
    edges.reserve(panels + 1 + snap_radii.size());
    for (int i = 0; i <= panels; ++i) edges.push_back(radius * i / panels);
    for (double s : snap_radii)
        if (s > 1e-12 && s < radius * (1.0 - 1e-12)) edges.push_back(s);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [&](double a, double b) { return std::abs(a - b) < 1e-12 * radius; }),
                edges.end());

    std::vector<double> gx, gw;
    detail::gauss_legendre(cfg.n_radial, gx, gw);

    DiskRule rule;
    rule.center = center;
    rule.radius = radius;
    rule.n_radial = cfg.n_radial;
    rule.n_angular = cfg.n_angular;
    rule.panels = static_cast<int>(edges.size()) - 1;
    rule.nodes.reserve(static_cast<size_t>(rule.panels) * cfg.n_radial * cfg.n_angular);
    rule.weights.reserve(rule.nodes.capacity());

    const double wtheta = 2.0 * M_PI / cfg.n_angular;
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
        const double a = edges[p], b = edges[p + 1];
        for (int i = 0; i < cfg.n_radial; ++i) {
            const double rho = 0.5 * (b - a) * gx[i] + 0.5 * (a + b);
            const double wr = 0.5 * (b - a) * gw[i] * rho * wtheta;
            for (int j = 0; j < cfg.n_angular; ++j) {
                const double th = wtheta * (j + 0.5);
                rule.nodes.push_back(center + std::polar(rho, th));
                rule.weights.push_back(wr);
            }
        }
    }
    return rule;
}

/// Plain area integral over the disk, deterministic Neumaier summation.
template <class F>
cd integrate_disk(const DiskRule& rule, F&& f)
{
    cd sum = 0.0, comp = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const cd fv = f(rule.nodes[i]);
        if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag()))
            throw error("non-finite integrand at disk node v = " + fmt(rule.nodes[i]));
        const cd term = rule.weights[i] * fv;
        cd t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

template <class F>
double integrate_disk_real(const DiskRule& rule, F&& f)
{
    double sum = 0.0, comp = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        const double fv = f(rule.nodes[i]);
        if (!std::isfinite(fv))
            throw error("non-finite integrand at disk node v = " + fmt(rule.nodes[i]));
        const double term = rule.weights[i] * fv;
        double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

/// Max-shifted log-scale disk integral.
template <class LF>
LogComplex integrate_disk_log(const DiskRule& rule, LF&& logf)
{
    std::vector<LogComplex> vals;
    vals.reserve(rule.nodes.size());
    double shift = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < rule.nodes.size(); ++i) {
        LogComplex lf = logf(rule.nodes[i]);
        if (std::isnan(lf.logmag) || lf.logmag == std::numeric_limits<double>::infinity())
            throw error("non-finite integrand at disk node v = " + fmt(rule.nodes[i]));
        lf.logmag += std::log(rule.weights[i]);
        shift = std::max(shift, lf.logmag);
        vals.push_back(lf);
    }
    if (shift == -std::numeric_limits<double>::infinity()) return LogComplex::zero();
    cd acc = 0.0;
    for (const LogComplex& lf : vals)
        if (!lf.is_zero()) acc += std::polar(std::exp(lf.logmag - shift), lf.phase);
    if (acc == cd(0.0, 0.0)) return LogComplex::zero();
    return LogComplex::make(shift + std::log(std::abs(acc)), std::arg(acc));
}

} // namespace fockso
