#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "fockso/common.hpp"
#include "fockso/spaces.hpp"
#include "fockso/stablefun.hpp"

namespace fockso {

/// Settings of the kernel-weighted transform. The integrand
/// g(v) |W(z,v)|^2 is localized at v ~ z on unit scale, so a light polar
/// rule already integrates it to machine accuracy; sizes stay overridable.
struct BerezinConfig {
    double rho = 8.0;   // truncation radius of the disk around z
    double z_min = 2.0; // below this |z| the large-|z| equivalences are not asserted
    QuadConfig quad{16, 64, 8};
};

struct BerezinValue {
    cd value{0.0, 0.0};
    double tail_bound = 0.0;
};

namespace detail {

/// Shared per-z machinery: disk rule around z (snapped to indicator circles
/// of g) plus the precomputed weight |W(z, v)|^2 / (pi m!) at every node, so
/// several integrals at the same z reuse the kernel evaluations.
struct BerezinField {
    DiskRule rule;
    std::vector<double> weight; // quadrature weight * |W|^2 / (pi m!)
    double rho_eff = 0.0;
    int m = 0;

    BerezinField(const SymbolExpr& g, cd z, int m_, double rho, const QuadConfig& quad)
        : m(m_)
    {
        KernelParams check(m_);
        if (rho < 6.0) throw error("kernel transform needs truncation radius rho >= 6");
        // For m > 0 the weight has a |v|^{2m} bulge near |v| = sqrt(m); widen
        // the disk so the bulge stays covered even at small |z|.
        rho_eff = std::max(rho, std::sqrt(static_cast<double>(m_)) + 7.0);
        rule = disk_rule_for(g, z, rho_eff, quad);
        weight.resize(rule.nodes.size());
        const double norm = M_PI * factorial(m_);
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const LogComplex w = normalized_kernel_weighted(m_, z, rule.nodes[i]);
            weight[i] = w.is_zero() ? 0.0 : rule.weights[i] * std::exp(2.0 * w.logmag) / norm;
        }
    }

    template <class F>
    cd integrate(F&& f) const
    {
        cd sum = 0.0, comp = 0.0;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const cd fv = f(rule.nodes[i]);
            if (!std::isfinite(fv.real()) || !std::isfinite(fv.imag()))
                throw error("non-finite integrand at node v = " + fmt(rule.nodes[i]));
            const cd term = weight[i] * fv;
            cd t = sum + term;
            if (std::abs(sum) >= std::abs(term))
                comp += (sum - t) + term;
            else
                comp += (term - t) + sum;
            sum = t;
        }
        return sum + comp;
    }

    double tail_bound() const
    {
        const double safety = (m == 0) ? 1.0 : 2.0;
        return safety * std::pow(1.0 + rho_eff * rho_eff, m) * std::exp(-rho_eff * rho_eff) /
               factorial(m);
    }
};

inline void check_berezin_admissible(const SymbolExpr& g)
{
    // |W(z,v)|^2 decays like exp(-|v-z|^2); growth exp(s|v|^2) with s < 1
    // stays integrable, and the DSL cap already keeps s <= 1/2.
    double s = max_expq_total(g);
    if (s >= 0.9)
        throw error("symbol grows like exp(" + fmt(s) + "|v|^2); kernel transform rejected");
}

} // namespace detail

/// Berezin transform B_m(g)(z) = <g k_z, k_z>_{2,m}: the kernel-smoothed
/// average of g near z, computed as a truncated disk integral of
/// g |W(z,.)|^2 / (pi m!). B_m(1) = 1 up to the reported Gaussian tail.
inline BerezinValue berezin(const SymbolExpr& g, cd z, int m, const BerezinConfig& cfg = {})
{
    detail::check_berezin_admissible(g);
    detail::BerezinField field(g, z, m, cfg.rho, cfg.quad);
    return {field.integrate([&](cd v) { return eval_symbol(g, v); }), field.tail_bound()};
}

/// B_m(|g|^p)(z); bounded over the lattice exactly when g has bounded disk
/// averages of |g|^p.
inline double berezin_abs_p(const SymbolExpr& g, cd z, int m, double p,
                            const BerezinConfig& cfg = {})
{
    if (p < 1.0) throw error("berezin_abs_p needs p >= 1");
    detail::check_berezin_admissible(g);
    detail::BerezinField field(g, z, m, cfg.rho, cfg.quad);
    return field
        .integrate([&](cd v) { return cd(std::pow(std::abs(eval_symbol(g, v)), p), 0.0); })
        .real();
}

/// Berezin mean oscillation MO_p(g)(z) = B_m(|g - B_m(g)(z)|^p)(z).
inline double mean_oscillation(const SymbolExpr& g, cd z, int m, double p,
                               const BerezinConfig& cfg = {})
{
    if (p < 1.0) throw error("mean oscillation needs p >= 1");
    detail::check_berezin_admissible(g);
    detail::BerezinField field(g, z, m, cfg.rho, cfg.quad);
    const cd center = field.integrate([&](cd v) { return eval_symbol(g, v); });
    return field
        .integrate(
            [&](cd v) { return cd(std::pow(std::abs(eval_symbol(g, v) - center), p), 0.0); })
        .real();
}

/// Lattice sweep of the transform with per-point tail bounds.
struct BerezinGrid {
    std::vector<cd> points;
    std::vector<cd> values;
    std::vector<double> tail_bounds;
    int m = 0;
    std::string symbol;
    double rho = 0.0;
};

inline BerezinGrid berezin_grid(const SymbolExpr& g, const LatticeSpec& lattice, int m,
                                const BerezinConfig& cfg = {}, const std::string& name = "")
{
    detail::check_berezin_admissible(g);
    BerezinGrid grid;
    grid.points = lattice_points(lattice);
    grid.values.resize(grid.points.size());
    grid.tail_bounds.resize(grid.points.size());
    grid.m = m;
    grid.symbol = name.empty() ? to_string(g) : name;
    grid.rho = cfg.rho;
    parallel_for(grid.points.size(), [&](size_t i) {
        BerezinValue bv = berezin(g, grid.points[i], m, cfg);
        grid.values[i] = bv.value;
        grid.tail_bounds[i] = bv.tail_bound;
    });
    return grid;
}

enum class CarlesonMode { Bounded, Vanishing };

/// Mass of |g|^p dA on disks centred at the lattice: the Carleson-type test
/// for the embedding/vanishing characterizations. Bounded mode reports the
/// max; vanishing mode flags the binned profile like vanishing_profile.
inline OscillationReport carleson_lattice_check(const SymbolExpr& g, double p, double r,
                                                const LatticeSpec& lattice, CarlesonMode mode,
                                                const QuadConfig& cfg = {},
                                                double tol_vanish = 1e-3)
{
    if (p < 1.0) throw error("carleson check needs p >= 1");
    std::vector<cd> pts = lattice_points(lattice);
    std::vector<double> vals(pts.size());
    parallel_for(pts.size(), [&](size_t i) {
        DiskRule rule = detail::disk_rule_for(g, pts[i], r, cfg);
        vals[i] = integrate_disk_real(
            rule, [&](cd v) { return std::pow(std::abs(eval_symbol(g, v)), p); });
    });
    OscillationReport rep = detail::make_report(std::move(pts), std::move(vals));
    if (mode == CarlesonMode::Vanishing) {
        rep.tol_vanish = tol_vanish;
        rep.vanishing_consistent = detail::profile_vanishes(rep.profile, tol_vanish);
    }
    return rep;
}

} // namespace fockso
