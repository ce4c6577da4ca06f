#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "fockso/common.hpp"
#include "fockso/spaces.hpp"
#include "fockso/stablefun.hpp"
#include "fockso/sym_eigen.hpp"
#include "fockso/symbols.hpp"

namespace fockso {

namespace detail {

// ---------------------------------------------------------------------------
// Minimal quad-precision complex arithmetic. The Gram matrices of analytic
// polynomial symbols satisfy G1 = C'C identically, so the Hankel form is an
// exact cancellation; double entries leave O(1e-13) residue whose square
// root pollutes the norm at 1e-6. Quad entries push that to ~1e-15.

using qreal = __float128;

inline qreal qsqrt(qreal x)
{
    if (x <= 0) return 0;
    qreal r = static_cast<qreal>(std::sqrt(static_cast<double>(x)));
    r = 0.5 * (r + x / r);
    r = 0.5 * (r + x / r);
    return r;
}

struct qc {
    qreal re = 0, im = 0;
    qc() = default;
    qc(qreal r, qreal i) : re(r), im(i) {}
    qc(cd z) : re(z.real()), im(z.imag()) {}
    cd to_cd() const { return {static_cast<double>(re), static_cast<double>(im)}; }
    qc conj() const { return {re, -im}; }
};

inline qc operator+(qc a, qc b) { return {a.re + b.re, a.im + b.im}; }
inline qc operator-(qc a, qc b) { return {a.re - b.re, a.im - b.im}; }
inline qc operator*(qc a, qc b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline qc operator*(qreal a, qc b) { return {a * b.re, a * b.im}; }

} // namespace detail

/// Dense Gram data of the multiplication-then-project quadratic form on
/// span{b_0 .. b_{K-1}}:
///   G1(j,k) = <g b_k, g b_j>,  C(l,k) = <g b_k, b_l>  (l < L),
/// so that |H_g f|^2 = f' G1 f - |C f|^2 up to the projection truncation L.
struct GramPair {
    int m = 0, K = 0, L = 0;
    std::vector<cd> G1; // K x K, row-major, Hermitian
    std::vector<cd> C;  // L x K
    bool quad = false;  // quad-precision copies present (polynomial path)
    std::vector<detail::qc> G1q, Cq;
};

namespace detail {

/// Polynomial path: every entry is a Gamma-ratio, evaluated exactly as a
/// product of consecutive integers.
///   <z^a1 zb^b1 b_k, z^a2 zb^b2 b_j> = D! / sqrt((k+m)! (j+m)!)
/// with j = k + (a1-b1) - (a2-b2) and D = (k+j+a1+b1+a2+b2)/2 + m.
inline void gram_polynomial(const std::vector<Monomial>& mono, int m, int K, int L,
                            GramPair& out)
{
    auto entry = [&](int k, int j, const Monomial& t1, const Monomial& t2) -> qc {
        long D = (static_cast<long>(k) + j + t1.a + t1.b + t2.a + t2.b) / 2 + m;
        qreal p1 = 1, p2 = 1;
        for (long i = k + m + 1; i <= D; ++i) p1 *= static_cast<qreal>(i);
        for (long i = j + m + 1; i <= D; ++i) p2 *= static_cast<qreal>(i);
        return qc(t1.c) * qc(t2.c).conj() * qc(qsqrt(p1 * p2), 0);
    };

    out.quad = true;
    out.G1q.assign(static_cast<size_t>(K) * K, qc());
    out.Cq.assign(static_cast<size_t>(L) * K, qc());
    const Monomial one{0, 0, cd(1.0, 0.0)};
    for (int k = 0; k < K; ++k) {
        for (const auto& t1 : mono) {
            for (const auto& t2 : mono) {
                int j = k + (t1.a - t1.b) - (t2.a - t2.b);
                if (j < 0 || j >= K) continue;
                out.G1q[static_cast<size_t>(j) * K + k] =
                    out.G1q[static_cast<size_t>(j) * K + k] + entry(k, j, t1, t2);
            }
            int l = k + (t1.a - t1.b);
            if (l >= 0 && l < L)
                out.Cq[static_cast<size_t>(l) * K + k] =
                    out.Cq[static_cast<size_t>(l) * K + k] + entry(k, l, t1, one);
        }
    }
    out.G1.resize(out.G1q.size());
    out.C.resize(out.Cq.size());
    for (size_t i = 0; i < out.G1q.size(); ++i) out.G1[i] = out.G1q[i].to_cd();
    for (size_t i = 0; i < out.Cq.size(); ++i) out.C[i] = out.Cq[i].to_cd();
}

/// Radial integral of the separable path:
///   2 int rad1 rad2 rho^{k+j+2m+1} e^{-(1-q) rho^2} d rho
///     * exp(-(lgamma(k+m+1)+lgamma(j+m+1))/2),
/// composite Gauss-Legendre in rho with panel edges pinned to annulus
/// bounds. The Gamma normalization keeps node values at unit scale.
inline double radial_pair_integral(int k, int j, int m, const PolarTerm& t1,
                                   const PolarTerm& t2, std::vector<double>& gx,
                                   std::vector<double>& gw)
{
    const double q = t1.expq + t2.expq;
    const double decay = 1.0 - q;
    if (decay <= 0.05) throw error("expq growth too close to the Gaussian weight");
    const double spow = t1.rho_pow + t2.rho_pow;
    const double P = k + j + 2.0 * m + 1.0 + spow;
    const double norm = 0.5 * (std::lgamma(k + m + 1.0) + std::lgamma(j + m + 1.0));

    double lo = std::max(t1.ann_lo, t2.ann_lo);
    double hi = std::min(t1.ann_hi, t2.ann_hi);
    const double peak = std::sqrt(std::max(P, 1.0) / (2.0 * decay));
    hi = std::min(hi, peak + 10.0 / std::sqrt(decay));
    if (hi <= lo) return 0.0;

    if (gx.empty()) gauss_legendre(24, gx, gw);
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / 0.5)));
    double acc = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + (hi - lo) * p / panels;
        const double b = lo + (hi - lo) * (p + 1) / panels;
        for (size_t i = 0; i < gx.size(); ++i) {
            const double rho = 0.5 * (b - a) * gx[i] + 0.5 * (a + b);
            if (rho <= 0.0) continue;
            double lg = P * std::log(rho) - decay * rho * rho - norm + std::log(2.0);
            double f = std::exp(lg);
            for (double w : t1.sin_omegas) f *= std::sin(w * rho);
            for (double w : t2.sin_omegas) f *= std::sin(w * rho);
            acc += 0.5 * (b - a) * gw[i] * f;
        }
    }
    return acc;
}

inline void gram_separable(const std::vector<PolarTerm>& terms, int m, int K, int L,
                           GramPair& out)
{
    std::vector<double> gx, gw;
    const PolarTerm unit{}; // coeff 1, trivial radial part, charge 0
    out.G1.assign(static_cast<size_t>(K) * K, cd(0.0, 0.0));
    out.C.assign(static_cast<size_t>(L) * K, cd(0.0, 0.0));
    for (int k = 0; k < K; ++k) {
        for (const auto& t1 : terms) {
            for (const auto& t2 : terms) {
                int j = k + t1.charge - t2.charge;
                if (j < 0 || j >= K) continue;
                out.G1[static_cast<size_t>(j) * K + k] +=
                    t1.coeff * std::conj(t2.coeff) * radial_pair_integral(k, j, m, t1, t2, gx, gw);
            }
            int l = k + t1.charge;
            if (l >= 0 && l < L)
                out.C[static_cast<size_t>(l) * K + k] +=
                    t1.coeff * radial_pair_integral(k, l, m, t1, unit, gx, gw);
        }
    }
}

/// A product term with off-center indicator factors; the separable factors
/// are collapsed into `sep`, the indicators keep the support bounded.
struct ExpandedTerm {
    PolarTerm sep;
    std::vector<std::tuple<cd, double, double>> offcenter; // (center, inner, outer)

    cd eval(cd v) const
    {
        for (const auto& [c0, a, b] : offcenter) {
            const double d = std::abs(v - c0);
            if (d < a || d > b) return {0.0, 0.0};
        }
        double rho = std::abs(v);
        double rad = sep.eval_radial(rho);
        if (rad == 0.0) return {0.0, 0.0};
        cd val = sep.coeff * rad;
        if (sep.charge != 0) {
            if (v == cd(0.0, 0.0)) return {0.0, 0.0};
            val *= std::polar(1.0, sep.charge * std::arg(v));
        }
        return val;
    }
};

inline std::optional<std::vector<ExpandedTerm>> expand_terms(const SymbolExpr& g)
{
    constexpr size_t kMaxTerms = 256;
    const auto& n = g.node();
    if (n.kind == SymKind::IndicatorAnnulus && std::abs(n.center) > 1e-12) {
        ExpandedTerm t;
        t.offcenter.emplace_back(n.center, n.r0, n.r1);
        return std::vector<ExpandedTerm>{t};
    }
    switch (n.kind) {
    case SymKind::Sum: {
        std::vector<ExpandedTerm> all;
        for (const auto& c : n.children) {
            auto sub = expand_terms(c);
            if (!sub) return std::nullopt;
            all.insert(all.end(), sub->begin(), sub->end());
            if (all.size() > kMaxTerms) return std::nullopt;
        }
        return all;
    }
    case SymKind::Product: {
        auto lhs = expand_terms(n.children[0]);
        auto rhs = expand_terms(n.children[1]);
        if (!lhs || !rhs || lhs->size() * rhs->size() > kMaxTerms) return std::nullopt;
        std::vector<ExpandedTerm> all;
        for (const auto& a : *lhs)
            for (const auto& b : *rhs) {
                ExpandedTerm t;
                t.sep.coeff = a.sep.coeff * b.sep.coeff;
                t.sep.rho_pow = a.sep.rho_pow + b.sep.rho_pow;
                t.sep.expq = a.sep.expq + b.sep.expq;
                t.sep.sin_omegas = a.sep.sin_omegas;
                t.sep.sin_omegas.insert(t.sep.sin_omegas.end(), b.sep.sin_omegas.begin(),
                                        b.sep.sin_omegas.end());
                t.sep.ann_lo = std::max(a.sep.ann_lo, b.sep.ann_lo);
                t.sep.ann_hi = std::min(a.sep.ann_hi, b.sep.ann_hi);
                t.sep.charge = a.sep.charge + b.sep.charge;
                t.offcenter = a.offcenter;
                t.offcenter.insert(t.offcenter.end(), b.offcenter.begin(), b.offcenter.end());
                all.push_back(std::move(t));
            }
        return all;
    }
    case SymKind::Conj: {
        auto sub = expand_terms(n.children[0]);
        if (!sub) return std::nullopt;
        for (auto& t : *sub) {
            t.sep.coeff = std::conj(t.sep.coeff);
            t.sep.charge = -t.sep.charge;
        }
        return sub;
    }
    default: {
        auto sep = polar_terms(g);
        if (!sep) return std::nullopt;
        std::vector<ExpandedTerm> all;
        for (auto& p : *sep) {
            ExpandedTerm t;
            t.sep = std::move(p);
            all.push_back(std::move(t));
        }
        return all;
    }
    }
}

/// Dense contributions of terms with bounded (indicator) support, together
/// with their cross terms against the separable rest. One support rule per
/// dense term; the angular count is raised to resolve charges up to K + L.
inline void gram_dense_terms(const SymbolExpr& g, const std::vector<ExpandedTerm>& dense,
                             const std::vector<ExpandedTerm>& separable, int m, int K, int L,
                             const QuadConfig& cfg, GramPair& out)
{
    const int B = std::max(K, L);
    const double norm = M_PI * factorial(m);
    auto eval_sep = [&](cd v) {
        cd s = 0.0;
        for (const auto& t : separable) s += t.eval(v);
        return s;
    };

    for (const auto& td : dense) {
        const auto& [c0, a0, b0] = td.offcenter.front();
        QuadConfig dcfg = cfg;
        dcfg.n_angular = std::max(cfg.n_angular, 2 * (K + L + 8));
        std::vector<double> snap{a0};
        DiskRule rule = build_disk_rule(c0, b0, dcfg, snap, td.offcenter.size() > 1);

        std::vector<cd> bv(B);
        for (size_t idx = 0; idx < rule.nodes.size(); ++idx) {
            const cd v = rule.nodes[idx];
            const cd tdv = td.eval(v);
            if (tdv == cd(0.0, 0.0)) continue;
            const cd gv = eval_symbol(g, v);
            const cd sv = eval_sep(v);
            const double t2 = std::norm(v);
            const double wmeas = rule.weights[idx] * std::pow(t2, m) * std::exp(-t2) / norm;
            cd bk = 1.0;
            for (int k = 0; k < B; ++k) {
                bv[k] = bk;
                bk *= v / std::sqrt(static_cast<double>(k + m + 1));
            }
            // pairs (dense, anything) + (separable, dense); see README notes
            const cd alpha = wmeas * (tdv * std::conj(gv) + sv * std::conj(tdv));
            for (int j = 0; j < K; ++j) {
                const cd bjc = std::conj(bv[j]);
                for (int k = 0; k < K; ++k)
                    out.G1[static_cast<size_t>(j) * K + k] += alpha * bv[k] * bjc;
            }
            const cd beta = wmeas * tdv;
            for (int l = 0; l < L; ++l) {
                const cd blc = std::conj(bv[l]);
                for (int k = 0; k < K; ++k)
                    out.C[static_cast<size_t>(l) * K + k] += beta * bv[k] * blc;
            }
        }
    }
}

} // namespace detail

/// Assembles the Gram pair for the symbol with domain truncation K and
/// projection truncation L. Polynomial symbols take the exact Gamma-ratio
/// path in quad precision; polar-separable symbols reduce to banded 1D
/// radial integrals (the angular integral is an exact charge match); only
/// off-center indicators fall back to dense support quadrature.
inline GramPair assemble_gram(const SymbolExpr& g, int m, int K, int L,
                              const QuadConfig& cfg = {})
{
    KernelParams check(m);
    if (K < 1 || L < 0 || K > kMaxCoeffLen || L > kMaxCoeffLen)
        throw error("gram truncations must satisfy 1 <= K, 0 <= L <= 4096");
    GramPair out;
    out.m = m;
    out.K = K;
    out.L = L;

    if (auto mono = as_polynomial(g);
        mono && static_cast<size_t>(K) * K + static_cast<size_t>(L) * K <= (8u << 20)) {
        detail::gram_polynomial(*mono, m, K, L, out);
        return out;
    }
    if (auto sep = polar_terms(g)) {
        detail::gram_separable(*sep, m, K, L, out);
        return out;
    }
    auto terms = detail::expand_terms(g);
    if (!terms)
        throw error("symbol too large to expand for the Hankel machinery");
    std::vector<detail::ExpandedTerm> dense, separable;
    for (auto& t : *terms)
        (t.offcenter.empty() ? separable : dense).push_back(std::move(t));
    std::vector<PolarTerm> sep_polar;
    for (const auto& t : separable) sep_polar.push_back(t.sep);
    detail::gram_separable(sep_polar, m, K, L, out);
    detail::gram_dense_terms(g, dense, separable, m, K, L, cfg, out);
    return out;
}

/// Finite-section data for operator-norm estimation at p = 2:
/// A = G1 - C'C realizes |H_g f|^2 on span{b_0..b_{N-1}} with the projection
/// cut at L. A is Hermitian and PSD up to quadrature error by construction.
struct HankelSection {
    int m = 0, N = 0, L = 0;
    std::vector<cd> G1;
    std::vector<cd> C;
    std::vector<cd> A;
    std::vector<double> eigenvalues; // ascending
};

inline HankelSection build_section(const SymbolExpr& g, int m, int N, int L,
                                   const QuadConfig& cfg = {}, double eigen_tol = 1e-10)
{
    if (N < 1 || L < N || L > kMaxCoeffLen)
        throw error("section needs 1 <= N <= L <= 4096");
    GramPair gram = assemble_gram(g, m, N, L, cfg);

    HankelSection s;
    s.m = m;
    s.N = N;
    s.L = L;
    s.G1 = gram.G1;
    s.C = gram.C;
    s.A.assign(static_cast<size_t>(N) * N, cd(0.0, 0.0));

    if (gram.quad) {
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                detail::qc acc = gram.G1q[static_cast<size_t>(j) * N + k];
                for (int l = 0; l < L; ++l)
                    acc = acc - gram.Cq[static_cast<size_t>(l) * N + j].conj() *
                                    gram.Cq[static_cast<size_t>(l) * N + k];
                s.A[static_cast<size_t>(j) * N + k] = acc.to_cd();
            }
    } else {
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                cd acc = gram.G1[static_cast<size_t>(j) * N + k];
                for (int l = 0; l < L; ++l)
                    acc -= std::conj(gram.C[static_cast<size_t>(l) * N + j]) *
                           gram.C[static_cast<size_t>(l) * N + k];
                s.A[static_cast<size_t>(j) * N + k] = acc;
            }
    }

    // Hermiticity diagnostic, then exact symmetrization for the eigensolve.
    double scale = 1.0, asym = 0.0;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            scale = std::max(scale, std::abs(s.A[static_cast<size_t>(j) * N + k]));
            asym = std::max(asym, std::abs(s.A[static_cast<size_t>(j) * N + k] -
                                           std::conj(s.A[static_cast<size_t>(k) * N + j])));
        }
    if (asym > 1e-10 * scale)
        throw error("section matrix lost Hermitian symmetry: max asymmetry " + fmt(asym));
    for (int j = 0; j < N; ++j)
        for (int k = j; k < N; ++k) {
            cd h = 0.5 * (s.A[static_cast<size_t>(j) * N + k] +
                          std::conj(s.A[static_cast<size_t>(k) * N + j]));
            s.A[static_cast<size_t>(j) * N + k] = h;
            s.A[static_cast<size_t>(k) * N + j] = std::conj(h);
        }

    s.eigenvalues = hermitian_eigenvalues(s.A, N, std::min(eigen_tol, 1e-12));
    const double lmax = s.eigenvalues.back();
    if (s.eigenvalues.front() < -std::max(1e-8, 1e-12 * std::max(lmax, 0.0)))
        throw error("section form not PSD within tolerance: min eigenvalue " +
                    fmt(s.eigenvalues.front()));
    return s;
}

/// sqrt(lambda_max(A)). Overestimates in L and underestimates in N, both
/// monotonically, so (N, L) sweeps bracket the true norm.
inline double section_norm(const HankelSection& s)
{
    return std::sqrt(std::max(0.0, s.eigenvalues.back()));
}

/// Pointwise Hankel action (g f)(z) - (P_{<=L}(g f))(z) for a finite
/// coefficient vector f. Exactly zero (up to rounding) for analytic
/// polynomial symbols once L >= deg(g f).
inline cd hankel_apply(const SymbolExpr& g, const CoeffVector& f, cd z, int m, int L,
                       const QuadConfig& cfg = {})
{
    if (f.m != m) throw error("coefficient vector order does not match requested m");
    if (L < 0 || L >= kMaxCoeffLen) throw error("projection truncation outside [0, 4095]");
    if (f.coeffs.empty()) return {0.0, 0.0};
    const int K = static_cast<int>(f.coeffs.size());
    // L is the inclusive top index here: the projection keeps b_0 .. b_L.
    GramPair gram = assemble_gram(g, m, K, L + 1, cfg);

    std::vector<cd> cf(L + 1, cd(0.0, 0.0));
    for (int l = 0; l <= L; ++l)
        for (int k = 0; k < K; ++k)
            cf[l] += gram.C[static_cast<size_t>(l) * K + k] * f.coeffs[k];

    cd proj = 0.0, bl = 1.0;
    for (int l = 0; l <= L; ++l) {
        proj += cf[l] * bl;
        bl *= z / std::sqrt(static_cast<double>(l + m + 1));
    }
    return eval_symbol(g, z) * eval_coeff(f, z) - proj;
}

/// |H_g k_z| along rays: the compactness probe. Values decay to 0 in the
/// radius exactly when the symbol's Hankel pair is compact-consistent.
struct ProbeCurve {
    std::vector<double> radii;
    std::vector<cd> directions;
    std::vector<double> values; // row-major radii x directions
};

namespace detail {

/// Basis truncation K(|z|): cut when the norm-series tail of K_z drops
/// below 1e-12 relative. Errors out past the 4096 cap.
inline int probe_truncation(int m, double zr)
{
    if (zr == 0.0) return 1;
    double lt = 0.0, lsum = 0.0;
    for (int k = 1; k <= kMaxCoeffLen; ++k) {
        lt += std::log(zr * zr / (k + m));
        lsum = std::max(lsum, lt) + std::log1p(std::exp(std::min(lsum, lt) - std::max(lsum, lt)));
        const double ratio = zr * zr / (k + 1 + m);
        if (ratio < 1.0 && lt + std::log(ratio / (1.0 - ratio)) <= std::log(1e-12) + lsum)
            return k + 1;
    }
    throw error("kernel expansion needs more than 4096 coefficients; use a smaller radius");
}

} // namespace detail

inline ProbeCurve kernel_probe(const SymbolExpr& g, int m, std::vector<double> radii,
                               std::vector<cd> directions, int L = 0,
                               const QuadConfig& cfg = {})
{
    KernelParams check(m);
    if (radii.empty()) throw error("kernel probe needs at least one radius");
    for (double r : radii)
        if (r < 0.0) throw error("probe radii must be non-negative");
    if (directions.empty()) {
        if (is_radial(g)) {
            directions = {cd(1.0, 0.0)};
        } else {
            for (int d = 0; d < 8; ++d)
                directions.push_back(std::polar(1.0, 2.0 * M_PI * d / 8.0));
        }
    }

    double zmax = *std::max_element(radii.begin(), radii.end());
    const int K = detail::probe_truncation(m, zmax);
    if (L <= 0) L = K;
    GramPair gram = assemble_gram(g, m, K, L, cfg);

    ProbeCurve curve;
    curve.radii = radii;
    curve.directions = directions;
    curve.values.assign(radii.size() * directions.size(), 0.0);

    parallel_for(curve.values.size(), [&](size_t i) {
        const double r = radii[i / directions.size()];
        const cd z = r * directions[i % directions.size()];
        // coefficients of the unit kernel at z: c_k = conj(b_k(z))/sqrt(K(z,z)),
        // assembled from u_k = b_k(z) exp(-|z|^2/2) which stays bounded.
        std::vector<cd> c(K);
        cd u = std::exp(-0.5 * r * r);
        double s2 = 0.0;
        for (int k = 0; k < K; ++k) {
            c[k] = std::conj(u);
            s2 += std::norm(u);
            u *= z / std::sqrt(static_cast<double>(k + m + 1));
        }
        const double inv = 1.0 / std::sqrt(s2);
        for (cd& ck : c) ck *= inv;

        double val2;
        if (gram.quad) {
            detail::qreal quad = 0, proj = 0;
            for (int j = 0; j < K; ++j) {
                detail::qc row{0, 0};
                for (int k = 0; k < K; ++k)
                    row = row + gram.G1q[static_cast<size_t>(j) * K + k] * detail::qc(c[k]);
                detail::qc cj(c[j]);
                quad += (cj.conj() * row).re;
            }
            for (int l = 0; l < L; ++l) {
                detail::qc acc{0, 0};
                for (int k = 0; k < K; ++k)
                    acc = acc + gram.Cq[static_cast<size_t>(l) * K + k] * detail::qc(c[k]);
                proj += acc.re * acc.re + acc.im * acc.im;
            }
            val2 = static_cast<double>(quad - proj);
        } else {
            cd quad = 0.0;
            for (int j = 0; j < K; ++j) {
                cd row = 0.0;
                for (int k = 0; k < K; ++k)
                    row += gram.G1[static_cast<size_t>(j) * K + k] * c[k];
                quad += std::conj(c[j]) * row;
            }
            double proj = 0.0;
            for (int l = 0; l < L; ++l) {
                cd acc = 0.0;
                for (int k = 0; k < K; ++k)
                    acc += gram.C[static_cast<size_t>(l) * K + k] * c[k];
                proj += std::norm(acc);
            }
            val2 = quad.real() - proj;
        }
        curve.values[i] = std::sqrt(std::max(0.0, val2));
    });
    return curve;
}

struct CompactnessVerdict {
    bool compact_consistent = false;
    double final_max = 0.0;
    std::string summary;
};

/// Compact-consistent when the direction-max is non-increasing over the
/// last three radii and the final value sits below tol. A diagnostic, not
/// a proof.
inline CompactnessVerdict compactness_verdict(const ProbeCurve& curve, double tol)
{
    if (curve.radii.size() < 4) throw error("compactness verdict needs at least 4 radii");
    const size_t nd = curve.directions.size();
    std::vector<double> dmax(curve.radii.size(), 0.0);
    for (size_t i = 0; i < curve.radii.size(); ++i)
        for (size_t d = 0; d < nd; ++d)
            dmax[i] = std::max(dmax[i], curve.values[i * nd + d]);

    const size_t n = dmax.size();
    const double slack = 1e-12;
    bool mono = dmax[n - 1] <= dmax[n - 2] + slack && dmax[n - 2] <= dmax[n - 3] + slack;
    CompactnessVerdict v;
    v.final_max = dmax[n - 1];
    v.compact_consistent = mono && v.final_max <= tol;
    v.summary = v.compact_consistent
                    ? "probe decays: compact-consistent at tol " + fmt(tol)
                    : "probe does not decay below tol " + fmt(tol) + " (final " +
                          fmt(v.final_max) + ")";
    return v;
}

} // namespace fockso
