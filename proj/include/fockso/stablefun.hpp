#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include "fockso/common.hpp"
#include "fockso/logcomplex.hpp"

namespace fockso {

/// Largest Sobolev order the library accepts. Factorials stay exact in
/// double range far beyond this, but kernel evaluation has only been
/// validated up to here.
inline constexpr int kMaxOrder = 32;

/// Largest argument for which factorial() is finite in double.
inline constexpr int kMaxFactorial = 170;

inline double factorial(int n)
{
    if (n < 0 || n > kMaxFactorial)
        throw error("factorial argument " + std::to_string(n) + " outside [0, 170]");
    static const auto table = [] {
        std::array<double, kMaxFactorial + 1> t{};
        t[0] = 1.0;
        for (int k = 1; k <= kMaxFactorial; ++k) t[k] = t[k - 1] * static_cast<double>(k);
        return t;
    }();
    return table[n];
}

/// Sobolev order parameter. Construction rejects anything outside [0, 32].
struct KernelParams {
    int m;
    explicit KernelParams(int order) : m(order)
    {
        if (m < 0 || m > kMaxOrder)
            throw error("Sobolev order m = " + std::to_string(m) + " outside [0, " +
                        std::to_string(kMaxOrder) + "]");
    }
};

/// Q(m, w): Taylor polynomial of exp(w) of order m-1, i.e. sum_{k<m} w^k/k!.
/// Q(0, w) = 0 by convention.
inline cd exp_taylor_qm(int m, cd w)
{
    KernelParams check(m);
    cd sum = 0.0, term = 1.0;
    for (int k = 0; k < m; ++k) {
        sum += term;
        term *= w / static_cast<double>(k + 1);
    }
    return sum;
}

namespace detail {

/// Power series E(m, w) = sum_{k>=0} w^k/(k+m)!, summed with Neumaier
/// compensation. The a-posteriori loss factor max|term| / |sum| measures
/// how many digits the alternation cancelled; the caller must check it.
inline cd em_series(int m, cd w, double* loss)
{
    cd sum = 0.0, comp = 0.0;
    cd term = 1.0 / factorial(m);
    double max_mag = 0.0;
    for (int k = 0; k < 700; ++k) {
        cd t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
        max_mag = std::max(max_mag, std::abs(term));
        term *= w / static_cast<double>(k + m + 1);
        if (std::abs(term) <= 1e-18 * max_mag && k > 4) break;
    }
    sum += comp;
    double mag = std::abs(sum);
    *loss = (mag > 0.0) ? max_mag / mag : std::numeric_limits<double>::infinity();
    return sum;
}

/// Closed form E(m, w) = (exp(w) - Q(m, w)) / w^m carried out in log scale.
/// The subtraction is the dangerous step; the loss factor reports how much
/// of exp(w) and Q(m, w) cancelled.
inline LogComplex em_closed(int m, cd w, double* loss)
{
    LogComplex ew = LogComplex::make(w.real(), w.imag());
    double law = std::log(std::abs(w));
    double argw = std::arg(w);

    LogComplex q = LogComplex::zero();
    if (m > 0) {
        // Q(m, w) summed in log scale with a max shift.
        double shift = 0.0;
        for (int k = 0; k < m; ++k)
            shift = std::max(shift, k * law - std::lgamma(k + 1.0));
        cd acc = 0.0;
        for (int k = 0; k < m; ++k)
            acc += std::polar(std::exp(k * law - std::lgamma(k + 1.0) - shift), k * argw);
        if (acc != cd(0.0, 0.0))
            q = LogComplex::make(shift + std::log(std::abs(acc)), std::arg(acc));
    }

    LogComplex numer = ew + q.negated();
    double big = std::max(ew.logmag, q.is_zero() ? -1e300 : q.logmag);
    *loss = numer.is_zero() ? std::numeric_limits<double>::infinity()
                            : std::exp(big - numer.logmag);
    if (numer.is_zero()) return numer;
    return LogComplex::make(numer.logmag - m * law, numer.phase - m * argw);
}

} // namespace detail

/// E(m, w) = (exp(w) - Q(m, w)) / w^m = sum_{k>=0} w^k/(k+m)!, the scaled
/// remainder of the exponential series. E(m, 0) = 1/m!, E(0, w) = exp(w).
///
/// Neither the power series nor the closed form is stable everywhere: the
/// series cancels catastrophically once |w| is large compared to Re w, and
/// the closed form cancels where exp(w) and its Taylor head nearly agree
/// (small-to-moderate |w|). The dispatch below tries the branch expected to
/// be stable first and switches on a measured loss factor, so the result is
/// accurate to ~1e-13 * loss with loss <= 1e3 away from the true zeros of
/// E(m, .). Deterministic: a pure function of (m, w).
inline LogComplex exp_remainder_em(int m, cd w)
{
    KernelParams check(m);
    if (m == 0) return LogComplex::make(w.real(), w.imag());
    double aw = std::abs(w);
    if (aw == 0.0) return LogComplex::make(-std::lgamma(m + 1.0), 0.0);

    const double series_radius = std::max(30.0, 2.0 * m);
    double loss_s = 0.0, loss_c = 0.0;
    if (aw <= series_radius) {
        cd s = detail::em_series(m, w, &loss_s);
        if (loss_s <= 1e3) return LogComplex::from(s);
        LogComplex c = detail::em_closed(m, w, &loss_c);
        return (loss_c <= loss_s) ? c : LogComplex::from(s);
    }
    LogComplex c = detail::em_closed(m, w, &loss_c);
    if (loss_c <= 1e3 || aw > 200.0) return c;
    cd s = detail::em_series(m, w, &loss_s);
    return (loss_s < loss_c) ? LogComplex::from(s) : c;
}

/// Reproducing kernel K^m(v, z) = m! * E(m, conj(z) * v);
/// equals sum_k m!/(k+m)! (conj(z) v)^k. Hermitian in (z, v).
inline LogComplex kernel(int m, cd z, cd v)
{
    LogComplex em = exp_remainder_em(m, std::conj(z) * v);
    if (em.is_zero()) return em;
    return LogComplex::make(em.logmag + std::lgamma(m + 1.0), em.phase);
}

/// Weighted normalized kernel
///   W(z, v) = k_z(v) * v^m * exp(-|v|^2 / 2)
/// where k_z = K_z / sqrt(K(z, z)) is the unit-norm kernel at z. The weight
/// makes W uniformly bounded; for m = 0, |W| = exp(-|z - v|^2 / 2). Computed
/// entirely in log scale since K_z alone overflows a double near |z| ~ 27.
inline LogComplex normalized_kernel_weighted(int m, cd z, cd v)
{
    KernelParams check(m);
    double az = std::abs(z), av = std::abs(v);
    if (m > 0 && av == 0.0) return LogComplex::zero();

    LogComplex em_zv = exp_remainder_em(m, std::conj(z) * v);
    if (em_zv.is_zero()) return em_zv;
    // E(m, |z|^2) is a sum of positive terms: real, positive, log-stable.
    double log_em_zz = exp_remainder_em(m, cd(az * az, 0.0)).logmag;

    double logmag = 0.5 * std::lgamma(m + 1.0) + em_zv.logmag - 0.5 * log_em_zz -
                    0.5 * av * av;
    double phase = em_zv.phase;
    if (m > 0) {
        logmag += m * std::log(av);
        phase += m * std::arg(v);
    }
    return LogComplex::make(logmag, phase);
}

} // namespace fockso
