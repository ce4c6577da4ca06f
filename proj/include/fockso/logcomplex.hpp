#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "fockso/common.hpp"

namespace fockso {

/// Maps an angle into (-pi, pi].
inline double normalize_phase(double p)
{
    if (!std::isfinite(p)) return 0.0;
    double q = std::remainder(p, 2.0 * M_PI); // [-pi, pi]
    if (q <= -M_PI) q += 2.0 * M_PI;
    return q;
}

/// A complex value stored as (log-magnitude, phase) so that quantities on the
/// scale of exp(|z|^2) stay representable. logmag = -inf encodes zero, in
/// which case the phase is fixed at 0. Conversion back to std::complex is
/// exact (up to rounding) as long as logmag <= 700.
struct LogComplex {
    double logmag = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    static LogComplex zero() { return {}; }

    static LogComplex make(double logmag, double phase)
    {
        LogComplex r;
        if (logmag == -std::numeric_limits<double>::infinity()) return r;
        r.logmag = logmag;
        r.phase = normalize_phase(phase);
        return r;
    }

    static LogComplex from(cd z)
    {
        if (z == cd(0.0, 0.0)) return {};
        return make(std::log(std::abs(z)), std::arg(z));
    }

    static LogComplex from_positive(double x)
    {
        if (x <= 0.0) return {};
        return make(std::log(x), 0.0);
    }

    bool is_zero() const { return logmag == -std::numeric_limits<double>::infinity(); }

    double abs() const { return std::exp(logmag); }

    /// Linear-scale value; throws if the magnitude overflows a double.
    cd value() const
    {
        if (is_zero()) return {0.0, 0.0};
        if (logmag > 709.0)
            throw error("LogComplex overflow on down-conversion: logmag = " + fmt(logmag));
        return std::polar(std::exp(logmag), phase);
    }

    LogComplex conj() const { return make(logmag, -phase); }
    LogComplex negated() const { return make(logmag, phase + M_PI); }
};

inline LogComplex operator*(const LogComplex& a, const LogComplex& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    return LogComplex::make(a.logmag + b.logmag, a.phase + b.phase);
}

inline LogComplex operator/(const LogComplex& a, const LogComplex& b)
{
    if (a.is_zero()) return {};
    if (b.is_zero()) throw error("LogComplex division by zero");
    return LogComplex::make(a.logmag - b.logmag, a.phase - b.phase);
}

/// Sum computed by factoring out the larger magnitude.
inline LogComplex operator+(const LogComplex& a, const LogComplex& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const LogComplex& big = (a.logmag >= b.logmag) ? a : b;
    const LogComplex& small = (a.logmag >= b.logmag) ? b : a;
    cd rest = 1.0 + std::polar(std::exp(small.logmag - big.logmag), small.phase - big.phase);
    if (rest == cd(0.0, 0.0)) return {};
    return LogComplex::make(big.logmag + std::log(std::abs(rest)), big.phase + std::arg(rest));
}

inline LogComplex pow(const LogComplex& a, double e)
{
    if (a.is_zero()) return {};
    return LogComplex::make(a.logmag * e, a.phase * e);
}

} // namespace fockso
