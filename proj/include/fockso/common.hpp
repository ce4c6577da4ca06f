#pragma once

#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace fockso {

using cd = std::complex<double>;

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Formats a double with enough digits to round-trip exactly.
inline std::string fmt(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string fmt(cd z)
{
    return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i";
}

} // namespace fockso
