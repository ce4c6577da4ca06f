#pragma once

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "fockso/berezin.hpp"
#include "fockso/common.hpp"
#include "fockso/quadrature.hpp"
#include "fockso/spaces.hpp"
#include "fockso/stablefun.hpp"

namespace fockso {

/// Run-wide parameters shared by every subcommand. Loaded from a sectioned
/// `key = value` file; explicit command-line flags override file values.
/// Unknown sections or keys are rejected.
struct RunConfig {
    int m = 0;
    double p = 2.0;
    double r = 1.0;

    std::optional<double> lattice_delta; // default r/2 when unset
    double lattice_R = 12.0;

    QuadConfig quad;         // plane and disk rules
    BerezinConfig berezin;   // kernel transform (rho, z_min, its own rule sizes)

    int N = 16;     // section domain truncation
    int L = 0;      // projection truncation; 0 means 4N (sections) or auto (probes)
    int directions = 8;

    double tol_vanish = 1e-3;
    double eigen_tol = 1e-10;
    std::string format = "csv"; // csv | json

    LatticeSpec lattice() const
    {
        return LatticeSpec(lattice_delta.value_or(r / 2.0), lattice_R);
    }

    void validate() const
    {
        KernelParams check(m);
        if (p < 1.0) throw error("config: p must be >= 1");
        if (r <= 0.0) throw error("config: r must be > 0");
        if (lattice_delta && (*lattice_delta <= 0.0 || *lattice_delta > lattice_R))
            throw error("config: lattice delta must satisfy 0 < delta <= R");
        if (lattice_R <= 0.0) throw error("config: lattice R must be > 0");
        if (quad.n_radial < 1 || quad.n_angular < 2 || quad.panels < 1)
            throw error("config: quadrature sizes must be positive");
        if (berezin.rho < 6.0) throw error("config: berezin rho must be >= 6");
        if (N < 1 || N > kMaxCoeffLen) throw error("config: N outside [1, 4096]");
        if (L < 0 || L > kMaxCoeffLen) throw error("config: L outside [0, 4096]");
        if (directions < 1) throw error("config: directions must be >= 1");
        if (tol_vanish <= 0.0) throw error("config: tol_vanish must be > 0");
        if (eigen_tol <= 0.0) throw error("config: eigen_tol must be > 0");
        if (format != "csv" && format != "json")
            throw error("config: format must be csv or json");
    }
};

namespace detail {

inline std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    return (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
}

inline double to_double(const std::string& key, const std::string& v)
{
    try {
        size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw error("config: value '" + v + "' for key '" + key + "' is not a number");
    }
}

inline int to_int(const std::string& key, const std::string& v)
{
    double x = to_double(key, v);
    if (x != std::floor(x)) throw error("config: key '" + key + "' needs an integer");
    return static_cast<int>(x);
}

} // namespace detail

/// Parses the line-oriented `key = value` format with [section] headers.
inline void load_config_text(RunConfig& cfg, const std::string& text,
                             const std::string& origin = "<config>")
{
    std::istringstream in(text);
    std::string line, section = "run";
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = detail::trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw error(origin + ":" + std::to_string(lineno) +
                                             ": malformed section header");
            section = detail::trim(s.substr(1, s.size() - 2));
            continue;
        }
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw error(origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = detail::trim(s.substr(0, eq));
        std::string value = detail::trim(s.substr(eq + 1));
        std::string full = section + "." + key;

        if (full == "run.m") cfg.m = detail::to_int(full, value);
        else if (full == "run.p") cfg.p = detail::to_double(full, value);
        else if (full == "run.r") cfg.r = detail::to_double(full, value);
        else if (full == "lattice.delta") cfg.lattice_delta = detail::to_double(full, value);
        else if (full == "lattice.R") cfg.lattice_R = detail::to_double(full, value);
        else if (full == "quadrature.n_radial") cfg.quad.n_radial = detail::to_int(full, value);
        else if (full == "quadrature.n_angular") cfg.quad.n_angular = detail::to_int(full, value);
        else if (full == "quadrature.panels") cfg.quad.panels = detail::to_int(full, value);
        else if (full == "berezin.rho") cfg.berezin.rho = detail::to_double(full, value);
        else if (full == "berezin.z_min") cfg.berezin.z_min = detail::to_double(full, value);
        else if (full == "berezin.n_radial") cfg.berezin.quad.n_radial = detail::to_int(full, value);
        else if (full == "berezin.n_angular") cfg.berezin.quad.n_angular = detail::to_int(full, value);
        else if (full == "berezin.panels") cfg.berezin.quad.panels = detail::to_int(full, value);
        else if (full == "hankel.N") cfg.N = detail::to_int(full, value);
        else if (full == "hankel.L") cfg.L = detail::to_int(full, value);
        else if (full == "hankel.directions") cfg.directions = detail::to_int(full, value);
        else if (full == "tolerances.tol_vanish") cfg.tol_vanish = detail::to_double(full, value);
        else if (full == "tolerances.eigen_tol") cfg.eigen_tol = detail::to_double(full, value);
        else if (full == "output.format") cfg.format = value;
        else
            throw error(origin + ":" + std::to_string(lineno) + ": unknown key '" + full + "'");
    }
    cfg.validate();
}

inline void load_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    load_config_text(cfg, ss.str(), path);
}

} // namespace fockso
