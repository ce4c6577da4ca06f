#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "fockso/berezin.hpp"
#include "fockso/common.hpp"
#include "fockso/hankel.hpp"
#include "fockso/spaces.hpp"
#include "fockso/symbols.hpp"
#include "fockso/verify.hpp"

namespace fockso {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// CSV. RFC-style quoting, header row, complex values as paired _re/_im
// columns, doubles printed with round-trip precision.

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string oscillation_report_csv(const OscillationReport& rep)
{
    std::ostringstream out;
    out << "z_re,z_im,value\n";
    for (size_t i = 0; i < rep.points.size(); ++i)
        out << fmt(rep.points[i].real()) << ',' << fmt(rep.points[i].imag()) << ','
            << fmt(rep.values[i]) << '\n';
    return out.str();
}

inline std::string profile_csv(const OscillationReport& rep)
{
    std::ostringstream out;
    out << "abs_z_bin,max_value\n";
    for (const auto& [edge, v] : rep.profile) out << fmt(edge) << ',' << fmt(v) << '\n';
    return out.str();
}

inline std::string berezin_grid_csv(const BerezinGrid& grid)
{
    std::ostringstream out;
    out << "z_re,z_im,value_re,value_im,tail_bound\n";
    for (size_t i = 0; i < grid.points.size(); ++i)
        out << fmt(grid.points[i].real()) << ',' << fmt(grid.points[i].imag()) << ','
            << fmt(grid.values[i].real()) << ',' << fmt(grid.values[i].imag()) << ','
            << fmt(grid.tail_bounds[i]) << '\n';
    return out.str();
}

inline std::string probe_curve_csv(const ProbeCurve& curve)
{
    std::ostringstream out;
    out << "radius,direction_re,direction_im,value\n";
    const size_t nd = curve.directions.size();
    for (size_t i = 0; i < curve.radii.size(); ++i)
        for (size_t d = 0; d < nd; ++d)
            out << fmt(curve.radii[i]) << ',' << fmt(curve.directions[d].real()) << ','
                << fmt(curve.directions[d].imag()) << ',' << fmt(curve.values[i * nd + d])
                << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// JSON. One top-level object with "meta" and "data".

inline ordered_json symbol_to_json(const SymbolExpr& g)
{
    const auto& n = g.node();
    ordered_json j;
    switch (n.kind) {
    case SymKind::Mono:
        j["kind"] = "mono";
        j["a"] = n.a;
        j["b"] = n.b;
        j["c"] = {n.c.real(), n.c.imag()};
        break;
    case SymKind::RadialPower:
        j["kind"] = "radial_power";
        j["s"] = n.s;
        break;
    case SymKind::RadialSin:
        j["kind"] = "radial_sin";
        j["omega"] = n.s;
        break;
    case SymKind::RadialExpQ:
        j["kind"] = "radial_expq";
        j["s"] = n.s;
        break;
    case SymKind::Angular:
        j["kind"] = "angular";
        j["k"] = n.k;
        break;
    case SymKind::IndicatorAnnulus:
        j["kind"] = "indicator_annulus";
        j["center"] = {n.center.real(), n.center.imag()};
        j["a"] = n.r0;
        j["b"] = n.r1;
        break;
    case SymKind::Sum: {
        j["kind"] = "sum";
        ordered_json terms = ordered_json::array();
        for (const auto& c : n.children) terms.push_back(symbol_to_json(c));
        j["terms"] = std::move(terms);
        break;
    }
    case SymKind::Product:
        j["kind"] = "product";
        j["lhs"] = symbol_to_json(n.children[0]);
        j["rhs"] = symbol_to_json(n.children[1]);
        break;
    case SymKind::Conj:
        j["kind"] = "conj";
        j["child"] = symbol_to_json(n.children[0]);
        break;
    }
    return j;
}

inline SymbolExpr symbol_from_json(const ordered_json& j)
{
    const std::string kind = j.at("kind").get<std::string>();
    auto get_cd = [&](const char* key) {
        const auto& a = j.at(key);
        return cd(a.at(0).get<double>(), a.at(1).get<double>());
    };
    if (kind == "mono")
        return SymbolExpr::mono(j.at("a").get<int>(), j.at("b").get<int>(), get_cd("c"));
    if (kind == "radial_power") return SymbolExpr::radial_power(j.at("s").get<double>());
    if (kind == "radial_sin") return SymbolExpr::radial_sin(j.at("omega").get<double>());
    if (kind == "radial_expq") return SymbolExpr::radial_expq(j.at("s").get<double>());
    if (kind == "angular") return SymbolExpr::angular(j.at("k").get<int>());
    if (kind == "indicator_annulus")
        return SymbolExpr::indicator_annulus(get_cd("center"), j.at("a").get<double>(),
                                             j.at("b").get<double>());
    if (kind == "sum") {
        std::vector<SymbolExpr> terms;
        for (const auto& t : j.at("terms")) terms.push_back(symbol_from_json(t));
        return SymbolExpr::sum(std::move(terms));
    }
    if (kind == "product")
        return SymbolExpr::product(symbol_from_json(j.at("lhs")),
                                   symbol_from_json(j.at("rhs")));
    if (kind == "conj") return SymbolExpr::conjugate(symbol_from_json(j.at("child")));
    throw error("unknown symbol kind '" + kind + "' in JSON");
}

inline ordered_json oscillation_report_json(const OscillationReport& rep)
{
    ordered_json meta;
    meta["sup_value"] = rep.sup_value;
    meta["argmax"] = {rep.argmax.real(), rep.argmax.imag()};
    ordered_json profile = ordered_json::array();
    for (const auto& [edge, v] : rep.profile) profile.push_back({edge, v});
    meta["profile"] = std::move(profile);
    if (rep.tol_vanish > 0.0) {
        meta["tol_vanish"] = rep.tol_vanish;
        meta["vanishing_consistent"] = rep.vanishing_consistent;
    }
    ordered_json data = ordered_json::array();
    for (size_t i = 0; i < rep.points.size(); ++i)
        data.push_back({rep.points[i].real(), rep.points[i].imag(), rep.values[i]});
    return ordered_json{{"meta", std::move(meta)}, {"data", std::move(data)}};
}

inline ordered_json berezin_grid_json(const BerezinGrid& grid)
{
    ordered_json meta;
    meta["m"] = grid.m;
    meta["symbol"] = grid.symbol;
    meta["rho"] = grid.rho;
    ordered_json data = ordered_json::array();
    for (size_t i = 0; i < grid.points.size(); ++i)
        data.push_back({grid.points[i].real(), grid.points[i].imag(), grid.values[i].real(),
                        grid.values[i].imag(), grid.tail_bounds[i]});
    return ordered_json{{"meta", std::move(meta)}, {"data", std::move(data)}};
}

inline ordered_json probe_curve_json(const ProbeCurve& curve)
{
    ordered_json meta;
    ordered_json dirs = ordered_json::array();
    for (const cd& d : curve.directions) dirs.push_back({d.real(), d.imag()});
    meta["directions"] = std::move(dirs);
    meta["radii"] = curve.radii;
    ordered_json data = ordered_json::array();
    const size_t nd = curve.directions.size();
    for (size_t i = 0; i < curve.radii.size(); ++i)
        for (size_t d = 0; d < nd; ++d)
            data.push_back({curve.radii[i], curve.directions[d].real(),
                            curve.directions[d].imag(), curve.values[i * nd + d]});
    return ordered_json{{"meta", std::move(meta)}, {"data", std::move(data)}};
}

inline ordered_json hankel_section_json(const HankelSection& s)
{
    ordered_json meta{{"m", s.m}, {"N", s.N}, {"L", s.L}};
    auto matrix = [](const std::vector<cd>& v, int rows, int cols) {
        ordered_json rowsj = ordered_json::array();
        for (int i = 0; i < rows; ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < cols; ++j) {
                const cd& z = v[static_cast<size_t>(i) * cols + j];
                row.push_back({z.real(), z.imag()});
            }
            rowsj.push_back(std::move(row));
        }
        return rowsj;
    };
    ordered_json data;
    data["G1"] = matrix(s.G1, s.N, s.N);
    data["C"] = matrix(s.C, s.L, s.N);
    data["A"] = matrix(s.A, s.N, s.N);
    data["eigenvalues"] = s.eigenvalues;
    return ordered_json{{"meta", std::move(meta)}, {"data", std::move(data)}};
}

inline ordered_json lemma_report_json(const LemmaReport& rep)
{
    ordered_json meta;
    meta["lemma"] = rep.lemma_id;
    for (const auto& [k, v] : rep.params) meta[k] = v;
    meta["verdict"] = rep.verdict;
    meta["budget"] = rep.budget;
    meta["ratio_min"] = rep.ratio_min;
    meta["ratio_max"] = rep.ratio_max;
    meta["argmax"] = {rep.argmax.real(), rep.argmax.imag()};
    for (const auto& [k, v] : rep.notes) meta[k] = v;
    ordered_json data = ordered_json::array();
    for (const auto& [x, y] : rep.profile) data.push_back({x, y});
    return ordered_json{{"meta", std::move(meta)}, {"data", std::move(data)}};
}

/// Human-readable fixed-width table, the default text form of a report.
inline std::string lemma_report_text(const LemmaReport& rep)
{
    std::ostringstream out;
    out << "check: " << rep.lemma_id << '\n';
    for (const auto& [k, v] : rep.params) out << "  " << k << " = " << v << '\n';
    out << "  ratio_min = " << fmt(rep.ratio_min) << '\n';
    out << "  ratio_max = " << fmt(rep.ratio_max) << " at " << fmt(rep.argmax) << '\n';
    out << "  budget    = " << fmt(rep.budget) << '\n';
    for (const auto& [k, v] : rep.notes) out << "  " << k << " = " << v << '\n';
    out << "  verdict   = " << rep.verdict << '\n';
    if (!rep.profile.empty()) {
        out << "  grid      : measured\n";
        for (const auto& [x, y] : rep.profile)
            out << "    " << fmt(x) << " : " << fmt(y) << '\n';
    }
    return out.str();
}

} // namespace fockso
