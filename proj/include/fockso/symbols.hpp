#pragma once

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fockso/common.hpp"

namespace fockso {

/// Atoms of the closed symbol language. The language is deliberately closed
/// (no user callbacks): admissibility against the Gaussian kernel weights
/// and the location of every discontinuity must be readable off the tree.
enum class SymKind {
    Mono,             // c * z^a * conj(z)^b
    RadialPower,      // |z|^s, s >= 0
    RadialSin,        // sin(omega * |z|)
    RadialExpQ,       // exp(s * |z|^2), |s| <= 1/4
    Angular,          // exp(i k theta), value 0 at z = 0
    IndicatorAnnulus, // 1 on a <= |z - center| <= b
    Sum,
    Product,
    Conj,
};

class parse_error : public error {
public:
    size_t position;
    parse_error(const std::string& msg, size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos)
    {
    }
};

class SymbolExpr {
public:
    struct Node {
        SymKind kind;
        int a = 0, b = 0;     // Mono exponents
        cd c{1.0, 0.0};       // Mono coefficient
        double s = 0.0;       // RadialPower / RadialSin / RadialExpQ parameter
        int k = 0;            // Angular wavenumber
        cd center{0.0, 0.0};  // IndicatorAnnulus
        double r0 = 0.0, r1 = 0.0;
        std::vector<SymbolExpr> children;
        int depth = 1;
    };

    static constexpr int kMaxDepth = 32;
    static constexpr double kExpQBound = 0.25;

    SymbolExpr() : node_(leaf(SymKind::Mono)) {} // defaults to the constant 1

    static SymbolExpr mono(int a, int b, cd c)
    {
        if (a < 0 || b < 0) throw error("monomial exponents must be non-negative");
        auto n = leaf(SymKind::Mono);
        n->a = a;
        n->b = b;
        n->c = c;
        return SymbolExpr(std::move(n));
    }

    static SymbolExpr radial_power(double s)
    {
        if (s < 0.0) throw error("radial power exponent must be non-negative");
        auto n = leaf(SymKind::RadialPower);
        n->s = s;
        return SymbolExpr(std::move(n));
    }

    static SymbolExpr radial_sin(double omega)
    {
        auto n = leaf(SymKind::RadialSin);
        n->s = omega;
        return SymbolExpr(std::move(n));
    }

    static SymbolExpr radial_expq(double s)
    {
        if (std::abs(s) > kExpQBound)
            throw error("expq exponent " + fmt(s) +
                        " violates the admissibility bound |s| <= 1/4 (the symbol must stay "
                        "integrable against every Gaussian kernel weight)");
        auto n = leaf(SymKind::RadialExpQ);
        n->s = s;
        return SymbolExpr(std::move(n));
    }

    static SymbolExpr angular(int k)
    {
        auto n = leaf(SymKind::Angular);
        n->k = k;
        return SymbolExpr(std::move(n));
    }

    static SymbolExpr indicator_annulus(cd center, double a, double b)
    {
        if (a < 0.0 || b <= a) throw error("indicator annulus needs 0 <= a < b");
        auto n = leaf(SymKind::IndicatorAnnulus);
        n->center = center;
        n->r0 = a;
        n->r1 = b;
        return SymbolExpr(std::move(n));
    }

    static SymbolExpr sum(std::vector<SymbolExpr> terms)
    {
        if (terms.empty()) throw error("sum needs at least one term");
        if (terms.size() == 1) return terms.front();
        auto n = std::make_shared<Node>();
        n->kind = SymKind::Sum;
        n->depth = 1;
        for (const auto& t : terms) n->depth = std::max(n->depth, t.depth() + 1);
        n->children = std::move(terms);
        check_depth(n->depth);
        return SymbolExpr(std::move(n));
    }

    static SymbolExpr product(SymbolExpr lhs, SymbolExpr rhs)
    {
        auto n = std::make_shared<Node>();
        n->kind = SymKind::Product;
        n->depth = std::max(lhs.depth(), rhs.depth()) + 1;
        check_depth(n->depth);
        n->children.push_back(std::move(lhs));
        n->children.push_back(std::move(rhs));
        return SymbolExpr(std::move(n));
    }

    static SymbolExpr conjugate(SymbolExpr child)
    {
        auto n = std::make_shared<Node>();
        n->kind = SymKind::Conj;
        n->depth = child.depth() + 1;
        check_depth(n->depth);
        n->children.push_back(std::move(child));
        return SymbolExpr(std::move(n));
    }

    const Node& node() const { return *node_; }
    SymKind kind() const { return node_->kind; }
    int depth() const { return node_->depth; }

    bool operator==(const SymbolExpr& other) const
    {
        const Node& x = *node_;
        const Node& y = *other.node_;
        if (x.kind != y.kind) return false;
        if (x.a != y.a || x.b != y.b || x.c != y.c || x.s != y.s || x.k != y.k ||
            x.center != y.center || x.r0 != y.r0 || x.r1 != y.r1)
            return false;
        if (x.children.size() != y.children.size()) return false;
        for (size_t i = 0; i < x.children.size(); ++i)
            if (!(x.children[i] == y.children[i])) return false;
        return true;
    }

private:
    explicit SymbolExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    explicit SymbolExpr(std::shared_ptr<Node> n) : node_(std::move(n)) {}

    static std::shared_ptr<Node> leaf(SymKind k)
    {
        auto n = std::make_shared<Node>();
        n->kind = k;
        return n;
    }

    static void check_depth(int d)
    {
        if (d > kMaxDepth) throw error("symbol tree deeper than 32");
    }

    std::shared_ptr<const Node> node_;
};

inline cd eval_symbol(const SymbolExpr& g, cd v)
{
    const auto& n = g.node();
    switch (n.kind) {
    case SymKind::Mono: {
        cd r = n.c;
        for (int i = 0; i < n.a; ++i) r *= v;
        const cd vb = std::conj(v);
        for (int i = 0; i < n.b; ++i) r *= vb;
        return r;
    }
    case SymKind::RadialPower:
        return n.s == 0.0 ? cd(1.0, 0.0) : cd(std::pow(std::abs(v), n.s), 0.0);
    case SymKind::RadialSin:
        return cd(std::sin(n.s * std::abs(v)), 0.0);
    case SymKind::RadialExpQ:
        return cd(std::exp(n.s * std::norm(v)), 0.0);
    case SymKind::Angular:
        if (v == cd(0.0, 0.0)) return {0.0, 0.0}; // measure-zero convention
        return std::polar(1.0, n.k * std::arg(v));
    case SymKind::IndicatorAnnulus: {
        const double d = std::abs(v - n.center);
        return (d >= n.r0 && d <= n.r1) ? cd(1.0, 0.0) : cd(0.0, 0.0);
    }
    case SymKind::Sum: {
        cd r = 0.0;
        for (const auto& t : n.children) r += eval_symbol(t, v);
        return r;
    }
    case SymKind::Product:
        return eval_symbol(n.children[0], v) * eval_symbol(n.children[1], v);
    case SymKind::Conj:
        return std::conj(eval_symbol(n.children[0], v));
    }
    throw error("unreachable symbol kind");
}

// ---------------------------------------------------------------------------
// Printing. print/parse round-trips structurally on canonical forms.

namespace detail {

inline std::string fmt_complex_literal(cd c)
{
    if (c.imag() == 0.0) return fmt(c.real());
    return fmt(c.real()) + (c.imag() < 0.0 ? "" : "+") + fmt(c.imag()) + "i";
}

} // namespace detail

inline std::string to_string(const SymbolExpr& g)
{
    const auto& n = g.node();
    switch (n.kind) {
    case SymKind::Mono: {
        std::string parts;
        if (n.a > 0) parts += "z^" + std::to_string(n.a);
        if (n.b > 0) parts += std::string(parts.empty() ? "" : "") + "zb^" + std::to_string(n.b);
        if (parts.empty()) return detail::fmt_complex_literal(n.c);
        if (n.c == cd(1.0, 0.0)) return parts;
        return detail::fmt_complex_literal(n.c) + "*" + parts;
    }
    case SymKind::RadialPower:
        return "|z|^" + fmt(n.s);
    case SymKind::RadialSin:
        return n.s == 1.0 ? "sin|z|" : "sinr(" + fmt(n.s) + ")";
    case SymKind::RadialExpQ:
        return "expq(" + fmt(n.s) + ")";
    case SymKind::Angular:
        return "ang(" + std::to_string(n.k) + ")";
    case SymKind::IndicatorAnnulus:
        return "ind(" + detail::fmt_complex_literal(n.center) + "," + fmt(n.r0) + "," +
               fmt(n.r1) + ")";
    case SymKind::Sum: {
        std::string r;
        for (size_t i = 0; i < n.children.size(); ++i) {
            if (i) r += " + ";
            r += to_string(n.children[i]);
        }
        return r;
    }
    case SymKind::Product:
        return to_string(n.children[0]) + "*" + to_string(n.children[1]);
    case SymKind::Conj:
        return "conj(" + to_string(n.children[0]) + ")";
    }
    throw error("unreachable symbol kind");
}

// ---------------------------------------------------------------------------
// Parsing.
//
//   expr := term ('+' term)*
//   term := atom ('*' atom)*
//   atom := 'z^'a['zb^'b] | 'zb^'b | '|z|^'s | 'sin|z|' | 'sinr('w')'
//         | 'expq('s')' | 'ang('k')' | 'ind('c','a','b')'
//         | 'conj(' expr ')' | complex-literal
//
// Complex literals are 'a', 'a+bi', 'a-bi' or 'bi' with no interior spaces;
// the lexer munches the longest literal, so "1+2i" is one atom while
// "1 + 2i" is a sum.

namespace detail {

struct SymbolParser {
    std::string_view text;
    size_t pos = 0;

    explicit SymbolParser(std::string_view t) : text(t) {}

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(std::string_view tok)
    {
        if (text.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos); }

    double parse_number()
    {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        bool digits = false;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
            digits = true;
            ++pos;
        }
        if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
            size_t epos = pos + 1;
            if (epos < text.size() && (text[epos] == '+' || text[epos] == '-')) ++epos;
            if (epos < text.size() && std::isdigit(static_cast<unsigned char>(text[epos]))) {
                pos = epos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
            }
        }
        if (!digits) fail("expected a number");
        std::string tmp(text.substr(start, pos - start));
        char* end = nullptr;
        double v = std::strtod(tmp.c_str(), &end);
        if (end != tmp.c_str() + tmp.size()) fail("malformed number '" + tmp + "'");
        return v;
    }

    int parse_int()
    {
        double v = parse_number();
        double r = std::round(v);
        if (v != r || std::abs(v) > 1e9) fail("expected an integer");
        return static_cast<int>(r);
    }

    bool starts_number() const
    {
        if (pos >= text.size()) return false;
        char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return true;
        if ((c == '+' || c == '-') && pos + 1 < text.size()) {
            char d = text[pos + 1];
            return std::isdigit(static_cast<unsigned char>(d)) || d == '.';
        }
        return false;
    }

    /// Maximal-munch complex literal: a, bi, a+bi, a-bi with no spaces.
    cd parse_complex_literal()
    {
        double first = parse_number();
        if (pos < text.size() && text[pos] == 'i') {
            ++pos;
            return {0.0, first};
        }
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            size_t save = pos;
            char sign = text[pos];
            ++pos;
            if (pos < text.size() &&
                (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
                double second = parse_number();
                if (pos < text.size() && text[pos] == 'i') {
                    ++pos;
                    return {first, sign == '-' ? -second : second};
                }
            }
            pos = save; // not an imaginary tail; leave the sign for the caller
        }
        return {first, 0.0};
    }

    SymbolExpr parse_atom()
    {
        skip_ws();
        size_t atom_pos = pos;
        try {
            return parse_atom_inner();
        } catch (const parse_error&) {
            throw;
        } catch (const error& e) {
            // constraint violations (expq bound, bad annulus) become parse
            // errors carrying the atom position
            throw parse_error(e.what(), atom_pos);
        }
    }

    SymbolExpr parse_atom_inner()
    {
        if (pos >= text.size()) fail("unexpected end of symbol expression");

        if (eat("conj(")) {
            SymbolExpr inner = parse_expr();
            skip_ws();
            if (!eat(")")) fail("expected ')' closing conj");
            return SymbolExpr::conjugate(std::move(inner));
        }
        if (eat("sinr(")) {
            double w = parse_number();
            if (!eat(")")) fail("expected ')' closing sinr");
            return SymbolExpr::radial_sin(w);
        }
        if (eat("sin|z|")) return SymbolExpr::radial_sin(1.0);
        if (eat("expq(")) {
            double s = parse_number();
            if (!eat(")")) fail("expected ')' closing expq");
            return SymbolExpr::radial_expq(s);
        }
        if (eat("ang(")) {
            int k = parse_int();
            if (!eat(")")) fail("expected ')' closing ang");
            return SymbolExpr::angular(k);
        }
        if (eat("ind(")) {
            cd center = parse_complex_literal();
            if (!eat(",")) fail("expected ',' in ind(center,a,b)");
            double a = parse_number();
            if (!eat(",")) fail("expected ',' in ind(center,a,b)");
            double b = parse_number();
            if (!eat(")")) fail("expected ')' closing ind");
            return SymbolExpr::indicator_annulus(center, a, b);
        }
        if (eat("|z|^")) return SymbolExpr::radial_power(parse_number());
        if (eat("z^")) {
            int a = parse_int();
            int b = 0;
            if (eat("zb^")) b = parse_int();
            return SymbolExpr::mono(a, b, cd(1.0, 0.0));
        }
        if (eat("zb^")) return SymbolExpr::mono(0, parse_int(), cd(1.0, 0.0));
        if (starts_number()) return SymbolExpr::mono(0, 0, parse_complex_literal());
        fail("expected an atom (z^a, zb^b, |z|^s, sin|z|, sinr, expq, ang, ind, conj or a "
             "complex literal)");
    }

    SymbolExpr parse_term()
    {
        SymbolExpr cur = parse_atom();
        for (;;) {
            skip_ws();
            if (!eat("*")) break;
            SymbolExpr next = parse_atom();
            // fold literal * monomial into a single monomial
            const auto& l = cur.node();
            const auto& r = next.node();
            if (l.kind == SymKind::Mono && r.kind == SymKind::Mono)
                cur = SymbolExpr::mono(l.a + r.a, l.b + r.b, l.c * r.c);
            else
                cur = SymbolExpr::product(std::move(cur), std::move(next));
        }
        return cur;
    }

    SymbolExpr parse_expr()
    {
        std::vector<SymbolExpr> terms;
        terms.push_back(parse_term());
        for (;;) {
            skip_ws();
            if (!eat("+")) break;
            terms.push_back(parse_term());
        }
        return terms.size() == 1 ? terms.front() : SymbolExpr::sum(std::move(terms));
    }
};

} // namespace detail

inline SymbolExpr parse_symbol(std::string_view text)
{
    detail::SymbolParser p(text);
    SymbolExpr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after symbol expression");
    return e;
}

inline cd parse_complex(std::string_view text)
{
    detail::SymbolParser p(text);
    p.skip_ws();
    cd v = p.parse_complex_literal();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input after complex literal");
    return v;
}

// ---------------------------------------------------------------------------
// Structural views used by quadrature and the Hankel machinery.

/// One polar-separable term coeff * |v|^rho_pow * exp(expq |v|^2)
///                       * prod sin(w_i |v|) * [annuli] * e^{i charge theta}.
struct PolarTerm {
    cd coeff{1.0, 0.0};
    double rho_pow = 0.0;
    double expq = 0.0;
    std::vector<double> sin_omegas;
    double ann_lo = 0.0; // intersection of origin-centred annuli
    double ann_hi = std::numeric_limits<double>::infinity();
    int charge = 0;

    double eval_radial(double rho) const
    {
        if (rho < ann_lo || rho > ann_hi) return 0.0;
        double r = 1.0;
        if (rho_pow != 0.0) r = std::pow(rho, rho_pow);
        if (expq != 0.0) r *= std::exp(expq * rho * rho);
        for (double w : sin_omegas) r *= std::sin(w * rho);
        return r;
    }
};

/// Decomposes a symbol into polar-separable terms. Returns nullopt when the
/// symbol is not separable (an indicator not centred at the origin) or the
/// expansion explodes. Conjugation flips the charge and the coefficient.
inline std::optional<std::vector<PolarTerm>> polar_terms(const SymbolExpr& g)
{
    constexpr size_t kMaxTerms = 256;
    const auto& n = g.node();
    switch (n.kind) {
    case SymKind::Mono: {
        PolarTerm t;
        t.coeff = n.c;
        t.rho_pow = n.a + n.b;
        t.charge = n.a - n.b;
        return std::vector<PolarTerm>{t};
    }
    case SymKind::RadialPower: {
        PolarTerm t;
        t.rho_pow = n.s;
        return std::vector<PolarTerm>{t};
    }
    case SymKind::RadialSin: {
        PolarTerm t;
        t.sin_omegas.push_back(n.s);
        return std::vector<PolarTerm>{t};
    }
    case SymKind::RadialExpQ: {
        PolarTerm t;
        t.expq = n.s;
        return std::vector<PolarTerm>{t};
    }
    case SymKind::Angular: {
        PolarTerm t;
        t.charge = n.k;
        return std::vector<PolarTerm>{t};
    }
    case SymKind::IndicatorAnnulus: {
        if (std::abs(n.center) > 1e-12) return std::nullopt;
        PolarTerm t;
        t.ann_lo = n.r0;
        t.ann_hi = n.r1;
        return std::vector<PolarTerm>{t};
    }
    case SymKind::Sum: {
        std::vector<PolarTerm> all;
        for (const auto& c : n.children) {
            auto sub = polar_terms(c);
            if (!sub) return std::nullopt;
            all.insert(all.end(), sub->begin(), sub->end());
            if (all.size() > kMaxTerms) return std::nullopt;
        }
        return all;
    }
    case SymKind::Product: {
        auto lhs = polar_terms(n.children[0]);
        auto rhs = polar_terms(n.children[1]);
        if (!lhs || !rhs) return std::nullopt;
        if (lhs->size() * rhs->size() > kMaxTerms) return std::nullopt;
        std::vector<PolarTerm> all;
        for (const auto& a : *lhs) {
            for (const auto& b : *rhs) {
                PolarTerm t;
                t.coeff = a.coeff * b.coeff;
                t.rho_pow = a.rho_pow + b.rho_pow;
                t.expq = a.expq + b.expq;
                t.sin_omegas = a.sin_omegas;
                t.sin_omegas.insert(t.sin_omegas.end(), b.sin_omegas.begin(),
                                    b.sin_omegas.end());
                t.ann_lo = std::max(a.ann_lo, b.ann_lo);
                t.ann_hi = std::min(a.ann_hi, b.ann_hi);
                t.charge = a.charge + b.charge;
                all.push_back(std::move(t));
            }
        }
        return all;
    }
    case SymKind::Conj: {
        auto sub = polar_terms(n.children[0]);
        if (!sub) return std::nullopt;
        for (auto& t : *sub) {
            t.coeff = std::conj(t.coeff);
            t.charge = -t.charge;
        }
        return sub;
    }
    }
    return std::nullopt;
}

/// True when the symbol is radially symmetric (every separable term carries
/// charge zero). Falls back to false for non-separable symbols.
inline bool is_radial(const SymbolExpr& g)
{
    auto terms = polar_terms(g);
    if (!terms) return false;
    for (const auto& t : *terms)
        if (t.charge != 0) return false;
    return true;
}

/// Monomial c * z^a * conj(z)^b.
struct Monomial {
    int a = 0, b = 0;
    cd c{0.0, 0.0};
};

/// Expands the symbol as a polynomial in z and conj(z) if it is one.
inline std::optional<std::vector<Monomial>> as_polynomial(const SymbolExpr& g)
{
    auto terms = polar_terms(g);
    if (!terms) return std::nullopt;
    std::vector<Monomial> out;
    for (const auto& t : *terms) {
        if (!t.sin_omegas.empty() || t.expq != 0.0) return std::nullopt;
        if (t.ann_lo != 0.0 || t.ann_hi != std::numeric_limits<double>::infinity())
            return std::nullopt;
        double rp = std::round(t.rho_pow);
        if (std::abs(t.rho_pow - rp) > 1e-12) return std::nullopt;
        int p = static_cast<int>(rp);
        if (p < std::abs(t.charge) || ((p - t.charge) % 2) != 0) return std::nullopt;
        Monomial m;
        m.a = (p + t.charge) / 2;
        m.b = (p - t.charge) / 2;
        m.c = t.coeff;
        out.push_back(m);
    }
    return out;
}

inline bool is_analytic_polynomial(const SymbolExpr& g)
{
    auto mono = as_polynomial(g);
    if (!mono) return false;
    for (const auto& m : *mono)
        if (m.b != 0 && m.c != cd(0.0, 0.0)) return false;
    return true;
}

/// Collects discontinuity circles (center, radius) of every indicator atom.
inline void indicator_circles(const SymbolExpr& g, std::vector<std::pair<cd, double>>& out)
{
    const auto& n = g.node();
    if (n.kind == SymKind::IndicatorAnnulus) {
        if (n.r0 > 0.0) out.emplace_back(n.center, n.r0);
        out.emplace_back(n.center, n.r1);
    }
    for (const auto& c : n.children) indicator_circles(c, out);
}

inline bool has_indicator(const SymbolExpr& g)
{
    std::vector<std::pair<cd, double>> circles;
    indicator_circles(g, circles);
    return !circles.empty();
}

/// Largest total expq exponent along any product chain; the growth rate of
/// the symbol is exp(s |v|^2) with this s.
inline double max_expq_total(const SymbolExpr& g)
{
    const auto& n = g.node();
    switch (n.kind) {
    case SymKind::RadialExpQ:
        return n.s;
    case SymKind::Sum: {
        double m = 0.0;
        for (const auto& c : n.children) m = std::max(m, max_expq_total(c));
        return m;
    }
    case SymKind::Product:
        return max_expq_total(n.children[0]) + max_expq_total(n.children[1]);
    case SymKind::Conj:
        return max_expq_total(n.children[0]);
    default:
        return 0.0;
    }
}

// ---------------------------------------------------------------------------
// Curated symbols with oracle class tags.

/// Membership tags for the oscillation classes. For every curated symbol the
/// p-averaged memberships (ba/va, bmo/vmo) hold uniformly in p >= 1, so a
/// single flag per class suffices.
struct ClassTags {
    std::optional<bool> bo, vo;   // bounded / vanishing oscillation (continuous symbols)
    std::optional<bool> ba, va;   // bounded / vanishing disk averages of |g|^p
    std::optional<bool> bmo, vmo; // bounded / vanishing mean oscillation

    /// Structural consistency: vanishing implies bounded, and membership in
    /// either oscillation summand implies mean-oscillation membership.
    bool consistent() const
    {
        auto implies = [](std::optional<bool> x, std::optional<bool> y) {
            return !(x.value_or(false) && !y.value_or(false));
        };
        return implies(vo, bo) && implies(va, ba) && implies(vmo, bmo) && implies(bo, bmo) &&
               implies(ba, bmo) && implies(vo, vmo) && implies(va, vmo);
    }
};

struct CatalogEntry {
    std::string name;
    SymbolExpr symbol;
    ClassTags tags;
};

inline const std::vector<CatalogEntry>& builtin_catalog()
{
    static const std::vector<CatalogEntry> catalog = [] {
        std::vector<CatalogEntry> c;
        // Constant: zero oscillation everywhere; averages are flat (bounded,
        // non-vanishing for a nonzero constant).
        c.push_back({"const", SymbolExpr::mono(0, 0, cd(1.0, 0.0)),
                     {true, true, true, false, true, true}});
        // conj(z): unit-Lipschitz, so bounded oscillation that never decays;
        // |g|^p averages grow like |z|^p.
        c.push_back({"conj_z", SymbolExpr::mono(0, 1, cd(1.0, 0.0)),
                     {true, false, false, false, true, false}});
        // Unit-disk indicator: compactly supported, so every averaged
        // quantity vanishes at infinity; not continuous, hence no bo/vo.
        c.push_back({"disk_ind", SymbolExpr::indicator_annulus(cd(0.0, 0.0), 0.0, 1.0),
                     {false, false, true, true, true, true}});
        // |z|^2: oscillation grows like |z| r, averages like |z|^{2p}.
        c.push_back({"radial_sq", SymbolExpr::radial_power(2.0),
                     {false, false, false, false, false, false}});
        // sin|z|: unit-Lipschitz and bounded, so bo and ba hold, but the
        // oscillation never dies out.
        c.push_back({"bounded_osc", SymbolExpr::radial_sin(1.0),
                     {true, false, true, false, true, false}});
        return c;
    }();
    return catalog;
}

inline const CatalogEntry& catalog_entry(std::string_view name)
{
    for (const auto& e : builtin_catalog())
        if (e.name == name) return e;
    throw error("unknown catalog symbol '" + std::string(name) + "'");
}

} // namespace fockso
