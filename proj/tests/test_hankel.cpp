#include <catch2/catch_amalgamated.hpp>

#include "fockso/hankel.hpp"

#include "oracles.hpp"

using namespace fockso;
using Catch::Approx;

namespace {
const SymbolExpr kOne = SymbolExpr::mono(0, 0, cd(1, 0));
const SymbolExpr kZ = SymbolExpr::mono(1, 0, cd(1, 0));
const SymbolExpr kZbar = SymbolExpr::mono(0, 1, cd(1, 0));
const SymbolExpr kAbs2 = SymbolExpr::radial_power(2.0);
const SymbolExpr kDiskInd = SymbolExpr::indicator_annulus(cd(0, 0), 0.0, 1.0);
const SymbolExpr kSin = SymbolExpr::radial_sin(1.0);
} // namespace

TEST_CASE("pointwise Hankel action")
{
    CoeffVector b0 = CoeffVector::basis(0, 0);
    // constants are analytic: H_c = 0
    CHECK(std::abs(hankel_apply(SymbolExpr::mono(0, 0, cd(3, -2)), b0, cd(1.5, 1), 0, 4)) <
          1e-12);
    // g = v, f = b_0: g f stays in the space
    CHECK(std::abs(hankel_apply(kZ, b0, cd(2, -1), 0, 1)) < 1e-12);
    // g = conj(v), f = 1: the projection of conj(v) is zero, H f = conj(z)
    const cd z(1.25, 0.75);
    CHECK(oracles::rel_err(hankel_apply(kZbar, b0, z, 0, 8), std::conj(z)) < 1e-12);
    // analytic polynomial against polynomial f vanishes once L >= deg(g f)
    CoeffVector f(0, {cd(0.5, 0), cd(0, 1), cd(0.25, 0)});
    const SymbolExpr g = parse_symbol("z^2 + 3*z^1");
    CHECK(std::abs(hankel_apply(g, f, cd(1, 1), 0, 4)) < 1e-9);
}

TEST_CASE("sections of elementary symbols")
{
    // constants: zero form
    HankelSection s1 = build_section(kOne, 0, 4, 16);
    CHECK(section_norm(s1) < 1e-12);

    // conj(v) at N = 1: A = [1]
    HankelSection s2 = build_section(kZbar, 0, 1, 4);
    CHECK(std::abs(s2.A[0] - cd(1, 0)) < 1e-12);
    CHECK(section_norm(s2) == Approx(1.0).margin(1e-10));

    // flat section norm across N once L >= N
    for (int N : {1, 4, 16}) {
        HankelSection s = build_section(kZbar, 0, N, 4 * N);
        INFO("N=" << N);
        CHECK(section_norm(s) == Approx(1.0).margin(1e-6));
    }
}

TEST_CASE("disk indicator section matches a brute-force double quadrature")
{
    const int N = 8, L = 32;
    HankelSection s = build_section(kDiskInd, 0, N, L);

    // brute force on a 256 x 256 midpoint polar grid over the unit disk
    const int n = 256;
    auto inner_disk = [&](int k, int j) { // <g b_k, g b_j> = <b_k, b_j over the disk>
        cd acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double rho = (i + 0.5) / n;
            const double w = (1.0 / n) * rho * 2.0 * M_PI / n;
            for (int t = 0; t < n; ++t) {
                const cd v = std::polar(rho, 2.0 * M_PI * (t + 0.5) / n);
                cd bk = 1.0, bj = 1.0;
                for (int q = 0; q < k; ++q) bk *= v / std::sqrt(q + 1.0);
                for (int q = 0; q < j; ++q) bj *= v / std::sqrt(q + 1.0);
                acc += w * bk * std::conj(bj) * std::exp(-std::norm(v));
            }
        }
        return acc / M_PI;
    };
    std::vector<cd> G1b(N * N), Cb(L * N, cd(0, 0));
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) G1b[j * N + k] = inner_disk(k, j);
    for (int l = 0; l < L; ++l)
        for (int k = 0; k < N; ++k) Cb[l * N + k] = inner_disk(k, l);
    double worst = 0.0;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            cd a = G1b[j * N + k];
            for (int l = 0; l < L; ++l) a -= std::conj(Cb[l * N + j]) * Cb[l * N + k];
            worst = std::max(worst, std::abs(a - s.A[j * N + k]));
        }
    CHECK(worst < 1e-6);
}

TEST_CASE("section norms grow for the non-bounded symbol")
{
    // |v|^2: the diagonal of A is k + m + 1, so the norm is sqrt(N + m)
    double prev = 0.0;
    for (int N : {4, 8, 16}) {
        HankelSection s = build_section(kAbs2, 0, N, 4 * N);
        const double norm = section_norm(s);
        CHECK(norm == Approx(std::sqrt(static_cast<double>(N))).epsilon(1e-8));
        CHECK(norm > prev);
        prev = norm;
    }
}

TEST_CASE("section norm monotonicity in N and L")
{
    for (const SymbolExpr& g : {kZbar, kDiskInd, kSin}) {
        INFO(to_string(g));
        double prevN = -1.0;
        for (int N : {4, 8, 16}) {
            const double vN = section_norm(build_section(g, 0, N, 4 * N));
            CHECK(vN >= prevN - 1e-9);
            prevN = vN;
            double prevL = 1e300;
            for (int L : {N, 2 * N, 4 * N}) {
                const double vL = section_norm(build_section(g, 0, N, L));
                CHECK(vL <= prevL + 1e-9);
                prevL = vL;
            }
        }
    }
}

TEST_CASE("analytic polynomial symbols annihilate")
{
    for (const std::string& text : {"1", "z^1", "z^2 + 3*z^1"}) {
        const SymbolExpr g = parse_symbol(text);
        INFO(text);
        CHECK(section_norm(build_section(g, 0, 8, 32)) < 1e-8);
        ProbeCurve curve = kernel_probe(g, 0, {0.0, 2.0, 4.0, 6.0, 8.0}, {});
        for (double v : curve.values) CHECK(v < 1e-8);
    }
}

TEST_CASE("conjugate-pair consistency for real symbols")
{
    for (const SymbolExpr& g : {kSin, kAbs2, kDiskInd}) {
        const double a = section_norm(build_section(g, 0, 8, 32));
        const double b = section_norm(build_section(SymbolExpr::conjugate(g), 0, 8, 32));
        CHECK(a == Approx(b).margin(1e-9));
    }
}

TEST_CASE("kernel probes")
{
    // constants: identically zero
    ProbeCurve zero = kernel_probe(kOne, 0, {0.0, 2.0, 4.0, 6.0}, {});
    for (double v : zero.values) CHECK(v < 1e-12);

    // conj(v): flat value 1 at every radius and direction
    ProbeCurve flat = kernel_probe(kZbar, 0, {0.0, 2.0, 4.0, 6.0, 8.0}, {});
    CHECK(flat.directions.size() == 8);
    for (double v : flat.values) CHECK(v == Approx(1.0).margin(1e-6));

    // compactly supported symbol: probe decays fast
    ProbeCurve ind = kernel_probe(kDiskInd, 0, {0.0, 2.0, 4.0, 6.0, 8.0}, {});
    CHECK(ind.directions.size() == 1); // radial symbol: one ray suffices
    const size_t nd = ind.directions.size();
    for (size_t i = 0; i < ind.radii.size(); ++i)
        if (ind.radii[i] >= 6.0)
            for (size_t d = 0; d < nd; ++d) CHECK(ind.values[i * nd + d] <= 1e-4);
}

TEST_CASE("compactness verdicts")
{
    ProbeCurve c;
    c.radii = {0, 2, 4, 6, 8};
    c.directions = {cd(1, 0)};
    c.values = {0, 0, 0, 0, 0};
    CHECK(compactness_verdict(c, 1e-3).compact_consistent);
    c.values = {1, 1, 1, 1, 1};
    CHECK_FALSE(compactness_verdict(c, 1e-3).compact_consistent);
    c.values = {0.5, 0.1, 1e-3, 1e-5, 1e-7};
    CHECK(compactness_verdict(c, 1e-3).compact_consistent);
    c.radii = {0, 2};
    c.values = {0, 0};
    CHECK_THROWS_AS(compactness_verdict(c, 1e-3), error);
}

TEST_CASE("probe truncation cap errors out on oversized radii")
{
    CHECK_THROWS_WITH(kernel_probe(kZbar, 0, {70.0}, {}),
                      Catch::Matchers::ContainsSubstring("smaller radius"));
}

TEST_CASE("off-center indicator takes the dense path")
{
    const SymbolExpr g = parse_symbol("ind(1+0i,0,1)");
    HankelSection s = build_section(g, 0, 4, 8);
    // mass sits near |v| ~ 1: the form is small but not zero
    const double norm = section_norm(s);
    CHECK(norm > 1e-4);
    CHECK(norm < 1.0);
    // sanity: G1 diagonal entries are positive and bounded by 1
    for (int k = 0; k < 4; ++k) {
        CHECK(s.G1[k * 4 + k].real() > 0.0);
        CHECK(s.G1[k * 4 + k].real() < 1.0);
    }
}

TEST_CASE("bounded symbols stabilize between N = 16 and N = 32")
{
    for (const auto& entry : builtin_catalog()) {
        if (!entry.tags.bmo.value_or(false)) continue;
        INFO(entry.name);
        const double a = section_norm(build_section(entry.symbol, 0, 16, 64));
        const double b = section_norm(build_section(entry.symbol, 0, 32, 128));
        CHECK(std::abs(b - a) <= 0.05 * std::max(b, 1e-9));
    }
}
