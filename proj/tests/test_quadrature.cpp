#include <catch2/catch_amalgamated.hpp>

#include "fockso/quadrature.hpp"
#include "fockso/stablefun.hpp"

#include "oracles.hpp"

using namespace fockso;
using Catch::Approx;

TEST_CASE("one-point Gauss rule for e^{-t}")
{
    PlaneRule r = build_plane_rule(0, 1, 4);
    REQUIRE(r.t_nodes.size() == 1);
    CHECK(r.t_nodes[0] == Approx(1.0).margin(1e-14));
    CHECK(r.t_weights[0] == Approx(1.0).margin(1e-14));
}

TEST_CASE("two-point rule nodes for t e^{-t} are 3 +- sqrt(3)")
{
    PlaneRule r = build_plane_rule(1, 2, 4);
    CHECK(r.t_nodes[0] == Approx(3.0 - std::sqrt(3.0)).margin(1e-12));
    CHECK(r.t_nodes[1] == Approx(3.0 + std::sqrt(3.0)).margin(1e-12));
    CHECK(r.t_weights[0] + r.t_weights[1] == Approx(1.0).margin(1e-13));
}

TEST_CASE("plane rule normalization and moments")
{
    for (int m : {0, 1, 3}) {
        PlaneRule r = build_plane_rule(m, 20, 64);
        const cd one = integrate_plane(r, [](cd) { return cd(1.0, 0.0); });
        CHECK(one.real() / (M_PI * factorial(m)) == Approx(1.0).margin(1e-13));
    }
    PlaneRule r0 = build_plane_rule(0, 20, 64);
    const cd second = integrate_plane(r0, [](cd v) { return cd(std::norm(v), 0.0); });
    CHECK(second.real() / M_PI == Approx(1.0).margin(1e-13));

    // angular orthogonality of v^j conj(v)^k, j != k
    const cd cross = integrate_plane(r0, [](cd v) { return v * v * std::conj(v); });
    CHECK(std::abs(cross) < 1e-14 * M_PI);
}

TEST_CASE("reproducing identity through the plane rule")
{
    // (1/(pi 1!)) int |E_1(conj(z) v)|^2 |v|^2 e^{-|v|^2} dA = E_1(|z|^2) at z = 2
    PlaneRule r = build_plane_rule(1, 64, 128);
    const cd z(2.0, 0.0);
    const cd val = integrate_plane(r, [&](cd v) {
        const cd e = exp_remainder_em(1, std::conj(z) * v).value();
        return cd(std::norm(e), 0.0);
    });
    const double want = kernel(1, z, z).value().real() / factorial(1);
    CHECK(val.real() / (M_PI * factorial(1)) == Approx(want).epsilon(1e-10));
}

TEST_CASE("orthonormal basis gram through the plane rule")
{
    for (int m : {0, 1, 2, 3}) {
        PlaneRule r = build_plane_rule(m, 64, 128);
        const int K = 41;
        // accumulate all basis values once per node
        std::vector<std::vector<cd>> gram(K, std::vector<cd>(K, cd(0, 0)));
        const double wtheta = 2.0 * M_PI / r.n_angular;
        for (int i = 0; i < r.n_radial; ++i) {
            const double rr = std::sqrt(r.t_nodes[i]);
            const double w = 0.5 * r.t_weights[i] * wtheta;
            for (int j = 0; j < r.n_angular; ++j) {
                const cd v = std::polar(rr, wtheta * j);
                std::vector<cd> b(K);
                cd bk = 1.0;
                for (int k = 0; k < K; ++k) {
                    b[k] = bk;
                    bk *= v / std::sqrt(static_cast<double>(k + m + 1));
                }
                for (int a = 0; a < K; ++a)
                    for (int c = 0; c < K; ++c) gram[a][c] += w * b[a] * std::conj(b[c]);
            }
        }
        double worst = 0.0;
        for (int a = 0; a < K; ++a)
            for (int c = 0; c < K; ++c) {
                const cd want = (a == c) ? cd(1.0, 0.0) : cd(0.0, 0.0);
                worst = std::max(worst,
                                 std::abs(gram[a][c] / (M_PI * factorial(m)) - want));
            }
        INFO("m=" << m);
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("disk rule exact areas and low moments")
{
    const cd z(1.5, -0.75);
    const double r = 1.25;
    DiskRule rule = build_disk_rule(z, r, QuadConfig{});
    const double area = M_PI * r * r;
    CHECK(integrate_disk(rule, [](cd) { return cd(1.0, 0.0); }).real() ==
          Approx(area).epsilon(1e-14));
    const cd centroid = integrate_disk(rule, [](cd v) { return v; });
    CHECK(oracles::rel_err(centroid, area * z) < 1e-13);
    const cd m2 = integrate_disk(rule, [](cd v) { return cd(std::norm(v), 0.0); });
    CHECK(m2.real() == Approx(area * (std::norm(z) + r * r / 2.0)).epsilon(1e-13));
}

TEST_CASE("disk rule translation covariance")
{
    const cd z(0.5, 0.25), z0(-2.0, 1.0);
    const double r = 1.0;
    auto f = [](cd v) { return cd(std::cos(v.real()) + std::norm(v), std::sin(v.imag())); };
    DiskRule a = build_disk_rule(z + z0, r, QuadConfig{});
    DiskRule b = build_disk_rule(z, r, QuadConfig{});
    const cd lhs = integrate_disk(a, [&](cd v) { return f(v - z0); });
    const cd rhs = integrate_disk(b, f);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
}

TEST_CASE("rule refinement is a convergence sentinel")
{
    PlaneRule r1 = build_plane_rule(1, 64, 128);
    PlaneRule r2 = build_plane_rule(1, 128, 256);
    auto f = [](cd v) { return cd(std::exp(v.real()), 0.0) * std::cos(0.5 * v.imag()); };
    const cd a = integrate_plane(r1, f);
    const cd b = integrate_plane(r2, f);
    CHECK(std::abs(a - b) <= 1e-10 * std::abs(b));

    DiskRule d1 = build_disk_rule(cd(2, 1), 1.0, QuadConfig{32, 64, 4});
    DiskRule d2 = build_disk_rule(cd(2, 1), 1.0, QuadConfig{64, 128, 8});
    const cd da = integrate_disk(d1, f);
    const cd db = integrate_disk(d2, f);
    CHECK(std::abs(da - db) <= 1e-10 * std::abs(db));
}

TEST_CASE("log-scale plane integration survives exp(700)-scale values")
{
    // int e^{2 Re(conj(z) v)} e^{-|v|^2} dA = pi e^{|z|^2} at |z| = 26:
    // the integrand peaks near e^{676}, far beyond double range.
    PlaneRule r = build_plane_rule(0, 96, 128);
    const cd z(26.0, 0.0);
    const LogComplex val = integrate_plane_log(r, [&](cd v) {
        return LogComplex::make(2.0 * (std::conj(z) * v).real(), 0.0);
    });
    CHECK(val.logmag - std::norm(z) == Approx(std::log(M_PI)).margin(1e-7));
}

TEST_CASE("non-finite integrand values are reported with the node")
{
    PlaneRule r = build_plane_rule(0, 4, 8);
    CHECK_THROWS_WITH(
        integrate_plane(r, [](cd) { return cd(std::numeric_limits<double>::quiet_NaN(), 0.0); }),
        Catch::Matchers::ContainsSubstring("node"));
}

TEST_CASE("indicator snapping pins panel edges")
{
    // concentric discontinuity at rho = 0.6 becomes a panel edge
    DiskRule rule = build_disk_rule(cd(0, 0), 1.0, QuadConfig{16, 32, 2}, {0.6});
    // integral of the indicator of B(0;0.6) must be exact despite the jump
    const double got = integrate_disk_real(rule, [](cd v) {
        return std::abs(v) <= 0.6 ? 1.0 : 0.0;
    });
    CHECK(got == Approx(M_PI * 0.36).epsilon(1e-13));
}
