#include <catch2/catch_amalgamated.hpp>

#include "fockso/report_io.hpp"
#include "fockso/symbols.hpp"

#include "oracles.hpp"

using namespace fockso;
using Catch::Approx;

TEST_CASE("pointwise evaluation of the atoms")
{
    CHECK(eval_symbol(SymbolExpr::mono(0, 1, cd(1, 0)), cd(2, 1)) == cd(2, -1));
    CHECK(eval_symbol(SymbolExpr::indicator_annulus(cd(0, 0), 0.0, 1.0), cd(2, 0)) ==
          cd(0, 0));
    const SymbolExpr s =
        SymbolExpr::sum({SymbolExpr::mono(1, 0, cd(1, 0)), SymbolExpr::radial_sin(1.0)});
    const cd got = eval_symbol(s, cd(0, 1));
    CHECK(got.real() == Approx(std::sin(1.0)).margin(1e-15));
    CHECK(got.imag() == Approx(1.0).margin(1e-15));
    // angular atom is zero at the origin by convention
    CHECK(eval_symbol(SymbolExpr::angular(3), cd(0, 0)) == cd(0, 0));
}

TEST_CASE("parser examples")
{
    CHECK(parse_symbol("zb^1") == SymbolExpr::mono(0, 1, cd(1, 0)));
    CHECK(parse_symbol("ind(0,0,1) + 2*z^1") ==
          SymbolExpr::sum({SymbolExpr::indicator_annulus(cd(0, 0), 0.0, 1.0),
                           SymbolExpr::mono(1, 0, cd(2, 0))}));
    CHECK_THROWS_WITH(parse_symbol("expq(0.5)"),
                      Catch::Matchers::ContainsSubstring("admissibility"));
    // syntax errors carry a position
    try {
        parse_symbol("z^1 + ?");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("complex literals munch greedily")
{
    CHECK(parse_symbol("1+2i") == SymbolExpr::mono(0, 0, cd(1, 2)));
    CHECK(parse_symbol("1 + 2i") ==
          SymbolExpr::sum({SymbolExpr::mono(0, 0, cd(1, 0)), SymbolExpr::mono(0, 0, cd(0, 2))}));
    CHECK(parse_symbol("-1.5e2") == SymbolExpr::mono(0, 0, cd(-150, 0)));
    CHECK(parse_symbol("2-3i*z^1") == SymbolExpr::mono(1, 0, cd(2, -3)));
}

TEST_CASE("print / parse round-trips structurally")
{
    std::vector<SymbolExpr> cases = {
        SymbolExpr::mono(2, 1, cd(1.5, -0.25)),
        SymbolExpr::mono(0, 0, cd(-3, 0)),
        SymbolExpr::radial_power(2.5),
        SymbolExpr::radial_sin(1.0),
        SymbolExpr::radial_sin(2.25),
        SymbolExpr::radial_expq(-0.125),
        SymbolExpr::angular(-3),
        SymbolExpr::indicator_annulus(cd(1, -2), 0.5, 2.0),
        SymbolExpr::conjugate(SymbolExpr::sum(
            {SymbolExpr::mono(1, 0, cd(1, 0)), SymbolExpr::radial_sin(1.0)})),
        SymbolExpr::product(SymbolExpr::radial_sin(1.0), SymbolExpr::angular(2)),
        SymbolExpr::sum({SymbolExpr::mono(1, 0, cd(0, 1)),
                         SymbolExpr::product(SymbolExpr::radial_power(1.0),
                                             SymbolExpr::angular(1)),
                         SymbolExpr::indicator_annulus(cd(0, 0), 0.0, 1.0)}),
    };
    for (const auto& e : cases) {
        INFO(to_string(e));
        CHECK(parse_symbol(to_string(e)) == e);
    }
    for (const auto& entry : builtin_catalog()) {
        INFO(entry.name << " -> " << to_string(entry.symbol));
        CHECK(parse_symbol(to_string(entry.symbol)) == entry.symbol);
    }
}

TEST_CASE("json round-trips structurally")
{
    const SymbolExpr e = SymbolExpr::sum(
        {SymbolExpr::product(SymbolExpr::mono(1, 0, cd(2, -1)), SymbolExpr::radial_expq(0.2)),
         SymbolExpr::conjugate(SymbolExpr::angular(4)),
         SymbolExpr::indicator_annulus(cd(0.5, 0.5), 0.25, 3.0)});
    CHECK(symbol_from_json(symbol_to_json(e)) == e);
}

TEST_CASE("conjugation is pointwise conjugation")
{
    oracles::Rng rng(3);
    const SymbolExpr g = parse_symbol("2+1i*z^2zb^1 + sinr(1.5)*ang(2) + |z|^0.75");
    for (int i = 0; i < 50; ++i) {
        const cd v = rng.complex_in_disk(4.0);
        CHECK(oracles::rel_err(eval_symbol(SymbolExpr::conjugate(g), v),
                               std::conj(eval_symbol(g, v))) < 1e-14);
    }
}

TEST_CASE("catalog tags are structurally consistent")
{
    for (const auto& entry : builtin_catalog()) {
        INFO(entry.name);
        CHECK(entry.tags.consistent());
    }
    // the required entries and their headline tags
    CHECK(catalog_entry("const").tags.vmo == true);
    CHECK(catalog_entry("conj_z").tags.bmo == true);
    CHECK(catalog_entry("conj_z").tags.vmo == false);
    CHECK(catalog_entry("conj_z").tags.bo == true);
    CHECK(catalog_entry("disk_ind").tags.va == true);
    CHECK(catalog_entry("radial_sq").tags.bmo == false);
    CHECK(catalog_entry("bounded_osc").tags.bo == true);
}

TEST_CASE("structural views")
{
    CHECK(is_radial(parse_symbol("|z|^2")));
    CHECK(is_radial(parse_symbol("sin|z| + expq(0.1)")));
    CHECK(is_radial(parse_symbol("z^1zb^1")));
    CHECK_FALSE(is_radial(parse_symbol("z^1")));
    CHECK(is_analytic_polynomial(parse_symbol("z^2 + 3*z^1")));
    CHECK_FALSE(is_analytic_polynomial(parse_symbol("zb^1")));
    CHECK_FALSE(is_analytic_polynomial(parse_symbol("sin|z|")));

    auto mono = as_polynomial(parse_symbol("z^1*zb^1 + 2"));
    REQUIRE(mono.has_value());
    CHECK(mono->size() == 2);

    // off-center indicators are not polar separable
    CHECK_FALSE(polar_terms(parse_symbol("ind(1+0i,0,1)")).has_value());
    CHECK(polar_terms(parse_symbol("ind(0,0,1)")).has_value());

    CHECK(max_expq_total(parse_symbol("expq(0.25)*expq(0.2)")) == Approx(0.45));
}

TEST_CASE("tree depth cap")
{
    SymbolExpr e = SymbolExpr::mono(0, 0, cd(1, 0));
    for (int i = 0; i < 30; ++i) e = SymbolExpr::conjugate(e);
    CHECK_THROWS_AS(
        [&] {
            for (int i = 0; i < 10; ++i) e = SymbolExpr::conjugate(e);
        }(),
        error);
}
