#include "doctest.h"

#include "cdoalg/errors.hpp"
#include "cdoalg/level.hpp"

#include <random>

using namespace cdoalg;

TEST_CASE("dual level")
{
    auto sl2 = build_preset("SL2");
    Level k = Level::symbolic(sl2);
    Level kd = dual_level(k);
    CHECK(kd.simple_level(0).str() == "(-k-4)"); // h-check = 2
    CHECK(dual_level(kd) == k);

    auto torus = build_preset("Torus(2)");
    Level kap = Level::symbolic_abelian(torus);
    Level kapd = dual_level(kap);
    for (int i = 0; i < 2; ++i) CHECK(kapd.abelian_block()[i][i] == -kap.abelian_block()[i][i]);
    CHECK(dual_level(kapd) == kap);
}

TEST_CASE("dual level involution on random rational levels across presets")
{
    std::mt19937 rng(11);
    for (const char* name : {"SL2", "PSL2", "SL(3)", "PGL(3)", "SpinAdj(D4)", "GL(2)", "Torus(2)"}) {
        auto d = build_preset(name);
        for (int trial = 0; trial < 60; ++trial) {
            Rat k((long)(rng() % 41) - 20, (long)(rng() % 7) + 1);
            Level lvl = d->is_torus()
                            ? Level::abelian(d, {{k, Rat(0)}, {Rat(0), Rat(1)}})
                            : Level::rational(d, k);
            CHECK(dual_level(dual_level(lvl)) == lvl);
        }
    }
}

TEST_CASE("critical level")
{
    auto sl2 = build_preset("SL2");
    Level kc = critical_level(sl2);
    CHECK(kc.simple_level(0) == Scalar(-2));
    CHECK(dual_level(kc) == kc);

    auto torus = build_preset("Torus(2)");
    Level tc = critical_level(torus);
    for (auto& row : tc.abelian_block())
        for (auto& e : row) CHECK(e.is_zero());
    CHECK(dual_level(tc) == tc);

    // Unique fixed point on each simple factor: -k - 2h = k forces k = -h.
    auto sl3 = build_preset("SL(3)");
    CHECK(critical_level(sl3).simple_level(0) == Scalar(-3));
}

TEST_CASE("dual Coxeter numbers")
{
    CHECK(dual_coxeter(*build_preset("SL2"), 0) == 2);
    for (int n = 2; n <= 5; ++n)
        CHECK(dual_coxeter(*build_preset("SL(" + std::to_string(n) + ")"), 0) == n);
    CHECK(dual_coxeter(*build_preset("SpinAdj(D4)"), 0) == 6);
    CHECK_THROWS_AS(dual_coxeter(*build_preset("Torus(1)"), 0), precondition_error);
}

TEST_CASE("shifted levels")
{
    Scalar k = Scalar::variable(0);
    // sl2: h-check = 2.
    CHECK(shifted_level(k, 0, 2) == -k - Scalar(4));
    CHECK(shifted_level(k, 1, 2) == (-k) / (k + Scalar(1)));

    // Independent solve of 1/(k+2) + 1/(l+2) = 1: l = 1/(1 - 1/(k+2)) - 2.
    Scalar l = Scalar(1) / (Scalar(1) - Scalar(1) / (k + Scalar(2))) - Scalar(2);
    CHECK(shifted_level(k, 1, 2) == l);

    // k[2][0][-1] = k[1].
    Scalar k2 = shifted_level(k, 2, 2);
    Scalar k20 = shifted_level(k2, 0, 2);
    CHECK(shifted_level(k20, -1, 2) == shifted_level(k, 1, 2));

    CHECK_THROWS_AS(shifted_level(Scalar(-2), 1, 2), precondition_error);
    CHECK_THROWS_WITH_AS(shifted_level(Scalar(-1), 1, 2), "shift pole", precondition_error);
}

TEST_CASE("shift monoid law k[m][0][n] = k[m+n]")
{
    for (const char* name : {"SL2", "SL(3)", "SL(4)", "SpinAdj(D4)"}) {
        auto d = build_preset(name);
        int hv = dual_coxeter(*d, 0);
        Scalar k = Scalar::variable(0);
        for (int m = -5; m <= 5; ++m)
            for (int n = -5; n <= 5; ++n) {
                Scalar km = shifted_level(k, m, hv);
                Scalar km0 = shifted_level(km, 0, hv);
                CHECK(shifted_level(km0, n, hv) == shifted_level(k, m + n, hv));
            }
    }
}

TEST_CASE("genericity predicate")
{
    auto sl2 = build_preset("SL2");
    CHECK(Level::symbolic(sl2).is_generic());
    CHECK_FALSE(Level::rational(sl2, Rat(3, 2)).is_generic());
    CHECK(Level::rational(sl2, Rat(3, 2)).flagged_generic().is_generic());

    Level k = Level::symbolic(sl2);
    CHECK(dual_level(k).is_generic());

    auto torus = build_preset("Torus(1)");
    Level degenerate = Level::abelian(torus, {{Rat(0)}});
    CHECK_FALSE(degenerate.is_generic());

    // Direct sum of two generic levels is generic.
    Level sum = k.direct_sum(Level::symbolic_abelian(torus).flagged_generic());
    CHECK(sum.datum()->rank() == 2);
    // Note: the direct sum reuses variable 0 on both pieces; genericity is
    // still structural (non-constant simple level, nondegenerate block).
    CHECK(Level::symbolic(build_preset("SL(3)")).direct_sum(Level::symbolic(sl2)).is_generic());
}

TEST_CASE("casimir offsets")
{
    auto sl2 = build_preset("SL2");
    Level k = Level::symbolic(sl2);
    Weight fw = sl2->fundamental_weights()[0];

    // Oracle: the sl2 Casimir eigenvalue on the highest weight n*fw is
    // n(n+2)/2 under the normalization (theta, theta) = 2.
    for (long n = 0; n <= 4; ++n) {
        Weight lam{{Rat(n)}};
        CHECK(casimir_eigenvalue(*sl2, 0, lam) == make_rat(n * (n + 2), 2));
    }

    Scalar off = casimir_offset(k, fw);
    Scalar expect = Scalar(3) / (Scalar(4) * (Scalar::variable(0) + Scalar(2)));
    CHECK(off == expect);
    CHECK(casimir_offset(k, Weight{{Rat(0)}}).is_zero());

    // offset(lambda, k) + offset(-w0 lambda, k*) = 0.
    auto sl3 = build_preset("SL(3)");
    Level k3 = Level::symbolic(sl3);
    Level k3d = dual_level(k3);
    for (auto& lam : sl3->dominant_characters(3)) {
        Scalar total = casimir_offset(k3, lam) + casimir_offset(k3d, sl3->minus_w0(lam));
        CHECK(total.is_zero());
    }

    CHECK_THROWS_AS(casimir_offset(critical_level(sl2), fw), precondition_error);
}

TEST_CASE("abelian offsets")
{
    auto t1 = build_preset("Torus(1)");
    Level one = Level::abelian(t1, {{Rat(1)}});
    CHECK(abelian_offset(one, Weight{{Rat(1)}}) == Scalar(Rat(1, 2)));

    auto t2 = build_preset("Torus(2)");
    Level id2 = Level::abelian(t2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(abelian_offset(id2, Weight{{Rat(1), Rat(1)}}) == Scalar(1));
}

TEST_CASE("central charge")
{
    CHECK(central_charge_cdo(*build_preset("Torus(3)")) == 6);
    CHECK(central_charge_cdo(*build_preset("SL2")) == 6);
    CHECK(central_charge_cdo(*build_preset("SL(3)")) == 16);
    CHECK(central_charge_cdo(*build_preset("SpinAdj(D4)")) == 56);
}

TEST_CASE("level parsing and serialization")
{
    auto sl2 = build_preset("SL2");
    Level k = parse_level(sl2, "k");
    CHECK(k == Level::symbolic(sl2));
    CHECK(k.str() == "(k)");
    CHECK(parse_level(sl2, "-3/2").simple_level(0) == Scalar(Rat(-3, 2)));

    auto t2 = build_preset("Torus(2)");
    Level m = parse_level(t2, "[[3/2, 0], [0, 1]]");
    CHECK(m.abelian_block()[0][0] == Scalar(Rat(3, 2)));
    CHECK(m.abelian_block()[1][1] == Scalar(1));
    CHECK(m.json() == "{\"abelian\": [[\"(3)/(2)\", \"(0)\"], [\"(0)\", \"(1)\"]], \"simple\": []}");
}
