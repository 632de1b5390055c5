#include "doctest.h"

#include "cdoalg/intmat.hpp"
#include "cdoalg/scalar.hpp"

#include <random>

using namespace cdoalg;

TEST_CASE("polynomial arithmetic and gcd")
{
    Poly k = Poly::variable(0);
    Poly a = k * k - Poly(1);            // k^2 - 1
    Poly b = k * k + k * Int(2) + Poly(1); // (k+1)^2
    Poly g = Poly::gcd(a, b);
    CHECK(g == k + Poly(1));

    Poly k2 = Poly::variable(1);
    Poly mixed = (k + Poly(2)) * (k2 - Poly(3));
    CHECK(Poly::gcd(mixed, (k + Poly(2)) * (k + Poly(5))) == k + Poly(2));
    CHECK(Poly::divexact(mixed, k2 - Poly(3)) == k + Poly(2));

    CHECK(a.str() == "k^2-1");
    CHECK(((k * Int(2)) - Poly(4)).str() == "2*k-4");
    CHECK((-k).str() == "-k");
}

TEST_CASE("scalar canonical form and arithmetic")
{
    Scalar k = Scalar::variable(0);
    Scalar s = (-k) / (k + Scalar(1));
    CHECK(s.str() == "(-k)/(k+1)");
    CHECK((k - k).str() == "(0)");
    CHECK(Scalar(Rat(3, 4)).str() == "(3)/(4)");

    // Reduction: (k^2-1)/(k+1) = k-1.
    Scalar t = (k * k - Scalar(1)) / (k + Scalar(1));
    CHECK(t == k - Scalar(1));

    // Sign normalization picks a positive-leading denominator.
    Scalar u = Scalar(1) / (Scalar(0) - k);
    CHECK(u.str() == "(-1)/(k)");

    CHECK((s * (k + Scalar(1))) == -k);
    CHECK(s.eval({Rat(2)}) == Rat(-2, 3));
    CHECK_THROWS_AS(k / (k - k), precondition_error);
}

TEST_CASE("scalar parser")
{
    CHECK(parse_scalar("-k-4").str() == "(-k-4)");
    CHECK(parse_scalar("(-k)/(k+1)") == (-Scalar::variable(0)) / (Scalar::variable(0) + Scalar(1)));
    CHECK(parse_scalar("3/2") == Scalar(Rat(3, 2)));
    CHECK(parse_scalar("k2^2 - 1") == Scalar::variable(1) * Scalar::variable(1) - Scalar(1));
    CHECK(parse_scalar("k1") == Scalar::variable(0));
    CHECK_THROWS_AS(parse_scalar("k+"), parse_error);
    CHECK_THROWS_AS(parse_scalar("2 k"), parse_error);
}

TEST_CASE("scalar field laws on random values")
{
    std::mt19937 rng(7);
    auto rnd = [&]() {
        int num = (int)(rng() % 19) - 9;
        Scalar k = Scalar::variable(rng() % 2);
        return (k * Scalar(num) + Scalar((int)(rng() % 5))) / (k + Scalar(1 + (int)(rng() % 3)));
    };
    for (int i = 0; i < 50; ++i) {
        Scalar a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("smith and hermite forms")
{
    // P/Q index for the sl2 weight lattice: Q = 2Z inside P = Z.
    IMat q = {{2}};
    CHECK(lattice_index(q) == 2);

    IMat a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    SmithForm f = smith_form(a);
    for (size_t i = 0; i + 1 < 3; ++i) {
        if (f.d[i + 1][i + 1] != 0) CHECK(f.d[i + 1][i + 1] % f.d[i][i] == 0);
    }
    // L*A*R == D
    IMat la(3, IVec(3, Int(0))), lar(3, IVec(3, Int(0)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int t = 0; t < 3; ++t) la[i][j] += f.l[i][t] * a[t][j];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int t = 0; t < 3; ++t) lar[i][j] += la[i][t] * f.r[t][j];
    CHECK(lar == f.d);

    IMat ker = integer_kernel({{1, 2, 3}});
    CHECK(ker.size() == 2);
    for (auto& row : ker) CHECK(row[0] + 2 * row[1] + 3 * row[2] == 0);
}

TEST_CASE("rational preimage lattice")
{
    // {x : (3/2) x in Z} = 2Z.
    QMat k = {{Rat(3, 2)}};
    IMat y = rational_preimage_lattice(k);
    REQUIRE(y.size() == 1);
    CHECK(abs(y[0][0]) == 2);

    // Identity: whole lattice.
    QMat id = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    IMat full = rational_preimage_lattice(id);
    CHECK(lattice_index(full) == 1);
}
