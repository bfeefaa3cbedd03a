#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/arith.hpp"
#include "siegel/ffspace.hpp"

using namespace siegel;
using namespace siegel::arith;

namespace {

// independent oracle: Euler criterion for an odd prime p
int legendre_euler(long a, long p) {
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    long acc = 1;
    for (long e = 0; e < (p - 1) / 2; ++e) acc = (acc * r) % p;
    return acc == 1 ? 1 : -1;
}

// number of r-dimensional subspaces of F_p^m, counted directly
long subspace_count_brute(long p, int m, int r) {
    return (long)ff::subspace_bases(p, m, r).size();
}

}  // namespace

TEST_CASE("jacobi symbol on primes matches the Euler criterion") {
    for (long p : {3L, 5L, 7L, 11L, 13L})
        for (long a = -12; a <= 12; ++a) CHECK(jacobi_symbol(a, p) == legendre_euler(a, p));
}

TEST_CASE("jacobi symbol examples and multiplicativity") {
    CHECK(jacobi_symbol(1, 15) == 1);
    CHECK(jacobi_symbol(2, 3) == -1);
    CHECK(jacobi_symbol(-1, 5) == 1);
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            CHECK(jacobi_symbol(a * b, 15) == jacobi_symbol(a, 15) * jacobi_symbol(b, 15));
    for (long m1 : {3L, 5L})
        for (long m2 : {7L, 9L})
            for (long a = 1; a <= 5; ++a)
                CHECK(jacobi_symbol(a, m1 * m2) == jacobi_symbol(a, m1) * jacobi_symbol(a, m2));
    CHECK_THROWS_AS(jacobi_symbol(3, 4), domain_error);
    CHECK_THROWS_AS(jacobi_symbol(3, -5), domain_error);
}

TEST_CASE("beta counts subspaces (the product reading of mu/delta)") {
    CHECK(beta(0, 0, 3) == 1);
    CHECK(beta(3, 0, 5) == 1);
    CHECK(beta(3, 1, 3) == 13);  // lines in F_3^3
    CHECK(delta(2, 2, 3) == 40);
    for (long p : {2L, 3L, 5L})
        for (int m = 0; m <= 4; ++m)
            for (int r = 0; r <= m; ++r)
                CHECK(beta(m, r, p) == subspace_count_brute(p, m, r));
}

TEST_CASE("beta duality and Pascal identities") {
    for (long p : {2L, 3L, 5L})
        for (int m = 0; m <= 6; ++m)
            for (int r = 0; r <= m; ++r) {
                CHECK(beta(m, r, p) == beta(m, m - r, p));
                if (r >= 1 && m >= 1) {
                    CHECK(beta(m, r, p) ==
                          rat_pow(p, r) * beta(m - 1, r, p) + beta(m - 1, r - 1, p));
                    CHECK(beta(m, r, p) ==
                          beta(m - 1, r, p) + rat_pow(p, m - r) * beta(m - 1, r - 1, p));
                }
            }
}

TEST_CASE("mu and delta at negative first argument are honest rationals") {
    CHECK(mu(0, 1, 3) == 0);
    CHECK(beta(-1, 1, 3) == make_rat(-1, 3));  // (p^{-1}-1)/(p-1)
    CHECK(delta(-1, 1, 3) == make_rat(4, 3));
}

TEST_CASE("ExactScalar is an exact commutative ring with (sqrt p)^2 = p") {
    ExactScalar s3 = ExactScalar::sqrt_of(3);
    CHECK(s3 * s3 == ExactScalar(Rat(3)));
    ExactScalar x(3, make_rat(1, 2), Rat(2)), y(3, Rat(-1), make_rat(3, 4));
    CHECK(x * y == y * x);
    CHECK((x + y) * y == x * y + y * y);
    CHECK(ExactScalar::half_power(3, 3) == ExactScalar(3, Rat(0), Rat(3)));
    CHECK(ExactScalar::half_power(3, -2) == ExactScalar(Rat(1) / 3));
    CHECK(ExactScalar::half_power(3, -1) * ExactScalar::half_power(3, 1) == ExactScalar(Rat(1)));
    CHECK(ExactScalar::half_power(5, 4).rat() == 25);
    CHECK_THROWS_AS(ExactScalar::sqrt_of(3) * ExactScalar::sqrt_of(5), domain_error);
    CHECK_THROWS_AS(x.rat(), domain_error);
}

TEST_CASE("GaussExpr reduces by g^2 = (-1/p) p") {
    for (long p : {3L, 5L, 7L}) {
        GaussExpr g = GaussExpr::g(p);
        Rat gsq = Rat(jacobi_symbol(-1, p)) * p;
        CHECK(g * g == GaussExpr(p, gsq, 0));
        for (unsigned long k = 0; k <= 3; ++k)
            CHECK(g.pow(2 * k + 1) == GaussExpr(p, 0, rat_pow(gsq, (long)k)));
    }
}

TEST_CASE("chi_prime_at on theta characters") {
    CHECK(chi_prime_at(CharacterData(1, Int(16)), 3) == 1);
    CHECK(chi_prime_at(CharacterData(1, Int(16)), 5) == 1);
    CHECK(chi_prime_at(CharacterData(2, Int(4)), 3) == -1);  // ((-1)^3/3)
    CHECK_THROWS_AS(chi_prime_at(CharacterData(1, Int(16)), 2), domain_error);
    CHECK_THROWS_AS(chi_prime_at(CharacterData(1, Int(15)), 3), domain_error);
    CHECK(chi_prime_at(CharacterData::with_value(1, -1), 7) == -1);
}
