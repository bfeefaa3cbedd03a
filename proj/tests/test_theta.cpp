#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/suites.hpp"
#include "siegel/theta.hpp"

using namespace siegel;
using namespace siegel::theta;

namespace {

IMat two_identity(int n) { return IMat::identity(n).scaled(2); }

// r_3 by a direct triple loop, independent of the enumerator
long r3_direct(long t) {
    long count = 0, b = 1;
    while (b * b < t) ++b;
    for (long x = -b; x <= b; ++x)
        for (long y = -b; y <= b; ++y)
            for (long z = -b; z <= b; ++z)
                if (x * x + y * y + z * z == t) ++count;
    return count;
}

QMat gram1(long t) {
    IMat g(1, 1);
    g.at(0, 0) = t;
    return QMat(g);
}

}  // namespace

TEST_CASE("repr_count examples") {
    IMat Q = two_identity(3);
    CHECK(repr_count(Q, gram1(2)) == 6);
    CHECK(repr_count(Q, QMat(IMat(2, 2))) == 1);  // only C = 0
    CHECK(repr_count(Q, QMat(two_identity(2))) == 24);
    CHECK(repr_count(Q, gram1(18)) == 30);
    // off-support targets
    CHECK(repr_count(Q, gram1(3)) == 0);   // odd diagonal
    CHECK(repr_count(Q, gram1(-2)) == 0);  // not psd
    QMat half(1, 1);
    half.at(0, 0) = make_rat(1, 2);
    CHECK(repr_count(Q, half) == 0);
}

TEST_CASE("repr_count reproduces r_3 against the triple-loop oracle") {
    IMat Q = two_identity(3);
    for (long t = 0; t <= 25; ++t) CHECK(repr_count(Q, gram1(2 * t)) == r3_direct(t));
}

TEST_CASE("unimodular invariance of representation numbers") {
    IMat Q = two_identity(3);
    for (const IMat& T : suites::even_psd_grams(2, 6))
        for (const IMat& G : suites::unimodular_samples(2, 5))
            CHECK(repr_count(Q, QMat(G.congruent(T))) == repr_count(Q, QMat(T)));
    // isometric input lattices
    for (const IMat& E : suites::unimodular_samples(3, 5)) {
        IMat Qe = E.congruent(Q);
        for (long t = 0; t <= 6; ++t)
            CHECK(repr_count(Qe, gram1(2 * t)) == repr_count(Q, gram1(2 * t)));
    }
}

TEST_CASE("repr_enumerate returns exactly the counted matrices") {
    IMat Q = two_identity(3);
    auto mats = repr_enumerate(Q, QMat(two_identity(2)));
    CHECK((long)mats.size() == 24);
    for (const IMat& C : mats) CHECK(C.congruent(Q) == two_identity(2));
}

TEST_CASE("coeff_table examples") {
    auto table = coeff_table(two_identity(3), 1, 4);
    REQUIRE(table.size() == 3);
    IMat g0(1, 1), g2(1, 1), g4(1, 1);
    g2.at(0, 0) = 2;
    g4.at(0, 0) = 4;
    CHECK(table.at(g0) == 1);
    CHECK(table.at(g2) == 6);
    CHECK(table.at(g4) == 12);
    auto just_zero = coeff_table(two_identity(3), 1, 0);
    REQUIRE(just_zero.size() == 1);
    CHECK(just_zero.at(g0) == 1);
    // table values match repr_count pointwise
    for (const auto& [T, c] : coeff_table(two_identity(3), 2, 4))
        CHECK(c == repr_count(two_identity(3), QMat(T)));
}

TEST_CASE("theta source basics") {
    ThetaSource src(two_identity(3), 1);
    CHECK(src.weight_k() == 1);
    CHECK(src.level() == 4);
    CHECK(src.coeff(gram1(2)) == arith::ExactScalar(Rat(6)));
    CHECK(src.character().detQ2 == 16);
    CHECK_THROWS_AS(ThetaSource(two_identity(2), 1), domain_error);
}

TEST_CASE("table source policies") {
    std::map<IMat, Rat> table;
    IMat g2(1, 1);
    g2.at(0, 0) = 2;
    table.emplace(g2, make_rat(7, 2));
    arith::CharacterData chr = arith::CharacterData::with_value(1, 1);
    TableSource zero(table, TablePolicy::zero_outside, chr);
    TableSource strict(table, TablePolicy::error_outside, chr);
    CHECK(zero.coeff(gram1(2)).rat() == make_rat(7, 2));
    CHECK(zero.coeff(gram1(4)).rat() == 0);
    CHECK(strict.coeff(gram1(1)).rat() == 0);  // support contract precedes the policy
    CHECK_THROWS_AS(strict.coeff(gram1(4)), coverage_error);
}
