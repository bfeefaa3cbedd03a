#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/gauss.hpp"

using namespace siegel;
using namespace siegel::gauss;

namespace {
IMat mat(int n, std::initializer_list<long> v) { return IMat(n, n, v); }
}

TEST_CASE("CycInt reduction basics") {
    // 1 + z + z^2 = 0 in Z[zeta_3]
    CycInt z = CycInt::zeta_power(3, 3, 0) + CycInt::zeta_power(3, 3, 1) +
               CycInt::zeta_power(3, 3, 2);
    CHECK(z.is_zero());
    // zeta_9^3 is a primitive cube root: 1 + z^3 + z^6 = 0
    CycInt w = CycInt::zeta_power(3, 9, 0) + CycInt::zeta_power(3, 9, 3) +
               CycInt::zeta_power(3, 9, 6);
    CHECK(w.is_zero());
    CHECK(CycInt::zeta_power(5, 5, 2).pow(5) == CycInt::constant(5, 5, 1));
    CHECK(g1_cyclotomic(3).embed_p2() == g1_cyclotomic_p2(3));
}

TEST_CASE("e_sum_oracle examples") {
    // T = (2), denominator p, legendre weight: sum (y/p) zeta^y
    CycInt s = e_sum_oracle(mat(1, {2}), 3, 3, EsumWeight::legendre_det);
    CHECK(s == CycInt::zeta_power(3, 3, 1) - CycInt::zeta_power(3, 3, 2));
    // T = 0 (d x d): all terms 1
    for (int d : {1, 2}) {
        CycInt z = e_sum_oracle(IMat(d, d), 3, 3, EsumWeight::none);
        CHECK(z == CycInt::constant(3, 3, int_pow(Int(3), d * (d + 1) / 2)));
    }
    // full residue sum over y mod 9 vanishes
    CHECK(e_sum_oracle(mat(1, {2}), 3, 9, EsumWeight::none).is_zero());
    CHECK_THROWS_AS(e_sum_oracle(mat(1, {1}), 3, 3, EsumWeight::none), domain_error);
}

TEST_CASE("classical Gauss sum: value and square") {
    CHECK(g1_cyclotomic(3) ==
          CycInt::constant(3, 3, 1) + CycInt::zeta_power(3, 3, 1).scaled(2));
    CHECK(g1_square_identity(3) == -3);
    CHECK(g1_square_identity(5) == 5);
    CHECK(g1_square_identity(7) == -7);
}

TEST_CASE("G_Y(D) closed form vs oracle on the block family") {
    for (long p : {3L, 5L}) {
        // D = I: single coset
        BlockShape id{1, 0, 0, 0};
        CHECK(gyd_closed(p, id, Int(1)) == arith::GaussExpr::one(p));
        // D = (p), Y = (1): the classical Gauss sum itself
        BlockShape g1{0, 1, 0, 0};
        auto closed = gyd_closed(p, g1, Int(1));
        CHECK(closed == arith::GaussExpr::g(p));
        CHECK(gyd_matches(closed, gyd_oracle(mat(1, {1}), mat(1, {(long)p}), p)));
        // D = (p^2) block: value p
        BlockShape g2{0, 0, 1, 0};
        CHECK(gyd_closed(p, g2, Int(1)) == arith::GaussExpr(p, Rat((long)p), Rat(0)));
        CHECK(gyd_matches(gyd_closed(p, g2, Int(1)),
                          gyd_oracle(mat(1, {1}), mat(1, {(long)(p * p)}), p)));
    }
    // a mixed 3x3 shape with nontrivial Y1 class
    long p = 3;
    BlockShape sh{1, 1, 1, 0};
    IMat Y = assemble_block_y(p, sh, mat(1, {1}), mat(1, {2}), IMat(1, 1, {1}), IMat(1, 0, {}));
    IMat D = IMat::diag({Int(1), Int(3), Int(9)});
    CHECK(gyd_matches(gyd_closed(p, sh, Int(2)), gyd_oracle(Y, D, p)));
    CHECK_THROWS_AS(gyd_closed(p, BlockShape{0, 1, 0, 0}, Int(3)), domain_error);
}

TEST_CASE("gtilde closed form: stated values") {
    // G~({0}) = 1
    CHECK(gtilde_closed(3, ff::SpaceClass{0, 0, 1}) == 1);
    // G~(H) = -1
    for (long p : {3L, 5L}) {
        ff::SpaceClass H{2, 0, arith::jacobi_symbol(-1, p)};
        CHECK(gtilde_closed(p, H) == -1);
    }
    // G~(<2 eta>) = (-eta/p): for eta = 1 the space is <2>
    CHECK(gtilde_closed(3, ff::classify(ff::FpQuadSpace::line(3, 2))) ==
          arith::jacobi_symbol(-1, 3));
    CHECK(gtilde_closed(5, ff::classify(ff::FpQuadSpace::line(5, 2))) ==
          arith::jacobi_symbol(-1, 5));
    // G~(H perp <0>^2) = -p^2 (p-1): -18 at p = 3
    ff::SpaceClass Hs{2, 2, arith::jacobi_symbol(-1, 3)};
    CHECK(gtilde_closed(3, Hs) == -18);
    // odd radical on an even regular part vanishes
    CHECK(gtilde_closed(3, ff::SpaceClass{2, 1, -1}) == 0);
}

TEST_CASE("gtilde closed = oracle on all classes of dimension <= 3") {
    for (long p : {3L, 5L})
        for (int d = 0; d <= 3; ++d)
            for (const auto& cls : ff::classes_of_dim(p, d))
                CHECK(gtilde_closed(p, cls) == gtilde_oracle(ff::class_representative(p, cls)));
}

TEST_CASE("gtilde is an isometry invariant") {
    // conjugated gram representatives give the same oracle value
    ff::FpQuadSpace V(3, mat(2, {2, 1, 1, 2}));
    ff::FpQuadSpace W(3, mat(2, {2, 0, 0, 6}));  // a space with radical
    CHECK(gtilde_oracle(V) == gtilde_closed(3, ff::classify(V)));
    CHECK(gtilde_oracle(W) == gtilde_closed(3, ff::classify(W)));
    IMat G(2, 2, {1, 1, 0, 1});
    ff::FpQuadSpace Vg(3, G.congruent(V.gram));
    CHECK(gtilde_oracle(Vg) == gtilde_oracle(V));
}

TEST_CASE("alpha and alpha~ examples") {
    // alpha(<0>^2) over F_3 = 27
    CHECK(alpha_closed(ff::FpQuadSpace::zero_space(3, 2)) == 27);
    CHECK(alpha_oracle(ff::FpQuadSpace::zero_space(3, 2)) == 27);
    // alpha'(empty) = 1
    CHECK(alpha_prime(ff::FpQuadSpace(3, IMat(0, 0))) == 1);
    // alpha'(<2>) over F_3 = -1
    CHECK(alpha_prime(ff::FpQuadSpace::line(3, 2)) == -1);
    // non-zero space: alpha = 0
    CHECK(alpha_closed(ff::FpQuadSpace::line(3, 2)) == 0);
    CHECK(alpha_oracle(ff::FpQuadSpace::line(3, 2)) == 0);
    // p = 2: the even lift diag(4) has vanishing half-gram, diag(2) does not
    CHECK(alpha_closed(ff::FpQuadSpace(2, mat(1, {4}))) == 2);
    CHECK(alpha_oracle(ff::FpQuadSpace(2, mat(1, {4}))) == 2);
    CHECK(alpha_closed(ff::FpQuadSpace(2, mat(1, {2}))) == 0);
    CHECK(alpha_oracle(ff::FpQuadSpace(2, mat(1, {2}))) == 0);
}
