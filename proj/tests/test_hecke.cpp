#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/hecke.hpp"
#include "siegel/suites.hpp"

using namespace siegel;
using namespace siegel::hecke;

namespace {

IMat two_identity(int n) { return IMat::identity(n).scaled(2); }

IMat gram1(long t) {
    IMat g(1, 1);
    g.at(0, 0) = t;
    return g;
}

HeckeParams mk(long p, int j, long k, int n, int chi) {
    HeckeParams pr;
    pr.p = p;
    pr.j = j;
    pr.k = k;
    pr.n = n;
    pr.chi_prime_p = chi;
    return pr;
}

lat::Sublattice sub_of(const IMat& T, long p, const IMat& H) { return lat::Sublattice(T, p, H); }

}  // namespace

TEST_CASE("exponent_Ej examples") {
    HeckeParams pr = mk(3, 1, 1, 1, 1);
    OmegaData d;
    d.n0 = d.n2 = 0;
    d.r = 0;
    CHECK(exponent_Ej(d, pr) == 0);
    d = OmegaData{1, 0, 0, 1, {}};
    CHECK(exponent_Ej(d, pr) == 0);
    d = OmegaData{0, 0, 1, 1, {}};
    CHECK(exponent_Ej(d, pr) == 1);
    d = OmegaData{1, 0, 1, 2, {}};
    CHECK_THROWS_AS(exponent_Ej(d, pr), domain_error);
}

TEST_CASE("coeff_Atilde examples on the rank-1 lattice") {
    IMat T = gram1(2);
    HeckeParams pr = mk(3, 1, 1, 1, 1);
    CHECK(coeff_Atilde(sub_of(T, 3, gram1(9)), pr) == 1);   // Omega = pL
    CHECK(coeff_Atilde(sub_of(T, 3, gram1(3)), pr) == 0);   // R*(<2,2>, <0>) = 0
    CHECK(coeff_Atilde(sub_of(T, 3, gram1(1)), pr) == 0);   // (1/3)L is not integral
}

TEST_CASE("coeff_A_thm24 examples") {
    IMat T = gram1(2);
    HeckeParams pr = mk(3, 1, 1, 1, 1);
    // Omega = pL: value sqrt(3)
    CHECK(coeff_A_thm24(sub_of(T, 3, gram1(9)), pr) == arith::ExactScalar::sqrt_of(3));
    // Omega = L: G~-weighted sum gives -sqrt(3)
    CHECK(coeff_A_thm24(sub_of(T, 3, gram1(3)), pr) ==
          arith::ExactScalar(3, Rat(0), Rat(-1)));
}

TEST_CASE("apply_Ttilde on the three-squares theta series") {
    theta::ThetaSource src(two_identity(3), 1);
    HeckeParams pr = params_for_theta(src, 3, 1);
    CHECK(pr.chi_prime_p == 1);
    // t = 1: 0*6 + 1*r_3(9) = 30
    auto v = apply_Ttilde(src, gram1(2), pr);
    CHECK(v.is_rational());
    CHECK(v.rat() == 30);
    // t = 2: r_3(18) + (1 + (-2/3)) r_3(2) = 36 + 2*12 = 60
    auto w = apply_Ttilde(src, gram1(4), pr);
    CHECK(w.rat() == 60);
    // both paths agree and the sqrt-part cancels exactly
    for (long t = 0; t <= 8; ++t) {
        auto a = apply_Ttilde(src, gram1(2 * t), pr, TtildePath::direct);
        auto b = apply_Ttilde(src, gram1(2 * t), pr, TtildePath::combination);
        CHECK(a == b);
        CHECK(a.is_rational());
    }
}

TEST_CASE("p | N branch: rank-1 desk instance") {
    // j = n = 1, Lambda = (2), p = 2: the single Omega has gram (8)
    std::map<IMat, Rat> table;
    table.emplace(gram1(8), Rat(5));
    table.emplace(gram1(2), Rat(7));
    theta::TableSource f(table, theta::TablePolicy::zero_outside,
                         arith::CharacterData::with_value(1, 1));
    for (long k : {1L, 2L}) {
        HeckeParams pr = mk(2, 1, k, 1, 1);
        pr.p_divides_level = true;
        auto v = apply_Tj(f, gram1(2), pr);
        CHECK(v == arith::ExactScalar::half_power(2, 1 * (2 * (1 - k) + 1)) *
                       arith::ExactScalar(Rat(5)));
    }
}

TEST_CASE("u_q per the operator combination, and T'_1 on degree 1") {
    // n = 1, j = 1: u_1(1) = -beta(1,1) = -1, so T'_1 = T~_1 - id
    HeckeParams pr = mk(3, 1, 1, 1, 1);
    CHECK(uq(0, pr) == 1);
    CHECK(uq(1, pr) == -1);
    theta::ThetaSource src(two_identity(3), 1);
    auto tp = apply_Tprime(src, gram1(2), pr);
    CHECK(tp.rat() == 24);  // 30 - 6
    // n = 2, j = 1: u_1(1) = -beta(2,1) = -(p+1)
    HeckeParams pr2 = mk(3, 1, 1, 2, 1);
    CHECK(uq(1, pr2) == Rat(-4));
}

TEST_CASE("v_q and lambda_j examples") {
    CHECK(vq(1, mk(3, 1, 1, 1, 1)) == 0);  // beta(0,1) = 0
    CHECK(lambda_j(mk(3, 1, 1, 1, 1)) == 4);
    CHECK(lambda_j(mk(5, 1, 1, 1, 1)) == 6);
    CHECK(lambda_j(mk(3, 1, 1, 2, 1)) == make_rat(16, 3));
    CHECK(lambda_j(mk(3, 1, 1, 1, -1)) == 2);  // p - 1
    CHECK_THROWS_AS(lambda_j(mk(3, 2, 1, 2, 1)), domain_error);  // j > k
}

TEST_CASE("operator inversion: sum_q beta(n-q, r-q) T'_q = T~_r") {
    for (int n : {1, 2}) {
        theta::ThetaSource src(two_identity(3), n);
        for (int r = 1; r <= n; ++r)
            for (const IMat& lam : suites::even_psd_grams(n, 6)) {
                arith::ExactScalar lhs(Rat(0));
                for (int q = 0; q <= r; ++q) {
                    Rat b = arith::beta(n - q, r - q, 3);
                    if (b == 0) continue;
                    HeckeParams pr = params_for_theta(src, 3, q);
                    arith::ExactScalar tq = q == 0 ? src.coeff(QMat(lam))
                                                   : apply_Tprime(src, lam, pr);
                    lhs = lhs + tq * b;
                }
                HeckeParams pr = params_for_theta(src, 3, r);
                CHECK(lhs == apply_Ttilde(src, lam, pr));
            }
    }
}

TEST_CASE("theta_cj/bj closed forms on rank-1 modules") {
    IMat L = two_identity(3);
    HeckeParams pr = mk(3, 1, 1, 1, 1);
    // imprimitive vector 3 e_1: r0 = 0, r1 = 1, quotient <2>
    IMat C1(3, 1);
    C1.at(0, 0) = 3;
    auto om1 = omega_theta_data(L, C1, 3, 1);
    CHECK(om1.r2 == 0);
    CHECK(theta_cj_closed(om1, pr) == 1);
    CHECK(theta_bj_closed(om1, pr) == 0);
    // primitive vector of norm 18: r0 = 1, r1 = 0
    IMat C2(3, 1);
    C2.at(0, 0) = 1;
    C2.at(1, 0) = 2;
    C2.at(2, 0) = 2;
    auto om2 = omega_theta_data(L, C2, 3, 1);
    CHECK(theta_cj_closed(om2, pr) == 1);
    CHECK(theta_bj_closed(om2, pr) == 1);
}

TEST_CASE("exponent_M values") {
    CHECK(exponent_M(1, 1, 1, Rat(0)) == make_rat(25, 16));
    // the k-shift is linear: M(k+1) - M(k) = j
    for (int n : {1, 2})
        for (int j = 1; j <= n; ++j)
            for (long k : {1L, 2L, 5L}) {
                CHECK(exponent_M(n, j, k + 1, Rat(0)) - exponent_M(n, j, k, Rat(0)) == j);
                CHECK(exponent_M(n, j, k + 1, Rat(1)) - exponent_M(n, j, k, Rat(1)) == j);
            }
    // at gamma = 0 the simplified form dominates the clamped general form
    // whenever the n2-optimum is negative (n2* = (j - n - 1)/3 < 0 always)
    for (int n : {1, 2, 3})
        for (int j = 1; j <= n; ++j) {
            Rat general = (Rat(j + n) + make_rat(1, 2)) * (Rat(j + n) + make_rat(1, 2)) / 4;
            CHECK(exponent_M(n, j, 3, Rat(0)) == general + Rat((long)j * (3 - n)));
        }
}

TEST_CASE("verify_eichler spot: 2I3, p=3, n=1") {
    std::vector<IMat> targets = {gram1(2)};
    auto rep = verify_eichler(two_identity(3), 3, 1, 1, targets);
    CHECK(rep.pass);
    // the stated instance: LHS 24, neighbour sum 4*6
    theta::ThetaSource src(two_identity(3), 1);
    HeckeParams pr = params_for_theta(src, 3, 1);
    CHECK(apply_Tprime(src, gram1(2), pr).rat() == 24);
    Int s = 0;
    for (const IMat& K : lat::neighbors(two_identity(3), 3, 1))
        s += theta::repr_count(K, QMat(gram1(2)));
    CHECK(s == 24);
}

TEST_CASE("verify_annihilation trivially passes on an empty target set") {
    auto rep = verify_annihilation(two_identity(3), 3, 1, 2, {});
    CHECK(rep.pass);
    CHECK(rep.lines.empty());
}

TEST_CASE("chi'(p) = -1 branch: eigenvalue on diag(2,2,4)") {
    IMat L = IMat::diag({Int(2), Int(2), Int(4)});
    theta::ThetaSource src(L, 1);
    HeckeParams pr = params_for_theta(src, 3, 1);
    CHECK(pr.chi_prime_p == -1);
    Rat lam = lambda_j(pr);
    CHECK(lam == 2);  // p - 1
    for (long t = 0; t <= 10; ++t) {
        auto v = apply_Tprime(src, gram1(2 * t), pr);
        CHECK(v.is_rational());
        CHECK(v.rat() == lam * src.repr(QMat(gram1(2 * t))));
    }
}
