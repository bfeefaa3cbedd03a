#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/jacobi.hpp"
#include "siegel/suites.hpp"

using namespace siegel;
using namespace siegel::jacobi;

namespace {

IMat two_identity(int n) { return IMat::identity(n).scaled(2); }

IMat gram1(long t) {
    IMat g(1, 1);
    g.at(0, 0) = t;
    return g;
}

IMat row1(long r) {
    IMat R(1, 1);
    R.at(0, 0) = r;
    return R;
}

}  // namespace

TEST_CASE("lift of a Siegel form: shear identity and evenness") {
    theta::ThetaSource f(two_identity(3), 1);
    LiftedStore F(f, 1);
    // R = 0 recovers c_f
    CHECK(F.coeff(gram1(4), row1(0)) == f.coeff(QMat(gram1(4))));
    // c_F(4, 2) = c_f(4 - 2) = r_3(1) = 6
    CHECK(F.coeff(gram1(4), row1(2)).rat() == 6);
    // odd glue vanishes
    CHECK(F.coeff(gram1(4), row1(1)).rat() == 0);
}

TEST_CASE("psi projection: identity on even stores, annihilates odd glue") {
    MapStore even(1, true);
    even.set(gram1(2), row1(0), arith::ExactScalar(Rat(5)));
    MapStore psi_even = psi_projection(even);
    CHECK(psi_even.coeff(gram1(2), row1(0)).rat() == 5);
    // (4, 2) shears to (2, 0): the same coefficient on an even store
    CHECK(psi_even.coeff(gram1(4), row1(2)).rat() == 5);

    MapStore odd(1, false);
    odd.set(gram1(3), row1(1), arith::ExactScalar(Rat(7)));
    MapStore once = psi_projection(odd);
    CHECK(once.coeff(gram1(3), row1(1)).rat() == 0);
    MapStore twice = psi_projection(once);
    CHECK(twice.entries() == once.entries());  // idempotent

    // an even store shears consistently: c(T, 2R) = c(T - 2 tRR, 0)
    CHECK(even.coeff(gram1(4), row1(2)).rat() == 5);
    even.set(gram1(4), row1(2), arith::ExactScalar(Rat(9)));
    CHECK(even.coeff(gram1(2), row1(0)).rat() == 9);  // same canonical key
    CHECK_THROWS_AS(even.set(gram1(3), row1(1), arith::ExactScalar(Rat(1))), domain_error);
}

TEST_CASE("coeff_AJtilde at r = j and the orthogonal-case equality") {
    // r = j: value p^{E}
    IMat T = gram1(2);
    hecke::HeckeParams pr;
    pr.p = 3;
    pr.j = 1;
    pr.k = 1;
    pr.n = 1;
    pr.chi_prime_p = 1;
    lat::Sublattice omega(T, 3, gram1(9));  // Omega = pL, type (1,0,0), r = 1
    CHECK(coeff_AJtilde(omega, pr) == rat_pow(3, hecke::exponent_Ej(hecke::omega_data(omega), pr)));
    // orthogonal case: A~J = A~ for all enumerated Omega
    struct Pt { int n; long p; };
    for (auto [n, p] : {Pt{1, 3}, Pt{2, 3}, Pt{1, 5}}) {
        theta::ThetaSource src(two_identity(3), n);
        for (int j = 1; j <= n; ++j) {
            hecke::HeckeParams q = hecke::params_for_theta(src, p, j);
            for (const IMat& lam : suites::even_psd_grams(n, 6))
                for (const auto& om : lat::sublattices_between(lam, p, {}, true))
                    CHECK(coeff_AJtilde(om, q) == hecke::coeff_Atilde(om, q));
        }
    }
}

TEST_CASE("R*_Delta count equality against brute force on small spaces") {
    // isotropic subspaces of V perp <2> automatically avoid the anisotropic line
    for (long p : {3L, 5L})
        for (int d = 0; d <= 3; ++d)
            for (const auto& cls : ff::classes_of_dim(p, d)) {
                ff::FpQuadSpace V = ff::class_representative(p, cls);
                ff::FpQuadSpace Vd = V.perp(ff::FpQuadSpace::line(p, 2));
                for (int a = 0; a <= d + 1; ++a) {
                    Int lhs = ff::Rstar_indep(Vd, ff::FpQuadSpace::zero_space(p, a));
                    Int rhs = ff::Rstar(Vd, ff::FpQuadSpace::zero_space(p, a));
                    CHECK(lhs == rhs);
                }
            }
}

TEST_CASE("apply_TJ: combination equals the direct A~J evaluation") {
    theta::ThetaSource f(two_identity(3), 1);
    LiftedStore F(f, 1);
    hecke::HeckeParams pr = hecke::params_for_theta(f, 3, 1);
    for (long t = 0; t <= 8; t += 2)
        for (long r : {0L, 2L}) {
            if (!valid_index(gram1(t), row1(r))) continue;
            auto a = apply_TJ(F, gram1(t), row1(r), pr, TJVariant::ttilde_direct);
            auto b = apply_TJ(F, gram1(t), row1(r), pr, TJVariant::ttilde_combination);
            CHECK(a == b);
        }
}

TEST_CASE("Thm 7.4, p ndiv N: the lift intertwines T~_j and T~J_j") {
    theta::ThetaSource f(two_identity(3), 1);
    hecke::HeckeParams pr = hecke::params_for_theta(f, 3, 1);
    // the stated spot: index (2) perp Delta maps to 30 on both sides
    LiftedStore F(f, 1);
    auto v = apply_TJ(F, gram1(2), row1(0), pr, TJVariant::ttilde_direct);
    CHECK(v.rat() == 30);
    std::vector<JacobiIndex> indices;
    for (long t = 0; t <= 10; t += 2)
        for (long r : {0L, 1L, 2L})
            if (valid_index(gram1(t), row1(r))) indices.push_back({gram1(t), row1(r)});
    CHECK(verify_thm74_coprime(f, pr, indices).pass);
}

TEST_CASE("Thm 7.4, p odd dividing N: the p^{j/2} factor") {
    std::map<IMat, Rat> table;
    for (long t = 0; t <= 54; t += 2) table.emplace(gram1(t), Rat(t * t + 3));
    theta::TableSource f(table, theta::TablePolicy::zero_outside,
                         arith::CharacterData::with_value(1, 1));
    hecke::HeckeParams pr;
    pr.p = 3;
    pr.j = 1;
    pr.k = 1;
    pr.n = 1;
    pr.p_divides_level = true;
    std::vector<JacobiIndex> indices;
    for (long t = 0; t <= 6; t += 2)
        for (long r : {0L, 2L})
            if (valid_index(gram1(t), row1(r))) indices.push_back({gram1(t), row1(r)});
    CHECK(verify_thm74_dividing(f, pr, indices).pass);
}

TEST_CASE("Thm 7.4, p = 2: psi is needed and the factor lives in Q(sqrt 2)") {
    std::map<IMat, Rat> table;
    for (long t = 0; t <= 40; t += 2) table.emplace(gram1(t), Rat(2 * t + 1));
    theta::TableSource f(table, theta::TablePolicy::zero_outside,
                         arith::CharacterData::with_value(1, 1));
    hecke::HeckeParams pr;
    pr.p = 2;
    pr.j = 1;
    pr.k = 1;
    pr.n = 1;
    pr.p_divides_level = true;
    LiftedStore F(f, 1);
    // before psi the image has odd-glue support: T^J at an odd index is nonzero
    auto raw = apply_TJ(F, gram1(4), row1(1), pr, TJVariant::tj);
    CHECK_FALSE(raw == arith::ExactScalar(Rat(0)));
    CHECK(psi_coeff(F, gram1(4), row1(1)) == arith::ExactScalar(Rat(0)));
    std::vector<JacobiIndex> indices;
    for (long t = 0; t <= 8; t += 2)
        for (long r : {0L, 1L, 2L})
            if (valid_index(gram1(t), row1(r))) indices.push_back({gram1(t), row1(r)});
    CHECK(verify_thm74_dividing(f, pr, indices).pass);
}
