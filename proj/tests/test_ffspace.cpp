#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "siegel/arith.hpp"
#include "siegel/ffspace.hpp"

using namespace siegel;
using namespace siegel::ff;

namespace {

IMat mat(int n, std::initializer_list<long> v) { return IMat(n, n, v); }

// every symmetric matrix over F_p in dimension d, as integer lifts
std::vector<IMat> all_symmetric(long p, int d) {
    std::vector<IMat> out;
    int npos = d * (d + 1) / 2;
    std::vector<int> e(npos, 0);
    while (true) {
        IMat m(d, d);
        int k = 0;
        for (int i = 0; i < d; ++i, ++k) m.at(i, i) = e[k];
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j, ++k) m.at(i, j) = m.at(j, i) = e[k];
        out.push_back(m);
        int kk = 0;
        while (kk < npos && ++e[kk] == (int)p) e[kk++] = 0;
        if (kk == npos) break;
        if (npos == 0) break;
    }
    return out;
}

}  // namespace

TEST_CASE("radical_split classification examples") {
    auto [h, s0] = radical_split(FpQuadSpace(5, mat(2, {1, 0, 0, -1})));
    CHECK(h.regular_rank == 2);
    CHECK(s0 == 0);
    CHECK(h.eps == arith::jacobi_symbol(-1, 5));  // H has disc -1

    auto [z, s1] = radical_split(FpQuadSpace(3, mat(1, {0})));
    CHECK(z.regular_rank == 0);
    CHECK(s1 == 1);

    auto [w, s2] = radical_split(FpQuadSpace(3, mat(1, {2})));
    CHECK(w.regular_rank == 1);
    CHECK(s2 == 0);
    CHECK(w.eps == -1);  // (2/3) = -1, the <omega> type

    CHECK_THROWS_AS(classify(FpQuadSpace(2, mat(1, {2}))), domain_error);
}

TEST_CASE("every small symmetric gram classifies to exactly one of the 2d+1 classes") {
    for (long p : {3L, 5L})
        for (int d = 1; d <= 3; ++d) {
            auto classes = classes_of_dim(p, d);
            CHECK((int)classes.size() == 2 * d + 1);
            for (const IMat& g : all_symmetric(p, d)) {
                SpaceClass cls = classify(FpQuadSpace(p, g));
                int hits = 0;
                for (const auto& c : classes)
                    if (c == cls) ++hits;
                CHECK(hits == 1);
            }
        }
}

TEST_CASE("class representatives classify back to their class") {
    for (long p : {3L, 5L})
        for (int d = 0; d <= 4; ++d)
            for (const auto& cls : classes_of_dim(p, d)) {
                FpQuadSpace rep = class_representative(p, cls);
                CHECK(classify(rep) == cls);
                for (int i = 0; i < rep.dim; ++i) CHECK(rep.gram.at(i, i) % 2 == 0);
            }
}

TEST_CASE("r, r*, o counting examples") {
    FpQuadSpace H = FpQuadSpace::hyperbolic(3);
    CHECK(rstar_count(H, FpQuadSpace::zero_space(3, 1)) == 4);
    CHECK(ortho_order(H) == 4);
    CHECK(r_count(H, FpQuadSpace(3, IMat(0, 0))) == 1);  // the empty matrix
    CHECK_THROWS_AS(r_count(FpQuadSpace(5, IMat(5, 5)), FpQuadSpace(5, IMat(5, 5)), 1000),
                    cap_error);
}

TEST_CASE("Rstar examples and consistency with r*/o") {
    FpQuadSpace H = FpQuadSpace::hyperbolic(3);
    CHECK(Rstar(H, FpQuadSpace::zero_space(3, 1)) == 2);  // 4 isotropic vectors / o(<0>) = 2
    CHECK(Rstar(H, H) == 1);
    CHECK(Rstar(FpQuadSpace(3, mat(2, {2, 0, 0, 2})), FpQuadSpace::zero_space(3, 1)) == 0);
    // R* = r*/o(S) on a sample
    for (long p : {3L, 5L}) {
        FpQuadSpace V(p, mat(2, {1, 0, 0, 1}));
        for (const IMat& s : {mat(1, {1}), mat(1, {0}), mat(1, {2})}) {
            FpQuadSpace S(p, s);
            Int num = rstar_count(V, S), den = ortho_order(S);
            CHECK(Rstar(V, S) * den == num);
        }
    }
}

TEST_CASE("Rstar is constant on isometry classes of W") {
    for (long p : {3L, 5L}) {
        FpQuadSpace V(p, mat(3, {2, 1, 0, 1, 2, 0, 0, 0, 4}));
        for (int d = 1; d <= 2; ++d)
            for (const IMat& w : all_symmetric(p, d)) {
                FpQuadSpace W(p, w);
                FpQuadSpace rep = class_representative(p, classify(W));
                CHECK(Rstar(V, W) == Rstar(V, rep));
            }
    }
}

TEST_CASE("iso_count_closed examples and brute-force agreement") {
    // H over F_3, l = 1: beta(1,1) delta(0,1) = 2
    CHECK(iso_count_closed(SpaceClass{2, 0, arith::jacobi_symbol(-1, 3)}, 1, 3) == 2);
    // H perp <eta> over F_3, l = 1: beta(1,1) delta(1,1) = 4
    CHECK(iso_count_closed(SpaceClass{3, 0, 1}, 1, 3) == 4);
    CHECK(iso_count_closed(SpaceClass{3, 0, -1}, 1, 3) == 4);
    CHECK(iso_count_closed(SpaceClass{4, 0, 1}, 0, 3) == 1);
    for (long p : {3L, 5L})
        for (int t = 0; t <= 4; ++t)
            for (int eps : {1, -1}) {
                if (t == 0 && eps == -1) continue;
                SpaceClass cls{t, 0, eps};
                FpQuadSpace rep = class_representative(p, cls);
                for (long l = 0; l <= t; ++l)
                    CHECK(iso_count_closed(cls, l, p) ==
                          Rstar(rep, FpQuadSpace::zero_space(p, (int)l)));
            }
}

TEST_CASE("Rstar_perp2_zero examples and brute-force agreement") {
    CHECK(Rstar_perp2_zero(FpQuadSpace(3, IMat(0, 0)), 0) == 1);
    CHECK(Rstar_perp2_zero(FpQuadSpace::line(3, 2), 1) == 0);
    CHECK(Rstar_perp2_zero(FpQuadSpace::line(3, -2), 1) == 2);
    for (long p : {3L, 5L})
        for (int d = 0; d <= 3; ++d)
            for (const auto& cls : classes_of_dim(p, d)) {
                FpQuadSpace V = class_representative(p, cls);
                FpQuadSpace V2 = V.perp(FpQuadSpace::line(p, 2));
                for (long a = 0; a <= d + 1; ++a)
                    CHECK(Rstar_perp2_zero(V, a) ==
                          Rstar(V2, FpQuadSpace::zero_space(p, (int)a)));
            }
}

TEST_CASE("Rstar_indep: marked-line independence") {
    // V = <-2> over F_3 with Delta = <2>: both isotropic lines avoid Delta
    FpQuadSpace V = FpQuadSpace::line(3, -2).perp(FpQuadSpace::line(3, 2));
    CHECK(Rstar_indep(V, FpQuadSpace::zero_space(3, 1)) == 2);
    CHECK(Rstar_indep(V, FpQuadSpace(3, IMat(0, 0))) == 1);
    CHECK(Rstar_indep(V, FpQuadSpace::zero_space(3, 3)) == 0);
    // isotropic subspaces never meet the anisotropic marked line, so the
    // counts agree with plain Rstar on the
    // orthogonal sum
    for (long p : {3L, 5L})
        for (int d = 0; d <= 2; ++d)
            for (const auto& cls : classes_of_dim(p, d)) {
                FpQuadSpace W = class_representative(p, cls);
                FpQuadSpace Wd = W.perp(FpQuadSpace::line(p, 2));
                for (int a = 0; a <= d + 1; ++a)
                    CHECK(Rstar_indep(Wd, FpQuadSpace::zero_space(p, a)) ==
                          Rstar(Wd, FpQuadSpace::zero_space(p, a)));
            }
}

TEST_CASE("p2 orbit machinery: counts and orbit sizes") {
    // dimension 1: half-grams 0 and 1 are inequivalent
    CHECK(p2_orbit_reps(1).size() == 2);
    // invertible symmetric matrices mod 2 in dim 2: orbits I_2 and J_2
    auto reps2 = p2_orbit_reps(2);
    int invertible_orbits = 0;
    for (const IMat& r : reps2)
        if (det(r) % 2 != 0) ++invertible_orbits;
    CHECK(invertible_orbits == 2);
    // subspace counting in an even lattice mod 2
    IMat amb = IMat::diag({Int(2), Int(2), Int(4)});
    Int total = 0;
    for (const IMat& U : p2_orbit_reps(1)) total += p2_subspace_count(amb, U);
    CHECK(total == 7);  // all lines of F_2^3
}
