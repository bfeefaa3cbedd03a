#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "siegel/lattice.hpp"

using namespace siegel;
using namespace siegel::lat;

namespace {

IMat mat(int n, std::initializer_list<long> v) { return IMat(n, n, v); }
IMat two_identity(int n) { return IMat::identity(n).scaled(2); }

// independent oracle: subgroups of (Z/9)^2 by closure of generator pairs
long subgroup_count_z9_squared() {
    const int N = 81;  // elements (a,b), a,b mod 9
    auto idx = [](int a, int b) { return a * 9 + b; };
    std::set<std::vector<bool>> seen;
    for (int g1 = 0; g1 < N; ++g1)
        for (int g2 = g1; g2 < N; ++g2) {
            std::vector<bool> s(N, false);
            for (int x = 0; x < 9; ++x)
                for (int y = 0; y < 9; ++y) {
                    int a = (x * (g1 / 9) + y * (g2 / 9)) % 9;
                    int b = (x * (g1 % 9) + y * (g2 % 9)) % 9;
                    s[idx(a, b)] = true;
                }
            seen.insert(s);
        }
    return (long)seen.size();
}

}  // namespace

TEST_CASE("evenness, discriminant, level") {
    CHECK(level_of(two_identity(3)) == 4);
    CHECK(GramMatrix(two_identity(3)).discriminant() == 8);
    CHECK_FALSE(GramMatrix(IMat::identity(2)).is_even());
    CHECK(GramMatrix(two_identity(2)).is_positive_definite());
    CHECK_FALSE(GramMatrix(mat(2, {2, 3, 3, 2})).is_positive_definite());
    CHECK(level_of(IMat::diag({Int(2), Int(2), Int(4)})) == 8);
    CHECK_THROWS_AS(level_of(IMat(2, 2)), domain_error);
}

TEST_CASE("hnf and snf") {
    CHECK(snf_invariants(IMat::diag({Int(1), Int(3), Int(9)})) ==
          std::vector<Int>{Int(1), Int(3), Int(9)});
    CHECK(snf_invariants(mat(2, {3, 1, 0, 3})) == std::vector<Int>{Int(1), Int(9)});
    CHECK(snf_invariants(mat(2, {1, 7, 0, 1})) == std::vector<Int>{Int(1), Int(1)});
    // canonical column HNF: upper triangular, positive diagonal, reduced
    IMat H = hnf(mat(2, {4, 2, 0, 2}));
    CHECK(H == mat(2, {4, 2, 0, 2}));
    IMat H2 = hnf(IMat(2, 3, {2, 5, 1, 0, 3, 3}));
    CHECK(H2.rows == 2);
    CHECK(H2.cols == 2);
    CHECK(H2.at(1, 0) == 0);
    CHECK(H2.at(0, 0) > 0);
    // the column module is unchanged: solve both ways
    CHECK(det(H2) != 0);
}

TEST_CASE("sublattices of a rank-1 lattice") {
    auto subs = sublattices_between(mat(1, {2}), 3);
    REQUIRE(subs.size() == 3);
    std::set<Int> hs;
    for (const auto& s : subs) hs.insert(s.H.at(0, 0));
    CHECK(hs == std::set<Int>{Int(1), Int(3), Int(9)});
    auto even = sublattices_between(mat(1, {2}), 3, {}, true);
    REQUIRE(even.size() == 2);  // (1/3)L has gram 2/9
    for (const auto& s : even) CHECK(s.H.at(0, 0) != 1);
}

TEST_CASE("sublattice count matches the abelian-group oracle") {
    auto subs = sublattices_between(two_identity(2), 3);
    CHECK((long)subs.size() == subgroup_count_z9_squared());
    // per-type counts agree with the closed count and with type reversal
    std::map<std::array<int, 3>, long> by_type;
    for (const auto& s : subs) by_type[s.type]++;
    for (const auto& [type, count] : by_type) {
        CHECK(Int(count) == sublattice_type_count(2, type, 3));
        std::array<int, 3> rev{type[2], type[1], type[0]};
        CHECK(by_type[rev] == count);
    }
}

TEST_CASE("sublattice invariants hold on enumeration") {
    for (const auto& s : sublattices_between(two_identity(2), 3)) {
        QMat hi = inverse_of(s.H);
        for (auto& x : hi.a) x *= 9;
        CHECK(hi.is_integral());
        for (const Int& d : snf_divisors(s.H)) CHECK((d == 1 || d == 3 || d == 9));
        CHECK(s.type[0] + s.type[1] + s.type[2] == 2);
    }
}

TEST_CASE("quotient space of a sublattice pair") {
    IMat T = two_identity(2);
    for (const auto& s : sublattices_between(T, 3, {}, true)) {
        auto [n0, n1, n2] = s.type;
        ff::FpQuadSpace V = s.quotient_space();
        CHECK(V.dim == n1);
        if (s.H == IMat::identity(2).scaled(Int(3))) {
            // Omega = Lambda (H = pI): quotient is Lambda/pLambda with gram T mod p
            CHECK(V.dim == 2);
            CHECK(ff::classify(V) == ff::classify(ff::FpQuadSpace(3, T)));
        }
        if (s.H == IMat::identity(2).scaled(Int(9))) CHECK(V.dim == 0);  // Omega = pLambda
    }
}

TEST_CASE("quotient class is independent of the basis of H") {
    IMat T = two_identity(3);
    auto subs = sublattices_between(T, 3, std::array<int, 3>{1, 1, 1}, true);
    for (const auto& s : subs) {
        ff::FpQuadSpace V = s.quotient_space();
        // re-basing: right-multiply H by unimodular matrices, re-canonicalise
        for (const IMat& U : {IMat(3, 3, {1, 1, 0, 0, 1, 0, 0, 0, 1}),
                              IMat(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, -1})}) {
            Sublattice re(T, 3, hnf_cols(s.H * U));
            CHECK(re.H == s.H);  // canonical form is unique
            CHECK(ff::classify(re.quotient_space()) == ff::classify(V));
        }
    }
}

TEST_CASE("neighbor counts and invariants") {
    auto n1 = neighbors(two_identity(3), 3, 1);
    CHECK(n1.size() == 4);
    for (const IMat& K : n1) {
        CHECK(det(K) == 8);
        CHECK(GramMatrix(K).is_even());
        CHECK(GramMatrix(K).is_positive_definite());
    }
    CHECK(neighbors(two_identity(3), 5, 1).size() == 6);
    CHECK(neighbor_count_formula(2, 2, 3) == 120);
    CHECK_THROWS_AS(neighbors(two_identity(3), 2, 1), domain_error);   // p | 2 disc
    CHECK_THROWS_AS(neighbors(two_identity(3), 3, 2), domain_error);   // j > k
    CHECK_THROWS_AS(neighbors(two_identity(2), 3, 1), domain_error);   // even rank
}

TEST_CASE("decompose_relative recovers the invariant data") {
    IMat L = two_identity(3);
    // M = (1/3) span(3 e_1): the lattice Z e_1, so r0 = 0, r1 = 1
    IMat C1(3, 1);
    C1.at(0, 0) = 3;
    auto d1 = decompose_relative(L, C1, 3);
    CHECK(d1.r0 == 0);
    CHECK(d1.r1 == 1);
    CHECK(d1.quotient.dim == 1);
    // M = (1/3) span(v) for primitive v of norm 18: r0 = 1, r1 = 0
    IMat C2(3, 1);
    C2.at(0, 0) = 1;
    C2.at(1, 0) = 2;
    C2.at(2, 0) = 2;
    auto d2 = decompose_relative(L, C2, 3);
    CHECK(d2.r0 == 1);
    CHECK(d2.r1 == 0);
    // a non-even module is rejected
    IMat C3(3, 1);
    C3.at(0, 0) = 1;
    CHECK_THROWS_AS(decompose_relative(L, C3, 3), domain_error);
}
