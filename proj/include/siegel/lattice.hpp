#ifndef SIEGEL_LATTICE_HPP
#define SIEGEL_LATTICE_HPP

#include <array>
#include <optional>
#include <vector>

#include "siegel/ffspace.hpp"
#include "siegel/intmat.hpp"

namespace siegel {
namespace lat {

// Even integral lattice presented by its Gram matrix.
struct GramMatrix {
    int n = 0;
    IMat T;

    GramMatrix() = default;
    explicit GramMatrix(IMat gram);

    bool is_even() const;
    bool is_positive_definite() const;  // exact leading principal minors
    Int discriminant() const { return det(T); }
};

bool is_even_integral(const QMat& M);
bool is_positive_semidefinite(const QMat& M);  // all principal minors >= 0

// smallest N >= 1 with N * Q^{-1} even integral
Int level_of(const IMat& Q);

std::vector<Int> snf_invariants(const IMat& H);  // H nonsingular
IMat hnf(const IMat& columns);

// Sublattice Omega with p*Lambda <= Omega <= (1/p)*Lambda, encoded by the
// canonical column HNF matrix H with Omega = (1/p) * Lambda * H.
struct Sublattice {
    IMat lambda_gram;
    long p = 0;
    IMat H;
    QMat gram_omega;              // (1/p^2) tH T H
    std::array<int, 3> type{};    // (n0, n1, n2): multiplicities of p^2, p, 1 in SNF(H)

    Sublattice() = default;
    Sublattice(const IMat& lambda, long prime, IMat h);

    bool is_integral() const { return gram_omega.is_integral(); }
    bool is_even_integral() const;
    // the quotient Lambda cap Omega / p(Lambda + Omega) as a quadratic space
    ff::FpQuadSpace quotient_space() const;
};

inline constexpr long kDefaultLatticeCap = 100000000L;

// Every Omega with p*Lambda <= Omega <= (1/p)*Lambda, each exactly once,
// optionally restricted by SNF type (n0, n1, n2) and/or even integrality.
std::vector<Sublattice> sublattices_between(const IMat& T, long p,
                                            std::optional<std::array<int, 3>> type_filter = {},
                                            bool even_only = false,
                                            long cap = kDefaultLatticeCap);

// number of subgroups of (Z/p^2)^n of the given type
Int sublattice_type_count(int n, const std::array<int, 3>& type, long p);

// p^j-neighbours of L (p ndiv 2 disc L, rank L = 2k+1, 1 <= j <= k),
// as Gram matrices.
std::vector<IMat> neighbors(const IMat& T, long p, int j, long cap = kDefaultLatticeCap);
Int neighbor_count_formula(long k, long j, long p);

// Decomposition data of the rank <= n module M = (1/p) * span(C) inside the
// ambient lattice L: M = (1/p)Omega0 + Omega1 + p*Omega2 with Omega0 + Omega1
// primitive mod p. Records the actual ranks r0, r1 and the isometry class of
// Omega1/p*Omega1; r2 is n_formal - r0 - r1 for the caller's formal rank.
struct RelativeDecomposition {
    int r0 = 0, r1 = 0;
    ff::FpQuadSpace quotient;  // Omega1/p*Omega1
};

RelativeDecomposition decompose_relative(const IMat& L_gram, const IMat& C, long p);

}  // namespace lat
}  // namespace siegel

#endif
