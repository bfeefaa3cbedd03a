#ifndef SIEGEL_GAUSS_HPP
#define SIEGEL_GAUSS_HPP

#include "siegel/arith.hpp"
#include "siegel/cyclotomic.hpp"
#include "siegel/ffspace.hpp"
#include "siegel/intmat.hpp"

namespace siegel {
namespace gauss {

enum class EsumWeight { none, legendre_det };

inline constexpr long kDefaultCap = 100000000L;

// Exact sum over symmetric Y mod M of (det Y / p)^[weight] * zeta_M^{tr(YT)/2},
// T even integral, M = p or p^2.
CycInt e_sum_oracle(const IMat& T, long p, long M, EsumWeight weight, long cap = kDefaultCap);

// classical one-variable Gauss sum, as an exact cyclotomic integer
CycInt g1_cyclotomic(long p);
CycInt g1_cyclotomic_p2(long p);  // same element written in Z[zeta_{p^2}]
// reduces G_1(p)^2 exactly and returns it; always (-1/p) * p
Int g1_square_identity(long p);

// block data D = diag{I_{r0}, p I_{r1}, p^2 I_{r2}, I_{r3}}
struct BlockShape {
    int r0 = 0, r1 = 0, r2 = 0, r3 = 0;
    int dim() const { return r0 + r1 + r2 + r3; }
};

// p^{r2} (det Y1 / p) g^{r1} as an element of Q[g]
arith::GaussExpr gyd_closed(long p, const BlockShape& shape, const Int& det_y1);

// Direct coset sum for the pair (Y, D): sum over G in Z^{1,n}/Z^{1,n} D of
// e{2 tG G Y D^{-1}}, computed in Z[zeta_{p^2}]. D must be diagonal with
// entries in {1, p, p^2}.
CycInt gyd_oracle(const IMat& Y, const IMat& D, long p, long cap = kDefaultCap);

// Builds the block matrix Y of the closed-form statement from its free blocks
// (Y0 symmetric r0 x r0, Y1 symmetric r1 x r1 with p ndiv det, Y2 r0 x r1,
// Y3 r0 x r3).
IMat assemble_block_y(long p, const BlockShape& shape, const IMat& Y0, const IMat& Y1,
                      const IMat& Y2, const IMat& Y3);

bool gyd_matches(const arith::GaussExpr& closed, const CycInt& oracle);

// normalised twisted Gauss sum: closed form by isometry class (p odd)
Rat gtilde_closed(long p, const ff::SpaceClass& cls);
// oracle: p^{-d} G_1(p)^d G*(V) computed in Z[zeta_p]; certifies rationality
Rat gtilde_oracle(const ff::FpQuadSpace& V, long cap = kDefaultCap);

// alpha(W): full symmetric character sum; p any prime (2 allowed).
// W.gram must be an even integral lift.
Int alpha_closed(const ff::FpQuadSpace& W);
Int alpha_oracle(const ff::FpQuadSpace& W, long cap = kDefaultCap);

// alpha'(U): sum over invertible symmetric Y mod p; evaluated by residue
// counting with the Galois reduction, asserted equal to the cyclotomic sum.
Int alpha_prime(const ff::FpQuadSpace& U, long cap = kDefaultCap);

}  // namespace gauss
}  // namespace siegel

#endif
