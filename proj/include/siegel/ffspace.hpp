#ifndef SIEGEL_FFSPACE_HPP
#define SIEGEL_FFSPACE_HPP

#include <cstdint>
#include <vector>

#include "siegel/intmat.hpp"

namespace siegel {
namespace ff {

// Quadratic space over F_p given by a symmetric integer Gram matrix read
// modulo p. For p = 2 the matrix must be an even integral lift and is read
// through the half-Gram convention (diagonal/2 mod 2, off-diagonal mod 2);
// classification requires p odd, the counting helpers also accept p = 2.
struct FpQuadSpace {
    long p = 3;
    int dim = 0;
    IMat gram;

    FpQuadSpace() = default;
    FpQuadSpace(long prime, IMat g);

    static FpQuadSpace zero_space(long p, int d) { return FpQuadSpace(p, IMat(d, d)); }
    static FpQuadSpace hyperbolic(long p);       // <1, -1>
    static FpQuadSpace line(long p, long a);     // <a>

    FpQuadSpace perp(const FpQuadSpace& other) const;  // orthogonal direct sum
};

// Isometry class of a quadratic space over F_p, p odd: regular rank t,
// radical dimension s, and the Legendre symbol of the regular discriminant
// (eps = +1 for t = 0). There are 2d+1 classes in dimension d.
struct SpaceClass {
    int regular_rank = 0;
    int radical_dim = 0;
    int eps = 1;

    bool operator==(const SpaceClass& o) const {
        return regular_rank == o.regular_rank && radical_dim == o.radical_dim &&
               (regular_rank == 0 || eps == o.eps);
    }
    bool operator!=(const SpaceClass& o) const { return !(*this == o); }
};

long least_nonresidue(long p);

SpaceClass classify(const FpQuadSpace& V);  // p odd
// (class of the regular part V0, radical dimension s)
std::pair<SpaceClass, int> radical_split(const FpQuadSpace& V);

// canonical representative with an even integral Gram lift
FpQuadSpace class_representative(long p, const SpaceClass& cls);
// all 2q+1 classes of dimension q
std::vector<SpaceClass> classes_of_dim(long p, int q);

// Row bases (RREF, entries in [0,p)) of all a-dimensional subspaces of F_p^d.
std::vector<IMat> subspace_bases(long p, int d, int a);

// Gram matrix of the subspace spanned by the rows of B inside V.
IMat subspace_gram(const FpQuadSpace& V, const IMat& B);

inline constexpr long kDefaultEnumCap = 100000000L;  // 1e8 iterations

// r(T,S): matrices C over F_p with tC T C = S; exhaustive, guarded.
Int r_count(const FpQuadSpace& T, const FpQuadSpace& S, long cap = kDefaultEnumCap);
// r*(T,S): same with rank C = dim S.
Int rstar_count(const FpQuadSpace& T, const FpQuadSpace& S, long cap = kDefaultEnumCap);
// o(T) = #O(T) = r*(T,T)
Int ortho_order(const FpQuadSpace& T, long cap = kDefaultEnumCap);

// R*(V,W): subspaces of V isometric to W, by subspace enumeration (p odd).
Int Rstar(const FpQuadSpace& V, const FpQuadSpace& W);

// Closed-form count of l-dimensional totally isotropic subspaces of a
// REGULAR space of the given class (the beta*delta three-case formula).
Int iso_count_closed(const SpaceClass& regular_cls, long l, long p);

// R*(V perp <2>, <0>^a) via radical splitting and the closed isotropic
// count; agrees with brute force.
Int Rstar_perp2_zero(const FpQuadSpace& V, long a);

// Subspaces of V_plus_delta isometric to U that intersect the marked line
// trivially; the marked line is the last coordinate, anisotropic with Gram
// entry 2 (p odd).
Int Rstar_indep(const FpQuadSpace& V_plus_delta, const FpQuadSpace& U);

// --- p = 2 support (GL_d(Z/2)-orbit machinery for the alpha identities) ---

// Orbit key of the even matrix T under GL_d(Z/2) substitutions, acting on
// the half-Gram data.
uint32_t p2_orbit_key(const IMat& T_even);
// One even-lift representative per orbit of half-Gram data in dimension d.
std::vector<IMat> p2_orbit_reps(int d);
// Subspaces of the ambient even lattice mod 2 whose induced form lies in the
// orbit of U_even.
Int p2_subspace_count(const IMat& ambient_even, const IMat& U_even);

}  // namespace ff
}  // namespace siegel

#endif
