#ifndef SIEGEL_HECKE_HPP
#define SIEGEL_HECKE_HPP

#include <string>
#include <vector>

#include "siegel/theta.hpp"

namespace siegel {
namespace hecke {

struct HeckeParams {
    long p = 3;
    int j = 1;
    long k = 1;   // weight k + 1/2
    int n = 1;    // degree
    int chi_prime_p = 1;        // chi'(p), used when p ndiv N
    bool p_divides_level = false;

    void validate() const;
};

// Invariant-factor data of a sublattice pair plus its quotient class.
struct OmegaData {
    int n0 = 0, n1 = 0, n2 = 0, r = 0;
    ff::SpaceClass quotient_class;
};

OmegaData omega_data(const lat::Sublattice& sub);

// E_j(Lambda, Omega) = j(k-n) + k(n2-n0) + n0(n-n2) + (j-r)(j-r-1)/2
long exponent_Ej(const OmegaData& d, const HeckeParams& pr);

// coefficient of the Gauss-sum-free operator (zero off the even support)
Rat coeff_Atilde(const lat::Sublattice& omega, const HeckeParams& pr);
// coefficient of the standard generator, with the twisted-Gauss-sum class sum
arith::ExactScalar coeff_A_thm24(const lat::Sublattice& omega, const HeckeParams& pr);

// Lambda-th coefficient of f|T_j(p^2); params select the p ndiv N / p | N branch
arith::ExactScalar apply_Tj(const theta::CoefficientSource& src, const IMat& lambda,
                            const HeckeParams& pr);

enum class TtildePath { direct, combination };
arith::ExactScalar apply_Ttilde(const theta::CoefficientSource& src, const IMat& lambda,
                                const HeckeParams& pr, TtildePath path = TtildePath::direct);

Rat uq(long q, const HeckeParams& pr);
arith::ExactScalar apply_Tprime(const theta::CoefficientSource& src, const IMat& lambda,
                                const HeckeParams& pr);

Rat vq(long q, const HeckeParams& pr);
Rat lambda_j(const HeckeParams& pr);  // eigenvalue of the averaged theta series

// Decomposition data of an even integral Omega <= (1/p)L of formal rank n:
// Omega = (1/p)Omega0 + Omega1 + p*Omega2, r2 read off from the formal rank.
struct OmegaTheta {
    int r0 = 0, r1 = 0, r2 = 0;
    ff::FpQuadSpace quotient;  // Omega1/p*Omega1
};

// C: columns generating p*Omega inside L (integer coordinates)
OmegaTheta omega_theta_data(const IMat& L_gram, const IMat& C, long p, int n_formal);

Rat theta_cj_closed(const OmegaTheta& om, const HeckeParams& pr);
Rat theta_bj_closed(const OmegaTheta& om, const HeckeParams& pr);

// eigenvalue bound exponent of the nonsingular-form estimate
Rat exponent_M(int n, int j, long k, const Rat& gamma);

struct Report {
    bool pass = true;
    std::vector<std::string> lines;
    void record(bool ok, const std::string& what);
};

// theta(L)|T'_j = sum_q v_q(j) * (sum over p^{j-q}-neighbours of theta),
// checked coefficientwise on the target grams
Report verify_eichler(const IMat& L_gram, long p, int j, int n, const std::vector<IMat>& targets);
// theta(L)|T'_{k+a} = 0 on the target grams
Report verify_annihilation(const IMat& L_gram, long p, int a, int n,
                           const std::vector<IMat>& targets);

HeckeParams params_for_theta(const theta::ThetaSource& src, long p, int j);

}  // namespace hecke
}  // namespace siegel

#endif
