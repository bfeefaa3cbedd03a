#ifndef SIEGEL_JACOBI_HPP
#define SIEGEL_JACOBI_HPP

#include <map>

#include "siegel/hecke.hpp"

namespace siegel {
namespace jacobi {

// Coefficient store of an index-1 Jacobi form of degree n+1: keys are pairs
// (T, R) with T the n x n block and R the 1 x n glue row of the bordered
// matrix [[T, tR], [R, 2]].
struct JacobiSource {
    virtual ~JacobiSource() = default;
    virtual arith::ExactScalar coeff(const IMat& T, const IMat& R) const = 0;
    virtual bool even() const = 0;
    virtual int degree() const = 0;
};

// bordered matrix [[T, tR], [R, 2]] is even integral and psd
bool valid_index(const IMat& T, const IMat& R);
// T - 2 tR' R' for R = 2R' (R must be even)
IMat sheared_gram(const IMat& T, const IMat& R);

// the lift f |-> f * theta^{(n,1)}: c(T, 2R') = c_f(T - 2 tR'R'), zero at odd R
class LiftedStore : public JacobiSource {
  public:
    LiftedStore(const theta::CoefficientSource& f, int n) : f_(f), n_(n) {}
    arith::ExactScalar coeff(const IMat& T, const IMat& R) const override;
    bool even() const override { return true; }
    int degree() const override { return n_; }

  private:
    const theta::CoefficientSource& f_;
    int n_;
};

// finite explicit store
class MapStore : public JacobiSource {
  public:
    MapStore(int n, bool even_support) : n_(n), even_(even_support) {}
    void set(const IMat& T, const IMat& R, const arith::ExactScalar& c);
    arith::ExactScalar coeff(const IMat& T, const IMat& R) const override;
    bool even() const override { return even_; }
    int degree() const override { return n_; }
    const std::map<std::pair<IMat, IMat>, arith::ExactScalar>& entries() const { return m_; }

  private:
    int n_;
    bool even_;
    std::map<std::pair<IMat, IMat>, arith::ExactScalar> m_;
};

// the averaging projection onto even Jacobi forms, at coefficient level:
// keeps even-R coefficients, annihilates odd-R ones; idempotent
MapStore psi_projection(const MapStore& store);
arith::ExactScalar psi_coeff(const JacobiSource& F, const IMat& T, const IMat& R);

// operator coefficients at an index Lambda perp Delta (p ndiv N)
Rat coeff_AJtilde(const lat::Sublattice& omega, const hecke::HeckeParams& pr);
arith::ExactScalar coeff_AJ(const lat::Sublattice& omega, const hecke::HeckeParams& pr);

enum class TJVariant { tj, ttilde_direct, ttilde_combination };

// (T, R)-th coefficient of F|T^J_j(p^2) (variant tj) or F|T~^J_j(p^2);
// p ndiv N requires an even store, p | N carries the glue along explicitly
arith::ExactScalar apply_TJ(const JacobiSource& F, const IMat& T, const IMat& R,
                            const hecke::HeckeParams& pr, TJVariant variant);

using JacobiIndex = std::pair<IMat, IMat>;

// the three operator relations of the Siegel <-> Jacobi correspondence
hecke::Report verify_thm74_coprime(const theta::CoefficientSource& f,
                                   const hecke::HeckeParams& pr,
                                   const std::vector<JacobiIndex>& indices);
hecke::Report verify_thm74_dividing(const theta::CoefficientSource& f,
                                    const hecke::HeckeParams& pr,
                                    const std::vector<JacobiIndex>& indices);

}  // namespace jacobi
}  // namespace siegel

#endif
