#ifndef SIEGEL_THETA_HPP
#define SIEGEL_THETA_HPP

#include <map>
#include <memory>
#include <vector>

#include "siegel/arith.hpp"
#include "siegel/intmat.hpp"
#include "siegel/lattice.hpp"

namespace siegel {
namespace theta {

// Abstract Fourier-coefficient source: gram |-> coefficient, subject to the
// unimodular-equivariance contract c(tG T G) = chi(det G) c(T) (plain
// invariance for the real characters implemented here) and c(T) = 0 off the
// even integral psd support.
struct CoefficientSource {
    virtual ~CoefficientSource() = default;
    virtual arith::ExactScalar coeff(const QMat& gram) const = 0;
    virtual arith::CharacterData character() const = 0;
};

// Vectors of the positive definite even lattice Q with prescribed norm,
// enumerated exactly (rational Cholesky bounds, no floating point).
class VectorEnumerator {
  public:
    explicit VectorEnumerator(const IMat& Q);
    const std::vector<std::vector<long>>& vectors_with_norm(const Int& t) const;
    int rank() const { return m_; }
    const IMat& gram() const { return Q_; }

  private:
    IMat Q_;
    int m_;
    std::vector<Rat> D_;
    std::vector<std::vector<Rat>> R_;
    mutable std::map<Int, std::vector<std::vector<long>>> cache_;
};

// #{C integral m x n : tC Q C = T}; zero off the even integral psd support.
Int repr_count(const IMat& Q, const QMat& T);
// the matrices themselves (for the closed-form cross-checks)
std::vector<IMat> repr_enumerate(const IMat& Q, const QMat& T);

// all even psd n x n matrices with diagonal <= bound, with representation
// counts by Q
std::map<IMat, Int> coeff_table(const IMat& Q, int n, long bound);

// Siegel theta series of an odd-rank lattice, as a coefficient source
class ThetaSource : public CoefficientSource {
  public:
    ThetaSource(const IMat& Q, int degree);
    arith::ExactScalar coeff(const QMat& gram) const override;
    arith::CharacterData character() const override;
    Int repr(const QMat& gram) const;

    const IMat& lattice_gram() const { return enumerator_.gram(); }
    int degree() const { return n_; }
    long weight_k() const { return k_; }
    Int level() const { return level_; }

  private:
    VectorEnumerator enumerator_;
    int n_;
    long k_;
    Int level_;
    mutable std::map<IMat, Int> cache_;
};

enum class TablePolicy { zero_outside, error_outside };

class TableSource : public CoefficientSource {
  public:
    TableSource(std::map<IMat, Rat> table, TablePolicy policy, arith::CharacterData chr)
        : table_(std::move(table)), policy_(policy), chr_(chr) {}
    arith::ExactScalar coeff(const QMat& gram) const override;
    arith::CharacterData character() const override { return chr_; }

  private:
    std::map<IMat, Rat> table_;
    TablePolicy policy_;
    arith::CharacterData chr_;
};

}  // namespace theta
}  // namespace siegel

#endif
