#ifndef SIEGEL_CYCLOTOMIC_HPP
#define SIEGEL_CYCLOTOMIC_HPP

#include <vector>

#include "siegel/core.hpp"

namespace siegel {

// Exact element of Z[zeta_M] for M = p or M = p^2, p an odd prime.
// Coefficients are kept canonically reduced: degree < p-1 for M = p
// (relation 1 + zeta + ... + zeta^{p-1} = 0), degree < p(p-1) for M = p^2
// (the p^2-th cyclotomic polynomial). Equality on canonical vectors is exact.
class CycInt {
  public:
    CycInt() = default;
    CycInt(long p, long M);  // zero

    static CycInt constant(long p, long M, const Int& c);
    // sum of counts[e] * zeta^e over e in [0, M)
    static CycInt from_counts(long p, long M, const std::vector<Int>& counts);
    static CycInt from_counts(long p, long M, const std::vector<long long>& counts);
    static CycInt zeta_power(long p, long M, long e);

    long p() const { return p_; }
    long conductor() const { return M_; }
    const std::vector<Int>& coeffs() const { return c_; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt scaled(const Int& k) const;
    CycInt pow(unsigned long e) const;
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    bool is_zero() const;
    // rational means every non-constant canonical coefficient vanishes
    bool is_rational() const;
    Int rational_value() const;  // requires is_rational()

    // reinterpret an element of Z[zeta_p] inside Z[zeta_{p^2}] via
    // zeta_p = zeta_{p^2}^p
    CycInt embed_p2() const;

    std::string str() const;

  private:
    long p_ = 0, M_ = 0;
    std::vector<Int> c_;  // canonical length: p-1 or p(p-1)

    void check_same(const CycInt& o) const;
    static std::vector<Int> reduce(long p, long M, std::vector<Int> full);  // length M in
};

}  // namespace siegel

#endif
