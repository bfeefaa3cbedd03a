#ifndef SIEGEL_ARITH_HPP
#define SIEGEL_ARITH_HPP

#include <optional>

#include "siegel/core.hpp"

namespace siegel {
namespace arith {

// Jacobi symbol (a/m); m must be odd and positive.
int jacobi_symbol(const Int& a, const Int& m);
inline int jacobi_symbol(long a, long m) { return jacobi_symbol(Int(a), Int(m)); }

// The elementary functions of the operator formulas, read as products:
//   mu(m,r)    = prod_{i=0}^{r-1} (p^{m-i} - 1)
//   delta(m,r) = prod_{i=0}^{r-1} (p^{m-i} + 1)
//   beta(m,r)  = mu(m,r) / mu(r,r)
// m may be any integer (negative m gives honest rationals); r >= 0.
// beta(m,r) is the Gaussian binomial (number of r-dim subspaces of F_p^m)
// when m >= r >= 0.
Rat mu(long m, long r, long p);
Rat delta(long m, long r, long p);
Rat beta(long m, long r, long p);

// Element of Q(sqrt(p)): value a + b*sqrt(p) for a fixed prime context p.
// A scalar with b == 0 is plain rational and may carry context 0 ("unset");
// combining two scalars with irrational parts in different contexts is an
// error.
struct ExactScalar {
    long p = 0;
    Rat a, b;

    ExactScalar() = default;
    explicit ExactScalar(const Rat& r) : p(0), a(r), b(0) {}
    ExactScalar(long prime, const Rat& ra, const Rat& rb);

    static ExactScalar rational(const Rat& r) { return ExactScalar(r); }
    static ExactScalar sqrt_of(long prime) { return ExactScalar(prime, Rat(0), Rat(1)); }
    // p^(e/2) for any integer e
    static ExactScalar half_power(long prime, long e);

    bool is_rational() const { return b == 0; }
    // requires is_rational()
    Rat rat() const;

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator*(const Rat& r) const;
    ExactScalar operator-() const;
    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    std::string str() const;
};

// Element r0 + r1*g of the rank-2 algebra Q[g] with g^2 = (-1/p) * p,
// g standing for the classical one-variable Gauss sum.
struct GaussExpr {
    long p = 0;
    Rat r0, r1;

    GaussExpr() = default;
    GaussExpr(long prime, const Rat& c0, const Rat& c1);

    static GaussExpr one(long prime) { return GaussExpr(prime, 1, 0); }
    static GaussExpr g(long prime) { return GaussExpr(prime, 0, 1); }

    GaussExpr operator+(const GaussExpr& o) const;
    GaussExpr operator*(const GaussExpr& o) const;
    GaussExpr operator*(const Rat& c) const;
    GaussExpr pow(unsigned long e) const;
    bool operator==(const GaussExpr& o) const;
};

// Character data of a weight k+1/2 form: chi(d) = (2 det Q / |d|) for theta
// characters, chi'(d) = chi(d) * ((-1)^{k+1} / |d|) * sgn(d)^{k+1}.
// Only the value chi'(p) at odd primes coprime to the level is ever needed.
struct CharacterData {
    long k = 0;
    Int detQ2;  // the integer 2 det Q
    std::optional<int> chi_prime_override;  // for abstract (non-theta) forms

    CharacterData() = default;
    CharacterData(long weight_k, const Int& two_det_q) : k(weight_k), detQ2(two_det_q) {}
    static CharacterData with_value(long weight_k, int chi_prime_p) {
        CharacterData c;
        c.k = weight_k;
        c.chi_prime_override = chi_prime_p;
        return c;
    }
};

// chi'(p) in {-1, +1}; rejects p dividing the level (detected as p | 2 det Q).
int chi_prime_at(const CharacterData& chr, long p);

}  // namespace arith
}  // namespace siegel

#endif
