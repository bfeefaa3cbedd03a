#ifndef SIEGEL_CORE_HPP
#define SIEGEL_CORE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace siegel {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an operation is asked for something outside its mathematical
// domain (wrong parity, p dividing the level, singular input, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a brute-force enumeration would exceed its configured cap.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by table-backed coefficient sources on out-of-table access.
struct coverage_error : std::runtime_error {
    explicit coverage_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for signed e; base must be nonzero when e < 0.
inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpq_class b = base;
        mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), (unsigned long)e);
        mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), (unsigned long)e);
        r.canonicalize();
        return r;
    }
    if (base == 0) throw domain_error("rat_pow: 0 to a negative power");
    return rat_pow(Rat(1) / base, -e);
}

inline Rat rat_pow(const Int& base, long e) { return rat_pow(Rat(base), e); }
inline Rat rat_pow(long base, long e) { return rat_pow(Rat(base), e); }

// floor(sqrt(x)) for x >= 0
inline Int isqrt(const Int& x) {
    if (x < 0) throw domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s);

}  // namespace siegel

#endif
