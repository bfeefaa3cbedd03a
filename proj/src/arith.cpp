#include "siegel/arith.hpp"

#include <sstream>

namespace siegel {
namespace arith {

int jacobi_symbol(const Int& a, const Int& m) {
    if (m <= 0 || m % 2 == 0) throw domain_error("jacobi_symbol: modulus must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), m.get_mpz_t());
}

Rat mu(long m, long r, long p) {
    if (r < 0) throw domain_error("mu: r must be >= 0");
    Rat acc(1);
    for (long i = 0; i < r; ++i) acc *= rat_pow(p, m - i) - 1;
    return acc;
}

Rat delta(long m, long r, long p) {
    if (r < 0) throw domain_error("delta: r must be >= 0");
    Rat acc(1);
    for (long i = 0; i < r; ++i) acc *= rat_pow(p, m - i) + 1;
    return acc;
}

Rat beta(long m, long r, long p) {
    if (r < 0) throw domain_error("beta: r must be >= 0");
    return mu(m, r, p) / mu(r, r, p);
}

ExactScalar::ExactScalar(long prime, const Rat& ra, const Rat& rb) : p(prime), a(ra), b(rb) {
    if (b != 0 && !is_prime(p)) throw domain_error("ExactScalar: context must be prime");
}

ExactScalar ExactScalar::half_power(long prime, long e) {
    if (!is_prime(prime)) throw domain_error("half_power: context must be prime");
    if (e % 2 == 0) return ExactScalar(prime, rat_pow(prime, e / 2), Rat(0));
    // p^(e/2) = p^((e-1)/2) * sqrt(p); e odd makes (e-1)/2 exact
    return ExactScalar(prime, Rat(0), rat_pow(prime, (e - 1) / 2));
}

Rat ExactScalar::rat() const {
    if (b != 0) throw domain_error("ExactScalar::rat on irrational value " + str());
    return a;
}

namespace {
long unify_ctx(const ExactScalar& x, const ExactScalar& y) {
    if (x.b != 0 && y.b != 0 && x.p != y.p)
        throw domain_error("ExactScalar: mixed prime contexts");
    if (x.b != 0) return x.p;
    if (y.b != 0) return y.p;
    return x.p ? x.p : y.p;
}
}  // namespace

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    return ExactScalar(unify_ctx(*this, o), a + o.a, b + o.b);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    return ExactScalar(unify_ctx(*this, o), a - o.a, b - o.b);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    long ctx = unify_ctx(*this, o);
    // (a1 + b1 s)(a2 + b2 s) with s^2 = p
    return ExactScalar(ctx, a * o.a + b * o.b * ctx, a * o.b + b * o.a);
}

ExactScalar ExactScalar::operator*(const Rat& r) const { return ExactScalar(p, a * r, b * r); }

ExactScalar ExactScalar::operator-() const { return ExactScalar(p, -a, -b); }

bool ExactScalar::operator==(const ExactScalar& o) const {
    if (a != o.a || b != o.b) return false;
    if (b != 0 && p != o.p) return false;
    return true;
}

std::string ExactScalar::str() const {
    std::ostringstream os;
    os << rat_str(a);
    if (b != 0) os << " + (" << rat_str(b) << ")*sqrt(" << p << ")";
    return os.str();
}

GaussExpr::GaussExpr(long prime, const Rat& c0, const Rat& c1) : p(prime), r0(c0), r1(c1) {
    if (!is_prime(p) || p == 2) throw domain_error("GaussExpr: odd prime context required");
}

GaussExpr GaussExpr::operator+(const GaussExpr& o) const {
    if (p != o.p) throw domain_error("GaussExpr: mixed contexts");
    return GaussExpr(p, r0 + o.r0, r1 + o.r1);
}

GaussExpr GaussExpr::operator*(const GaussExpr& o) const {
    if (p != o.p) throw domain_error("GaussExpr: mixed contexts");
    Rat gsq = Rat(jacobi_symbol(-1, p)) * p;
    return GaussExpr(p, r0 * o.r0 + r1 * o.r1 * gsq, r0 * o.r1 + r1 * o.r0);
}

GaussExpr GaussExpr::operator*(const Rat& c) const { return GaussExpr(p, r0 * c, r1 * c); }

GaussExpr GaussExpr::pow(unsigned long e) const {
    GaussExpr acc = GaussExpr::one(p), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool GaussExpr::operator==(const GaussExpr& o) const {
    return p == o.p && r0 == o.r0 && r1 == o.r1;
}

int chi_prime_at(const CharacterData& chr, long p) {
    if (chr.chi_prime_override) {
        if (p == 2) throw domain_error("chi_prime_at: p = 2 divides the level");
        return *chr.chi_prime_override;
    }
    if (p == 2 || !is_prime(p)) throw domain_error("chi_prime_at: need an odd prime");
    if (chr.detQ2 % p == 0) throw domain_error("chi_prime_at: p divides the level");
    int chi = jacobi_symbol(chr.detQ2, Int(p));
    int twist = jacobi_symbol(Int((chr.k + 1) % 2 == 0 ? 1 : -1), Int(p));
    return chi * twist;
}

}  // namespace arith
}  // namespace siegel
