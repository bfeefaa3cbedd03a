#include "siegel/cyclotomic.hpp"

#include <sstream>

namespace siegel {

namespace {
long canonical_len(long p, long M) { return M == p ? p - 1 : p * (p - 1); }
}  // namespace

CycInt::CycInt(long p, long M) : p_(p), M_(M) {
    if (!is_prime(p) || p == 2) throw domain_error("CycInt: p must be an odd prime");
    if (M != p && M != p * p) throw domain_error("CycInt: conductor must be p or p^2");
    c_.assign(canonical_len(p, M), Int(0));
}

std::vector<Int> CycInt::reduce(long p, long M, std::vector<Int> full) {
    if ((long)full.size() != M) throw domain_error("CycInt::reduce: bad length");
    if (M == p) {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        std::vector<Int> out(p - 1);
        for (long i = 0; i < p - 1; ++i) out[i] = full[i] - full[p - 1];
        return out;
    }
    // M = p^2: zeta^{p(p-1)} = -(1 + zeta^p + ... + zeta^{(p-2)p});
    // one descending pass suffices since the produced exponents stay below p(p-1)
    long deg = p * (p - 1);
    for (long e = M - 1; e >= deg; --e) {
        if (full[e] == 0) continue;
        Int coef = full[e];
        full[e] = 0;
        long base = e - deg;
        for (long i = 0; i <= p - 2; ++i) full[base + i * p] -= coef;
    }
    full.resize(deg);
    return full;
}

CycInt CycInt::constant(long p, long M, const Int& c) {
    CycInt z(p, M);
    z.c_[0] = c;
    return z;
}

CycInt CycInt::from_counts(long p, long M, const std::vector<Int>& counts) {
    CycInt z(p, M);
    z.c_ = reduce(p, M, counts);
    return z;
}

CycInt CycInt::from_counts(long p, long M, const std::vector<long long>& counts) {
    std::vector<Int> v(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) v[i] = (long)counts[i];
    return from_counts(p, M, v);
}

CycInt CycInt::zeta_power(long p, long M, long e) {
    std::vector<Int> full(M, Int(0));
    full[((e % M) + M) % M] = 1;
    return from_counts(p, M, full);
}

void CycInt::check_same(const CycInt& o) const {
    if (p_ != o.p_ || M_ != o.M_) throw domain_error("CycInt: mixed cyclotomic rings");
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_same(o);
    CycInt z = *this;
    for (size_t i = 0; i < c_.size(); ++i) z.c_[i] += o.c_[i];
    return z;
}

CycInt CycInt::operator-(const CycInt& o) const {
    check_same(o);
    CycInt z = *this;
    for (size_t i = 0; i < c_.size(); ++i) z.c_[i] -= o.c_[i];
    return z;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_same(o);
    std::vector<Int> full(M_, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            full[(i + j) % M_] += c_[i] * o.c_[j];
        }
    }
    CycInt z(p_, M_);
    z.c_ = reduce(p_, M_, std::move(full));
    return z;
}

CycInt CycInt::scaled(const Int& k) const {
    CycInt z = *this;
    for (auto& x : z.c_) x *= k;
    return z;
}

CycInt CycInt::pow(unsigned long e) const {
    CycInt acc = constant(p_, M_, 1), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool CycInt::operator==(const CycInt& o) const {
    return p_ == o.p_ && M_ == o.M_ && c_ == o.c_;
}

bool CycInt::is_zero() const {
    for (const Int& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycInt::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Int CycInt::rational_value() const {
    if (!is_rational()) throw domain_error("CycInt: value is not rational: " + str());
    return c_[0];
}

CycInt CycInt::embed_p2() const {
    if (M_ != p_) throw domain_error("CycInt::embed_p2: conductor is already p^2");
    std::vector<Int> full(p_ * p_, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) full[(i * p_) % (p_ * p_)] += c_[i];
    CycInt z(p_, p_ * p_);
    z.c_ = reduce(p_, p_ * p_, std::move(full));
    return z;
}

std::string CycInt::str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (any) os << " + ";
        os << c_[i].get_str() << "*z^" << i;
        any = true;
    }
    if (!any) os << "0";
    os << "  (z = zeta_" << M_ << ")";
    return os.str();
}

}  // namespace siegel
