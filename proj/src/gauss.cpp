#include "siegel/gauss.hpp"

#include <cmath>
#include <numeric>

namespace siegel {
namespace gauss {

namespace {

int modp_int(const Int& x, long m) {
    Int r = x % m;
    if (r < 0) r += m;
    return (int)r.get_si();
}

// determinant of a small int matrix, exact in long (entries < 25, d <= 6)
long small_det(std::vector<long> m, int d) {
    long det = 1;
    for (int k = 0; k < d; ++k) {
        int piv = -1;
        for (int i = k; i < d; ++i)
            if (m[i * d + k] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < d; ++j) std::swap(m[k * d + j], m[piv * d + j]);
            det = -det;
        }
        // fraction-free: scale rows below, track the factor
        for (int i = k + 1; i < d; ++i) {
            if (m[i * d + k] == 0) continue;
            long a = m[k * d + k], b = m[i * d + k];
            long g = std::gcd(a, b);
            long fa = a / g, fb = b / g;
            for (int j = k; j < d; ++j) m[i * d + j] = m[i * d + j] * fa - m[k * d + j] * fb;
            det *= fa;  // divide out at the end
        }
    }
    long prod = 1;
    for (int k = 0; k < d; ++k) prod *= m[k * d + k];
    return prod / det;
}

long det_mod_p(const std::vector<int>& y, int d, long p) {
    std::vector<long> m(d * d);
    for (int i = 0; i < d * d; ++i) m[i] = y[i];
    return ((small_det(std::move(m), d) % p) + p) % p;
}

}  // namespace

CycInt e_sum_oracle(const IMat& T, long p, long M, EsumWeight weight, long cap) {
    if (!is_prime(p) || p == 2) throw domain_error("e_sum_oracle: p must be an odd prime");
    if (M != p && M != p * p) throw domain_error("e_sum_oracle: denominator must be p or p^2");
    if (weight == EsumWeight::legendre_det && M != p)
        throw domain_error("e_sum_oracle: legendre weight needs denominator p");
    if (!T.is_symmetric()) throw domain_error("e_sum_oracle: T must be symmetric");
    int d = T.rows;
    for (int i = 0; i < d; ++i)
        if (T.at(i, i) % 2 != 0) throw domain_error("e_sum_oracle: T must be even integral");
    int npos = d * (d + 1) / 2;
    if (std::pow((double)M, (double)npos) > (double)cap)
        throw cap_error("e_sum_oracle: M^(d(d+1)/2) exceeds the cap");

    // independent entries: diagonal first, then upper off-diagonal
    std::vector<long> w(npos);
    std::vector<std::pair<int, int>> pos(npos);
    {
        int k = 0;
        for (int i = 0; i < d; ++i, ++k) {
            pos[k] = {i, i};
            w[k] = modp_int(T.at(i, i) / 2, M);
        }
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j, ++k) {
                pos[k] = {i, j};
                w[k] = modp_int(T.at(i, j), M);
            }
    }

    std::vector<long long> counts(M, 0);
    std::vector<int> y(npos, 0);
    std::vector<int> ymat(d * d, 0);
    long e = 0;
    if (d == 0) {
        counts[0] = 1;
        return CycInt::from_counts(p, M, counts);
    }
    while (true) {
        long long sgn = 1;
        if (weight == EsumWeight::legendre_det) {
            long dm = det_mod_p(ymat, d, p);
            sgn = dm == 0 ? 0 : arith::jacobi_symbol(dm, p);
        }
        counts[e] += sgn;
        // odometer; every increment (wrapping or not) adds w[k] to e mod M
        int k = 0;
        bool done = false;
        while (true) {
            if (k == npos) { done = true; break; }
            e += w[k];
            if (e >= M) e -= M;
            auto [i, j] = pos[k];
            int v = y[k] + 1;
            if (v < (int)M) {
                y[k] = v;
                ymat[i * d + j] = ymat[j * d + i] = v;
                break;
            }
            y[k] = 0;
            ymat[i * d + j] = ymat[j * d + i] = 0;
            ++k;
        }
        if (done) break;
    }
    return CycInt::from_counts(p, M, counts);
}

CycInt g1_cyclotomic(long p) {
    std::vector<long long> counts(p, 0);
    for (long g = 0; g < p; ++g) counts[(g * g) % p] += 1;
    return CycInt::from_counts(p, p, counts);
}

CycInt g1_cyclotomic_p2(long p) { return g1_cyclotomic(p).embed_p2(); }

Int g1_square_identity(long p) {
    CycInt g = g1_cyclotomic(p);
    Int v = (g * g).rational_value();
    if (v != Int(arith::jacobi_symbol(-1, p)) * p)
        throw domain_error("g1_square_identity: reduction disagrees with (-1/p) p");
    return v;
}

arith::GaussExpr gyd_closed(long p, const BlockShape& shape, const Int& det_y1) {
    int sym = 1;
    if (shape.r1 > 0) {
        sym = arith::jacobi_symbol(det_y1, Int(p));
        if (sym == 0) throw domain_error("gyd_closed: p divides det Y1 (pair not coprime)");
    }
    arith::GaussExpr val(p, Rat(sym) * int_pow(Int(p), shape.r2), Rat(0));
    return val * arith::GaussExpr::g(p).pow(shape.r1);
}

IMat assemble_block_y(long p, const BlockShape& shape, const IMat& Y0, const IMat& Y1,
                      const IMat& Y2, const IMat& Y3) {
    auto [r0, r1, r2, r3] = shape;
    if (Y0.rows != r0 || Y0.cols != r0 || !Y0.is_symmetric())
        throw domain_error("assemble_block_y: bad Y0");
    if (Y1.rows != r1 || Y1.cols != r1 || !Y1.is_symmetric())
        throw domain_error("assemble_block_y: bad Y1");
    if (Y2.rows != r0 || Y2.cols != r1) throw domain_error("assemble_block_y: bad Y2");
    if (Y3.rows != r0 || Y3.cols != r3) throw domain_error("assemble_block_y: bad Y3");
    int n = shape.dim();
    IMat Y(n, n);
    int o1 = r0, o2 = r0 + r1, o3 = r0 + r1 + r2;
    for (int i = 0; i < r0; ++i)
        for (int j = 0; j < r0; ++j) Y.at(i, j) = Y0.at(i, j);
    for (int i = 0; i < r0; ++i)
        for (int j = 0; j < r1; ++j) {
            Y.at(i, o1 + j) = p * Y2.at(i, j);
            Y.at(o1 + j, i) = Y2.at(i, j);
        }
    for (int i = 0; i < r1; ++i)
        for (int j = 0; j < r1; ++j) Y.at(o1 + i, o1 + j) = Y1.at(i, j);
    for (int i = 0; i < r2; ++i) Y.at(o2 + i, o2 + i) = 1;
    for (int i = 0; i < r0; ++i)
        for (int j = 0; j < r3; ++j) {
            Y.at(i, o3 + j) = Y3.at(i, j);
            Y.at(o3 + j, i) = Y3.at(i, j);
        }
    return Y;
}

CycInt gyd_oracle(const IMat& Y, const IMat& D, long p, long cap) {
    if (Y.rows != Y.cols || D.rows != D.cols || Y.rows != D.rows)
        throw domain_error("gyd_oracle: shape mismatch");
    int n = D.rows;
    long p2 = p * p;
    std::vector<long> dd(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (i != j && D.at(i, j) != 0) throw domain_error("gyd_oracle: D must be diagonal");
        Int di = D.at(i, i);
        if (di != 1 && di != p && di != p2)
            throw domain_error("gyd_oracle: diagonal entries must be 1, p or p^2");
        dd[i] = di.get_si();
    }
    // symmetric-pair condition: tY D symmetric, i.e. Y_ji d_j = Y_ij d_i
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (Y.at(j, i) * dd[j] != Y.at(i, j) * dd[i])
                throw domain_error("gyd_oracle: (tY, tD) is not a symmetric pair");
    // coprimality of the pair: [tY | tD] has trivial invariant factors
    {
        IMat C(n, 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                C.at(i, j) = Y.at(j, i);
                C.at(i, n + j) = D.at(j, i);
            }
        for (const Int& dv : snf_divisors(C))
            if (dv != 1) throw domain_error("gyd_oracle: pair (tY, tD) is not coprime");
    }
    long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= dd[i];
        if (total > cap) throw cap_error("gyd_oracle: coset count exceeds the cap");
    }
    // weights M_ij = Y_ij * (p^2 / d_j) mod p^2
    std::vector<long> Mw(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Mw[i * n + j] = modp_int(Y.at(i, j) * (p2 / dd[j]), p2);

    std::vector<long long> counts(p2, 0);
    std::vector<long> g(n, 0);
    while (true) {
        long e = 0;
        for (int i = 0; i < n; ++i) {
            if (!g[i]) continue;
            long row = 0;
            for (int j = 0; j < n; ++j) row = (row + Mw[i * n + j] * g[j]) % p2;
            e = (e + g[i] * row) % p2;
        }
        counts[e] += 1;
        int k = 0;
        while (k < n && ++g[k] == dd[k]) g[k++] = 0;
        if (k == n) break;
    }
    return CycInt::from_counts(p, p2, counts);
}

bool gyd_matches(const arith::GaussExpr& closed, const CycInt& oracle) {
    long p = closed.p;
    Int den = lcm(closed.r0.get_den(), closed.r1.get_den());
    Rat q0 = closed.r0 * den, q1 = closed.r1 * den;
    Int c0 = q0.get_num();
    Int c1 = q1.get_num();
    CycInt rhs = CycInt::constant(p, p * p, c0) + g1_cyclotomic_p2(p).scaled(c1);
    return oracle.scaled(den) == rhs;
}

Rat gtilde_closed(long p, const ff::SpaceClass& cls) {
    int t = cls.regular_rank, s = cls.radical_dim;
    auto odd_prod = [&](long x) {  // prod_{i=1}^{x} (p^{2i-1} - 1)
        Int acc = 1;
        for (long i = 1; i <= x; ++i) acc *= int_pow(Int(p), 2 * i - 1) - 1;
        return acc;
    };
    if (t % 2 == 0) {
        if (s % 2 == 1) return Rat(0);
        long c = t / 2, x = s / 2;
        Int v = int_pow(Int(p), (c + x) * (c + x) - (c + x)) * odd_prod(x);
        return Rat((c % 2) ? -v : v);
    }
    long c = (t - 1) / 2;
    int u_sym = cls.eps * ((c % 2) ? arith::jacobi_symbol(-1, p) : 1);
    if (s % 2 == 0) {
        long x = s / 2;
        int m_eta = arith::jacobi_symbol(-1, p) * arith::jacobi_symbol(2, p) * u_sym;
        Int v = int_pow(Int(p), (c + x) * (c + x) + x) * odd_prod(x);
        v *= m_eta;
        return Rat((c % 2) ? -v : v);
    }
    long x = (s + 1) / 2;
    Int v = int_pow(Int(p), (c + x) * (c + x) - (c + x)) * odd_prod(x);
    return Rat((c % 2) ? -v : v);
}

namespace {
// even integral lift of a mod-p symmetric matrix (p odd)
IMat even_lift_matrix(const IMat& g, long p) {
    IMat T(g.rows, g.cols);
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) {
            long v = modp_int(g.at(i, j), p);
            if (i == j && v % 2 != 0) v += p;
            T.at(i, j) = v;
        }
    return T;
}
}  // namespace

Rat gtilde_oracle(const ff::FpQuadSpace& V, long cap) {
    if (V.p == 2) throw domain_error("gtilde_oracle: requires p odd");
    if (V.dim == 0) return Rat(1);
    long p = V.p;
    IMat T = even_lift_matrix(V.gram, p);
    CycInt gstar = e_sum_oracle(T, p, p, EsumWeight::legendre_det, cap);
    CycInt x = g1_cyclotomic(p).pow((unsigned long)V.dim) * gstar;
    if (!x.is_rational())
        throw domain_error("gtilde_oracle: G_1^d G*(V) failed to reduce to a rational");
    return make_rat(x.rational_value(), int_pow(Int(p), (unsigned long)V.dim));
}

Int alpha_closed(const ff::FpQuadSpace& W) {
    long p = W.p;
    int d = W.dim;
    bool zero = true;
    for (int i = 0; i < d && zero; ++i)
        for (int j = 0; j < d && zero; ++j) {
            if (p == 2) {
                // half-gram must vanish: diagonal mod 4, off-diagonal mod 2
                if (i == j && W.gram.at(i, i) % 4 != 0) zero = false;
                if (i != j && W.gram.at(i, j) % 2 != 0) zero = false;
            } else if (modp_int(W.gram.at(i, j), p) != 0) {
                zero = false;
            }
        }
    return zero ? int_pow(Int(p), (unsigned long)(d * (d + 1) / 2)) : Int(0);
}

namespace {

// iterate symmetric Y mod p; fn(entries of Y row-major, exponent tr(UY)/2 mod p)
template <typename F>
void for_each_symmetric(long p, int d, const IMat& U_even, F&& fn, long cap) {
    int npos = d * (d + 1) / 2;
    if (std::pow((double)p, (double)npos) > (double)cap)
        throw cap_error("symmetric enumeration exceeds the cap");
    std::vector<long> w(npos);
    std::vector<std::pair<int, int>> pos(npos);
    int k = 0;
    for (int i = 0; i < d; ++i, ++k) {
        pos[k] = {i, i};
        w[k] = modp_int(U_even.at(i, i) / 2, p);
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j, ++k) {
            pos[k] = {i, j};
            w[k] = modp_int(U_even.at(i, j), p);
        }
    std::vector<int> y(npos, 0);
    std::vector<int> ymat(d * d, 0);
    long e = 0;
    while (true) {
        fn(ymat, e);
        int kk = 0;
        bool done = false;
        while (true) {
            if (kk == npos) { done = true; break; }
            e += w[kk];
            if (e >= p) e -= p;
            auto [i, j] = pos[kk];
            int v = y[kk] + 1;
            if (v < (int)p) {
                y[kk] = v;
                ymat[i * d + j] = ymat[j * d + i] = v;
                break;
            }
            y[kk] = 0;
            ymat[i * d + j] = ymat[j * d + i] = 0;
            ++kk;
        }
        if (done) break;
    }
}

}  // namespace

Int alpha_oracle(const ff::FpQuadSpace& W, long cap) {
    long p = W.p;
    int d = W.dim;
    if (d == 0) return 1;
    long long acc = 0;
    std::vector<long long> counts(p, 0);
    for_each_symmetric(p, d, W.gram, [&](const std::vector<int>&, long e) { counts[e] += 1; },
                       cap);
    if (p == 2) {
        acc = counts[0] - counts[1];
        return Int((long)acc);
    }
    CycInt x = CycInt::from_counts(p, p, counts);
    return x.rational_value();
}

Int alpha_prime(const ff::FpQuadSpace& U, long cap) {
    long p = U.p;
    int d = U.dim;
    if (d == 0) return 1;
    std::vector<long long> counts(p, 0);
    for_each_symmetric(
        p, d, U.gram,
        [&](const std::vector<int>& ymat, long e) {
            if (det_mod_p(ymat, d, p) == 0) return;
            counts[e] += 1;
        },
        cap);
    if (p == 2) return Int((long)(counts[0] - counts[1]));
    // Galois invariance of the invertible-Y sum makes all nonzero residue
    // classes equally frequent, so the sum is N_0 - N_1
    for (long c = 2; c < p; ++c)
        if (counts[c] != counts[1])
            throw domain_error("alpha_prime: residue counts are not Galois-uniform");
    Int by_counting = Int((long)(counts[0] - counts[1]));
    Int by_cyclotomic = CycInt::from_counts(p, p, counts).rational_value();
    if (by_counting != by_cyclotomic)
        throw domain_error("alpha_prime: counting and cyclotomic paths disagree");
    return by_counting;
}

}  // namespace gauss
}  // namespace siegel
