#include "siegel/ffspace.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "siegel/arith.hpp"

namespace siegel {
namespace ff {

namespace {

int modp(const Int& x, long p) {
    Int r = x % p;
    if (r < 0) r += p;
    return (int)r.get_si();
}

// dense int matrix mod p, row-major; plain ints keep the enumeration loops fast
struct SmallMat {
    int rows, cols;
    std::vector<int> a;
    SmallMat(int r, int c) : rows(r), cols(c), a(r * c, 0) {}
    int& at(int i, int j) { return a[i * cols + j]; }
    int at(int i, int j) const { return a[i * cols + j]; }
};

SmallMat reduce(const IMat& m, long p) {
    SmallMat s(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) s.at(i, j) = modp(m.at(i, j), p);
    return s;
}

long inv_mod(long a, long p) {
    long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return ((t % p) + p) % p;
}

int rank_mod_p(SmallMat m, long p) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        long inv = inv_mod(m.at(r, c), p);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) = (int)((m.at(r, j) * inv) % p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            long f = m.at(i, c) % p;
            if (!f) continue;
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = (int)(((m.at(i, j) - f * m.at(r, j)) % p + p) % p);
        }
        ++r;
    }
    return r;
}

SpaceClass classify_small(SmallMat w, long p) {
    int d = w.rows;
    std::vector<long> diag;
    std::vector<int> alive(d, 1);
    for (int step = 0; step < d; ++step) {
        int pivot = -1;
        for (int i = 0; i < d; ++i)
            if (alive[i] && w.at(i, i) % p != 0) { pivot = i; break; }
        if (pivot < 0) {
            int bi = -1, bj = -1;
            for (int i = 0; i < d && bi < 0; ++i) {
                if (!alive[i]) continue;
                for (int j = 0; j < d; ++j)
                    if (alive[j] && j != i && w.at(i, j) % p != 0) { bi = i; bj = j; break; }
            }
            if (bi < 0) break;  // remainder is the radical
            // e_bi += e_bj makes Q(e_bi) = 2 B(e_bi, e_bj) != 0
            for (int j = 0; j < d; ++j) w.at(bi, j) = (int)((w.at(bi, j) + w.at(bj, j)) % p);
            for (int i = 0; i < d; ++i) w.at(i, bi) = (int)((w.at(i, bi) + w.at(i, bj)) % p);
            --step;
            continue;
        }
        long dv = w.at(pivot, pivot) % p;
        diag.push_back(dv);
        long inv = inv_mod(dv, p);
        for (int i = 0; i < d; ++i) {
            if (!alive[i] || i == pivot) continue;
            long f = (w.at(i, pivot) * inv) % p;
            if (!f) continue;
            for (int j = 0; j < d; ++j)
                w.at(i, j) = (int)(((w.at(i, j) - f * w.at(pivot, j)) % p + p) % p);
            for (int j = 0; j < d; ++j)
                w.at(j, i) = (int)(((w.at(j, i) - f * w.at(j, pivot)) % p + p) % p);
        }
        alive[pivot] = 0;
    }
    long disc = 1;
    for (long dv : diag) disc = (disc * dv) % p;
    SpaceClass cls;
    cls.regular_rank = (int)diag.size();
    cls.radical_dim = d - cls.regular_rank;
    cls.eps = diag.empty() ? 1 : arith::jacobi_symbol(disc, p);
    return cls;
}

// Enumerate RREF row bases of all a-dim subspaces of F_p^d; basis entries are
// handed to fn as an a*d row-major int array.
void for_each_subspace(long p, int d, int a, const std::function<void(const std::vector<int>&)>& fn) {
    if (a < 0 || a > d) return;
    std::vector<int> basis(a * d, 0);
    if (a == 0) {
        fn(basis);
        return;
    }
    std::vector<int> pivots(a);
    for (int i = 0; i < a; ++i) pivots[i] = i;
    while (true) {
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < a; ++i)
            for (int c = pivots[i] + 1; c < d; ++c)
                if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                    free_pos.push_back({i, c});
        std::vector<int> vals(free_pos.size(), 0);
        while (true) {
            std::fill(basis.begin(), basis.end(), 0);
            for (int i = 0; i < a; ++i) basis[i * d + pivots[i]] = 1;
            for (size_t k = 0; k < free_pos.size(); ++k)
                basis[free_pos[k].first * d + free_pos[k].second] = vals[k];
            fn(basis);
            size_t k = 0;
            while (k < vals.size() && ++vals[k] == (int)p) vals[k++] = 0;
            if (k == vals.size()) break;
        }
        int i = a - 1;
        while (i >= 0 && pivots[i] == d - a + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < a; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

// gram of the subspace spanned by the given rows, mod p
SmallMat basis_gram(const SmallMat& g, const std::vector<int>& basis, int a, long p) {
    int d = g.rows;
    SmallMat out(a, a);
    for (int i = 0; i < a; ++i)
        for (int j = i; j < a; ++j) {
            long acc = 0;
            for (int r = 0; r < d; ++r) {
                if (!basis[i * d + r]) continue;
                long row = 0;
                for (int c = 0; c < d; ++c) row += (long)g.at(r, c) * basis[j * d + c];
                acc += basis[i * d + r] * (row % p);
            }
            out.at(i, j) = out.at(j, i) = (int)(((acc % p) + p) % p);
        }
    return out;
}

}  // namespace

FpQuadSpace::FpQuadSpace(long prime, IMat g) : p(prime), dim(g.rows), gram(std::move(g)) {
    if (!is_prime(p)) throw domain_error("FpQuadSpace: p must be prime");
    if (!gram.is_symmetric()) throw domain_error("FpQuadSpace: gram must be symmetric");
    if (p == 2)
        for (int i = 0; i < dim; ++i)
            if (gram.at(i, i) % 2 != 0)
                throw domain_error("FpQuadSpace: p = 2 needs an even integral lift");
}

FpQuadSpace FpQuadSpace::hyperbolic(long p) {
    IMat g(2, 2);
    g.at(0, 0) = 1;
    g.at(1, 1) = -1;
    return FpQuadSpace(p, g);
}

FpQuadSpace FpQuadSpace::line(long p, long a) {
    IMat g(1, 1);
    g.at(0, 0) = a;
    return FpQuadSpace(p, g);
}

FpQuadSpace FpQuadSpace::perp(const FpQuadSpace& other) const {
    if (p != other.p) throw domain_error("perp: mixed primes");
    IMat g(dim + other.dim, dim + other.dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g.at(i, j) = gram.at(i, j);
    for (int i = 0; i < other.dim; ++i)
        for (int j = 0; j < other.dim; ++j) g.at(dim + i, dim + j) = other.gram.at(i, j);
    return FpQuadSpace(p, g);
}

long least_nonresidue(long p) {
    for (long w = 2; w < p; ++w)
        if (arith::jacobi_symbol(w, p) == -1) return w;
    throw domain_error("least_nonresidue: p < 3");
}

SpaceClass classify(const FpQuadSpace& V) {
    if (V.p == 2) throw domain_error("classify: requires p odd");
    return classify_small(reduce(V.gram, V.p), V.p);
}

std::pair<SpaceClass, int> radical_split(const FpQuadSpace& V) {
    SpaceClass cls = classify(V);
    int s = cls.radical_dim;
    cls.radical_dim = 0;
    return {cls, s};
}

namespace {
long even_lift(long x, long p) {
    long r = ((x % p) + p) % p;
    return (r % 2 == 0) ? r : r + p;
}
}  // namespace

FpQuadSpace class_representative(long p, const SpaceClass& cls) {
    if (p == 2) throw domain_error("class_representative: requires p odd");
    int t = cls.regular_rank, s = cls.radical_dim;
    IMat g(t + s, t + s);
    if (t > 0) {
        for (int i = 0; i + 1 < t; ++i) g.at(i, i) = even_lift(1, p);
        long last = (cls.eps == 1) ? 1 : least_nonresidue(p);
        g.at(t - 1, t - 1) = even_lift(last, p);
    }
    return FpQuadSpace(p, g);
}

std::vector<SpaceClass> classes_of_dim(long p, int q) {
    (void)p;
    std::vector<SpaceClass> out;
    for (int t = 0; t <= q; ++t) {
        if (t == 0) {
            out.push_back({0, q, 1});
            continue;
        }
        out.push_back({t, q - t, 1});
        out.push_back({t, q - t, -1});
    }
    return out;
}

std::vector<IMat> subspace_bases(long p, int d, int a) {
    std::vector<IMat> out;
    for_each_subspace(p, d, a, [&](const std::vector<int>& basis) {
        IMat B(a, d);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < d; ++j) B.at(i, j) = basis[i * d + j];
        out.push_back(std::move(B));
    });
    return out;
}

IMat subspace_gram(const FpQuadSpace& V, const IMat& B) {
    return B * V.gram * B.transpose();
}

namespace {

Int r_count_impl(const FpQuadSpace& T, const FpQuadSpace& S, bool primitive, long cap) {
    long p = T.p;
    if (S.p != p) throw domain_error("r_count: mixed primes");
    int d = T.dim, a = S.dim;
    if (a == 0) return 1;  // the empty matrix
    double size = std::pow((double)p, (double)(d * a));
    if (size > (double)cap) throw cap_error("r_count: p^(dim T * dim S) exceeds the cap");
    SmallMat t = reduce(T.gram, p), s = reduce(S.gram, p);
    std::vector<int> entries(d * a, 0);  // C column-major: C(i,j) = entries[i + d*j]
    Int count = 0;
    while (true) {
        bool ok = true;
        for (int i = 0; i < a && ok; ++i)
            for (int j = i; j < a && ok; ++j) {
                long acc = 0;
                for (int r = 0; r < d; ++r) {
                    long row = 0;
                    for (int c = 0; c < d; ++c) row += (long)t.at(r, c) * entries[c + d * j];
                    acc = (acc + entries[r + d * i] * (row % p)) % p;
                }
                if (((acc - s.at(i, j)) % p + p) % p != 0) ok = false;
            }
        if (ok && primitive) {
            SmallMat C(d, a);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < a; ++j) C.at(i, j) = entries[i + d * j];
            if (rank_mod_p(C, p) != a) ok = false;
        }
        if (ok) ++count;
        int k = 0;
        while (k < d * a && ++entries[k] == (int)p) entries[k++] = 0;
        if (k == d * a) break;
    }
    return count;
}

}  // namespace

Int r_count(const FpQuadSpace& T, const FpQuadSpace& S, long cap) {
    return r_count_impl(T, S, false, cap);
}

Int rstar_count(const FpQuadSpace& T, const FpQuadSpace& S, long cap) {
    if (S.dim > T.dim) return 0;
    return r_count_impl(T, S, true, cap);
}

Int ortho_order(const FpQuadSpace& T, long cap) { return rstar_count(T, T, cap); }

Int Rstar(const FpQuadSpace& V, const FpQuadSpace& W) {
    if (V.p != W.p) throw domain_error("Rstar: mixed primes");
    if (V.p == 2) throw domain_error("Rstar: requires p odd (see p2_subspace_count)");
    if (W.dim > V.dim) return 0;
    if (W.dim == 0) return 1;
    long p = V.p;
    SpaceClass target = classify(W);
    SmallMat g = reduce(V.gram, p);
    long count = 0;
    for_each_subspace(p, V.dim, W.dim, [&](const std::vector<int>& basis) {
        SmallMat sub = basis_gram(g, basis, W.dim, p);
        if (classify_small(sub, p) == target) ++count;
    });
    return count;
}

Int iso_count_closed(const SpaceClass& cls, long l, long p) {
    if (cls.radical_dim != 0) throw domain_error("iso_count_closed: class must be regular");
    if (l < 0) return 0;
    if (l == 0) return 1;
    using arith::beta;
    using arith::delta;
    int t = cls.regular_rank;
    Rat v;
    if (t % 2 == 0) {
        int c = t / 2;
        int eps_h = (c % 2 == 0) ? 1 : arith::jacobi_symbol(-1, p);  // (-1/p)^c
        if (cls.eps == eps_h)
            v = beta(c, l, p) * delta(c - 1, l, p);  // H^c
        else
            v = beta(c - 1, l, p) * delta(c, l, p);  // H^{c-1} perp A
    } else {
        int c = (t - 1) / 2;
        v = beta(c, l, p) * delta(c, l, p);  // H^c perp <eta>
    }
    if (v.get_den() != 1) throw domain_error("iso_count_closed: non-integral count");
    return v.get_num();
}

Int Rstar_perp2_zero(const FpQuadSpace& V, long a) {
    if (V.p == 2) throw domain_error("Rstar_perp2_zero: requires p odd");
    if (a < 0) return 0;
    auto [cls0, s] = radical_split(V);
    SpaceClass perp2;
    perp2.regular_rank = cls0.regular_rank + 1;
    perp2.radical_dim = 0;
    perp2.eps = (cls0.regular_rank == 0 ? 1 : cls0.eps) * arith::jacobi_symbol(2, V.p);
    Int total = 0;
    for (long t = 0; t <= s && t <= a; ++t) {
        Rat b = arith::beta(s, t, V.p);
        Int pw = int_pow(Int(V.p), (unsigned long)((s - t) * (a - t)));
        total += b.get_num() * pw * iso_count_closed(perp2, a - t, V.p);
    }
    return total;
}

Int Rstar_indep(const FpQuadSpace& V_plus_delta, const FpQuadSpace& U) {
    if (V_plus_delta.p == 2) throw domain_error("Rstar_indep: requires p odd");
    long p = V_plus_delta.p;
    int D = V_plus_delta.dim;
    if (modp(V_plus_delta.gram.at(D - 1, D - 1) - 2, p) != 0)
        throw domain_error("Rstar_indep: marked line must have Gram entry 2");
    for (int i = 0; i < D - 1; ++i)
        if (modp(V_plus_delta.gram.at(i, D - 1), p) != 0)
            throw domain_error("Rstar_indep: marked line must be orthogonal");
    if (U.dim > D) return 0;
    if (U.dim == 0) return 1;
    int a = U.dim;
    SpaceClass target = classify(U);
    SmallMat g = reduce(V_plus_delta.gram, p);
    long count = 0;
    for_each_subspace(p, D, a, [&](const std::vector<int>& basis) {
        SmallMat sub = basis_gram(g, basis, a, p);
        if (!(classify_small(sub, p) == target)) return;
        // independence from the marked line: e_{D-1} not in the row span
        SmallMat ext(a + 1, D);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < D; ++j) ext.at(i, j) = basis[i * D + j];
        ext.at(a, D - 1) = 1;
        if (rank_mod_p(ext, p) == a) return;
        ++count;
    });
    return count;
}

// ---------------- p = 2 orbit machinery ----------------

namespace {

// half-gram of an even integral matrix packed into a bitmask: diagonal bits
// (T_ii/2 mod 2) first, then the upper off-diagonal entries mod 2.
uint32_t halfgram_key(const IMat& T) {
    int d = T.rows;
    uint32_t key = 0;
    int bit = 0;
    for (int i = 0; i < d; ++i, ++bit) {
        Int h = T.at(i, i) / 2;
        if (modp(h, 2)) key |= (1u << bit);
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j, ++bit)
            if (modp(T.at(i, j), 2)) key |= (1u << bit);
    return key;
}

IMat even_lift_of_key(uint32_t key, int d) {
    IMat T(d, d);
    int bit = 0;
    for (int i = 0; i < d; ++i, ++bit) T.at(i, i) = (key >> bit & 1) ? 2 : 0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j, ++bit) T.at(i, j) = T.at(j, i) = (key >> bit & 1);
    return T;
}

const std::vector<IMat>& gl2_elements(int d) {
    static std::map<int, std::vector<IMat>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<IMat> out;
    int total = 1 << (d * d);
    for (int mask = 0; mask < total; ++mask) {
        IMat G(d, d);
        SmallMat s(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                int v = (mask >> (i * d + j)) & 1;
                G.at(i, j) = v;
                s.at(i, j) = v;
            }
        if (rank_mod_p(s, 2) == d) out.push_back(std::move(G));
    }
    return cache.emplace(d, std::move(out)).first->second;
}

}  // namespace

uint32_t p2_orbit_key(const IMat& T_even) {
    int d = T_even.rows;
    for (int i = 0; i < d; ++i)
        if (T_even.at(i, i) % 2 != 0) throw domain_error("p2_orbit_key: matrix must be even");
    if (d == 0) return 0;
    uint32_t best = ~0u;
    for (const IMat& G : gl2_elements(d))
        best = std::min(best, halfgram_key(G.transpose() * T_even * G));
    return best;
}

std::vector<IMat> p2_orbit_reps(int d) {
    std::vector<IMat> reps;
    if (d == 0) {
        reps.push_back(IMat(0, 0));
        return reps;
    }
    std::map<uint32_t, uint32_t> seen;  // orbit key -> first representative key
    int total = 1 << (d * (d + 1) / 2);
    for (int key = 0; key < total; ++key) {
        uint32_t orbit = p2_orbit_key(even_lift_of_key((uint32_t)key, d));
        seen.emplace(orbit, (uint32_t)key);
    }
    for (auto& [orbit, key] : seen) reps.push_back(even_lift_of_key(key, d));
    return reps;
}

Int p2_subspace_count(const IMat& ambient_even, const IMat& U_even) {
    int d = ambient_even.rows, a = U_even.rows;
    if (a > d) return 0;
    if (a == 0) return 1;
    uint32_t target = p2_orbit_key(U_even);
    long count = 0;
    for_each_subspace(2, d, a, [&](const std::vector<int>& basis) {
        IMat B(a, d);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < d; ++j) B.at(i, j) = basis[i * d + j];
        if (p2_orbit_key(B * ambient_even * B.transpose()) == target) ++count;
    });
    return count;
}

}  // namespace ff
}  // namespace siegel
