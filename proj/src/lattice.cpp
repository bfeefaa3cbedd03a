#include "siegel/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "siegel/arith.hpp"

namespace siegel {
namespace lat {

GramMatrix::GramMatrix(IMat gram) : n(gram.rows), T(std::move(gram)) {
    if (!T.is_symmetric()) throw domain_error("GramMatrix: not symmetric");
}

bool GramMatrix::is_even() const {
    for (int i = 0; i < n; ++i)
        if (T.at(i, i) % 2 != 0) return false;
    return true;
}

bool GramMatrix::is_positive_definite() const {
    for (int k = 1; k <= n; ++k) {
        IMat minor(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor.at(i, j) = T.at(i, j);
        if (det(minor) <= 0) return false;
    }
    return true;
}

bool is_even_integral(const QMat& M) {
    if (!M.is_integral()) return false;
    for (int i = 0; i < std::min(M.rows, M.cols); ++i)
        if (M.at(i, i).get_num() % 2 != 0) return false;
    return true;
}

bool is_positive_semidefinite(const QMat& M) {
    int n = M.rows;
    if (n > 12) throw domain_error("is_positive_semidefinite: dimension too large");
    // all principal minors nonnegative
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) idx.push_back(i);
        QMat sub((int)idx.size(), (int)idx.size());
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = 0; j < idx.size(); ++j) sub.at((int)i, (int)j) = M.at(idx[i], idx[j]);
        if (det(sub) < 0) return false;
    }
    return true;
}

Int level_of(const IMat& Q) {
    if (det(Q) == 0) throw domain_error("level_of: singular Gram matrix");
    QMat qi = inverse_of(Q);
    Int N = 1;
    for (int i = 0; i < Q.rows; ++i)
        for (int j = 0; j < Q.cols; ++j) {
            Rat e = qi.at(i, j);
            if (i == j) e /= 2;
            N = lcm(N, e.get_den());
        }
    return N;
}

std::vector<Int> snf_invariants(const IMat& H) {
    if (H.rows != H.cols || det(H) == 0) throw domain_error("snf_invariants: singular input");
    return snf_divisors(H);
}

IMat hnf(const IMat& columns) { return hnf_cols(columns); }

Sublattice::Sublattice(const IMat& lambda, long prime, IMat h)
    : lambda_gram(lambda), p(prime), H(std::move(h)) {
    int n = lambda.rows;
    if (H.rows != n || H.cols != n) throw domain_error("Sublattice: H must be n x n");
    // p Lambda <= Omega  <=>  p^2 H^{-1} integral
    QMat hi = inverse_of(H);
    for (auto& x : hi.a) x *= p * p;
    if (!hi.is_integral()) throw domain_error("Sublattice: p^2 H^{-1} not integral");
    std::vector<Int> div = snf_divisors(H);
    int n0 = 0, n1 = 0, n2 = 0;
    for (const Int& d : div) {
        if (d == 1) ++n2;
        else if (d == p) ++n1;
        else if (d == p * p) ++n0;
        else throw domain_error("Sublattice: SNF divisor outside {1, p, p^2}");
    }
    type = {n0, n1, n2};
    QMat g = QMat(H.transpose() * lambda * H);
    gram_omega = g.scaled(make_rat(1, Int(p) * p));
}

bool Sublattice::is_even_integral() const { return lat::is_even_integral(gram_omega); }

ff::FpQuadSpace Sublattice::quotient_space() const {
    if (!is_integral()) throw domain_error("quotient_space: Omega must be integral");
    int n = H.rows;
    // scaled coords: p(Lambda cap Omega) = pZ^n cap H Z^n, p(Lambda + Omega) scaled by p
    IMat pI = IMat::identity(n).scaled(p);
    IMat W = module_intersection(pI, H);
    IMat sum(n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            sum.at(i, j) = pI.at(i, j);
            sum.at(i, n + j) = H.at(i, j);
        }
    IMat S = hnf_cols(sum);
    QMat Mq = solve_exact(W, S.scaled(p));
    if (!Mq.is_integral()) throw domain_error("quotient_space: internal (index matrix)");
    IMat U, D, V;
    snf_decompose(Mq.to_imat(), U, D, V);
    IMat adapted = W * U;
    std::vector<int> cols;
    for (int i = 0; i < n; ++i) {
        const Int& d = D.at(i, i);
        if (d == p) cols.push_back(i);
        else if (d != 1) throw domain_error("quotient_space: quotient is not elementary");
    }
    int n1 = (int)cols.size();
    if (n1 != type[1]) throw domain_error("quotient_space: rank disagrees with SNF type");
    // lattice vectors x_i = adapted column / p; quadratic space is their Gram mod p
    IMat X(n, n1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n1; ++j) {
            Int v = adapted.at(i, cols[j]);
            if (v % p != 0) throw domain_error("quotient_space: internal (divisibility)");
            X.at(i, j) = v / p;
        }
    return ff::FpQuadSpace(p, X.congruent(lambda_gram));
}

Int sublattice_type_count(int n, const std::array<int, 3>& type, long p) {
    auto [n0, n1, n2] = type;
    if (n0 < 0 || n1 < 0 || n2 < 0 || n0 + n1 + n2 != n) return 0;
    Rat c = arith::beta(n, n2, p) * arith::beta(n - n2, n1, p) * rat_pow(p, (long)n0 * n2);
    return c.get_num();
}

namespace {

int modp(const Int& x, long p) {
    Int r = x % p;
    if (r < 0) r += p;
    return (int)r.get_si();
}

// B(row vector u, row vector w) under T, reduced mod p
int pair_mod_p(const IMat& T, const std::vector<int>& u, const std::vector<int>& w, long p) {
    int n = T.rows;
    Int acc = 0;
    for (int i = 0; i < n; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < n; ++j)
            if (w[j]) acc += Int(u[i]) * T.at(i, j) * w[j];
    }
    return modp(acc, p);
}

std::vector<int> row_of(const IMat& B, int i) {
    std::vector<int> r(B.cols);
    for (int j = 0; j < B.cols; ++j) r[j] = (int)B.at(i, j).get_si();
    return r;
}

int rank_mod_p(std::vector<std::vector<int>> rows, long p) {
    int m = rows.empty() ? 0 : (int)rows[0].size();
    int r = 0;
    for (int c = 0; c < m && r < (int)rows.size(); ++c) {
        int piv = -1;
        for (int i = r; i < (int)rows.size(); ++i)
            if (rows[i][c] % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        // normalize pivot to 1
        long inv = 1;
        for (long t = 1; t < p; ++t)
            if ((rows[r][c] * t) % p == 1) { inv = t; break; }
        for (int j = 0; j < m; ++j) rows[r][j] = (int)((rows[r][j] * inv) % p);
        for (int i = 0; i < (int)rows.size(); ++i) {
            if (i == r) continue;
            int f = rows[i][c] % p;
            if (!f) continue;
            for (int j = 0; j < m; ++j)
                rows[i][j] = (int)(((rows[i][j] - f * rows[r][j]) % p + p) % p);
        }
        ++r;
    }
    return r;
}

}  // namespace

std::vector<Sublattice> sublattices_between(const IMat& T, long p,
                                            std::optional<std::array<int, 3>> type_filter,
                                            bool even_only, long cap) {
    if (!T.is_symmetric()) throw domain_error("sublattices_between: T not symmetric");
    int n = T.rows;
    std::vector<std::array<int, 3>> types;
    if (type_filter) {
        auto [a, b, c] = *type_filter;
        if (a < 0 || b < 0 || c < 0 || a + b + c != n)
            throw domain_error("sublattices_between: bad type filter");
        types.push_back(*type_filter);
    } else {
        for (int n0 = 0; n0 <= n; ++n0)
            for (int n2 = 0; n0 + n2 <= n; ++n2) types.push_back({n0, n - n0 - n2, n2});
    }
    Int budget = 0;
    for (auto& t : types) budget += sublattice_type_count(n, t, p);
    if (budget > cap) throw cap_error("sublattices_between: candidate count exceeds the cap");

    std::set<IMat> seen;
    std::vector<Sublattice> out;
    for (auto [n0, n1, n2] : types) {
        for (const IMat& Btop : ff::subspace_bases(p, n, n2)) {
            if (even_only) {
                // even Omega forces the (1/p)-part totally isotropic mod p
                bool ok = true;
                for (int i = 0; i < n2 && ok; ++i)
                    for (int j = i; j < n2 && ok; ++j)
                        if (pair_mod_p(T, row_of(Btop, i), row_of(Btop, j), p)) ok = false;
                if (!ok) continue;
            }
            for (const IMat& Bbot : ff::subspace_bases(p, n, n1 + n2)) {
                // V_top <= V_bot
                {
                    std::vector<std::vector<int>> rows;
                    for (int i = 0; i < Bbot.rows; ++i) rows.push_back(row_of(Bbot, i));
                    for (int i = 0; i < Btop.rows; ++i) rows.push_back(row_of(Btop, i));
                    if (rank_mod_p(rows, p) != n1 + n2) continue;
                }
                if (even_only) {
                    bool ok = true;
                    for (int i = 0; i < n2 && ok; ++i)
                        for (int j = 0; j < Bbot.rows && ok; ++j)
                            if (pair_mod_p(T, row_of(Btop, i), row_of(Bbot, j), p)) ok = false;
                    if (!ok) continue;
                }
                // complete the top basis to a basis of V_bot
                std::vector<std::vector<int>> chain;
                for (int i = 0; i < Btop.rows; ++i) chain.push_back(row_of(Btop, i));
                std::vector<std::vector<int>> extras;
                for (int i = 0; i < Bbot.rows && (int)extras.size() < n1; ++i) {
                    auto cand = row_of(Bbot, i);
                    chain.push_back(cand);
                    if (rank_mod_p(chain, p) == (int)chain.size()) extras.push_back(cand);
                    else chain.pop_back();
                }
                if ((int)extras.size() != n1)
                    throw domain_error("sublattices_between: internal (completion)");
                // non-pivot coordinates of V_bot parametrise the glue cosets
                std::vector<int> nonpivot;
                {
                    std::vector<bool> is_piv(n, false);
                    for (int i = 0; i < Bbot.rows; ++i)
                        for (int j = 0; j < n; ++j)
                            if (Bbot.at(i, j) != 0) { is_piv[j] = true; break; }
                    for (int j = 0; j < n; ++j)
                        if (!is_piv[j]) nonpivot.push_back(j);
                }
                int nfree = n0 * n2;
                std::vector<int> glue(nfree, 0);
                while (true) {
                    // generators: lifted top vectors + p*glue, p * extras, p^2 I
                    IMat G(n, n2 + n1 + n);
                    for (int c = 0; c < n2; ++c)
                        for (int r = 0; r < n; ++r) G.at(r, c) = Btop.at(c, r);
                    for (int c = 0; c < n2; ++c)
                        for (int k = 0; k < n0; ++k)
                            G.at(nonpivot[k], c) += Int(p) * glue[c * n0 + k];
                    for (int c = 0; c < n1; ++c)
                        for (int r = 0; r < n; ++r) G.at(r, n2 + c) = Int(p) * extras[c][r];
                    for (int k = 0; k < n; ++k) G.at(k, n2 + n1 + k) = Int(p) * p;
                    IMat H = hnf_cols(G);
                    if (H.cols != n) throw domain_error("sublattices_between: internal (rank)");
                    if (seen.insert(H).second) {
                        Sublattice sub(T, p, H);
                        if (sub.type != std::array<int, 3>{n0, n1, n2})
                            throw domain_error("sublattices_between: internal (type)");
                        if (!even_only || sub.is_even_integral()) out.push_back(std::move(sub));
                    }
                    int k = 0;
                    while (k < nfree && ++glue[k] == (int)p) glue[k++] = 0;
                    if (k == nfree) break;
                    if (nfree == 0) break;
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Sublattice& a, const Sublattice& b) { return a.H < b.H; });
    return out;
}

std::vector<IMat> neighbors(const IMat& T, long p, int j, long cap) {
    int n = T.rows;
    if (n % 2 == 0) throw domain_error("neighbors: rank must be odd (2k+1)");
    int k = (n - 1) / 2;
    if (j < 1 || j > k) throw domain_error("neighbors: need 1 <= j <= k");
    Int disc = det(T);
    if ((Int(2) * disc) % p == 0) throw domain_error("neighbors: p divides 2 disc L");
    GramMatrix L(T);
    if (!L.is_even()) throw domain_error("neighbors: L must be even integral");
    auto subs = sublattices_between(T, p, std::array<int, 3>{j, n - 2 * j, j}, true, cap);
    std::vector<IMat> out;
    for (const auto& s : subs) {
        IMat K = s.gram_omega.to_imat();
        if (det(K) != disc) throw domain_error("neighbors: internal (determinant)");
        out.push_back(std::move(K));
    }
    return out;
}

Int neighbor_count_formula(long k, long j, long p) {
    Rat c = rat_pow(p, j * (j - 1) / 2) * arith::beta(k, j, p) * arith::delta(k, j, p);
    if (c.get_den() != 1) throw domain_error("neighbor_count_formula: non-integral");
    return c.get_num();
}

RelativeDecomposition decompose_relative(const IMat& L_gram, const IMat& C, long p) {
    int m = L_gram.rows;
    if (C.rows != m) throw domain_error("decompose_relative: ambient mismatch");
    IMat W = hnf_cols(C);  // basis of span(C) = p*M
    int d = W.cols;
    // M = (1/p) span(C) must be even integral
    {
        QMat gm = QMat(W.congruent(L_gram)).scaled(make_rat(1, Int(p) * p));
        if (!is_even_integral(gm)) throw domain_error("decompose_relative: M not even integral");
    }
    // A = basis of M cap L = (1/p)(span(C) cap pZ^m)
    IMat inter = module_intersection(W, IMat::identity(m).scaled(p));
    IMat A(m, inter.cols);
    for (int i = 0; i < m; ++i)
        for (int jj = 0; jj < inter.cols; ++jj) {
            if (inter.at(i, jj) % p != 0) throw domain_error("decompose_relative: internal");
            A.at(i, jj) = inter.at(i, jj) / p;
        }
    // ranks mod p of pM (=span C) and of M cap L inside L/pL
    std::vector<std::vector<int>> crows, arows;
    for (int jj = 0; jj < W.cols; ++jj) {
        std::vector<int> col(m);
        for (int i = 0; i < m; ++i) col[i] = modp(W.at(i, jj), p);
        crows.push_back(col);
    }
    for (int jj = 0; jj < A.cols; ++jj) {
        std::vector<int> col(m);
        for (int i = 0; i < m; ++i) col[i] = modp(A.at(i, jj), p);
        arows.push_back(col);
    }
    int r0 = rank_mod_p(crows, p);
    int r01 = rank_mod_p(arows, p);
    int r1 = r01 - r0;
    // greedily extend a basis of the image of pM by columns of A
    std::vector<std::vector<int>> chain;
    std::vector<int> picked_cols;
    for (auto& c : crows) {
        chain.push_back(c);
        if (rank_mod_p(chain, p) != (int)chain.size()) chain.pop_back();
    }
    for (int jj = 0; jj < (int)arows.size() && (int)picked_cols.size() < r1; ++jj) {
        chain.push_back(arows[jj]);
        if (rank_mod_p(chain, p) == (int)chain.size()) picked_cols.push_back(jj);
        else chain.pop_back();
    }
    if ((int)picked_cols.size() != r1) throw domain_error("decompose_relative: internal (r1)");
    IMat Y(m, r1);
    for (int i = 0; i < m; ++i)
        for (int jj = 0; jj < r1; ++jj) Y.at(i, jj) = A.at(i, picked_cols[jj]);
    RelativeDecomposition out;
    out.r0 = r0;
    out.r1 = r1;
    out.quotient = ff::FpQuadSpace(p, Y.congruent(L_gram));
    (void)d;
    return out;
}

}  // namespace lat
}  // namespace siegel
