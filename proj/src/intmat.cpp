#include "siegel/intmat.hpp"

#include <algorithm>
#include <sstream>

namespace siegel {

IMat::IMat(int r, int c, std::initializer_list<long> vals) : IMat(r, c) {
    if ((int)vals.size() != r * c) throw domain_error("IMat: initializer size mismatch");
    int k = 0;
    for (long v : vals) a[k++] = v;
}

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::diag(const std::vector<Int>& d) {
    IMat m((int)d.size(), (int)d.size());
    for (int i = 0; i < (int)d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool IMat::is_symmetric() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = i + 1; j < cols; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool IMat::is_zero() const {
    for (const Int& x : a)
        if (x != 0) return false;
    return true;
}

IMat IMat::transpose() const {
    IMat m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

IMat IMat::operator*(const IMat& o) const {
    if (cols != o.rows) throw domain_error("IMat multiply: shape mismatch");
    IMat m(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

IMat IMat::operator+(const IMat& o) const {
    if (rows != o.rows || cols != o.cols) throw domain_error("IMat add: shape mismatch");
    IMat m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
    return m;
}

IMat IMat::scaled(const Int& c) const {
    IMat m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * c;
    return m;
}

IMat IMat::congruent(const IMat& T) const { return transpose() * T * (*this); }

int IMat::cmp(const IMat& o) const {
    if (rows != o.rows) return rows < o.rows ? -1 : 1;
    if (cols != o.cols) return cols < o.cols ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = ::cmp(a[i], o.a[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string IMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

QMat::QMat(const IMat& m) : QMat(m.rows, m.cols) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = Rat(m.a[i]);
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMat QMat::transpose() const {
    QMat m(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols != o.rows) throw domain_error("QMat multiply: shape mismatch");
    QMat m(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rat& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols; ++j) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

QMat QMat::scaled(const Rat& c) const {
    QMat m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * c;
    return m;
}

bool QMat::is_integral() const {
    for (const Rat& x : a)
        if (x.get_den() != 1) return false;
    return true;
}

IMat QMat::to_imat() const {
    if (!is_integral()) throw domain_error("QMat::to_imat on non-integral matrix");
    IMat m(rows, cols);
    for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i].get_num();
    return m;
}

Int det(const IMat& m) {
    if (m.rows != m.cols) throw domain_error("det: non-square");
    int n = m.rows;
    if (n == 0) return 1;
    IMat w = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = t / prev;  // exact by Bareiss
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

Rat det(const QMat& m) {
    if (m.rows != m.cols) throw domain_error("det: non-square");
    int n = m.rows;
    QMat w = m;
    Rat d(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return Rat(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            d = -d;
        }
        d *= w.at(k, k);
        Rat inv = Rat(1) / w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            Rat f = w.at(i, k) * inv;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
        }
    }
    return d;
}

QMat inverse(const QMat& m) {
    if (m.rows != m.cols) throw domain_error("inverse: non-square");
    int n = m.rows;
    QMat w = m, inv = QMat::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) throw domain_error("inverse: singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Rat f = Rat(1) / w.at(k, k);
        for (int j = 0; j < n; ++j) { w.at(k, j) *= f; inv.at(k, j) *= f; }
        for (int i = 0; i < n; ++i) {
            if (i == k || w.at(i, k) == 0) continue;
            Rat g = w.at(i, k);
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= g * w.at(k, j);
                inv.at(i, j) -= g * inv.at(k, j);
            }
        }
    }
    return inv;
}

QMat inverse_of(const IMat& m) { return inverse(QMat(m)); }

namespace {

// In-place canonical column HNF with pivots from the bottom row up.
// Tracks column operations on V when V != nullptr (same column count).
void hnf_cols_inplace(IMat& M, IMat* V) {
    int n = M.rows, m = M.cols;
    auto colswap = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(M.at(r, i), M.at(r, j));
        if (V)
            for (int r = 0; r < V->rows; ++r) std::swap(V->at(r, i), V->at(r, j));
    };
    auto coladd = [&](int dst, int src, const Int& f) {  // col dst += f * col src
        for (int r = 0; r < n; ++r) M.at(r, dst) += f * M.at(r, src);
        if (V)
            for (int r = 0; r < V->rows; ++r) V->at(r, dst) += f * V->at(r, src);
    };
    auto colneg = [&](int j) {
        for (int r = 0; r < n; ++r) M.at(r, j) = -M.at(r, j);
        if (V)
            for (int r = 0; r < V->rows; ++r) V->at(r, j) = -V->at(r, j);
    };

    int pivot_col = m - 1;
    for (int row = n - 1; row >= 0 && pivot_col >= 0; --row) {
        // gcd-sweep columns 0..pivot_col so only pivot_col has a nonzero in `row`
        while (true) {
            int nz = -1;
            for (int j = 0; j < pivot_col; ++j)
                if (M.at(row, j) != 0) { nz = j; break; }
            if (nz < 0) break;
            if (M.at(row, pivot_col) == 0) {
                colswap(nz, pivot_col);
                continue;
            }
            // reduce the pair (pivot_col, nz) by a Euclidean step
            Int q = M.at(row, nz) / M.at(row, pivot_col);  // C++ truncation is fine here
            coladd(nz, pivot_col, -q);
            if (M.at(row, nz) != 0) colswap(nz, pivot_col);
        }
        if (M.at(row, pivot_col) == 0) continue;  // rank deficiency in this row
        if (M.at(row, pivot_col) < 0) colneg(pivot_col);
        // reduce entries to the right of the pivot into [0, pivot)
        for (int j = pivot_col + 1; j < m; ++j) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), M.at(row, j).get_mpz_t(), M.at(row, pivot_col).get_mpz_t());
            if (q != 0) coladd(j, pivot_col, -q);
        }
        --pivot_col;
    }
}

}  // namespace

IMat hnf_cols(const IMat& M) {
    IMat W = M;
    hnf_cols_inplace(W, nullptr);
    // keep the nonzero columns (they sit at the right)
    int first = 0;
    for (int j = 0; j < W.cols; ++j) {
        bool zero = true;
        for (int i = 0; i < W.rows; ++i)
            if (W.at(i, j) != 0) { zero = false; break; }
        if (zero) first = j + 1;
        else break;
    }
    IMat H(W.rows, W.cols - first);
    for (int i = 0; i < W.rows; ++i)
        for (int j = first; j < W.cols; ++j) H.at(i, j - first) = W.at(i, j);
    return H;
}

IMat hnf_cols_transform(const IMat& M, IMat& V) {
    IMat W = M;
    V = IMat::identity(M.cols);
    hnf_cols_inplace(W, &V);
    return W;
}

void snf_decompose(const IMat& M, IMat& U, IMat& D, IMat& V) {
    int n = M.rows, m = M.cols;
    D = M;
    U = IMat::identity(n);
    V = IMat::identity(m);
    // U, V are maintained so that M = U * D * V at every step: a row operation
    // E applied to D is compensated by U := U * E^{-1}, likewise for columns.
    auto rowswap = [&](int i, int j) {
        for (int c = 0; c < m; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (int r = 0; r < n; ++r) std::swap(U.at(r, i), U.at(r, j));
    };
    auto rowadd = [&](int dst, int src, const Int& f) {
        for (int c = 0; c < m; ++c) D.at(dst, c) += f * D.at(src, c);
        for (int r = 0; r < n; ++r) U.at(r, src) -= f * U.at(r, dst);
    };
    auto rowneg = [&](int i) {
        for (int c = 0; c < m; ++c) D.at(i, c) = -D.at(i, c);
        for (int r = 0; r < n; ++r) U.at(r, i) = -U.at(r, i);
    };
    auto colswap = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (int c = 0; c < m; ++c) std::swap(V.at(i, c), V.at(j, c));
    };
    auto coladd = [&](int dst, int src, const Int& f) {
        for (int r = 0; r < n; ++r) D.at(r, dst) += f * D.at(r, src);
        for (int c = 0; c < m; ++c) V.at(src, c) -= f * V.at(dst, c);
    };

    int t = 0;
    while (t < n && t < m) {
        // find a nonzero pivot
        int pi = -1, pj = -1;
        for (int i = t; i < n && pi < 0; ++i)
            for (int j = t; j < m; ++j)
                if (D.at(i, j) != 0) { pi = i; pj = j; break; }
        if (pi < 0) break;
        rowswap(t, pi);
        colswap(t, pj);
        while (true) {
            bool clean = true;
            for (int i = t + 1; i < n; ++i)
                if (D.at(i, t) != 0) {
                    Int q = D.at(i, t) / D.at(t, t);
                    rowadd(i, t, -q);
                    if (D.at(i, t) != 0) { rowswap(t, i); clean = false; }
                }
            for (int j = t + 1; j < m; ++j)
                if (D.at(t, j) != 0) {
                    Int q = D.at(t, j) / D.at(t, t);
                    coladd(j, t, -q);
                    if (D.at(t, j) != 0) { colswap(t, j); clean = false; }
                }
            if (clean) break;
        }
        if (D.at(t, t) < 0) rowneg(t);
        ++t;
    }
    // enforce divisibility d_i | d_{i+1}
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i + 1 < t; ++i) {
            if (D.at(i + 1, i + 1) % D.at(i, i) == 0) continue;
            changed = true;
            // fold d_{i+1} into position i via one row add, then re-reduce the 2x2 block
            rowadd(i, i + 1, 1);
            while (true) {
                bool clean = true;
                if (D.at(i + 1, i) != 0) {
                    Int q = D.at(i + 1, i) / D.at(i, i);
                    rowadd(i + 1, i, -q);
                    if (D.at(i + 1, i) != 0) { rowswap(i, i + 1); clean = false; }
                }
                if (D.at(i, i + 1) != 0) {
                    Int q = D.at(i, i + 1) / D.at(i, i);
                    coladd(i + 1, i, -q);
                    if (D.at(i, i + 1) != 0) { colswap(i, i + 1); clean = false; }
                }
                if (clean) break;
            }
            if (D.at(i, i) < 0) rowneg(i);
            if (D.at(i + 1, i + 1) < 0) rowneg(i + 1);
        }
    }
}

std::vector<Int> snf_divisors(const IMat& M) {
    IMat U, D, V;
    snf_decompose(M, U, D, V);
    std::vector<Int> out;
    for (int i = 0; i < std::min(D.rows, D.cols); ++i)
        if (D.at(i, i) != 0) out.push_back(D.at(i, i));
    return out;
}

IMat module_intersection(const IMat& A, const IMat& B) {
    if (A.rows != B.rows) throw domain_error("module_intersection: ambient mismatch");
    int n = A.rows;
    IMat K(n, A.cols + B.cols);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < A.cols; ++j) K.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) K.at(i, A.cols + j) = -B.at(i, j);
    }
    IMat V;
    IMat H = hnf_cols_transform(K, V);
    // kernel columns of K are those mapped to zero columns of H
    std::vector<int> kercols;
    for (int j = 0; j < H.cols; ++j) {
        bool zero = true;
        for (int i = 0; i < n; ++i)
            if (H.at(i, j) != 0) { zero = false; break; }
        if (zero) kercols.push_back(j);
    }
    IMat X(A.cols, (int)kercols.size());
    for (int i = 0; i < A.cols; ++i)
        for (int j = 0; j < (int)X.cols; ++j) X.at(i, j) = V.at(i, kercols[j]);
    return hnf_cols(A * X);
}

IMat module_saturation(const IMat& M) {
    IMat U, D, V;
    snf_decompose(M, U, D, V);
    int d = 0;
    for (int i = 0; i < std::min(D.rows, D.cols); ++i)
        if (D.at(i, i) != 0) ++d;
    IMat S(M.rows, d);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < d; ++j) S.at(i, j) = U.at(i, j);
    return hnf_cols(S);
}

QMat solve_exact(const IMat& A, const IMat& B) {
    // least-dimension exact solve via Gaussian elimination on [A | B]
    int n = A.rows, m = A.cols;
    QMat W(n, m + B.cols);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) W.at(i, j) = Rat(A.at(i, j));
        for (int j = 0; j < B.cols; ++j) W.at(i, m + j) = Rat(B.at(i, j));
    }
    std::vector<int> pivot_of_col(m, -1);
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (W.at(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < W.cols; ++j) std::swap(W.at(r, j), W.at(piv, j));
        Rat f = Rat(1) / W.at(r, c);
        for (int j = 0; j < W.cols; ++j) W.at(r, j) *= f;
        for (int i = 0; i < n; ++i) {
            if (i == r || W.at(i, c) == 0) continue;
            Rat g = W.at(i, c);
            for (int j = 0; j < W.cols; ++j) W.at(i, j) -= g * W.at(r, j);
        }
        pivot_of_col[c] = r;
        ++r;
    }
    // consistency: rows beyond rank must be zero on the B side
    for (int i = r; i < n; ++i)
        for (int j = 0; j < B.cols; ++j)
            if (W.at(i, m + j) != 0) throw domain_error("solve_exact: inconsistent system");
    QMat X(m, B.cols);
    for (int c = 0; c < m; ++c)
        if (pivot_of_col[c] >= 0)
            for (int j = 0; j < B.cols; ++j) X.at(c, j) = W.at(pivot_of_col[c], m + j);
    return X;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    Rat q;
    if (slash == std::string::npos)
        q = Rat(Int(s));
    else
        q = Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    q.canonicalize();
    return q;
}

}  // namespace siegel
