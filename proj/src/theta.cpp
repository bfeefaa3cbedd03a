#include "siegel/theta.hpp"

#include <algorithm>
#include <functional>

namespace siegel {
namespace theta {

namespace {

// floor(q + sqrt(s2)) for rational q and s2 >= 0, exactly
long floor_q_plus_sqrt(const Rat& q, const Rat& s2) {
    if (s2 < 0) throw domain_error("floor_q_plus_sqrt: negative radicand");
    Int a = q.get_num(), b = q.get_den();
    Int u = s2.get_num(), w = s2.get_den();
    Int x = isqrt(b * b * u * w);
    Int out;
    Int num = a * w + x, den = b * w;
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out.get_si();
}

long ceil_q_minus_sqrt(const Rat& q, const Rat& s2) { return -floor_q_plus_sqrt(-q, s2); }

}  // namespace

VectorEnumerator::VectorEnumerator(const IMat& Q) : Q_(Q), m_(Q.rows) {
    lat::GramMatrix g(Q);
    if (!g.is_even()) throw domain_error("VectorEnumerator: Q must be even integral");
    if (!g.is_positive_definite()) throw domain_error("VectorEnumerator: Q must be positive definite");
    // LDL^t: Q[v] = sum_i D_i (v_i + sum_{j>i} R_ij v_j)^2
    QMat A(Q);
    D_.assign(m_, Rat(0));
    R_.assign(m_, std::vector<Rat>(m_, Rat(0)));
    for (int i = 0; i < m_; ++i) {
        D_[i] = A.at(i, i);
        for (int j = i + 1; j < m_; ++j) R_[i][j] = A.at(i, j) / D_[i];
        for (int j = i + 1; j < m_; ++j)
            for (int k = i + 1; k < m_; ++k) A.at(j, k) -= A.at(j, i) * A.at(i, k) / D_[i];
    }
}

const std::vector<std::vector<long>>& VectorEnumerator::vectors_with_norm(const Int& t) const {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    std::vector<std::vector<long>> out;
    if (t >= 0) {
        std::vector<long> v(m_, 0);
        // descend coordinates m-1 .. 0, tracking the remaining budget
        std::function<void(int, const Rat&)> rec = [&](int i, const Rat& rem) {
            if (i < 0) {
                if (rem == 0) out.push_back(v);
                return;
            }
            Rat c(0);
            for (int j = i + 1; j < m_; ++j)
                if (v[j]) c += R_[i][j] * v[j];
            Rat s2 = rem / D_[i];
            long lo = ceil_q_minus_sqrt(-c, s2), hi = floor_q_plus_sqrt(-c, s2);
            for (long x = lo; x <= hi; ++x) {
                v[i] = x;
                Rat term = (c + x) * (c + x) * D_[i];
                rec(i - 1, rem - term);
            }
            v[i] = 0;
        };
        rec(m_ - 1, Rat(t));
    }
    return cache_.emplace(t, std::move(out)).first->second;
}

namespace {

// shared column DFS for counting/enumerating C with tC Q C = T
void repr_walk(const VectorEnumerator& en, const IMat& T,
               const std::function<void(const std::vector<const std::vector<long>*>&)>& emit) {
    int n = T.rows, m = en.rank();
    std::vector<const std::vector<long>*> chosen(n, nullptr);
    // w[h] = tv_h Q, maintained for chosen columns
    std::vector<std::vector<Int>> w(n, std::vector<Int>(m));
    std::function<void(int)> rec = [&](int col) {
        if (col == n) {
            emit(chosen);
            return;
        }
        for (const auto& v : en.vectors_with_norm(T.at(col, col))) {
            bool ok = true;
            for (int h = 0; h < col && ok; ++h) {
                Int dot = 0;
                for (int r = 0; r < m; ++r)
                    if (v[r]) dot += w[h][r] * v[r];
                if (dot != T.at(h, col)) ok = false;
            }
            if (!ok) continue;
            chosen[col] = &v;
            for (int r = 0; r < m; ++r) {
                Int acc = 0;
                for (int s = 0; s < m; ++s)
                    if (v[s]) acc += en.gram().at(s, r) * v[s];
                w[col][r] = acc;
            }
            rec(col + 1);
        }
        chosen[col] = nullptr;
    };
    rec(0);
}

bool valid_support(const QMat& T) {
    if (T.rows != T.cols) return false;
    for (int i = 0; i < T.rows; ++i)
        for (int j = i + 1; j < T.cols; ++j)
            if (T.at(i, j) != T.at(j, i)) return false;
    if (!lat::is_even_integral(T)) return false;
    if (!lat::is_positive_semidefinite(T)) return false;
    return true;
}

}  // namespace

Int repr_count(const IMat& Q, const QMat& T) {
    if (!valid_support(T)) return 0;
    VectorEnumerator en(Q);
    Int count = 0;
    repr_walk(en, T.to_imat(), [&](const auto&) { ++count; });
    return count;
}

std::vector<IMat> repr_enumerate(const IMat& Q, const QMat& T) {
    std::vector<IMat> out;
    if (!valid_support(T)) return out;
    VectorEnumerator en(Q);
    IMat Ti = T.to_imat();
    repr_walk(en, Ti, [&](const std::vector<const std::vector<long>*>& cols) {
        IMat C(Q.rows, Ti.rows);
        for (int j = 0; j < Ti.rows; ++j)
            for (int i = 0; i < Q.rows; ++i) C.at(i, j) = (*cols[j])[i];
        out.push_back(std::move(C));
    });
    return out;
}

std::map<IMat, Int> coeff_table(const IMat& Q, int n, long bound) {
    if (bound < 0) throw domain_error("coeff_table: bound must be >= 0");
    if (n > 4) throw cap_error("coeff_table: degree too large");
    std::map<IMat, Int> out;
    VectorEnumerator en(Q);
    // odometer over diagonal entries (0..bound even) and admissible off-diagonals
    std::vector<long> diag(n, 0);
    std::function<void(int, IMat&)> fill_offdiag;
    auto emit = [&](const IMat& T) {
        QMat Tq{T};
        if (!lat::is_positive_semidefinite(Tq)) return;
        Int c = 0;
        repr_walk(en, T, [&](const auto&) { ++c; });
        out.emplace(T, c);
    };
    std::vector<std::pair<int, int>> off;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) off.push_back({i, j});
    std::function<void(size_t, IMat&)> rec_off = [&](size_t k, IMat& T) {
        if (k == off.size()) {
            emit(T);
            return;
        }
        auto [i, j] = off[k];
        Int lim = isqrt(T.at(i, i) * T.at(j, j));
        for (Int x = -lim; x <= lim; ++x) {
            T.at(i, j) = T.at(j, i) = x;
            rec_off(k + 1, T);
        }
        T.at(i, j) = T.at(j, i) = 0;
    };
    while (true) {
        IMat T(n, n);
        for (int i = 0; i < n; ++i) T.at(i, i) = diag[i];
        rec_off(0, T);
        int k = 0;
        while (k < n && (diag[k] += 2) > bound) diag[k++] = 0;
        if (k == n) break;
        if (n == 0) break;
    }
    if (n == 0) out.emplace(IMat(0, 0), Int(1));
    return out;
}

ThetaSource::ThetaSource(const IMat& Q, int degree) : enumerator_(Q), n_(degree) {
    if (Q.rows % 2 == 0) throw domain_error("ThetaSource: lattice rank must be odd");
    k_ = (Q.rows - 1) / 2;
    level_ = lat::level_of(Q);
}

Int ThetaSource::repr(const QMat& gram) const {
    if (!valid_support(gram)) return 0;
    IMat key = gram.to_imat();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Int c = 0;
    repr_walk(enumerator_, key, [&](const auto&) { ++c; });
    return cache_.emplace(std::move(key), std::move(c)).first->second;
}

arith::ExactScalar ThetaSource::coeff(const QMat& gram) const {
    return arith::ExactScalar(Rat(repr(gram)));
}

arith::CharacterData ThetaSource::character() const {
    return arith::CharacterData(k_, Int(2) * det(enumerator_.gram()));
}

arith::ExactScalar TableSource::coeff(const QMat& gram) const {
    if (!valid_support(gram)) return arith::ExactScalar(Rat(0));
    IMat key = gram.to_imat();
    auto it = table_.find(key);
    if (it != table_.end()) return arith::ExactScalar(it->second);
    if (policy_ == TablePolicy::zero_outside) return arith::ExactScalar(Rat(0));
    throw coverage_error("TableSource: coefficient not in table: " + key.str());
}

}  // namespace theta
}  // namespace siegel
