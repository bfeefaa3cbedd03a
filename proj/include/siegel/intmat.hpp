#ifndef SIEGEL_INTMAT_HPP
#define SIEGEL_INTMAT_HPP

#include <initializer_list>
#include <vector>

#include "siegel/core.hpp"

namespace siegel {

// Dense matrices over Z and Q, sized for rank <= ~8 lattice work.

struct IMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Int(0)) {}
    IMat(int r, int c, std::initializer_list<long> vals);

    Int& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Int& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static IMat identity(int n);
    static IMat diag(const std::vector<Int>& d);

    bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool is_symmetric() const;
    bool is_zero() const;

    IMat transpose() const;
    IMat operator*(const IMat& o) const;
    IMat operator+(const IMat& o) const;
    IMat scaled(const Int& c) const;
    // t(this) * T * this, for T symmetric
    IMat congruent(const IMat& T) const;

    // total order, usable as a map key
    int cmp(const IMat& o) const;
    bool operator<(const IMat& o) const { return cmp(o) < 0; }

    std::string str() const;
};

struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Rat(0)) {}
    explicit QMat(const IMat& m);

    Rat& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Rat& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static QMat identity(int n);
    bool operator==(const QMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    QMat transpose() const;
    QMat operator*(const QMat& o) const;
    QMat scaled(const Rat& c) const;

    bool is_integral() const;
    IMat to_imat() const;  // requires is_integral()
};

Int det(const IMat& m);                 // Bareiss, fraction-free
Rat det(const QMat& m);                 // Gaussian elimination over Q
QMat inverse(const QMat& m);            // throws domain_error if singular
QMat inverse_of(const IMat& m);

// Canonical column Hermite normal form of the column module of M.
// Result is n x rank, in upper echelon shape: pivots walk up from the
// bottom-right; for full rank it is upper triangular with positive diagonal
// and entries to the right of each pivot reduced into [0, pivot).
IMat hnf_cols(const IMat& M);

// Like hnf_cols but also returns a unimodular V with M*V = [0 | H]
// (H occupying the last `rank` columns).
IMat hnf_cols_transform(const IMat& M, IMat& V);

// Smith normal form divisors d1 | d2 | ... (nonzero ones only);
// for square nonsingular input all n are returned.
std::vector<Int> snf_divisors(const IMat& M);

// Full SNF: returns D and unimodular U, V with M = U * D * V.
void snf_decompose(const IMat& M, IMat& U, IMat& D, IMat& V);

// Basis (as columns) of the intersection of the column modules of A and B.
// A, B must have full column rank spanning modules in the same Z^n.
IMat module_intersection(const IMat& A, const IMat& B);

// Basis of the saturation of the column module (QM ∩ Z^n); M full column rank.
IMat module_saturation(const IMat& M);

// Solve A X = B exactly where the columns of B lie in the column span of A
// over Q (A full column rank). Returns X with rational entries.
QMat solve_exact(const IMat& A, const IMat& B);

}  // namespace siegel

#endif
