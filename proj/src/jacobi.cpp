#include "siegel/jacobi.hpp"

#include "siegel/gauss.hpp"

namespace siegel {
namespace jacobi {

using arith::ExactScalar;

namespace {

bool row_is_even(const IMat& R) {
    for (int j = 0; j < R.cols; ++j)
        if (R.at(0, j) % 2 != 0) return false;
    return true;
}

IMat bordered(const IMat& T, const IMat& R) {
    int n = T.rows;
    IMat B(n + 1, n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) B.at(i, j) = T.at(i, j);
    for (int j = 0; j < n; ++j) {
        B.at(n, j) = R.at(0, j);
        B.at(j, n) = R.at(0, j);
    }
    B.at(n, n) = 2;
    return B;
}

int chi_pow(int chi, long e) { return (e % 2 == 0) ? 1 : chi; }

}  // namespace

bool valid_index(const IMat& T, const IMat& R) {
    if (R.rows != 1 || R.cols != T.rows || !T.is_symmetric()) return false;
    IMat B = bordered(T, R);
    lat::GramMatrix g(B);
    return g.is_even() && lat::is_positive_semidefinite(QMat(B));
}

IMat sheared_gram(const IMat& T, const IMat& R) {
    if (!row_is_even(R)) throw domain_error("sheared_gram: R must be even");
    int n = T.rows;
    IMat out = T;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int ri = R.at(0, i) / 2, rj = R.at(0, j) / 2;
            out.at(i, j) -= 2 * ri * rj;
        }
    return out;
}

ExactScalar LiftedStore::coeff(const IMat& T, const IMat& R) const {
    if (!row_is_even(R)) return ExactScalar(Rat(0));
    return f_.coeff(QMat(sheared_gram(T, R)));
}

void MapStore::set(const IMat& T, const IMat& R, const ExactScalar& c) {
    if (even_) {
        if (!row_is_even(R)) {
            if (!(c == ExactScalar(Rat(0))))
                throw domain_error("MapStore: odd-glue entry in an even store");
            return;
        }
        m_[{sheared_gram(T, R), IMat(1, T.rows)}] = c;
        return;
    }
    m_[{T, R}] = c;
}

ExactScalar MapStore::coeff(const IMat& T, const IMat& R) const {
    std::pair<IMat, IMat> key{T, R};
    if (even_) {
        if (!row_is_even(R)) return ExactScalar(Rat(0));
        key = {sheared_gram(T, R), IMat(1, T.rows)};
    }
    auto it = m_.find(key);
    return it == m_.end() ? ExactScalar(Rat(0)) : it->second;
}

MapStore psi_projection(const MapStore& store) {
    MapStore out(store.degree(), store.even());
    for (const auto& [key, c] : store.entries())
        if (row_is_even(key.second)) out.set(key.first, key.second, c);
    return out;
}

ExactScalar psi_coeff(const JacobiSource& F, const IMat& T, const IMat& R) {
    if (!row_is_even(R)) return ExactScalar(Rat(0));
    return F.coeff(T, R);
}

Rat coeff_AJtilde(const lat::Sublattice& omega, const hecke::HeckeParams& pr) {
    pr.validate();
    if (pr.p_divides_level) throw domain_error("coeff_AJtilde: defined for p ndiv N");
    lat::GramMatrix L(omega.lambda_gram);
    if (!L.is_even() || !omega.is_even_integral()) return Rat(0);
    hecke::OmegaData d = hecke::omega_data(omega);
    if (d.r > pr.j) return Rat(0);
    ff::FpQuadSpace vd = omega.quotient_space().perp(ff::FpQuadSpace::line(pr.p, 2));
    ff::FpQuadSpace zero = ff::FpQuadSpace::zero_space(pr.p, pr.j - d.r);
    Int rs = ff::Rstar_indep(vd, zero);
    return Rat(chi_pow(pr.chi_prime_p, pr.j - d.r)) * rat_pow(pr.p, hecke::exponent_Ej(d, pr)) *
           rs;
}

ExactScalar coeff_AJ(const lat::Sublattice& omega, const hecke::HeckeParams& pr) {
    pr.validate();
    if (pr.p_divides_level) throw domain_error("coeff_AJ: defined for p ndiv N");
    lat::GramMatrix L(omega.lambda_gram);
    if (!L.is_even() || !omega.is_even_integral()) return ExactScalar(Rat(0));
    hecke::OmegaData d = hecke::omega_data(omega);
    if (d.r > pr.j) return ExactScalar(Rat(0));
    ff::FpQuadSpace vd = omega.quotient_space().perp(ff::FpQuadSpace::line(pr.p, 2));
    Rat cls_sum(0);
    for (const ff::SpaceClass& cls : ff::classes_of_dim(pr.p, pr.j - d.r)) {
        ff::FpQuadSpace rep = ff::class_representative(pr.p, cls);
        Int rs = ff::Rstar_indep(vd, rep);
        if (rs == 0) continue;
        cls_sum += Rat(rs) * gauss::alpha_prime(rep);
    }
    long e = (pr.k + 1) * (d.n2 - d.n0) + (long)d.n0 * (pr.n - d.n2 + 2);
    return ExactScalar(Rat(chi_pow(pr.chi_prime_p, pr.j - d.r)) * rat_pow(pr.p, e) * cls_sum);
}

ExactScalar apply_TJ(const JacobiSource& F, const IMat& T, const IMat& R,
                     const hecke::HeckeParams& pr, TJVariant variant) {
    pr.validate();
    if (pr.j == 0) return F.coeff(T, R);
    int n = pr.n;
    if (T.rows != n || R.cols != n) throw domain_error("apply_TJ: index shape mismatch");

    if (pr.p_divides_level) {
        // sum over index-p^j sublattices of the n-dimensional part, glue R H
        auto subs = lat::sublattices_between(T, pr.p, std::array<int, 3>{pr.j, n - pr.j, 0},
                                             false);
        ExactScalar acc(Rat(0));
        for (const auto& om : subs) {
            IMat Hp(n, n);  // om.H = p H' entrywise
            for (int i = 0; i < n; ++i)
                for (int jj = 0; jj < n; ++jj) Hp.at(i, jj) = om.H.at(i, jj) / pr.p;
            acc = acc + F.coeff(om.gram_omega.to_imat(), R * Hp);
        }
        return acc * rat_pow(pr.p, (long)pr.j * (n + 1 - pr.k));
    }

    if (!F.even()) throw domain_error("apply_TJ: p ndiv N path needs an even store");
    if (!row_is_even(R)) return ExactScalar(Rat(0));  // even forms stay even for p != 2
    IMat lam = sheared_gram(T, R);

    if (variant == TJVariant::ttilde_combination) {
        ExactScalar acc(Rat(0));
        for (int l = 0; l <= pr.j; ++l) {
            Rat b = arith::beta(n - l, pr.j - l, pr.p);
            if (b == 0) continue;
            hecke::HeckeParams sub = pr;
            sub.j = l;
            ExactScalar term = apply_TJ(F, lam, IMat(1, n), sub, TJVariant::tj);
            acc = acc + term * (b * chi_pow(pr.chi_prime_p, pr.j - l) *
                                rat_pow(pr.p, pr.j - l));
        }
        return acc * rat_pow(pr.p, (long)pr.j * (pr.k - n - 1));
    }

    auto subs = lat::sublattices_between(lam, pr.p, {}, true);
    ExactScalar acc(Rat(0));
    IMat zero_row(1, n);
    for (const auto& om : subs) {
        ExactScalar a = (variant == TJVariant::tj) ? coeff_AJ(om, pr)
                                                   : ExactScalar(coeff_AJtilde(om, pr));
        if (a == ExactScalar(Rat(0))) continue;
        acc = acc + a * F.coeff(om.gram_omega.to_imat(), zero_row);
    }
    return acc;
}

hecke::Report verify_thm74_coprime(const theta::CoefficientSource& f,
                                   const hecke::HeckeParams& pr,
                                   const std::vector<JacobiIndex>& indices) {
    if (pr.p_divides_level) throw domain_error("verify_thm74_coprime: wrong branch");
    LiftedStore F(f, pr.n);
    hecke::Report rep;
    for (const auto& [T, R] : indices) {
        ExactScalar lhs(Rat(0));
        if (row_is_even(R)) lhs = hecke::apply_Ttilde(f, sheared_gram(T, R), pr);
        ExactScalar rhs = apply_TJ(F, T, R, pr, TJVariant::ttilde_direct);
        ExactScalar rhs2 = apply_TJ(F, T, R, pr, TJVariant::ttilde_combination);
        bool ok = (lhs == rhs) && (lhs == rhs2);
        rep.record(ok, "(f|T~_j) theta = (f theta)|T~J_j at (" + T.str() + ", " + R.str() +
                           "): " + lhs.str() + " vs " + rhs.str());
    }
    return rep;
}

hecke::Report verify_thm74_dividing(const theta::CoefficientSource& f,
                                    const hecke::HeckeParams& pr,
                                    const std::vector<JacobiIndex>& indices) {
    if (!pr.p_divides_level) throw domain_error("verify_thm74_dividing: wrong branch");
    LiftedStore F(f, pr.n);
    hecke::Report rep;
    for (const auto& [T, R] : indices) {
        // p^{j/2} (f|T_j) theta, coefficientwise; zero at odd glue
        ExactScalar lhs(Rat(0));
        if (row_is_even(R))
            lhs = ExactScalar::half_power(pr.p, pr.j) *
                  hecke::apply_Tj(f, sheared_gram(T, R), pr);
        ExactScalar rhs = apply_TJ(F, T, R, pr, TJVariant::tj);
        if (pr.p == 2) rhs = row_is_even(R) ? rhs : ExactScalar(Rat(0));  // |psi
        bool ok = lhs == rhs;
        rep.record(ok, "p^{j/2}(f|T_j) theta = (f theta)|TJ_j" +
                           std::string(pr.p == 2 ? "|psi" : "") + " at (" + T.str() + ", " +
                           R.str() + "): " + lhs.str() + " vs " + rhs.str());
    }
    return rep;
}

}  // namespace jacobi
}  // namespace siegel
