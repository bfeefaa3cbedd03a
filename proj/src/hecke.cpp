#include "siegel/hecke.hpp"

#include "siegel/gauss.hpp"

namespace siegel {
namespace hecke {

using arith::ExactScalar;

void HeckeParams::validate() const {
    if (!is_prime(p)) throw domain_error("HeckeParams: p must be prime");
    if (j < 0 || j > n) throw domain_error("HeckeParams: need 0 <= j <= n");
    if (!p_divides_level && chi_prime_p != 1 && chi_prime_p != -1)
        throw domain_error("HeckeParams: chi'(p) must be +-1");
}

OmegaData omega_data(const lat::Sublattice& sub) {
    OmegaData d;
    d.n0 = sub.type[0];
    d.n1 = sub.type[1];
    d.n2 = sub.type[2];
    d.r = d.n0 + d.n2;
    if (sub.is_integral()) d.quotient_class = ff::classify(sub.quotient_space());
    return d;
}

long exponent_Ej(const OmegaData& d, const HeckeParams& pr) {
    if (d.r > pr.j) throw domain_error("exponent_Ej: r > j");
    long jr = pr.j - d.r;
    return (long)pr.j * (pr.k - pr.n) + pr.k * (d.n2 - d.n0) + (long)d.n0 * (pr.n - d.n2) +
           jr * (jr - 1) / 2;
}

namespace {
int chi_pow(int chi, long e) { return (e % 2 == 0) ? 1 : chi; }
}  // namespace

Rat coeff_Atilde(const lat::Sublattice& omega, const HeckeParams& pr) {
    pr.validate();
    if (pr.p_divides_level) throw domain_error("coeff_Atilde: defined for p ndiv N");
    lat::GramMatrix L(omega.lambda_gram);
    if (!L.is_even() || !omega.is_even_integral()) return Rat(0);
    OmegaData d = omega_data(omega);
    if (d.r > pr.j) return Rat(0);
    ff::FpQuadSpace V = omega.quotient_space();
    Int rs = ff::Rstar_perp2_zero(V, pr.j - d.r);
    return Rat(chi_pow(pr.chi_prime_p, pr.j - d.r)) * rat_pow(pr.p, exponent_Ej(d, pr)) * rs;
}

ExactScalar coeff_A_thm24(const lat::Sublattice& omega, const HeckeParams& pr) {
    pr.validate();
    if (pr.p_divides_level) throw domain_error("coeff_A_thm24: defined for p ndiv N");
    lat::GramMatrix L(omega.lambda_gram);
    if (!L.is_even() || !omega.is_even_integral()) return ExactScalar(Rat(0));
    OmegaData d = omega_data(omega);
    if (d.r > pr.j) return ExactScalar(Rat(0));
    ff::FpQuadSpace V = omega.quotient_space();
    Rat cls_sum(0);
    for (const ff::SpaceClass& cls : ff::classes_of_dim(pr.p, pr.j - d.r)) {
        Int rs = ff::Rstar(V, ff::class_representative(pr.p, cls));
        if (rs == 0) continue;
        cls_sum += Rat(rs) * gauss::gtilde_closed(pr.p, cls);
    }
    long e = pr.k * (d.n2 - d.n0) + (long)d.n0 * (pr.n - d.n2);
    ExactScalar scale = ExactScalar::half_power(pr.p, pr.j) *
                        rat_pow(pr.p, e) * Rat(chi_pow(pr.chi_prime_p, pr.j - d.r));
    return scale * cls_sum;
}

ExactScalar apply_Tj(const theta::CoefficientSource& src, const IMat& lambda,
                     const HeckeParams& pr) {
    pr.validate();
    if (pr.j == 0) return src.coeff(QMat(lambda));  // T_0(p^2) is the identity
    if (pr.p_divides_level) {
        // p | N: sum over index-p^j sublattices of Lambda
        auto subs = lat::sublattices_between(
            lambda, pr.p, std::array<int, 3>{pr.j, pr.n - pr.j, 0}, false);
        ExactScalar acc(Rat(0));
        for (const auto& om : subs) acc = acc + src.coeff(om.gram_omega);
        return ExactScalar::half_power(pr.p, (long)pr.j * (2 * (pr.n - pr.k) + 1)) * acc;
    }
    auto subs = lat::sublattices_between(lambda, pr.p, {}, true);
    ExactScalar acc(Rat(0));
    for (const auto& om : subs) acc = acc + coeff_A_thm24(om, pr) * src.coeff(om.gram_omega);
    return acc;
}

ExactScalar apply_Ttilde(const theta::CoefficientSource& src, const IMat& lambda,
                         const HeckeParams& pr, TtildePath path) {
    pr.validate();
    if (pr.p_divides_level) throw domain_error("apply_Ttilde: defined for p ndiv N");
    if (pr.j == 0) return src.coeff(QMat(lambda));
    if (path == TtildePath::direct) {
        auto subs = lat::sublattices_between(lambda, pr.p, {}, true);
        ExactScalar acc(Rat(0));
        for (const auto& om : subs) {
            Rat a = coeff_Atilde(om, pr);
            if (a == 0) continue;
            acc = acc + src.coeff(om.gram_omega) * a;
        }
        return acc;
    }
    // p^{j(k-n)} sum_l p^{-l/2} chi'(p^{j-l}) beta(n-l, j-l) T_l(p^2)
    ExactScalar acc(Rat(0));
    for (int l = 0; l <= pr.j; ++l) {
        Rat b = arith::beta(pr.n - l, pr.j - l, pr.p);
        if (b == 0) continue;
        HeckeParams sub = pr;
        sub.j = l;
        ExactScalar term = apply_Tj(src, lambda, sub);
        term = term * ExactScalar::half_power(pr.p, -l);
        term = term * (b * chi_pow(pr.chi_prime_p, pr.j - l));
        acc = acc + term;
    }
    return acc * rat_pow(pr.p, (long)pr.j * (pr.k - pr.n));
}

Rat uq(long q, const HeckeParams& pr) {
    Rat v = rat_pow(pr.p, q * (q - 1) / 2) * arith::beta(pr.n - pr.j + q, q, pr.p);
    return (q % 2 == 0) ? v : -v;
}

ExactScalar apply_Tprime(const theta::CoefficientSource& src, const IMat& lambda,
                         const HeckeParams& pr) {
    pr.validate();
    ExactScalar acc(Rat(0));
    for (long q = 0; q <= pr.j; ++q) {
        Rat u = uq(q, pr);
        if (u == 0) continue;
        HeckeParams sub = pr;
        sub.j = pr.j - (int)q;
        acc = acc + apply_Ttilde(src, lambda, sub) * u;
    }
    return acc;
}

Rat vq(long q, const HeckeParams& pr) {
    Rat v;
    if (pr.chi_prime_p == 1)
        v = arith::beta(pr.k - pr.n + q - 1, q, pr.p) * arith::delta(pr.k - pr.j + q, q, pr.p);
    else
        v = arith::delta(pr.k - pr.n + q - 1, q, pr.p) * arith::beta(pr.k - pr.j + q, q, pr.p);
    return (q % 2 == 0) ? v : -v;
}

Rat lambda_j(const HeckeParams& pr) {
    pr.validate();
    if (pr.j < 1 || pr.j > pr.k) throw domain_error("lambda_j: need 1 <= j <= k");
    Rat tail = (pr.chi_prime_p == 1) ? arith::delta(pr.k, pr.j, pr.p)
                                     : arith::mu(pr.k, pr.j, pr.p);
    return rat_pow(pr.p, (long)pr.j * (pr.j - 1) / 2 + (long)pr.j * (pr.k - pr.n)) *
           arith::beta(pr.n, pr.j, pr.p) * tail;
}

OmegaTheta omega_theta_data(const IMat& L_gram, const IMat& C, long p, int n_formal) {
    lat::RelativeDecomposition dec = lat::decompose_relative(L_gram, C, p);
    OmegaTheta om;
    om.r0 = dec.r0;
    om.r1 = dec.r1;
    om.r2 = n_formal - dec.r0 - dec.r1;
    if (om.r2 < 0) throw domain_error("omega_theta_data: formal rank too small");
    om.quotient = dec.quotient;
    return om;
}

Rat theta_cj_closed(const OmegaTheta& om, const HeckeParams& pr) {
    pr.validate();
    using arith::beta;
    using arith::delta;
    using arith::mu;
    Rat total(0);
    for (long l = 0; l <= om.r1; ++l) {
        Int rs = ff::Rstar_perp2_zero(om.quotient, l);
        if (rs == 0) continue;
        for (long t = 0; t <= om.r2; ++t) {
            Rat bt = beta(om.r2, t, pr.p);
            if (bt == 0) continue;
            Rat body = (pr.chi_prime_p == 1) ? delta(pr.k - om.r0 - l, t, pr.p)
                                             : mu(pr.k - om.r0 - l, t, pr.p);
            Rat bn = beta(pr.n - om.r0 - l - t, pr.n - pr.j, pr.p);
            if (bn == 0) continue;
            long E = t * (pr.k - pr.n) + t * (t - 1) / 2 + l * (pr.k - om.r0 - om.r1) +
                     l * (l - 1) / 2;
            Rat term = rat_pow(pr.p, E) * Rat(rs) * body * bt * bn;
            if (pr.chi_prime_p == -1 && l % 2 == 1) term = -term;
            total += term;
        }
    }
    return total;
}

Rat theta_bj_closed(const OmegaTheta& om, const HeckeParams& pr) {
    pr.validate();
    using arith::beta;
    using arith::delta;
    if (om.r0 > pr.j) return Rat(0);
    Rat total(0);
    for (long l = 0; l <= pr.j - om.r0; ++l) {
        Int rs = ff::Rstar_perp2_zero(om.quotient, l);
        if (rs == 0) continue;
        Rat tail = (pr.chi_prime_p == 1)
                       ? delta(pr.k - om.r0 - l, pr.j - om.r0 - l, pr.p) *
                             beta(pr.k - om.r0 - om.r1, pr.j - om.r0 - l, pr.p)
                       : beta(pr.k - om.r0 - l, pr.j - om.r0 - l, pr.p) *
                             delta(pr.k - om.r0 - om.r1, pr.j - om.r0 - l, pr.p);
        Rat term = rat_pow(pr.p, l * (pr.k - pr.j - om.r1 + l)) * Rat(rs) * tail;
        if (pr.chi_prime_p == -1 && l % 2 == 1) term = -term;
        total += term;
    }
    long pre = ((long)pr.j - om.r0) * ((long)pr.j - om.r0 - 1) / 2;
    return rat_pow(pr.p, pre) * total;
}

Rat exponent_M(int n, int j, long k, const Rat& gamma) {
    if (gamma < 0) throw domain_error("exponent_M: gamma must be >= 0");
    Rat jk = Rat((long)j * (k - n));
    if (gamma == 0) {
        Rat t = Rat(j + n) + make_rat(1, 2);
        return t * t / 4 + jk;
    }
    Rat a = Rat(j + n) - 2 * gamma + make_rat(1, 2);
    Rat b = Rat(j - n) + 2 * gamma - 1;
    return a * a / 4 + b * b / 6 + jk;
}

void Report::record(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
}

HeckeParams params_for_theta(const theta::ThetaSource& src, long p, int j) {
    HeckeParams pr;
    pr.p = p;
    pr.j = j;
    pr.k = src.weight_k();
    pr.n = src.degree();
    pr.p_divides_level = (src.level() % p == 0);
    if (!pr.p_divides_level) pr.chi_prime_p = arith::chi_prime_at(src.character(), p);
    return pr;
}

Report verify_eichler(const IMat& L_gram, long p, int j, int n,
                      const std::vector<IMat>& targets) {
    theta::ThetaSource src(L_gram, n);
    HeckeParams pr = params_for_theta(src, p, j);
    if (pr.p_divides_level) throw domain_error("verify_eichler: p divides the level");
    if (j > pr.k) throw domain_error("verify_eichler: need j <= k");
    // neighbour theta sources per distance q, hoisted out of the target loop
    std::vector<std::vector<theta::ThetaSource>> neighbor_sources(j + 1);
    for (int q = 0; q <= j; ++q) {
        if (j - q == 0) {
            neighbor_sources[q].emplace_back(L_gram, n);
            continue;
        }
        for (const IMat& K : lat::neighbors(L_gram, p, j - q))
            neighbor_sources[q].emplace_back(K, n);
    }
    Report rep;
    for (const IMat& lam : targets) {
        ExactScalar lhs = apply_Tprime(src, lam, pr);
        Rat rhs(0);
        for (int q = 0; q <= j; ++q) {
            HeckeParams qp = pr;
            Rat v = vq(q, qp);
            if (v == 0) continue;
            Rat sum(0);
            for (const auto& ns : neighbor_sources[q]) sum += ns.repr(QMat(lam));
            rhs += v * sum;
        }
        bool ok = lhs.is_rational() && lhs.rat() == rhs;
        rep.record(ok, "eichler at " + lam.str() + ": T' = " + lhs.str() +
                           ", neighbour sum = " + rat_str(rhs));
    }
    return rep;
}

Report verify_annihilation(const IMat& L_gram, long p, int a, int n,
                           const std::vector<IMat>& targets) {
    theta::ThetaSource src(L_gram, n);
    long k = src.weight_k();
    if (a < 1 || a > n - k) throw domain_error("verify_annihilation: need 1 <= a <= n-k");
    HeckeParams pr = params_for_theta(src, p, (int)(k + a));
    if (pr.p_divides_level) throw domain_error("verify_annihilation: p divides the level");
    Report rep;
    for (const IMat& lam : targets) {
        ExactScalar v = apply_Tprime(src, lam, pr);
        bool ok = v.is_rational() && v.rat() == 0;
        rep.record(ok, "T'_{k+a} coefficient at " + lam.str() + " = " + v.str());
    }
    return rep;
}

}  // namespace hecke
}  // namespace siegel
