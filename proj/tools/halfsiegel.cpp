// halfsiegel: exact computations with Hecke operators on half-integral weight
// Siegel modular form coefficients. All output is JSON on stdout; exit code 0
// on success/verified, 1 on verification failure, 2 on usage or domain errors.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "siegel/gauss.hpp"
#include "siegel/hecke.hpp"
#include "siegel/jacobi.hpp"
#include "siegel/json_io.hpp"
#include "siegel/suites.hpp"

using namespace siegel;

namespace {

struct Output {
    std::string out_path;
    int emit(const json& j, bool verified_ok = true) {
        std::string text = j.dump(2);
        std::cout << text << "\n";
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << text << "\n";
        }
        return verified_ok ? 0 : 1;
    }
};

json cyc_json(const CycInt& c) {
    json coeffs = json::array();
    for (const Int& x : c.coeffs()) coeffs.push_back(to_json(x));
    return json{{"conductor", c.conductor()}, {"coeffs", coeffs}};
}

json report_json(const hecke::Report& rep) {
    json lines = json::array();
    for (const auto& l : rep.lines) lines.push_back(l);
    return json{{"pass", rep.pass}, {"per_coefficient", lines}};
}

IMat parse_row(const std::string& text, int n) {
    json j = json::parse(text);
    IMat R(1, n);
    if ((int)j.size() != n) throw domain_error("row length mismatch");
    for (int i = 0; i < n; ++i) R.at(0, i) = int_from_json(j[i]);
    return R;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hecke-operator computations on half-integral weight Siegel forms"};
    app.require_subcommand(1);
    Output out;
    long cap = 100000000L;
    std::string cache_dir;
    app.add_option("--out", out.out_path, "also write the JSON result to this file");
    app.add_option("--cap", cap, "enumeration cap (iterations)");
    app.add_option("--cache-dir", cache_dir, "cache directory for theta coefficient tables");

    // ---- gauss ----
    auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sums: closed forms vs oracles");
    std::string g_gram;
    long g_p = 3;
    int g_r0 = 0, g_r1 = 0, g_r2 = 0, g_r3 = 0;
    long g_dety1 = 1;
    auto* gyd = gauss_cmd->add_subcommand("gyd", "block Gauss sum G_Y(D)");
    gyd->add_option("--p", g_p)->required();
    gyd->add_option("--r0", g_r0);
    gyd->add_option("--r1", g_r1);
    gyd->add_option("--r2", g_r2);
    gyd->add_option("--r3", g_r3);
    gyd->add_option("--det-y1", g_dety1, "determinant class of the Y1 block");
    auto* twisted = gauss_cmd->add_subcommand("twisted", "normalised twisted Gauss sum");
    twisted->add_option("--p", g_p)->required();
    twisted->add_option("--gram", g_gram)->required();
    auto* alpha = gauss_cmd->add_subcommand("alpha", "alpha and alpha' character sums");
    alpha->add_option("--p", g_p)->required();
    alpha->add_option("--gram", g_gram)->required();

    // ---- ff ----
    auto* ff_cmd = app.add_subcommand("ff", "quadratic spaces over F_p");
    std::string f_gram, f_sub;
    long f_p = 3;
    int f_t = 0, f_eps = 1;
    long f_l = 0;
    auto* classify = ff_cmd->add_subcommand("classify", "isometry class of a quadratic space");
    classify->add_option("--p", f_p)->required();
    classify->add_option("--gram", f_gram)->required();
    auto* rstar = ff_cmd->add_subcommand("rstar", "R*(V, W) subspace count");
    rstar->add_option("--p", f_p)->required();
    rstar->add_option("--gram", f_gram)->required();
    rstar->add_option("--sub", f_sub, "Gram matrix of W")->required();
    auto* iso = ff_cmd->add_subcommand("iso", "closed isotropic subspace count");
    iso->add_option("--p", f_p)->required();
    iso->add_option("--t", f_t, "regular rank")->required();
    iso->add_option("--eps", f_eps, "disc symbol +-1");
    iso->add_option("--l", f_l, "target dimension")->required();

    // ---- lattice ----
    auto* lat_cmd = app.add_subcommand("lattice", "integer lattices and sublattices");
    std::string l_gram, l_mat;
    long l_p = 3;
    int l_j = 1;
    std::vector<int> l_type;
    bool l_even = false;
    auto* level = lat_cmd->add_subcommand("level", "level of an even lattice");
    level->add_option("--gram", l_gram)->required();
    auto* snf = lat_cmd->add_subcommand("snf", "Smith invariants");
    snf->add_option("--matrix", l_mat)->required();
    auto* between = lat_cmd->add_subcommand("between", "sublattices pL <= O <= (1/p)L");
    between->add_option("--gram", l_gram)->required();
    between->add_option("--p", l_p)->required();
    between->add_option("--type", l_type, "n0 n1 n2 filter")->expected(3);
    between->add_flag("--even-only", l_even);
    auto* neigh = lat_cmd->add_subcommand("neighbors", "p^j-neighbours");
    neigh->add_option("--gram", l_gram)->required();
    neigh->add_option("--p", l_p)->required();
    neigh->add_option("--j", l_j)->required();

    // ---- theta ----
    auto* theta_cmd = app.add_subcommand("theta", "theta series coefficients");
    std::string t_gram, t_target;
    int t_n = 1;
    long t_bound = 4;
    auto* coeffs = theta_cmd->add_subcommand("coeffs", "coefficient table");
    coeffs->add_option("--gram", t_gram)->required();
    coeffs->add_option("--n", t_n)->required();
    coeffs->add_option("--bound", t_bound)->required();
    auto* repr = theta_cmd->add_subcommand("repr", "representation count");
    repr->add_option("--gram", t_gram)->required();
    repr->add_option("--target", t_target)->required();

    // ---- hecke ----
    auto* hecke_cmd = app.add_subcommand("hecke", "Hecke operators on coefficients");
    std::string h_gram, h_lambda, h_op = "ttilde", h_path = "direct", h_gamma = "0";
    long h_p = 3, h_k = 1;
    int h_j = 1, h_n = 1, h_chi = 1, h_a = 1;
    long h_bound = 8;
    auto* apply = hecke_cmd->add_subcommand("apply", "apply an operator to a theta source");
    apply->add_option("--gram", h_gram, "Gram matrix of the theta lattice")->required();
    apply->add_option("--lambda", h_lambda)->required();
    apply->add_option("--p", h_p)->required();
    apply->add_option("--j", h_j)->required();
    apply->add_option("--n", h_n)->required();
    apply->add_option("--op", h_op, "tj | ttilde | tprime");
    apply->add_option("--path", h_path, "direct | combination");
    auto* eig = hecke_cmd->add_subcommand("eigenvalue", "lambda_j(p^2) of Cor 4.4");
    eig->add_option("--k", h_k)->required();
    eig->add_option("--n", h_n)->required();
    eig->add_option("--j", h_j)->required();
    eig->add_option("--p", h_p)->required();
    eig->add_option("--chi", h_chi, "chi'(p) = +-1");
    auto* veich = hecke_cmd->add_subcommand("verify-eichler", "Eichler commutation check");
    veich->add_option("--gram", h_gram)->required();
    veich->add_option("--p", h_p)->required();
    veich->add_option("--j", h_j)->required();
    veich->add_option("--n", h_n)->required();
    veich->add_option("--bound", h_bound, "diagonal bound of target grams");
    auto* vann = hecke_cmd->add_subcommand("verify-annihilate", "theta|T'_{k+a} = 0 check");
    vann->add_option("--gram", h_gram)->required();
    vann->add_option("--p", h_p)->required();
    vann->add_option("--a", h_a)->required();
    vann->add_option("--n", h_n)->required();
    vann->add_option("--bound", h_bound);
    auto* bound = hecke_cmd->add_subcommand("bound", "eigenvalue bound exponent M");
    bound->add_option("--n", h_n)->required();
    bound->add_option("--j", h_j)->required();
    bound->add_option("--k", h_k)->required();
    bound->add_option("--gamma", h_gamma);

    // ---- jacobi ----
    auto* jac_cmd = app.add_subcommand("jacobi", "index-1 Jacobi form coefficients");
    std::string j_gram, j_T, j_R, j_variant = "ttilde", j_store;
    long j_p = 3;
    int j_j = 1, j_n = 1;
    auto* lift = jac_cmd->add_subcommand("lift", "coefficient of f * theta^{(n,1)}");
    lift->add_option("--gram", j_gram, "theta lattice of f")->required();
    lift->add_option("--n", j_n)->required();
    lift->add_option("--T", j_T)->required();
    lift->add_option("--R", j_R)->required();
    auto* psi = jac_cmd->add_subcommand("psi", "projection onto even Jacobi forms");
    psi->add_option("--store", j_store, "store JSON file")->required();
    auto* japply = jac_cmd->add_subcommand("apply", "apply T^J_j to the lift of a theta form");
    japply->add_option("--gram", j_gram)->required();
    japply->add_option("--n", j_n)->required();
    japply->add_option("--T", j_T)->required();
    japply->add_option("--R", j_R)->required();
    japply->add_option("--p", j_p)->required();
    japply->add_option("--j", j_j)->required();
    japply->add_option("--variant", j_variant, "tj | ttilde | combination");
    auto* jverify = jac_cmd->add_subcommand("verify", "Thm 7.4 operator relations");
    jverify->add_option("--gram", j_gram)->required();
    jverify->add_option("--p", j_p)->required();
    jverify->add_option("--j", j_j)->required();
    jverify->add_option("--n", j_n)->required();
    jverify->add_option("--bound", h_bound);

    // ---- suite ----
    auto* suite_cmd = app.add_subcommand("suite", "verification suites");
    std::string suite_name = "all";
    suite_cmd->add_option("name", suite_name, "gauss|lemmas|theta|eichler|jacobi|all");

    try {
        app.parse(argc, argv);

        if (gyd->parsed()) {
            gauss::BlockShape sh{g_r0, g_r1, g_r2, g_r3};
            long w = g_r1 > 0 && arith::jacobi_symbol(g_dety1, g_p) == -1
                         ? ff::least_nonresidue(g_p)
                         : 1;
            std::vector<Int> diag_y1(g_r1, Int(1));
            if (g_r1 > 0) diag_y1.back() = w;
            IMat Y1 = IMat::diag(diag_y1);
            IMat Y = gauss::assemble_block_y(g_p, sh, IMat(g_r0, g_r0), Y1, IMat(g_r0, g_r1),
                                             IMat(g_r0, g_r3));
            std::vector<Int> dd;
            for (int i = 0; i < g_r0; ++i) dd.push_back(1);
            for (int i = 0; i < g_r1; ++i) dd.push_back(g_p);
            for (int i = 0; i < g_r2; ++i) dd.push_back(g_p * g_p);
            for (int i = 0; i < g_r3; ++i) dd.push_back(1);
            auto closed = gauss::gyd_closed(g_p, sh, det(Y1));
            auto oracle = gauss::gyd_oracle(Y, IMat::diag(dd), g_p, cap);
            bool match = gauss::gyd_matches(closed, oracle);
            return out.emit(
                json{{"closed", to_json(closed)}, {"oracle", cyc_json(oracle)}, {"match", match}},
                match);
        }
        if (twisted->parsed()) {
            ff::FpQuadSpace V(g_p, parse_gram(g_gram));
            Rat closed = gauss::gtilde_closed(g_p, ff::classify(V));
            Rat oracle = gauss::gtilde_oracle(V, cap);
            bool match = closed == oracle;
            return out.emit(json{{"closed", rat_str(closed)},
                                 {"oracle", rat_str(oracle)},
                                 {"match", match}},
                            match);
        }
        if (alpha->parsed()) {
            ff::FpQuadSpace W(g_p, parse_gram(g_gram));
            Int closed = gauss::alpha_closed(W);
            Int oracle = gauss::alpha_oracle(W, cap);
            bool match = closed == oracle;
            return out.emit(json{{"closed", to_json(closed)},
                                 {"oracle", to_json(oracle)},
                                 {"alpha_prime", to_json(gauss::alpha_prime(W, cap))},
                                 {"match", match}},
                            match);
        }
        if (classify->parsed()) {
            ff::FpQuadSpace V(f_p, parse_gram(f_gram));
            auto cls = ff::classify(V);
            return out.emit(json{{"regular_rank", cls.regular_rank},
                                 {"radical_dim", cls.radical_dim},
                                 {"disc_is_square", cls.eps == 1}});
        }
        if (rstar->parsed()) {
            ff::FpQuadSpace V(f_p, parse_gram(f_gram)), W(f_p, parse_gram(f_sub));
            return out.emit(json{{"rstar", to_json(ff::Rstar(V, W))}});
        }
        if (iso->parsed()) {
            ff::SpaceClass cls{f_t, 0, f_eps};
            return out.emit(json{{"count", to_json(ff::iso_count_closed(cls, f_l, f_p))}});
        }
        if (level->parsed())
            return out.emit(json{{"level", to_json(lat::level_of(parse_gram(l_gram)))}});
        if (snf->parsed()) {
            json d = json::array();
            for (const Int& x : lat::snf_invariants(parse_gram(l_mat))) d.push_back(to_json(x));
            return out.emit(json{{"divisors", d}});
        }
        if (between->parsed()) {
            std::optional<std::array<int, 3>> type;
            if (!l_type.empty()) type = std::array<int, 3>{l_type[0], l_type[1], l_type[2]};
            auto subs = lat::sublattices_between(parse_gram(l_gram), l_p, type, l_even, cap);
            json arr = json::array();
            for (const auto& s : subs) arr.push_back(to_json(s));
            return out.emit(json{{"count", subs.size()}, {"sublattices", arr}});
        }
        if (neigh->parsed()) {
            IMat L = parse_gram(l_gram);
            auto ns = lat::neighbors(L, l_p, l_j, cap);
            json arr = json::array();
            for (const auto& K : ns) arr.push_back(to_json(K));
            Int formula = lat::neighbor_count_formula((L.rows - 1) / 2, l_j, l_p);
            return out.emit(json{{"count", ns.size()},
                                 {"formula", to_json(formula)},
                                 {"match", Int((long)ns.size()) == formula},
                                 {"neighbors", arr}},
                            Int((long)ns.size()) == formula);
        }
        if (coeffs->parsed()) {
            IMat Q = parse_gram(t_gram);
            json arr = json::array();
            std::string cache_file;
            if (!cache_dir.empty()) {
                std::hash<std::string> hasher;
                std::ostringstream key;
                key << Q.str() << "|" << t_n << "|" << t_bound;
                std::ostringstream name;
                name << "theta-" << std::hex << hasher(key.str()) << ".json";
                cache_file = (std::filesystem::path(cache_dir) / name.str()).string();
                if (std::filesystem::exists(cache_file)) {
                    std::ifstream f(cache_file);
                    json cached = json::parse(f);
                    return out.emit(cached);
                }
            }
            for (const auto& [T, c] : theta::coeff_table(Q, t_n, t_bound))
                arr.push_back(json{{"gram", to_json(T)}, {"c", rat_str(Rat(c))}});
            if (!cache_file.empty()) {
                std::filesystem::create_directories(cache_dir);
                std::ofstream f(cache_file);
                f << arr.dump(2) << "\n";
            }
            return out.emit(arr);
        }
        if (repr->parsed()) {
            Int c = theta::repr_count(parse_gram(t_gram), QMat(parse_gram(t_target)));
            return out.emit(json{{"count", to_json(c)}});
        }
        if (apply->parsed()) {
            theta::ThetaSource src(parse_gram(h_gram), h_n);
            hecke::HeckeParams pr = hecke::params_for_theta(src, h_p, h_j);
            IMat lam = parse_gram(h_lambda);
            arith::ExactScalar v;
            if (h_op == "tj") v = hecke::apply_Tj(src, lam, pr);
            else if (h_op == "tprime") v = hecke::apply_Tprime(src, lam, pr);
            else
                v = hecke::apply_Ttilde(src, lam, pr,
                                        h_path == "combination" ? hecke::TtildePath::combination
                                                                : hecke::TtildePath::direct);
            return out.emit(json{{"value", to_json(v)}});
        }
        if (eig->parsed()) {
            hecke::HeckeParams pr;
            pr.p = h_p;
            pr.j = h_j;
            pr.k = h_k;
            pr.n = h_n;
            pr.chi_prime_p = h_chi;
            return out.emit(json{{"lambda", rat_str(hecke::lambda_j(pr))}});
        }
        if (veich->parsed()) {
            auto rep = hecke::verify_eichler(parse_gram(h_gram), h_p, h_j, h_n,
                                             suites::even_psd_grams(h_n, h_bound));
            return out.emit(report_json(rep), rep.pass);
        }
        if (vann->parsed()) {
            auto rep = hecke::verify_annihilation(parse_gram(h_gram), h_p, h_a, h_n,
                                                  suites::even_psd_grams(h_n, h_bound));
            return out.emit(report_json(rep), rep.pass);
        }
        if (bound->parsed()) {
            Rat M = hecke::exponent_M(h_n, h_j, h_k, parse_rat(h_gamma));
            return out.emit(json{{"M", rat_str(M)}});
        }
        if (lift->parsed()) {
            theta::ThetaSource src(parse_gram(j_gram), j_n);
            jacobi::LiftedStore F(src, j_n);
            IMat T = parse_gram(j_T), R = parse_row(j_R, j_n);
            return out.emit(json{{"c", to_json(F.coeff(T, R))}});
        }
        if (psi->parsed()) {
            std::ifstream f(j_store);
            if (!f) throw domain_error("jacobi psi: cannot open " + j_store);
            json in = json::parse(f);
            json outp = json::array();
            for (const auto& e : in) {
                IMat R = imat_from_json(json::array({e.at("R")}));
                bool even = true;
                for (int i = 0; i < R.cols; ++i)
                    if (R.at(0, i) % 2 != 0) even = false;
                if (even) outp.push_back(e);
            }
            return out.emit(outp);
        }
        if (japply->parsed()) {
            theta::ThetaSource src(parse_gram(j_gram), j_n);
            jacobi::LiftedStore F(src, j_n);
            hecke::HeckeParams pr = hecke::params_for_theta(src, j_p, j_j);
            jacobi::TJVariant v = jacobi::TJVariant::ttilde_direct;
            if (j_variant == "tj") v = jacobi::TJVariant::tj;
            if (j_variant == "combination") v = jacobi::TJVariant::ttilde_combination;
            auto val = jacobi::apply_TJ(F, parse_gram(j_T), parse_row(j_R, j_n), pr, v);
            return out.emit(json{{"value", to_json(val)}});
        }
        if (jverify->parsed()) {
            theta::ThetaSource src(parse_gram(j_gram), j_n);
            hecke::HeckeParams pr = hecke::params_for_theta(src, j_p, j_j);
            std::vector<jacobi::JacobiIndex> indices;
            for (const IMat& T : suites::even_psd_grams(j_n, h_bound)) {
                IMat R0(1, j_n), R1(1, j_n);
                R1.at(0, 0) = 2;
                for (const IMat& R : {R0, R1})
                    if (jacobi::valid_index(T, R)) indices.push_back({T, R});
            }
            auto rep = pr.p_divides_level ? jacobi::verify_thm74_dividing(src, pr, indices)
                                          : jacobi::verify_thm74_coprime(src, pr, indices);
            return out.emit(report_json(rep), rep.pass);
        }
        if (suite_cmd->parsed()) {
            auto results = suites::run_suite(suite_name);
            bool pass = true;
            json arr = json::array();
            for (const auto& res : results) {
                pass = pass && res.pass;
                arr.push_back(json{{"id", res.id},
                                   {"name", res.name},
                                   {"pass", res.pass},
                                   {"seconds", res.seconds},
                                   {"detail", res.detail}});
            }
            return out.emit(json{{"pass", pass}, {"criteria", arr}}, pass);
        }
        std::cerr << app.help() << "\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const domain_error& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const cap_error& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const coverage_error& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 2;
    }
}
