#ifndef SIEGEL_SUITES_HPP
#define SIEGEL_SUITES_HPP

#include <string>
#include <vector>

#include "siegel/intmat.hpp"

namespace siegel {
namespace suites {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

// all even psd n x n Gram matrices with diagonal entries <= bound
std::vector<IMat> even_psd_grams(int n, long bound);

// deterministic GL_n(Z) samples (products of elementary matrices)
std::vector<IMat> unimodular_samples(int n, int count);

CriterionResult run_criterion(int id);

// suite names: gauss, lemmas, theta, eichler, jacobi, all
std::vector<int> criteria_of_suite(const std::string& name);
std::vector<CriterionResult> run_suite(const std::string& name);

}  // namespace suites
}  // namespace siegel

#endif
