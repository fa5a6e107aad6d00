#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "k2ff/euler_products.hpp"
#include "k2ff/lfunction.hpp"
#include "k2ff/report.hpp"

namespace k2ff {

struct ExperimentOptions {
    int workers = 1;
    std::uint64_t work_budget = 1'000'000'000; // estimated symbol evaluations
    bool use_sieve = true;
    double rel_err = 1e-12; // Euler product truncation target
    double rh_tol = 1e-6;
};

/// Thrown before any work starts when the estimated cost exceeds the budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t required, std::uint64_t budget);
    std::uint64_t required;
    std::uint64_t budget;
};

// Exact cores, shared between reports and tests.
mpz_class family_size_H(FieldSpec spec, int g);          // #H by enumeration
mpz_class sum_k2_over_H(FieldSpec spec, int g, const ExperimentOptions& opts = {});
mpq_class sum_L_over_H(FieldSpec spec, int g, const ExperimentOptions& opts = {});
mpq_class square_term_sum(FieldSpec spec, int g, const ExperimentOptions& opts = {});
mpq_class nonsquare_term_sum(FieldSpec spec, int g, const ExperimentOptions& opts = {});

// Experiments (one report each).
ExperimentReport mean_k2_experiment(FieldSpec spec, int g, const ExperimentOptions& opts = {});
ExperimentReport mean_L_experiment(FieldSpec spec, int g, const ExperimentOptions& opts = {});
ExperimentReport square_term_check(FieldSpec spec, int g, const ExperimentOptions& opts = {});
ExperimentReport nonsquare_term_check(FieldSpec spec, int g, const ExperimentOptions& opts = {});
ExperimentReport lemma1_check(FieldSpec spec, int g, const Poly& f,
                              const ExperimentOptions& opts = {});
ExperimentReport lemma2_check(FieldSpec spec, int n, const ExperimentOptions& opts = {});
ExperimentReport lemma3_check(FieldSpec spec, int g, int max_deg_f,
                              const ExperimentOptions& opts = {});
ExperimentReport pv_check(FieldSpec spec, const Poly& f, int n,
                          const ExperimentOptions& opts = {});
/// All monic non-square f with deg f <= max_deg_f, n in [deg f, deg f + 3];
/// asserts exact vanishing of every complete sum.
ExperimentReport pv_scan(FieldSpec spec, int max_deg_f, const ExperimentOptions& opts = {});
ExperimentReport rosen_experiment(FieldSpec spec, int M, const ExperimentOptions& opts = {});
ExperimentReport comparison_table(FieldSpec spec, int g_max,
                                  const ExperimentOptions& opts = {});

/// Functional-equation / truncation scan over all D in H(q, g).
ExperimentReport fe_scan(FieldSpec spec, int g, const ExperimentOptions& opts = {});
/// Root-modulus scan over all D in H(q, g).
ExperimentReport rh_scan(FieldSpec spec, int g, const ExperimentOptions& opts = {});

struct VerifyParams {
    int g = -1;        // -1: sweep up to g_max
    int g_max = 2;
    int n_max = 8;     // lemma2
    int max_deg_f = 3; // lemma3 / pv
    std::string f;     // lemma1: fixed modulus (expression form), empty = default sweep
};

/// Registry behind `verify <what>`; what is one of
/// lemma1|lemma2|lemma3|pv|fe|rh|square-term|nonsquare-term|all.
std::vector<ExperimentReport> run_verify(FieldSpec spec, const std::string& what,
                                         const VerifyParams& params,
                                         const ExperimentOptions& opts = {});

} // namespace k2ff
