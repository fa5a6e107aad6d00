#include "k2ff/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <thread>

namespace k2ff {

BudgetExceeded::BudgetExceeded(std::uint64_t required_, std::uint64_t budget_)
    : std::runtime_error("work budget exceeded: experiment requires about " +
                         std::to_string(required_) + " symbol evaluations, budget is " +
                         std::to_string(budget_)),
      required(required_), budget(budget_) {}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

mpz_class pow_q(std::uint32_t q, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), q, e);
    return r;
}

std::string zstr(const mpz_class& v) { return v.get_str(); }
std::string qstr(const mpq_class& v) { return v.get_str(); }

double to_d(const mpq_class& v) { return v.get_d(); }

void check_budget(FieldSpec spec, int g, const ExperimentOptions& opts) {
    // Dominant cost: one character-table entry per (D, monic f up to 2g+2).
    mpz_class est = pow_q(spec.q(), static_cast<unsigned long>(2 * g + 1)) *
                    ((pow_q(spec.q(), static_cast<unsigned long>(2 * g + 3)) - 1) /
                     (spec.q() - 1));
    if (est > static_cast<unsigned long>(opts.work_budget))
        throw BudgetExceeded(est.fits_ulong_p() ? est.get_ui() : ~0ull, opts.work_budget);
}

/// Deterministic block-partitioned map-reduce over [0, count).
/// Partials are merged in block order, so exact integer/rational results
/// are identical for any worker count.
template <class Partial, class Body>
Partial map_reduce(std::uint64_t count, int workers, Partial init, Body&& body) {
    workers = std::max(1, workers);
    if (workers == 1 || count < 2) {
        Partial acc = init;
        for (std::uint64_t i = 0; i < count; ++i) body(i, acc);
        return acc;
    }
    const int w = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), count));
    std::vector<Partial> partials(static_cast<std::size_t>(w), init);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    std::vector<std::thread> threads;
    for (int t = 0; t < w; ++t) {
        threads.emplace_back([&, t] {
            try {
                const std::uint64_t lo = count * static_cast<std::uint64_t>(t) / w;
                const std::uint64_t hi = count * (static_cast<std::uint64_t>(t) + 1) / w;
                for (std::uint64_t i = lo; i < hi; ++i)
                    body(i, partials[static_cast<std::size_t>(t)]);
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    Partial acc = init;
    for (auto& p : partials) acc.merge(p);
    return acc;
}

/// Runs body over every D in H(q, g) with its L-polynomial.
template <class Partial, class Body>
Partial for_each_L(FieldSpec spec, int g, const ExperimentOptions& opts, Partial init,
                   Body&& body) {
    check_budget(spec, g, opts);
    std::shared_ptr<const MonicSieve> sieve;
    if (opts.use_sieve) sieve = MonicSieve::shared(spec, 2 * g + 2);
    const std::uint64_t count = monic_count(spec, 2 * g + 1);
    return map_reduce(count, opts.workers, std::move(init),
                      [&](std::uint64_t i, Partial& acc) {
                          Poly D = monic_by_index(spec, 2 * g + 1, i);
                          if (!is_squarefree(D)) return;
                          LPolynomial L = opts.use_sieve
                                              ? l_polynomial(D, CharTable(D, sieve))
                                              : l_polynomial_direct(D);
                          body(L, acc);
                      });
}

double trend_band(FieldSpec spec, int g) {
    // Error-to-main-term scale q^{1-g} with the calibrated constant 5.
    return 5.0 * std::pow(static_cast<double>(spec.q()), 1 - g);
}

bool is_perfect_square(const Poly& f) {
    if (f.is_one()) return true;
    if (f.degree() % 2 != 0) return false;
    for (const auto& [p, e] : factor(f).factors)
        if (e % 2 != 0) return false;
    return true;
}

struct CountSum {
    mpz_class count = 0;
    mpz_class sum = 0;
    void merge(CountSum& o) {
        count += o.count;
        sum += o.sum;
    }
};

struct CountQSum {
    mpz_class count = 0;
    mpq_class sum = 0;
    void merge(CountQSum& o) {
        count += o.count;
        sum += o.sum;
    }
};

} // namespace

mpz_class family_size_H(FieldSpec spec, int g) {
    struct P {
        mpz_class n = 0;
        void merge(P& o) { n += o.n; }
    };
    const std::uint64_t count = monic_count(spec, 2 * g + 1);
    return map_reduce(count, 1, P{},
                      [&](std::uint64_t i, P& acc) {
                          if (is_squarefree(monic_by_index(spec, 2 * g + 1, i))) ++acc.n;
                      })
        .n;
}

mpz_class sum_k2_over_H(FieldSpec spec, int g, const ExperimentOptions& opts) {
    return for_each_L(spec, g, opts, CountSum{},
                      [&](const LPolynomial& L, CountSum& acc) {
                          acc.sum += k2_order(L);
                          ++acc.count;
                      })
        .sum;
}

mpq_class sum_L_over_H(FieldSpec spec, int g, const ExperimentOptions& opts) {
    return for_each_L(spec, g, opts, CountQSum{},
                      [&](const LPolynomial& L, CountQSum& acc) {
                          acc.sum += l_value(L, 2);
                          ++acc.count;
                      })
        .sum;
}

mpq_class square_term_sum(FieldSpec spec, int g, const ExperimentOptions& opts) {
    check_budget(spec, g, opts);
    auto sieve = MonicSieve::shared(spec, std::max(2 * g + 2, 1));
    struct P {
        std::vector<mpz_class> coprime_counts; // per deg l = 0..g
        void merge(P& o) {
            for (std::size_t i = 0; i < coprime_counts.size(); ++i)
                coprime_counts[i] += o.coprime_counts[i];
        }
    };
    P init;
    init.coprime_counts.resize(static_cast<std::size_t>(g) + 1);
    const std::uint64_t count = monic_count(spec, 2 * g + 1);
    P total = map_reduce(count, opts.workers, init, [&](std::uint64_t i, P& acc) {
        Poly D = monic_by_index(spec, 2 * g + 1, i);
        if (!is_squarefree(D)) return;
        if (opts.use_sieve) {
            CharTable table(D, sieve);
            for (int m = 0; m <= g; ++m) {
                const std::size_t b = sieve->first_index_of_degree(m);
                const std::size_t e = sieve->first_index_of_degree(m + 1);
                long nz = 0;
                for (std::size_t j = b; j < e; ++j)
                    if (table.at(j) != 0) ++nz;
                acc.coprime_counts[static_cast<std::size_t>(m)] += nz;
            }
        } else {
            for (int m = 0; m <= g; ++m) {
                long nz = 0;
                for_each_monic(spec, m, [&](const Poly& l) {
                    if (gcd(D, l).is_constant()) ++nz;
                });
                acc.coprime_counts[static_cast<std::size_t>(m)] += nz;
            }
        }
    });
    mpq_class sum = 0;
    for (int m = 0; m <= g; ++m) {
        mpq_class term(total.coprime_counts[static_cast<std::size_t>(m)],
                       pow_q(spec.q(), 4ul * static_cast<unsigned long>(m)));
        term.canonicalize();
        sum += term;
    }
    return sum;
}

mpq_class nonsquare_term_sum(FieldSpec spec, int g, const ExperimentOptions& opts) {
    check_budget(spec, g, opts);
    auto sieve = MonicSieve::shared(spec, std::max(2 * g + 2, 1));
    // Mark perfect squares l^2 with deg l <= g.
    std::vector<char> is_square_idx(sieve->size(), 0);
    for (int m = 0; m <= g; ++m)
        for_each_monic(spec, m, [&](const Poly& l) {
            is_square_idx[sieve->index_of(l * l)] = 1;
        });
    struct P {
        std::vector<long long> sums; // per deg f = 0..2g
        void merge(P& o) {
            for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += o.sums[i];
        }
    };
    P init;
    init.sums.resize(static_cast<std::size_t>(2 * g) + 1);
    const std::uint64_t count = monic_count(spec, 2 * g + 1);
    P total = map_reduce(count, opts.workers, init, [&](std::uint64_t i, P& acc) {
        Poly D = monic_by_index(spec, 2 * g + 1, i);
        if (!is_squarefree(D)) return;
        CharTable table(D, sieve);
        for (int n = 0; n <= 2 * g; ++n) {
            const std::size_t b = sieve->first_index_of_degree(n);
            const std::size_t e = sieve->first_index_of_degree(n + 1);
            long long s = 0;
            for (std::size_t j = b; j < e; ++j)
                if (!is_square_idx[j]) s += table.at(j);
            acc.sums[static_cast<std::size_t>(n)] += s;
        }
    });
    mpq_class sum = 0;
    for (int n = 0; n <= 2 * g; ++n) {
        mpq_class term(mpz_class(static_cast<long>(total.sums[static_cast<std::size_t>(n)])),
                       pow_q(spec.q(), 2ul * static_cast<unsigned long>(n)));
        term.canonicalize();
        sum += term;
    }
    return sum;
}

ExperimentReport mean_k2_experiment(FieldSpec spec, int g, const ExperimentOptions& opts) {
    const auto start = Clock::now();
    CountSum totals = for_each_L(spec, g, opts, CountSum{},
                                 [&](const LPolynomial& L, CountSum& acc) {
                                     acc.sum += k2_order(L);
                                     ++acc.count;
                                 });
    mpq_class mean(totals.sum, totals.count);
    mean.canonicalize();
    TruncatedProduct P4 = euler_P(spec, 4, opts.rel_err);
    BigFloat main = main_term_mean_k2(spec, g, P4);
    const double ratio = (BigFloat(mean) / main).to_double();
    ExperimentReport r;
    r.experiment_id = "mean_k2";
    r.parameters = {{"q", std::to_string(spec.q())}, {"g", std::to_string(g)}};
    r.exact_values = {{"family_size", zstr(totals.count)},
                      {"k2_sum", zstr(totals.sum)},
                      {"mean", qstr(mean)},
                      {"p4_truncation_degree", std::to_string(P4.truncation_degree)},
                      {"p4_tail_bound", qstr(P4.tail_bound)}};
    r.empirical = to_d(mean);
    r.predicted = main.to_double();
    r.ratio = ratio;
    r.pass = g == 0 ? mean == 1 : std::abs(ratio - 1.0) <= trend_band(spec, g);
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport mean_L_experiment(FieldSpec spec, int g, const ExperimentOptions& opts) {
    const auto start = Clock::now();
    CountQSum totals = for_each_L(spec, g, opts, CountQSum{},
                                  [&](const LPolynomial& L, CountQSum& acc) {
                                      acc.sum += l_value(L, 2);
                                      ++acc.count;
                                  });
    TruncatedProduct P4 = euler_P(spec, 4, opts.rel_err);
    mpq_class prefactor = mpq_class(pow_q(spec.q(), static_cast<unsigned long>(2 * g + 1))) /
                          zeta_A(spec, 2) * zeta_A(spec, 4);
    prefactor.canonicalize();
    BigFloat predicted = BigFloat(prefactor) * P4.value;
    BigFloat diff = BigFloat(totals.sum) - predicted;
    BigFloat diff_over_qg =
        diff / BigFloat(pow_q(spec.q(), static_cast<unsigned long>(g)));
    const double ratio = (BigFloat(totals.sum) / predicted).to_double();
    ExperimentReport r;
    r.experiment_id = "mean_L";
    r.parameters = {{"q", std::to_string(spec.q())}, {"g", std::to_string(g)}};
    r.exact_values = {{"family_size", zstr(totals.count)},
                      {"l_sum", qstr(totals.sum)},
                      {"diff_over_qg_decimal", diff_over_qg.str(15)},
                      {"p4_truncation_degree", std::to_string(P4.truncation_degree)},
                      {"p4_tail_bound", qstr(P4.tail_bound)}};
    r.empirical = to_d(totals.sum);
    r.predicted = predicted.to_double();
    r.ratio = ratio;
    r.pass = g == 0 ? totals.sum == totals.count
                    : std::abs(ratio - 1.0) <= trend_band(spec, g);
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport square_term_check(FieldSpec spec, int g, const ExperimentOptions& opts) {
    const auto start = Clock::now();
    mpq_class sum = square_term_sum(spec, g, opts);
    TruncatedProduct P4 = euler_P(spec, 4, opts.rel_err);
    mpq_class prefactor = zeta_A(spec, 4) *
                          mpq_class(pow_q(spec.q(), static_cast<unsigned long>(2 * g + 1))) /
                          zeta_A(spec, 2);
    prefactor.canonicalize();
    BigFloat predicted = BigFloat(prefactor) * P4.value;
    BigFloat diff = BigFloat(sum) - predicted;
    const double ratio = (BigFloat(sum) / predicted).to_double();
    ExperimentReport r;
    r.experiment_id = "square_term";
    r.parameters = {{"q", std::to_string(spec.q())}, {"g", std::to_string(g)}};
    r.exact_values = {{"square_sum", qstr(sum)},
                      {"diff_decimal", diff.str(15)},
                      {"p4_truncation_degree", std::to_string(P4.truncation_degree)}};
    r.empirical = to_d(sum);
    r.predicted = predicted.to_double();
    r.ratio = ratio;
    r.pass = std::abs(ratio - 1.0) <= 0.5;
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport nonsquare_term_check(FieldSpec spec, int g, const ExperimentOptions& opts) {
    const auto start = Clock::now();
    mpq_class nonsquare = nonsquare_term_sum(spec, g, opts);
    mpq_class square = square_term_sum(spec, g, opts);
    mpq_class total = sum_L_over_H(spec, g, opts);
    const bool partition_exact = square + nonsquare == total;
    mpq_class scaled = abs(nonsquare) / pow_q(spec.q(), static_cast<unsigned long>(g));
    scaled.canonicalize();
    ExperimentReport r;
    r.experiment_id = "nonsquare_term";
    r.parameters = {{"q", std::to_string(spec.q())}, {"g", std::to_string(g)}};
    r.exact_values = {{"nonsquare_sum", qstr(nonsquare)},
                      {"square_sum", qstr(square)},
                      {"total_sum", qstr(total)},
                      {"abs_nonsquare_over_qg", qstr(scaled)},
                      {"partition_exact", partition_exact ? "true" : "false"}};
    r.empirical = to_d(scaled);
    r.predicted = 0.0;
    r.ratio = to_d(scaled);
    r.pass = partition_exact && scaled <= 5;
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport lemma1_check(FieldSpec spec, int g, const Poly& f,
                              const ExperimentOptions& opts) {
    if (f.is_zero() || !f.is_monic())
        throw std::domain_error("lemma1_check: f must be monic nonzero");
    const auto start = Clock::now();
    struct P {
        mpz_class count = 0;
        void merge(P& o) { count += o.count; }
    };
    const std::uint64_t n = monic_count(spec, 2 * g + 1);
    mpz_class count = map_reduce(n, opts.workers, P{},
                                 [&](std::uint64_t i, P& acc) {
                                     Poly D = monic_by_index(spec, 2 * g + 1, i);
                                     if (!is_squarefree(D)) return;
                                     if (gcd(D, f).is_constant()) ++acc.count;
                                 })
                          .count;
    mpq_class main(pow_q(spec.q(), static_cast<unsigned long>(2 * g + 1)) * (spec.q() - 1),
                   spec.q());
    main.canonicalize();
    for (const auto& [p, e] : factor(f).factors) {
        mpz_class norm = poly_norm(p);
        main *= mpq_class(norm, norm + 1);
        main.canonicalize();
    }
    mpq_class diff = mpq_class(count) - main;
    const double scaled =
        to_d(diff) / std::pow(static_cast<double>(spec.q()),
                              static_cast<double>(g) + 0.5);
    ExperimentReport r;
    r.experiment_id = "lemma1_coprime_count";
    r.parameters = {{"q", std::to_string(spec.q())},
                    {"g", std::to_string(g)},
                    {"f", f.format()}};
    r.exact_values = {{"count", zstr(count)},
                      {"main_term", qstr(main)},
                      {"difference", qstr(diff)}};
    r.empirical = to_d(mpq_class(count));
    r.predicted = to_d(main);
    r.ratio = scaled;
    r.pass = std::abs(scaled) <= 5.0;
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport lemma2_check(FieldSpec spec, int n, const ExperimentOptions& opts) {
    (void)opts;
    if (n < 0) throw std::invalid_argument("lemma2_check: n < 0");
    const auto start = Clock::now();
    auto sieve = MonicSieve::shared(spec, std::max(n, 1));

    // Distinct-factor-degree class of a monic index.
    auto degree_class = [&](std::size_t idx, bool& squarefree) {
        std::vector<int> degs;
        squarefree = true;
        for (const auto& [p_idx, mult] : sieve->factor_indices(idx)) {
            if (mult > 1) squarefree = false;
            degs.push_back(sieve->degree_at(p_idx));
        }
        std::sort(degs.begin(), degs.end());
        return degs;
    };

    // LHS: sum over monic f of degree n of prod_{P|f} |P|/(|P|+1).
    std::map<std::vector<int>, unsigned long> lhs_classes;
    {
        const std::size_t b = n == 0 ? 0 : sieve->first_index_of_degree(n);
        const std::size_t e = sieve->first_index_of_degree(n + 1);
        for (std::size_t i = (n == 0 ? 0 : b); i < e; ++i) {
            bool sf = true;
            ++lhs_classes[degree_class(i, sf)];
        }
    }
    mpq_class lhs = 0;
    for (const auto& [degs, count] : lhs_classes) {
        mpq_class prod(static_cast<unsigned long>(count));
        for (int d : degs) {
            mpz_class norm = pow_q(spec.q(), static_cast<unsigned long>(d));
            prod *= mpq_class(norm, norm + 1);
            prod.canonicalize();
        }
        lhs += prod;
    }

    // RHS: q^n sum over monic squarefree d of degree <= n of
    // mu(d)/|d| prod_{P|d} (|P|+1)^{-1}.
    mpq_class rhs_sum = 0;
    std::map<std::vector<int>, long> rhs_classes;
    for (std::size_t i = 0; i < sieve->first_index_of_degree(n + 1); ++i) {
        bool sf = true;
        auto degs = degree_class(i, sf);
        if (!sf) continue;
        rhs_classes[degs] += degs.size() % 2 == 0 ? 1 : -1;
    }
    for (const auto& [degs, signed_count] : rhs_classes) {
        if (signed_count == 0) continue;
        int total_deg = 0;
        mpz_class den = 1;
        for (int d : degs) {
            total_deg += d;
            den *= pow_q(spec.q(), static_cast<unsigned long>(d)) + 1;
        }
        mpq_class term(signed_count,
                       pow_q(spec.q(), static_cast<unsigned long>(total_deg)) * den);
        term.canonicalize();
        rhs_sum += term;
    }
    mpq_class rhs = mpq_class(pow_q(spec.q(), static_cast<unsigned long>(n))) * rhs_sum;
    rhs.canonicalize();

    ExperimentReport r;
    r.experiment_id = "lemma2_identity";
    r.parameters = {{"q", std::to_string(spec.q())}, {"n", std::to_string(n)}};
    r.exact_values = {{"lhs", qstr(lhs)}, {"rhs", qstr(rhs)}};
    r.empirical = to_d(lhs);
    r.predicted = to_d(rhs);
    r.ratio = r.predicted == 0 ? 0 : r.empirical / r.predicted;
    r.pass = lhs == rhs; // exact identity, no tolerance
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport lemma3_check(FieldSpec spec, int g, int max_deg_f,
                              const ExperimentOptions& opts) {
    if (max_deg_f < 1) throw std::invalid_argument("lemma3_check: max_deg_f < 1");
    const auto start = Clock::now();
    auto sieve = MonicSieve::shared(spec, std::max(2 * g + 1, max_deg_f));
    std::vector<char> in_H(sieve->size(), 0);
    {
        const std::size_t b = sieve->first_index_of_degree(2 * g + 1);
        const std::size_t e = sieve->first_index_of_degree(2 * g + 2);
        for (std::size_t i = b; i < e; ++i)
            if (is_squarefree(sieve->poly_at(i))) in_H[i] = 1;
    }
    const std::size_t Hb = sieve->first_index_of_degree(2 * g + 1);
    const std::size_t He = sieve->first_index_of_degree(2 * g + 2);

    double max_ratio = -1.0;
    mpz_class max_abs_sum = 0;
    std::string argmax;
    long scanned = 0;
    for (int df = 1; df <= max_deg_f; ++df) {
        const std::size_t fb = sieve->first_index_of_degree(df);
        const std::size_t fe = sieve->first_index_of_degree(df + 1);
        for (std::size_t fi = fb; fi < fe; ++fi) {
            Poly f = sieve->poly_at(fi);
            if (is_perfect_square(f)) continue; // lemma hypothesis: f != square
            auto table = sieve->multiplicative_table(
                [&](const Poly& p) { return kronecker(p, f); });
            long long s = 0;
            for (std::size_t i = Hb; i < He; ++i)
                if (in_H[i]) s += table[i];
            ++scanned;
            const double denom =
                std::pow(static_cast<double>(spec.q()),
                         (2.0 * g + 1.0) / 2.0 + static_cast<double>(df) / 4.0);
            const double ratio = std::abs(static_cast<double>(s)) / denom;
            if (ratio > max_ratio) {
                max_ratio = ratio;
                max_abs_sum = static_cast<long>(std::llabs(s));
                argmax = f.format();
            }
        }
    }
    ExperimentReport r;
    r.experiment_id = "lemma3_char_sum";
    r.parameters = {{"q", std::to_string(spec.q())},
                    {"g", std::to_string(g)},
                    {"max_deg_f", std::to_string(max_deg_f)}};
    r.exact_values = {{"moduli_scanned", std::to_string(scanned)},
                      {"max_abs_sum", zstr(max_abs_sum)},
                      {"argmax_f", argmax}};
    r.empirical = max_ratio;
    r.predicted = 0.0;
    r.ratio = max_ratio;
    r.pass = std::isfinite(max_ratio); // implied constant is empirical, recorded only
    r.runtime_ms = ms_since(start);
    (void)opts;
    return r;
}

namespace {

void check_pv_modulus(const Poly& f) {
    if (f.is_zero() || !f.is_monic() || f.degree() < 1)
        throw std::domain_error("pv_check: f must be monic of degree >= 1");
    if (is_perfect_square(f))
        throw std::domain_error("pv_check: principal character (f is a square)");
}

} // namespace

ExperimentReport pv_check(FieldSpec spec, const Poly& f, int n,
                          const ExperimentOptions& opts) {
    (void)opts;
    check_pv_modulus(f);
    if (n < 0) throw std::invalid_argument("pv_check: n < 0");
    const auto start = Clock::now();
    long long sum = 0;
    for_each_monic(spec, n, [&](const Poly& b) { sum += kronecker(b, f); });
    const double scale =
        std::pow(static_cast<double>(spec.q()), static_cast<double>(f.degree()) / 2.0);
    ExperimentReport r;
    r.experiment_id = "pv_sum";
    r.parameters = {{"q", std::to_string(spec.q())},
                    {"f", f.format()},
                    {"n", std::to_string(n)}};
    r.exact_values = {{"sum", std::to_string(sum)}};
    r.empirical = static_cast<double>(sum);
    r.predicted = 0.0;
    r.ratio = std::abs(static_cast<double>(sum)) / scale;
    // Complete sums vanish exactly; short sums are recorded against |f|^{1/2}.
    r.pass = n >= f.degree() ? sum == 0 : true;
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport pv_scan(FieldSpec spec, int max_deg_f, const ExperimentOptions& opts) {
    (void)opts;
    if (max_deg_f < 1) throw std::invalid_argument("pv_scan: max_deg_f < 1");
    const auto start = Clock::now();
    auto sieve = MonicSieve::shared(spec, max_deg_f + 3);
    long checked = 0, violations = 0;
    for (int df = 1; df <= max_deg_f; ++df) {
        const std::size_t fb = sieve->first_index_of_degree(df);
        const std::size_t fe = sieve->first_index_of_degree(df + 1);
        for (std::size_t fi = fb; fi < fe; ++fi) {
            Poly f = sieve->poly_at(fi);
            if (is_perfect_square(f)) continue;
            auto table = sieve->multiplicative_table(
                [&](const Poly& p) { return kronecker(p, f); });
            for (int n = df; n <= df + 3; ++n) {
                const std::size_t b = sieve->first_index_of_degree(n);
                const std::size_t e = sieve->first_index_of_degree(n + 1);
                long long s = 0;
                for (std::size_t i = b; i < e; ++i) s += table[i];
                ++checked;
                if (s != 0) ++violations;
            }
        }
    }
    ExperimentReport r;
    r.experiment_id = "pv_vanishing_scan";
    r.parameters = {{"q", std::to_string(spec.q())},
                    {"max_deg_f", std::to_string(max_deg_f)}};
    r.exact_values = {{"sums_checked", std::to_string(checked)},
                      {"nonzero_sums", std::to_string(violations)}};
    r.empirical = static_cast<double>(violations);
    r.predicted = 0.0;
    r.ratio = 0.0;
    r.pass = violations == 0; // exact, no tolerance
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport rosen_experiment(FieldSpec spec, int M, const ExperimentOptions& opts) {
    if (M < 3 || M % 2 == 0)
        throw std::domain_error("rosen_experiment: M must be odd and >= 3");
    const auto start = Clock::now();
    const int g = (M - 1) / 2;
    const mpz_class q3g = pow_q(spec.q(), 3ul * static_cast<unsigned long>(g));
    struct P {
        mpz_class count = 0;
        mpz_class order_sum = 0; // over all q-1 leading coefficients
        void merge(P& o) {
            count += o.count;
            order_sum += o.order_sum;
        }
    };
    P totals = for_each_L(spec, g, opts, P{}, [&](const LPolynomial& L, P& acc) {
        // m = c D splits the family by legendre(c); chi_m twists chi_D by
        // (-1)^{deg f} when c is a non-square.
        mpq_class l_plus = 0, l_minus = 0;
        for (std::size_t n = 0; n < L.coeffs.size(); ++n) {
            mpq_class term(L.coeffs[n],
                           pow_q(spec.q(), 2ul * static_cast<unsigned long>(n)));
            term.canonicalize();
            l_plus += term;
            l_minus += (n % 2 == 0) ? term : -term;
        }
        mpq_class o_plus = mpq_class(q3g) * l_plus;
        mpq_class o_minus = mpq_class(q3g) * l_minus;
        o_plus.canonicalize();
        o_minus.canonicalize();
        if (o_plus.get_den() != 1 || o_plus <= 0 || o_minus.get_den() != 1 || o_minus <= 0)
            throw std::logic_error("rosen_experiment: member order is not a positive integer");
        const unsigned long half = (spec.q() - 1) / 2;
        acc.order_sum += half * (o_plus.get_num() + o_minus.get_num());
        ++acc.count;
    });
    mpz_class members = totals.count * (spec.q() - 1);
    mpz_class norm = (pow_q(spec.q(), static_cast<unsigned long>(M)) -
                      pow_q(spec.q(), static_cast<unsigned long>(M - 1))) *
                     (spec.q() - 1);
    mpq_class mean(totals.order_sum, norm);
    mean.canonicalize();
    TruncatedProduct c2 = euler_c2(spec, opts.rel_err);
    BigFloat predicted = main_term_all_squarefree(spec, M, c2);
    const double ratio = (BigFloat(mean) / predicted).to_double();
    ExperimentReport r;
    r.experiment_id = "rosen_mean_k2";
    r.parameters = {{"q", std::to_string(spec.q())}, {"M", std::to_string(M)}};
    r.exact_values = {{"family_size", zstr(members)},
                      {"k2_sum", zstr(totals.order_sum)},
                      {"mean", qstr(mean)},
                      {"c2_truncation_degree", std::to_string(c2.truncation_degree)},
                      {"c2_tail_bound", qstr(c2.tail_bound)}};
    r.empirical = to_d(mean);
    r.predicted = predicted.to_double();
    r.ratio = ratio;
    r.pass = std::abs(ratio - 1.0) <= trend_band(spec, g);
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport comparison_table(FieldSpec spec, int g_max, const ExperimentOptions& opts) {
    if (g_max < 1) throw std::invalid_argument("comparison_table: g_max < 1");
    const auto start = Clock::now();
    TruncatedProduct P4 = euler_P(spec, 4, opts.rel_err);
    TruncatedProduct c2 = euler_c2(spec, opts.rel_err);
    BigFloat k_monic = BigFloat(zeta_A(spec, 4)) * P4.value;
    BigFloat k_all = BigFloat(zeta_A(spec, 2)) * BigFloat(zeta_A(spec, 4)) * c2.value;
    BigFloat const_ratio = k_monic / k_all;
    ExperimentReport r;
    r.experiment_id = "constant_comparison";
    r.parameters = {{"q", std::to_string(spec.q())}, {"g_max", std::to_string(g_max)}};
    r.exact_values = {{"monic_constant_decimal", k_monic.str(18)},
                      {"all_squarefree_constant_decimal", k_all.str(18)},
                      {"constant_ratio_decimal", const_ratio.str(18)},
                      {"p4_truncation_degree", std::to_string(P4.truncation_degree)},
                      {"p4_tail_bound", qstr(P4.tail_bound)},
                      {"c2_truncation_degree", std::to_string(c2.truncation_degree)},
                      {"c2_tail_bound", qstr(c2.tail_bound)}};
    for (int g = 1; g <= g_max; ++g) {
        ExperimentReport monic = mean_k2_experiment(spec, g, opts);
        ExperimentReport all = rosen_experiment(spec, 2 * g + 1, opts);
        std::ostringstream key;
        key << "g" << g;
        std::ostringstream val;
        val.precision(15);
        val << std::fixed << monic.ratio;
        r.exact_values.emplace_back(key.str() + "_monic_ratio_decimal", val.str());
        std::ostringstream val2;
        val2.precision(15);
        val2 << std::fixed << all.ratio;
        r.exact_values.emplace_back(key.str() + "_all_squarefree_ratio_decimal", val2.str());
    }
    r.empirical = k_monic.to_double();
    r.predicted = k_all.to_double();
    r.ratio = const_ratio.to_double();
    // Asserted strict inequality of the two constants at the 1e-12 scale.
    r.pass = (const_ratio - BigFloat(1ul)).abs() > BigFloat(1e-12);
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport fe_scan(FieldSpec spec, int g, const ExperimentOptions& opts) {
    const auto start = Clock::now();
    struct P {
        mpz_class count = 0;
        long violations = 0;
        void merge(P& o) {
            count += o.count;
            violations += o.violations;
        }
    };
    P totals = for_each_L(spec, g, opts, P{}, [&](const LPolynomial& L, P& acc) {
        ++acc.count;
        if (!fe_check(L)) ++acc.violations;
    });
    ExperimentReport r;
    r.experiment_id = "fe_symmetry";
    r.parameters = {{"q", std::to_string(spec.q())}, {"g", std::to_string(g)}};
    r.exact_values = {{"family_size", zstr(totals.count)},
                      {"violations", std::to_string(totals.violations)}};
    r.empirical = static_cast<double>(totals.violations);
    r.predicted = 0.0;
    r.ratio = 0.0;
    r.pass = totals.violations == 0;
    r.runtime_ms = ms_since(start);
    return r;
}

ExperimentReport rh_scan(FieldSpec spec, int g, const ExperimentOptions& opts) {
    const auto start = Clock::now();
    struct P {
        mpz_class count = 0;
        long violations = 0;
        void merge(P& o) {
            count += o.count;
            violations += o.violations;
        }
    };
    P totals = for_each_L(spec, g, opts, P{}, [&](const LPolynomial& L, P& acc) {
        ++acc.count;
        if (!rh_check(L, opts.rh_tol)) ++acc.violations;
    });
    ExperimentReport r;
    r.experiment_id = "rh_roots";
    r.parameters = {{"q", std::to_string(spec.q())},
                    {"g", std::to_string(g)},
                    {"tol", std::to_string(opts.rh_tol)}};
    r.exact_values = {{"family_size", zstr(totals.count)},
                      {"violations", std::to_string(totals.violations)}};
    r.empirical = static_cast<double>(totals.violations);
    r.predicted = 0.0;
    r.ratio = 0.0;
    r.pass = totals.violations == 0;
    r.runtime_ms = ms_since(start);
    return r;
}

std::vector<ExperimentReport> run_verify(FieldSpec spec, const std::string& what,
                                         const VerifyParams& params,
                                         const ExperimentOptions& opts) {
    std::vector<ExperimentReport> out;
    auto g_values = [&]() {
        std::vector<int> gs;
        if (params.g >= 0) gs.push_back(params.g);
        else
            for (int g = 0; g <= params.g_max; ++g) gs.push_back(g);
        return gs;
    };
    auto g_values_pos = [&]() {
        std::vector<int> gs;
        if (params.g >= 1) gs.push_back(params.g);
        else
            for (int g = 1; g <= params.g_max; ++g) gs.push_back(g);
        return gs;
    };

    if (what == "lemma1" || what == "all") {
        std::vector<Poly> moduli;
        if (!params.f.empty()) moduli.push_back(Poly::parse(params.f, spec));
        else {
            const Poly t = Poly::variable(spec);
            const Poly t1 = t + Poly::one(spec);
            moduli = {Poly::one(spec), t, t1, t * t1};
        }
        for (int g : g_values_pos())
            for (const Poly& f : moduli) out.push_back(lemma1_check(spec, g, f, opts));
    }
    if (what == "lemma2" || what == "all")
        for (int n = 0; n <= params.n_max; ++n) out.push_back(lemma2_check(spec, n, opts));
    if (what == "lemma3" || what == "all")
        for (int g : g_values_pos())
            out.push_back(lemma3_check(spec, g, params.max_deg_f, opts));
    if (what == "pv" || what == "all") out.push_back(pv_scan(spec, params.max_deg_f, opts));
    if (what == "fe" || what == "all")
        for (int g : g_values()) out.push_back(fe_scan(spec, g, opts));
    if (what == "rh" || what == "all")
        for (int g : g_values()) out.push_back(rh_scan(spec, g, opts));
    if (what == "square-term" || what == "all")
        for (int g : g_values()) out.push_back(square_term_check(spec, g, opts));
    if (what == "nonsquare-term" || what == "all")
        for (int g : g_values()) out.push_back(nonsquare_term_check(spec, g, opts));
    if (out.empty())
        throw std::invalid_argument("verify: unknown check '" + what + "'");
    return out;
}

} // namespace k2ff
