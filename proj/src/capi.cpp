#include "k2ff.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "k2ff/experiments.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
k2ff_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return K2FF_OK;
    } catch (const k2ff::BudgetExceeded& e) {
        g_last_error = e.what();
        return K2FF_ERR_BUDGET;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return K2FF_ERR_INVALID;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return K2FF_ERR_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return K2FF_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return K2FF_ERR_INTERNAL;
    }
}

k2ff::ExperimentOptions to_options(const k2ff_options* opts) {
    k2ff::ExperimentOptions out;
    if (!opts) return out;
    if (opts->workers >= 1) out.workers = opts->workers;
    if (opts->work_budget > 0) out.work_budget = opts->work_budget;
    out.use_sieve = opts->use_sieve != 0;
    if (opts->rel_err > 0) out.rel_err = opts->rel_err;
    if (opts->rh_tol > 0) out.rh_tol = opts->rh_tol;
    return out;
}

} // namespace

struct k2ff_reports {
    std::vector<k2ff::ExperimentReport> reports;
};

extern "C" {

const char* k2ff_version(void) { return "1.0.0"; }

const char* k2ff_last_error(void) { return g_last_error.c_str(); }

void k2ff_string_free(char* s) { std::free(s); }

void k2ff_options_init(k2ff_options* opts) {
    if (!opts) return;
    k2ff::ExperimentOptions d;
    opts->workers = d.workers;
    opts->work_budget = d.work_budget;
    opts->use_sieve = d.use_sieve ? 1 : 0;
    opts->rel_err = d.rel_err;
    opts->rh_tol = d.rh_tol;
}

void k2ff_verify_params_init(k2ff_verify_params* params) {
    if (!params) return;
    k2ff::VerifyParams d;
    params->g = d.g;
    params->g_max = d.g_max;
    params->n_max = d.n_max;
    params->max_deg_f = d.max_deg_f;
    params->f = nullptr;
}

k2ff_status k2ff_poly_canonical(uint32_t q, const char* text, char** out) {
    return guarded([&] {
        if (!text || !out) throw std::invalid_argument("null argument");
        k2ff::FieldSpec spec(q);
        *out = dup_string(k2ff::Poly::parse(text, spec).format());
    });
}

k2ff_status k2ff_symbol(uint32_t q, const char* top, const char* bottom, int* out) {
    return guarded([&] {
        if (!top || !bottom || !out) throw std::invalid_argument("null argument");
        k2ff::FieldSpec spec(q);
        *out = k2ff::kronecker(k2ff::Poly::parse(top, spec),
                               k2ff::Poly::parse(bottom, spec));
    });
}

k2ff_status k2ff_lpoly(uint32_t q, const char* d_expr, char** out_coeffs) {
    return guarded([&] {
        if (!d_expr || !out_coeffs) throw std::invalid_argument("null argument");
        k2ff::FieldSpec spec(q);
        k2ff::LPolynomial L = k2ff::l_polynomial(k2ff::Poly::parse(d_expr, spec));
        std::string joined;
        for (const auto& c : L.coeffs) {
            if (!joined.empty()) joined += ',';
            joined += c.get_str();
        }
        *out_coeffs = dup_string(joined);
    });
}

k2ff_status k2ff_k2_order(uint32_t q, const char* d_expr, char** out_order) {
    return guarded([&] {
        if (!d_expr || !out_order) throw std::invalid_argument("null argument");
        k2ff::FieldSpec spec(q);
        *out_order = dup_string(
            k2ff::k2_order(k2ff::Poly::parse(d_expr, spec)).get_str());
    });
}

k2ff_status k2ff_euler(uint32_t q, const char* which, int s, double rel_err, int digits,
                       char** out_value, int* out_truncation_degree,
                       char** out_tail_bound) {
    return guarded([&] {
        if (!which || !out_value || !out_truncation_degree || !out_tail_bound)
            throw std::invalid_argument("null argument");
        k2ff::FieldSpec spec(q);
        const std::string w(which);
        k2ff::TruncatedProduct p = w == "c2" ? k2ff::euler_c2(spec, rel_err)
                                 : w == "P"  ? k2ff::euler_P(spec, s, rel_err)
                                 : throw std::invalid_argument(
                                       "euler: which must be \"P\" or \"c2\"");
        *out_value = dup_string(p.value.str(digits > 0 ? digits : 15));
        *out_truncation_degree = p.truncation_degree;
        *out_tail_bound = dup_string(p.tail_bound.get_str());
    });
}

k2ff_status k2ff_verify(uint32_t q, const char* what, const k2ff_verify_params* params,
                        const k2ff_options* opts, k2ff_reports** out) {
    return guarded([&] {
        if (!what || !out) throw std::invalid_argument("null argument");
        k2ff::FieldSpec spec(q);
        k2ff::VerifyParams vp;
        if (params) {
            vp.g = params->g;
            vp.g_max = params->g_max;
            vp.n_max = params->n_max;
            vp.max_deg_f = params->max_deg_f;
            if (params->f) vp.f = params->f;
        }
        *out = new k2ff_reports{k2ff::run_verify(spec, what, vp, to_options(opts))};
    });
}

k2ff_status k2ff_average(uint32_t q, int g, const k2ff_options* opts, k2ff_reports** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        k2ff::FieldSpec spec(q);
        auto o = to_options(opts);
        *out = new k2ff_reports{{k2ff::mean_k2_experiment(spec, g, o),
                                 k2ff::mean_L_experiment(spec, g, o)}};
    });
}

k2ff_status k2ff_rosen(uint32_t q, int M, const k2ff_options* opts, k2ff_reports** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        k2ff::FieldSpec spec(q);
        *out = new k2ff_reports{{k2ff::rosen_experiment(spec, M, to_options(opts))}};
    });
}

k2ff_status k2ff_table(uint32_t q, int g_max, const k2ff_options* opts, k2ff_reports** out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("null argument");
        k2ff::FieldSpec spec(q);
        *out = new k2ff_reports{{k2ff::comparison_table(spec, g_max, to_options(opts))}};
    });
}

size_t k2ff_reports_count(const k2ff_reports* reports) {
    return reports ? reports->reports.size() : 0;
}

int k2ff_reports_all_pass(const k2ff_reports* reports) {
    return reports && k2ff::all_pass(reports->reports) ? 1 : 0;
}

k2ff_status k2ff_reports_render(const k2ff_reports* reports, const char* format,
                                int decimal_digits, char** out) {
    return guarded([&] {
        if (!reports || !format || !out) throw std::invalid_argument("null argument");
        const std::string f(format);
        const int digits = decimal_digits > 0 ? decimal_digits : 12;
        std::string rendered = f == "json" ? k2ff::render_json(reports->reports, digits)
                               : f == "csv" ? k2ff::render_csv(reports->reports, digits)
                               : f == "text"
                                   ? k2ff::render_text(reports->reports, digits)
                                   : throw std::invalid_argument(
                                         "render: format must be text, csv or json");
        *out = dup_string(rendered);
    });
}

void k2ff_reports_free(k2ff_reports* reports) { delete reports; }

} // extern "C"
