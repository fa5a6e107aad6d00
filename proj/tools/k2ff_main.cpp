// Command-line front end; talks to the library through the C API only.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k2ff.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int status_exit_code(k2ff_status s) {
    switch (s) {
        case K2FF_OK: return kExitOk;
        case K2FF_ERR_INVALID: return kExitUsage;
        case K2FF_ERR_BUDGET: return kExitBudget;
        default: return kExitCheckFailed;
    }
}

int fail(k2ff_status s) {
    std::cerr << "error: " << k2ff_last_error() << "\n";
    return status_exit_code(s);
}

struct CommonOpts {
    std::uint32_t q = 3;
    int workers = 1;
    std::uint64_t budget = 1'000'000'000;
    bool no_sieve = false;
    double rel_err = 1e-12;
    double rh_tol = 1e-6;
    int decimal = 12;
    std::vector<std::string> out; // {format, path}
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_reports) {
    cmd->add_option("--q", o.q, "field cardinality (odd prime)")
        ->required()
        ->envname("K2FF_Q");
    if (with_reports) {
        cmd->add_option("--workers", o.workers, "worker thread count")
            ->envname("K2FF_WORKERS");
        cmd->add_option("--budget", o.budget, "work budget (symbol evaluations)")
            ->envname("K2FF_BUDGET");
        cmd->add_flag("--no-sieve", o.no_sieve, "force the Euclidean-symbol path")
            ->envname("K2FF_NO_SIEVE");
        cmd->add_option("--rel-err", o.rel_err, "Euler product truncation target")
            ->envname("K2FF_REL_ERR");
        cmd->add_option("--tol", o.rh_tol, "root-modulus tolerance")
            ->envname("K2FF_TOL");
        cmd->add_option("--decimal", o.decimal, "decimal digits in rendered output")
            ->envname("K2FF_DECIMAL");
        cmd->add_option("--out", o.out, "additionally write FORMAT (csv|json) to PATH")
            ->expected(2);
    }
}

k2ff_options to_api_options(const CommonOpts& o) {
    k2ff_options opts;
    k2ff_options_init(&opts);
    opts.workers = o.workers;
    opts.work_budget = o.budget;
    opts.use_sieve = o.no_sieve ? 0 : 1;
    opts.rel_err = o.rel_err;
    opts.rh_tol = o.rh_tol;
    return opts;
}

int emit_reports(k2ff_reports* reports, const CommonOpts& o) {
    char* text = nullptr;
    k2ff_status s = k2ff_reports_render(reports, "text", o.decimal, &text);
    if (s != K2FF_OK) {
        k2ff_reports_free(reports);
        return fail(s);
    }
    std::cout << text;
    k2ff_string_free(text);

    if (!o.out.empty()) {
        char* rendered = nullptr;
        s = k2ff_reports_render(reports, o.out[0].c_str(), o.decimal, &rendered);
        if (s != K2FF_OK) {
            k2ff_reports_free(reports);
            return fail(s);
        }
        std::ofstream file(o.out[1], std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open output file " << o.out[1] << "\n";
            k2ff_string_free(rendered);
            k2ff_reports_free(reports);
            return kExitUsage;
        }
        file << rendered;
        k2ff_string_free(rendered);
    }
    const bool ok = k2ff_reports_all_pass(reports) != 0;
    k2ff_reports_free(reports);
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic Dirichlet L-functions and K2 group orders over F_q[T]"};
    app.require_subcommand(1);

    // symbol
    CommonOpts sym_o;
    std::string sym_top, sym_bottom;
    auto* sym = app.add_subcommand("symbol", "evaluate the Kronecker symbol (top/bottom)");
    add_common(sym, sym_o, false);
    sym->add_option("--top", sym_top, "top polynomial")->required();
    sym->add_option("--bottom", sym_bottom, "bottom polynomial (monic)")->required();

    // lpoly
    CommonOpts lp_o;
    std::string lp_d;
    auto* lp = app.add_subcommand("lpoly", "L-polynomial coefficients of L(s, chi_D)");
    add_common(lp, lp_o, false);
    lp->add_option("--D", lp_d, "discriminant (monic squarefree, odd degree)")->required();

    // k2
    CommonOpts k2_o;
    std::string k2_d;
    auto* k2 = app.add_subcommand("k2", "order of K2(O_D)");
    add_common(k2, k2_o, false);
    k2->add_option("--D", k2_d, "discriminant (monic squarefree, odd degree)")->required();

    // euler
    CommonOpts eu_o;
    std::string eu_which = "P";
    int eu_s = 4;
    auto* eu = app.add_subcommand("euler", "truncated Euler product P(s) or c(2)");
    add_common(eu, eu_o, false);
    eu->add_option("--s", eu_s, "exponent for P(s)");
    eu->add_option("--which", eu_which, "P or c2");
    eu->add_option("--rel-err", eu_o.rel_err, "relative truncation error target");
    eu->add_option("--decimal", eu_o.decimal, "decimal digits printed");
    eu_o.decimal = 15;

    // verify
    CommonOpts ve_o;
    std::string ve_what;
    int ve_g = -1, ve_g_max = 2, ve_n_max = 8, ve_max_deg_f = 3;
    std::string ve_f;
    auto* ve = app.add_subcommand(
        "verify",
        "run a lemma/theorem check: "
        "lemma1|lemma2|lemma3|pv|fe|rh|square-term|nonsquare-term|all");
    add_common(ve, ve_o, true);
    ve->add_option("what", ve_what, "which check to run")->required();
    ve->add_option("--g", ve_g, "fixed genus index (default: sweep)");
    ve->add_option("--g-max", ve_g_max, "sweep bound for g");
    ve->add_option("--n-max", ve_n_max, "degree bound for the lemma2 sweep");
    ve->add_option("--max-deg-f", ve_max_deg_f, "modulus degree bound (lemma3, pv)");
    ve->add_option("--f", ve_f, "fixed modulus polynomial (lemma1)");

    // average
    CommonOpts av_o;
    int av_g = 1;
    auto* av = app.add_subcommand("average", "mean of #K2(O_D) over H(q, g)");
    add_common(av, av_o, true);
    av->add_option("--g", av_g, "genus index")->required();

    // rosen
    CommonOpts ro_o;
    int ro_m = 3;
    auto* ro = app.add_subcommand("rosen", "mean of #K2 over all squarefree of degree M");
    add_common(ro, ro_o, true);
    ro->add_option("--M", ro_m, "odd degree >= 3")->required();

    // table
    CommonOpts ta_o;
    int ta_g_max = 2;
    auto* ta = app.add_subcommand("table", "compare the two mean-value constants");
    add_common(ta, ta_o, true);
    ta->add_option("--g-max", ta_g_max, "largest g in the per-g columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (sym->parsed()) {
        int value = 0;
        k2ff_status s = k2ff_symbol(sym_o.q, sym_top.c_str(), sym_bottom.c_str(), &value);
        if (s != K2FF_OK) return fail(s);
        std::cout << (value > 0 ? "1" : value < 0 ? "-1" : "0") << "\n";
        return kExitOk;
    }
    if (lp->parsed()) {
        char* coeffs = nullptr;
        k2ff_status s = k2ff_lpoly(lp_o.q, lp_d.c_str(), &coeffs);
        if (s != K2FF_OK) return fail(s);
        std::cout << coeffs << "\n";
        k2ff_string_free(coeffs);
        return kExitOk;
    }
    if (k2->parsed()) {
        char* order = nullptr;
        k2ff_status s = k2ff_k2_order(k2_o.q, k2_d.c_str(), &order);
        if (s != K2FF_OK) return fail(s);
        std::cout << order << "\n";
        k2ff_string_free(order);
        return kExitOk;
    }
    if (eu->parsed()) {
        char* value = nullptr;
        char* tail = nullptr;
        int truncation = 0;
        k2ff_status s = k2ff_euler(eu_o.q, eu_which.c_str(), eu_s, eu_o.rel_err,
                                   eu_o.decimal, &value, &truncation, &tail);
        if (s != K2FF_OK) return fail(s);
        std::cout << "value " << value << "\n"
                  << "truncation_degree " << truncation << "\n"
                  << "tail_bound " << tail << "\n";
        k2ff_string_free(value);
        k2ff_string_free(tail);
        return kExitOk;
    }

    k2ff_reports* reports = nullptr;
    if (ve->parsed()) {
        k2ff_verify_params params;
        k2ff_verify_params_init(&params);
        params.g = ve_g;
        params.g_max = ve_g_max;
        params.n_max = ve_n_max;
        params.max_deg_f = ve_max_deg_f;
        params.f = ve_f.empty() ? nullptr : ve_f.c_str();
        k2ff_options opts = to_api_options(ve_o);
        k2ff_status s = k2ff_verify(ve_o.q, ve_what.c_str(), &params, &opts, &reports);
        if (s != K2FF_OK) return fail(s);
        return emit_reports(reports, ve_o);
    }
    if (av->parsed()) {
        k2ff_options opts = to_api_options(av_o);
        k2ff_status s = k2ff_average(av_o.q, av_g, &opts, &reports);
        if (s != K2FF_OK) return fail(s);
        return emit_reports(reports, av_o);
    }
    if (ro->parsed()) {
        k2ff_options opts = to_api_options(ro_o);
        k2ff_status s = k2ff_rosen(ro_o.q, ro_m, &opts, &reports);
        if (s != K2FF_OK) return fail(s);
        return emit_reports(reports, ro_o);
    }
    if (ta->parsed()) {
        k2ff_options opts = to_api_options(ta_o);
        k2ff_status s = k2ff_table(ta_o.q, ta_g_max, &opts, &reports);
        if (s != K2FF_OK) return fail(s);
        return emit_reports(reports, ta_o);
    }
    return kExitUsage;
}
