#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "k2ff.h"

namespace {
std::string take(char* s) {
    std::string out = s ? s : "";
    k2ff_string_free(s);
    return out;
}
} // namespace

TEST_CASE("version and error plumbing") {
    CHECK(k2ff_version() != nullptr);
    CHECK(k2ff_last_error() != nullptr); // always a valid C string
}

TEST_CASE("poly canonicalization") {
    char* out = nullptr;
    REQUIRE(k2ff_poly_canonical(3, "1,2,0,1", &out) == K2FF_OK);
    CHECK(take(out) == "T^3+2*T+1");
    CHECK(k2ff_poly_canonical(3, "T^^", &out) == K2FF_ERR_INVALID);
    CHECK(std::string(k2ff_last_error()).find("syntax") != std::string::npos);
    CHECK(k2ff_poly_canonical(4, "T", &out) == K2FF_ERR_INVALID); // bad q
}

TEST_CASE("symbol") {
    int v = 0;
    REQUIRE(k2ff_symbol(3, "T", "T+1", &v) == K2FF_OK);
    CHECK(v == -1);
    REQUIRE(k2ff_symbol(3, "T", "T", &v) == K2FF_OK);
    CHECK(v == 0);
    CHECK(k2ff_symbol(3, "T", "2*T", &v) == K2FF_ERR_INVALID); // non-monic bottom
}

TEST_CASE("lpoly and k2 order") {
    char* out = nullptr;
    REQUIRE(k2ff_lpoly(3, "T", &out) == K2FF_OK);
    CHECK(take(out) == "1");
    REQUIRE(k2ff_k2_order(3, "T", &out) == K2FF_OK);
    CHECK(take(out) == "1");
    CHECK(k2ff_k2_order(3, "T^2", &out) == K2FF_ERR_INVALID); // even degree
}

TEST_CASE("euler") {
    char* value = nullptr;
    char* tail = nullptr;
    int n = 0;
    REQUIRE(k2ff_euler(3, "P", 4, 1e-12, 15, &value, &n, &tail) == K2FF_OK);
    std::string v = take(value);
    CHECK(v.substr(0, 6) == "0.9907");
    CHECK(n > 0);
    CHECK(take(tail).find('/') != std::string::npos);
    CHECK(k2ff_euler(3, "nope", 4, 1e-12, 15, &value, &n, &tail) ==
          K2FF_ERR_INVALID);
}

TEST_CASE("reports lifecycle: average") {
    k2ff_options opts;
    k2ff_options_init(&opts);
    CHECK(opts.workers == 1);
    CHECK(opts.use_sieve == 1);

    k2ff_reports* reports = nullptr;
    REQUIRE(k2ff_average(3, 1, &opts, &reports) == K2FF_OK);
    CHECK(k2ff_reports_count(reports) == 2);
    CHECK(k2ff_reports_all_pass(reports) == 1);

    char* text = nullptr;
    REQUIRE(k2ff_reports_render(reports, "text", 12, &text) == K2FF_OK);
    CHECK(take(text).find("mean_k2") != std::string::npos);
    char* json = nullptr;
    REQUIRE(k2ff_reports_render(reports, "json", 12, &json) == K2FF_OK);
    CHECK(take(json).find("\"k2_sum\"") != std::string::npos);
    CHECK(k2ff_reports_render(reports, "xml", 12, &text) == K2FF_ERR_INVALID);
    k2ff_reports_free(reports);
}

TEST_CASE("verify dispatch and budget status") {
    k2ff_verify_params params;
    k2ff_verify_params_init(&params);
    params.n_max = 3;
    k2ff_reports* reports = nullptr;
    REQUIRE(k2ff_verify(3, "lemma2", &params, nullptr, &reports) == K2FF_OK);
    CHECK(k2ff_reports_count(reports) == 4); // n = 0..3
    CHECK(k2ff_reports_all_pass(reports) == 1);
    k2ff_reports_free(reports);

    CHECK(k2ff_verify(3, "bogus", &params, nullptr, &reports) ==
          K2FF_ERR_INVALID);

    k2ff_options tiny;
    k2ff_options_init(&tiny);
    tiny.work_budget = 10;
    CHECK(k2ff_average(3, 2, &tiny, &reports) == K2FF_ERR_BUDGET);
    CHECK(std::string(k2ff_last_error()).find("budget") != std::string::npos);
}
