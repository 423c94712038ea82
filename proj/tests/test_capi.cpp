// Exercises the public surface only: fva.h against the shared library.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fva.h>

#include <json.hpp>

#include <string>

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    fva_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version string is present") {
    CHECK(std::string(fva_version()) == "0.1.0");
}

TEST_CASE("weyl dimension and euler characteristic round through strings") {
    {
        const long long coeffs[] = {3, 1, 0, 0};
        char* out = nullptr;
        REQUIRE(fva_weyl_dim(5, coeffs, 4, &out) == FVA_OK);
        CHECK(take(out) == "224");
    }
    {
        const long long coeffs[] = {-2, 1, 0};
        char* out = nullptr;
        REQUIRE(fva_euler_char(4, coeffs, 3, &out) == FVA_OK);
        CHECK(take(out) == "-1");
    }
    {
        // Values far past 64 bits survive the string interface: the all-20
        // weight on SL(10) has dimension 21^45, about 3.6e59.
        const long long coeffs[] = {20, 20, 20, 20, 20, 20, 20, 20, 20};
        char* out = nullptr;
        REQUIRE(fva_weyl_dim(10, coeffs, 9, &out) == FVA_OK);
        const std::string big = take(out);
        CHECK(big == "316131857427306285125283746813957016869585062394683021916901");
    }
}

TEST_CASE("input validation surfaces as status codes with messages") {
    char* out = nullptr;
    CHECK(fva_weyl_dim(5, nullptr, 0, &out) == FVA_ERR_INVALID_ARGUMENT);
    CHECK(std::string(fva_last_error()).size() > 0);

    const long long nondom[] = {2, -1, 0, 0};
    CHECK(fva_weyl_dim(5, nondom, 4, &out) == FVA_ERR_INVALID_ARGUMENT);

    const long long coeffs[] = {1, 0};
    CHECK(fva_weyl_dim(5, coeffs, 2, &out) == FVA_ERR_INVALID_ARGUMENT);  // wrong length
    CHECK(fva_weyl_dim(5, coeffs, 2, nullptr) == FVA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("gp-info reports the anticanonical data as JSON") {
    char* out = nullptr;
    REQUIRE(fva_gp_info(7, 5, "1,0,inf,inf,inf,inf", &out) == FVA_OK);
    const auto j = nlohmann::json::parse(take(out));
    CHECK(j["fano"] == true);
    CHECK(j["minus_k"] == "10*w1 + 2*w2");
    CHECK(j["dimension"] == 11);
    CHECK(j["picard_number"] == 2);
    CHECK(j["divisibility"] == "2");

    CHECK(fva_gp_info(7, 5, "1,0,inf", &out) == FVA_ERR_INVALID_ARGUMENT);
    CHECK(fva_gp_info(7, 5, "1,0,bogus,inf,inf,inf", &out) == FVA_ERR_INVALID_ARGUMENT);
    CHECK(fva_gp_info(7, 5, nullptr, &out) == FVA_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verification handles: run, inspect, render, free") {
    fva_report* rep = nullptr;
    REQUIRE(fva_verify_run("thm21", 3, 0, FVA_VERIFY_SEEDLESS, &rep) == FVA_OK);
    REQUIRE(rep != nullptr);
    CHECK(fva_report_passed(rep) == 1);

    char* out = nullptr;
    REQUIRE(fva_report_render(rep, FVA_FORMAT_JSON, &out) == FVA_OK);
    const auto j = nlohmann::json::parse(take(out));
    CHECK(j["construction"] == "thm21");
    CHECK(j["verdict"] == "pass");
    bool saw_224 = false;
    for (const auto& f : j["facts"])
        if (f["name"] == "h0_lambda" && f["value"] == "224") saw_224 = true;
    CHECK(saw_224);

    REQUIRE(fva_report_render(rep, FVA_FORMAT_MARKDOWN, &out) == FVA_OK);
    CHECK(take(out).find("**verdict: PASS**") != std::string::npos);

    // No graph on this target.
    CHECK(fva_report_render(rep, FVA_FORMAT_DOT, &out) == FVA_ERR_UNSUPPORTED);
    fva_report_free(rep);
}

TEST_CASE("dim3 renders its dual graph as DOT") {
    fva_report* rep = nullptr;
    REQUIRE(fva_verify_run("dim3", 0, 0, FVA_VERIFY_SEEDLESS, &rep) == FVA_OK);
    CHECK(fva_report_passed(rep) == 1);
    char* out = nullptr;
    REQUIRE(fva_report_render(rep, FVA_FORMAT_DOT, &out) == FVA_OK);
    const std::string dot = take(out);
    CHECK(dot.find("graph dim3_resolution {") == 0);
    CHECK(dot.find("F0 -- F4;") != std::string::npos);
    fva_report_free(rep);
}

TEST_CASE("domain errors: wrong p for a target") {
    fva_report* rep = nullptr;
    CHECK(fva_verify_run("thm21", 2, 0, 0, &rep) == FVA_ERR_DOMAIN);
    CHECK(rep == nullptr);
    CHECK(fva_verify_run("thm21", 9, 0, 0, &rep) == FVA_ERR_DOMAIN);
    CHECK(fva_verify_run("dim3", 5, 0, 0, &rep) == FVA_ERR_DOMAIN);
    CHECK(fva_verify_run("bogus", 3, 0, 0, &rep) == FVA_ERR_INVALID_ARGUMENT);
    CHECK(fva_verify_run(nullptr, 3, 0, 0, &rep) == FVA_ERR_INVALID_ARGUMENT);
    CHECK(fva_report_passed(nullptr) == -1);
}

TEST_CASE("sweep over the C API") {
    fva_report* rep = nullptr;
    REQUIRE(fva_sweep_run(7, FVA_VERIFY_SEEDLESS, &rep) == FVA_OK);
    CHECK(fva_report_passed(rep) == 1);
    char* out = nullptr;
    REQUIRE(fva_report_render(rep, FVA_FORMAT_JSON, &out) == FVA_OK);
    const auto j = nlohmann::json::parse(take(out));
    CHECK(j["facts"].size() == 8);
    fva_report_free(rep);
    CHECK(fva_sweep_run(1, 0, &rep) == FVA_ERR_DOMAIN);
}
