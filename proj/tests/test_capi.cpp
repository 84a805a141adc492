#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "wavelab.h"

namespace {
std::string write_temp(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

const char* kValidConfig = R"(
[study]
kind = "soliton"
[model]
family = "kdv_velocity"
[bathymetry]
kind = "flat"
[regime]
tag = "kdv_justified"
[[regime.member]]
eps = 0.04
beta = 0.0
alpha = 1.0
mu = 0.04
[grid]
n = 512
L = 30.0
[time]
horizon = 0.01
[output]
dir = "capi_check"
)";
}  // namespace

TEST_CASE("coefficient entry points") {
    double abef[4], aed[3];
    char err[256] = {0};
    REQUIRE(wl_coeffs_family('p', "-1/12", abef, err, sizeof err) == WL_OK);
    CHECK(abef[0] == doctest::Approx(-1.0 / 12.0));       // A = p
    CHECK(abef[1] == doctest::Approx(-1.0 / 12.0 - 1.0 / 6.0));
    CHECK(abef[2] == doctest::Approx(-1.5 * (-1.0 / 12.0) - 1.0 / 6.0));
    CHECK(abef[3] == doctest::Approx(-4.5 * (-1.0 / 12.0) - 23.0 / 24.0));

    REQUIRE(wl_derived_aed('q', "1/12", aed, err, sizeof err) == WL_OK);
    CHECK(aed[0] == doctest::Approx(-1.0 / 6.0));
    CHECK(aed[1] == doctest::Approx(-1.0 / 6.0));
    CHECK(aed[2] == doctest::Approx(-1.0 / 48.0));

    CHECK(wl_coeffs_family('x', "0", abef, err, sizeof err) == WL_ERR_CONFIG);
    CHECK(wl_coeffs_family('p', "abc", abef, err, sizeof err) == WL_ERR_CONFIG);
    CHECK(std::string(err).size() > 0);

    const char* table = wl_coeffs_table('p', "-1/12", err, sizeof err);
    REQUIRE(table != nullptr);
    CHECK(std::string(table).find("-1/12") != std::string::npos);
}

TEST_CASE("open, validate and close") {
    char err[512] = {0};
    const std::string good = write_temp("wl_capi_good.toml", kValidConfig);
    CHECK(wl_validate(good.c_str(), err, sizeof err) == WL_OK);

    wl_study* s = wl_study_open(good.c_str(), err, sizeof err);
    REQUIRE(s != nullptr);
    CHECK(std::string(wl_study_message(s)).empty());
    wl_study_close(s);
    wl_study_close(nullptr);  // must be a no-op

    const std::string bad =
        write_temp("wl_capi_bad.toml", "[study]\nkind = \"nope\"\n");
    CHECK(wl_validate(bad.c_str(), err, sizeof err) == WL_ERR_CONFIG);
    CHECK(std::string(err).find("study.kind") != std::string::npos);
    CHECK(wl_study_open(bad.c_str(), err, sizeof err) == nullptr);
    CHECK(wl_validate("/nonexistent/file.toml", err, sizeof err) == WL_ERR_CONFIG);
}

TEST_CASE("run a tiny study through the handle") {
    char err[512] = {0};
    const std::string good = write_temp("wl_capi_run.toml", kValidConfig);
    wl_study* s = wl_study_open(good.c_str(), err, sizeof err);
    REQUIRE(s != nullptr);
    const wl_status st = wl_study_run(s, "/tmp/wl_capi_out");
    // tiny horizon: the soliton check passes trivially over 0.01 time units
    CHECK(st == WL_OK);
    CHECK(std::string(wl_study_message(s)).size() > 0);
    const std::string dir = wl_study_output_dir(s);
    CHECK(dir.find("capi_check") != std::string::npos);
    std::ifstream manifest(dir + "/manifest.txt");
    CHECK(manifest.good());
    wl_study_close(s);
}
