#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "config.hpp"
#include "doctest.h"

using namespace wavelab;

namespace {
const char* kGoodConfig = R"(
# consistency study over a mu-family
[study]
kind = "consistency"

[model]
family = "velocity_p"
value = "-1/12"

[bathymetry]
kind = "gaussian_bump"
center = 0.0
width = 1.0

[regime]
tag = "ch_consistency"
bound_constant = 1.5

[[regime.member]]
eps = 0.283
beta = 0.0064
alpha = 1.0
mu = 0.08

[[regime.member]]
eps = 0.2
beta = 0.0016
alpha = 1.0
mu = 0.04

[grid]
n = 256
L = 30.0

[time]
dt_factor = 0.25
horizon = 1.0

[initial]
amp = 1.0
x0 = 0.0

[output]
dir = "consistency_demo"
seed = 7
)";
}  // namespace

TEST_CASE("toml subset parser") {
    TomlDoc doc = TomlDoc::parse_string(
        "top = 1\n[sec]\ns = \"text\" # comment\nf = -2.5e-3\nb = true\n"
        "arr = [1, 2.5, -3]\n[[tbl]]\nx = 1\n[[tbl]]\nx = 2\n");
    CHECK(doc.get_int("top") == 1);
    CHECK(doc.get_string("sec.s") == "text");
    CHECK(doc.get_number("sec.f") == doctest::Approx(-2.5e-3));
    CHECK(doc.get_bool("sec.b"));
    CHECK(doc.get_number_array("sec.arr") == std::vector<double>{1.0, 2.5, -3.0});
    CHECK(doc.table_count("tbl") == 2);
    CHECK(doc.get_int("tbl.0.x") == 1);
    CHECK(doc.get_int("tbl.1.x") == 2);

    CHECK_THROWS_AS(doc.get_string("missing"), config_error);
    CHECK_THROWS_AS(doc.get_int("sec.s"), config_error);
    CHECK_THROWS_AS(TomlDoc::parse_string("no equals here\n"), config_error);
    CHECK_THROWS_AS(TomlDoc::parse_string("k = \"unterminated\n"), config_error);
}

TEST_CASE("full config parses and validates") {
    const ExperimentConfig cfg = parse_config(TomlDoc::parse_string(kGoodConfig), kGoodConfig);
    CHECK(cfg.study == StudyKind::CONSISTENCY);
    CHECK(cfg.model == ModelSelector::VELOCITY_P);
    CHECK(cfg.free_param == Rational(-1, 12));
    CHECK(cfg.bathymetry.kind == BathymetryKind::GAUSSIAN_BUMP);
    CHECK(cfg.regime.members.size() == 2);
    CHECK(cfg.regime.members[1].mu == 0.04);
    CHECK(cfg.grid_n == 256);
    CHECK(cfg.output_dir == "consistency_demo");
    CHECK(cfg.seed == 7);
}

TEST_CASE("config echo round-trips to an equivalent config") {
    const ExperimentConfig cfg = parse_config(TomlDoc::parse_string(kGoodConfig), kGoodConfig);
    const ExperimentConfig again =
        parse_config(TomlDoc::parse_string(cfg.source_text), cfg.source_text);
    CHECK(again.study == cfg.study);
    CHECK(again.free_param == cfg.free_param);
    CHECK(again.regime.members.size() == cfg.regime.members.size());
    CHECK(again.regime.members[0].eps == cfg.regime.members[0].eps);
    CHECK(again.grid_L == cfg.grid_L);
}

namespace {
std::string patched(const std::string& from, const std::string& to) {
    std::string s = kGoodConfig;
    const size_t at = s.find(from);
    REQUIRE(at != std::string::npos);
    return s.replace(at, from.size(), to);
}

void expect_error(const std::string& text, const std::string& needle) {
    try {
        parse_config(TomlDoc::parse_string(text), text);
        FAIL_CHECK("expected config_error mentioning ", needle);
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
}
}  // namespace

TEST_CASE("validation names the offending field") {
    expect_error(patched("eps = 0.2", "eps = 1.5"), "eps");
    expect_error(patched("n = 256", "n = 100"), "grid.n");
    expect_error(patched("kind = \"consistency\"", "kind = \"nope\""), "study.kind");
    // B >= 0 (p = 1/6) is rejected on the regularized path
    expect_error(patched("value = \"-1/12\"", "value = \"1/6\""), "model.value");
    // regime relation violation: huge beta breaks beta*alpha = O(mu)
    expect_error(patched("beta = 0.0064", "beta = 0.9"), "regime");
}
