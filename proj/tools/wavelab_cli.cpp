// Experiment runner for the wavelab library; links only the C API.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "CLI11.hpp"
#include "wavelab.h"

int main(int argc, char** argv) {
    CLI::App app{"wavelab: variable-bottom shallow-water wave model laboratory"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "Run the study described by a TOML config");
    run->add_option("config", config_path, "Path to config.toml")->required();

    std::string val_path;
    auto* validate = app.add_subcommand("validate", "Parse and validate a config, no run");
    validate->add_option("config", val_path, "Path to config.toml")->required();

    std::string family, value;
    auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient table for a family");
    coeffs->add_option("--family", family, "p or q")
        ->required()
        ->check(CLI::IsMember({"p", "q"}));
    coeffs->add_option("--value", value, "Family parameter, e.g. -1/12 or 0.25")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return WL_ERR_CONFIG;
    }

    char err[512] = {0};

    if (*validate) {
        const wl_status st = wl_validate(val_path.c_str(), err, sizeof err);
        if (st != WL_OK) {
            std::fprintf(stderr, "invalid config: %s\n", err);
            return WL_ERR_CONFIG;
        }
        std::printf("config ok\n");
        return WL_OK;
    }

    if (*coeffs) {
        const char* table = wl_coeffs_table(family[0], value.c_str(), err, sizeof err);
        if (!table) {
            std::fprintf(stderr, "error: %s\n", err);
            return WL_ERR_CONFIG;
        }
        std::printf("%s", table);
        return WL_OK;
    }

    // run
    wl_study* study = wl_study_open(config_path.c_str(), err, sizeof err);
    if (!study) {
        std::fprintf(stderr, "invalid config: %s\n", err);
        return WL_ERR_CONFIG;
    }
    const char* out_root = std::getenv("WAVELAB_OUT_ROOT");
    const wl_status st = wl_study_run(study, out_root);
    std::printf("%s", wl_study_message(study));
    if (st == WL_OK || st == WL_FAIL_TOLERANCE)
        std::printf("artifacts: %s\n", wl_study_output_dir(study));
    else
        std::fprintf(stderr, "error: %s\n", wl_study_message(study));
    wl_study_close(study);
    return st;
}
