#ifndef WAVELAB_CONFIG_HPP
#define WAVELAB_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coeffs.hpp"
#include "params.hpp"

namespace wavelab {

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimal TOML subset: [section], [[array.of.tables]], key = value with
/// strings, booleans, integers, floats and flat arrays; # comments. Values
/// are addressed by dotted path; array-of-table entries get a numeric path
/// segment ("regime.member.0.eps").
class TomlDoc {
  public:
    static TomlDoc parse_file(const std::string& path);
    static TomlDoc parse_string(const std::string& text);

    bool has(const std::string& path) const;
    std::string get_string(const std::string& path) const;
    double get_number(const std::string& path) const;
    long long get_int(const std::string& path) const;
    bool get_bool(const std::string& path) const;
    std::vector<double> get_number_array(const std::string& path) const;
    /// Count of [[path]] entries.
    size_t table_count(const std::string& path) const;

    std::string get_string_or(const std::string& path, const std::string& dflt) const;
    double get_number_or(const std::string& path, double dflt) const;
    long long get_int_or(const std::string& path, long long dflt) const;

    /// All keys, for unknown-key validation.
    std::vector<std::string> keys() const;

  private:
    struct Value {
        enum class Kind { STRING, BOOL, NUMBER, ARRAY } kind;
        std::string str;
        bool boolean = false;
        double number = 0.0;
        bool number_is_int = false;
        long long integer = 0;
        std::vector<double> array;
    };
    std::map<std::string, Value> values_;
    std::map<std::string, size_t> table_counts_;

    const Value& at(const std::string& path) const;
};

enum class StudyKind { CONSISTENCY, BREAKING, CONVERGENCE, SOLITON, MODEL_ERROR };

enum class ModelSelector { VELOCITY_P, ELEVATION_Q, CUSTOM, CHGBW, KDV_ELEVATION, KDV_VELOCITY };

struct ExperimentConfig {
    StudyKind study = StudyKind::CONSISTENCY;

    ModelSelector model = ModelSelector::VELOCITY_P;
    Rational free_param{0};           // p or q
    Rational A{0}, B{0}, E{0}, F{0};  // CUSTOM only

    BathymetryProfile bathymetry;
    double beta_scale = 1.0;  // multiplies each member's beta if != 1 (rarely used)

    RegimeFamily regime;

    int grid_n = 256;
    double grid_L = 30.0;

    double dt_factor = 0.25;      // dt = dt_factor * dx
    double horizon_multiple = 1;  // t_final = horizon_multiple / eps
    long long store_every = 1;

    // Initial data: a * sech^2(kappa (x - x0)); kappa <= 0 means the soliton
    // value sqrt(3 eps a / (4 mu)) is substituted per member.
    double init_amp = 1.0;
    double init_kappa = -1.0;
    double init_x0 = 0.0;

    std::string output_dir = "out";
    long long seed = 0;

    std::string source_text;  // raw TOML for the manifest echo
};

/// Parses and validates; throws config_error naming the offending field path.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const TomlDoc& doc, const std::string& raw_text);

/// Validation only (regime relations, B sign vs solver path, eps <= 1, grid).
void validate_config(const ExperimentConfig& cfg);

const char* study_kind_name(StudyKind k);
const char* model_selector_name(ModelSelector m);

}  // namespace wavelab

#endif
