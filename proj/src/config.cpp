#include "config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace wavelab {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& line) {
    bool in_str = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_str = !in_str;
        if (line[i] == '#' && !in_str) return line.substr(0, i);
    }
    return line;
}

bool parse_number(const std::string& s, double& out, bool& is_int, long long& ival) {
    std::string t;
    for (char ch : s)
        if (ch != '_') t += ch;
    try {
        size_t pos = 0;
        out = std::stod(t, &pos);
        if (pos != t.size()) return false;
    } catch (...) {
        return false;
    }
    is_int = t.find_first_of(".eE") == std::string::npos;
    if (is_int) {
        try {
            ival = std::stoll(t);
        } catch (...) {
            is_int = false;
        }
    }
    return true;
}

}  // namespace

TomlDoc TomlDoc::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_string(ss.str());
}

TomlDoc TomlDoc::parse_string(const std::string& text) {
    TomlDoc doc;
    std::istringstream in(text);
    std::string line, prefix;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (line.size() >= 4 && line.substr(0, 2) == "[[" &&
            line.substr(line.size() - 2) == "]]") {
            const std::string name = trim(line.substr(2, line.size() - 4));
            if (name.empty()) throw config_error("empty table name" + where);
            const size_t idx = doc.table_counts_[name]++;
            prefix = name + "." + std::to_string(idx) + ".";
        } else if (line.front() == '[' && line.back() == ']') {
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) throw config_error("empty section name" + where);
            prefix = name + ".";
        } else {
            const size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw config_error("expected key = value" + where);
            const std::string key = trim(line.substr(0, eq));
            std::string val = trim(line.substr(eq + 1));
            if (key.empty() || val.empty())
                throw config_error("malformed key = value" + where);
            Value v;
            if (val.front() == '"') {
                if (val.size() < 2 || val.back() != '"')
                    throw config_error("unterminated string" + where);
                v.kind = Value::Kind::STRING;
                v.str = val.substr(1, val.size() - 2);
            } else if (val == "true" || val == "false") {
                v.kind = Value::Kind::BOOL;
                v.boolean = (val == "true");
            } else if (val.front() == '[') {
                if (val.back() != ']') throw config_error("unterminated array" + where);
                v.kind = Value::Kind::ARRAY;
                std::string body = val.substr(1, val.size() - 2);
                std::istringstream items(body);
                std::string item;
                while (std::getline(items, item, ',')) {
                    item = trim(item);
                    if (item.empty()) continue;
                    double num;
                    bool ii;
                    long long iv;
                    if (!parse_number(item, num, ii, iv))
                        throw config_error("non-numeric array element" + where);
                    v.array.push_back(num);
                }
            } else {
                v.kind = Value::Kind::NUMBER;
                if (!parse_number(val, v.number, v.number_is_int, v.integer))
                    throw config_error("cannot parse value '" + val + "'" + where);
            }
            doc.values_[prefix + key] = std::move(v);
        }
    }
    return doc;
}

const TomlDoc::Value& TomlDoc::at(const std::string& path) const {
    auto it = values_.find(path);
    if (it == values_.end()) throw config_error("missing config field: " + path);
    return it->second;
}

bool TomlDoc::has(const std::string& path) const { return values_.count(path) != 0; }

std::string TomlDoc::get_string(const std::string& path) const {
    const Value& v = at(path);
    if (v.kind != Value::Kind::STRING)
        throw config_error("config field is not a string: " + path);
    return v.str;
}

double TomlDoc::get_number(const std::string& path) const {
    const Value& v = at(path);
    if (v.kind != Value::Kind::NUMBER)
        throw config_error("config field is not a number: " + path);
    return v.number;
}

long long TomlDoc::get_int(const std::string& path) const {
    const Value& v = at(path);
    if (v.kind != Value::Kind::NUMBER || !v.number_is_int)
        throw config_error("config field is not an integer: " + path);
    return v.integer;
}

bool TomlDoc::get_bool(const std::string& path) const {
    const Value& v = at(path);
    if (v.kind != Value::Kind::BOOL)
        throw config_error("config field is not a boolean: " + path);
    return v.boolean;
}

std::vector<double> TomlDoc::get_number_array(const std::string& path) const {
    const Value& v = at(path);
    if (v.kind != Value::Kind::ARRAY)
        throw config_error("config field is not an array: " + path);
    return v.array;
}

size_t TomlDoc::table_count(const std::string& path) const {
    auto it = table_counts_.find(path);
    return it == table_counts_.end() ? 0 : it->second;
}

std::string TomlDoc::get_string_or(const std::string& path, const std::string& dflt) const {
    return has(path) ? get_string(path) : dflt;
}
double TomlDoc::get_number_or(const std::string& path, double dflt) const {
    return has(path) ? get_number(path) : dflt;
}
long long TomlDoc::get_int_or(const std::string& path, long long dflt) const {
    return has(path) ? get_int(path) : dflt;
}

std::vector<std::string> TomlDoc::keys() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : values_) out.push_back(k);
    return out;
}

namespace {

StudyKind parse_study(const std::string& s) {
    if (s == "consistency") return StudyKind::CONSISTENCY;
    if (s == "breaking") return StudyKind::BREAKING;
    if (s == "convergence") return StudyKind::CONVERGENCE;
    if (s == "soliton") return StudyKind::SOLITON;
    if (s == "model_error") return StudyKind::MODEL_ERROR;
    throw config_error("study.kind: unknown study '" + s + "'");
}

ModelSelector parse_model(const std::string& s) {
    if (s == "velocity_p") return ModelSelector::VELOCITY_P;
    if (s == "elevation_q") return ModelSelector::ELEVATION_Q;
    if (s == "custom") return ModelSelector::CUSTOM;
    if (s == "chgbw") return ModelSelector::CHGBW;
    if (s == "kdv_elevation") return ModelSelector::KDV_ELEVATION;
    if (s == "kdv_velocity") return ModelSelector::KDV_VELOCITY;
    throw config_error("model.family: unknown family '" + s + "'");
}

BathymetryKind parse_bathymetry(const std::string& s) {
    if (s == "flat") return BathymetryKind::FLAT;
    if (s == "gaussian_bump") return BathymetryKind::GAUSSIAN_BUMP;
    if (s == "smooth_step") return BathymetryKind::SMOOTH_STEP;
    if (s == "sinusoid") return BathymetryKind::SINUSOID;
    throw config_error("bathymetry.kind: unknown kind '" + s + "'");
}

RegimeTag parse_regime_tag(const std::string& s) {
    if (s == "ch_consistency") return RegimeTag::CH_CONSISTENCY;
    if (s == "kdv_consistency") return RegimeTag::KDV_CONSISTENCY;
    if (s == "ch_justified") return RegimeTag::CH_JUSTIFIED;
    if (s == "kdv_justified") return RegimeTag::KDV_JUSTIFIED;
    throw config_error("regime.tag: unknown tag '" + s + "'");
}

}  // namespace

ExperimentConfig parse_config(const TomlDoc& doc, const std::string& raw_text) {
    ExperimentConfig cfg;
    cfg.source_text = raw_text;
    cfg.study = parse_study(doc.get_string("study.kind"));
    cfg.model = parse_model(doc.get_string("model.family"));
    if (cfg.model == ModelSelector::VELOCITY_P || cfg.model == ModelSelector::ELEVATION_Q) {
        cfg.free_param = parse_rational(doc.get_string("model.value"));
    } else if (cfg.model == ModelSelector::CUSTOM) {
        cfg.A = parse_rational(doc.get_string("model.A"));
        cfg.B = parse_rational(doc.get_string("model.B"));
        cfg.E = parse_rational(doc.get_string("model.E"));
        cfg.F = parse_rational(doc.get_string("model.F"));
    }

    cfg.bathymetry.kind = parse_bathymetry(doc.get_string_or("bathymetry.kind", "flat"));
    cfg.bathymetry.center = doc.get_number_or("bathymetry.center", 0.0);
    cfg.bathymetry.width = doc.get_number_or("bathymetry.width", 1.0);

    const size_t nmem = doc.table_count("regime.member");
    if (nmem == 0) throw config_error("regime.member: at least one [[regime.member]] required");
    for (size_t i = 0; i < nmem; ++i) {
        const std::string p = "regime.member." + std::to_string(i) + ".";
        RegimeParams th;
        th.eps = doc.get_number(p + "eps");
        th.beta = doc.get_number(p + "beta");
        th.alpha = doc.get_number(p + "alpha");
        th.mu = doc.get_number(p + "mu");
        cfg.regime.members.push_back(th);
    }
    cfg.regime.tag = parse_regime_tag(doc.get_string("regime.tag"));
    cfg.regime.bound_constant = doc.get_number_or("regime.bound_constant", 4.0);

    cfg.grid_n = static_cast<int>(doc.get_int_or("grid.n", 256));
    cfg.grid_L = doc.get_number_or("grid.L", 30.0);

    cfg.dt_factor = doc.get_number_or("time.dt_factor", 0.25);
    cfg.horizon_multiple = doc.get_number_or("time.horizon", 1.0);
    cfg.store_every = doc.get_int_or("time.store_every", 1);

    cfg.init_amp = doc.get_number_or("initial.amp", 1.0);
    cfg.init_kappa = doc.get_number_or("initial.kappa", -1.0);
    cfg.init_x0 = doc.get_number_or("initial.x0", 0.0);

    cfg.output_dir = doc.get_string_or("output.dir", "out");
    cfg.seed = doc.get_int_or("output.seed", 0);

    validate_config(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string raw = ss.str();
    return parse_config(TomlDoc::parse_string(raw), raw);
}

void validate_config(const ExperimentConfig& cfg) {
    for (size_t i = 0; i < cfg.regime.members.size(); ++i) {
        const RegimeParams& th = cfg.regime.members[i];
        const std::string p = "regime.member." + std::to_string(i) + ".";
        try {
            th.validate();
        } catch (const std::exception& e) {
            throw config_error(p + ": " + e.what());
        }
        if (th.eps > 1.0) throw config_error(p + "eps: must be <= 1");
        if (th.beta >= 1.0) throw config_error(p + "beta: must be < 1 (depth positivity)");
    }
    const RegimeDiagnostics diag = check_regime(cfg.regime);
    if (!diag.pass) {
        std::string worst;
        for (const auto& r : diag.relations)
            if (!r.pass) worst = r.name;
        throw config_error("regime: relation '" + worst + "' violated for tag " +
                           regime_tag_name(cfg.regime.tag));
    }

    if (cfg.grid_n < 16 || (cfg.grid_n & (cfg.grid_n - 1)) != 0)
        throw config_error("grid.n: must be a power of two >= 16");
    if (cfg.grid_L <= 0.0) throw config_error("grid.L: must be > 0");
    if (cfg.dt_factor <= 0.0) throw config_error("time.dt_factor: must be > 0");
    if (cfg.horizon_multiple <= 0.0) throw config_error("time.horizon: must be > 0");
    if (cfg.store_every < 1) throw config_error("time.store_every: must be >= 1");

    // B-sign vs solver path: the general evolver needs m = -B > 0; B = 0
    // (p = 1/6) is reachable only through the m=0 KdV-top machinery.
    if (cfg.model == ModelSelector::VELOCITY_P || cfg.model == ModelSelector::ELEVATION_Q) {
        const ConstantCoeffs cc = cfg.model == ModelSelector::VELOCITY_P
                                      ? coeffs_from_p(cfg.free_param)
                                      : coeffs_from_q(cfg.free_param);
        if (!cc.regularized())
            throw config_error("model.value: B = param - 1/6 must be < 0 for the "
                               "regularized solver path (choose param < 1/6)");
    } else if (cfg.model == ModelSelector::CUSTOM) {
        if (cfg.B >= Rational(0))
            throw config_error("model.B: must be < 0 for the regularized solver path");
    }

    // Decay feasibility: sech^2 data of unit width must be negligible at the
    // box edge for the anchored antiderivatives.
    const double kappa = cfg.init_kappa > 0.0 ? cfg.init_kappa : 0.5;
    const double edge = std::abs(cfg.init_amp) *
                        std::pow(2.0 / (std::exp(kappa * (cfg.grid_L - std::abs(cfg.init_x0))) +
                                        std::exp(-kappa * (cfg.grid_L - std::abs(cfg.init_x0)))),
                                 2);
    if (edge > 1e-6)
        throw config_error("grid.L: initial profile does not decay at the box edge "
                           "(|u0(edge)| > 1e-6); enlarge L or narrow the profile");
}

const char* study_kind_name(StudyKind k) {
    switch (k) {
        case StudyKind::CONSISTENCY: return "consistency";
        case StudyKind::BREAKING: return "breaking";
        case StudyKind::CONVERGENCE: return "convergence";
        case StudyKind::SOLITON: return "soliton";
        case StudyKind::MODEL_ERROR: return "model_error";
    }
    return "?";
}

const char* model_selector_name(ModelSelector m) {
    switch (m) {
        case ModelSelector::VELOCITY_P: return "velocity_p";
        case ModelSelector::ELEVATION_Q: return "elevation_q";
        case ModelSelector::CUSTOM: return "custom";
        case ModelSelector::CHGBW: return "chgbw";
        case ModelSelector::KDV_ELEVATION: return "kdv_elevation";
        case ModelSelector::KDV_VELOCITY: return "kdv_velocity";
    }
    return "?";
}

}  // namespace wavelab
