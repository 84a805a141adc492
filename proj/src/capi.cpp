#include "wavelab.h"

#include <cstring>
#include <string>

#include "config.hpp"
#include "models.hpp"
#include "reconstruct.hpp"
#include "study.hpp"

using namespace wavelab;

struct wl_study {
    ExperimentConfig cfg;
    std::string message;
    std::string output_dir;
};

namespace {

void put_err(char* errbuf, size_t len, const std::string& msg) {
    if (!errbuf || len == 0) return;
    std::strncpy(errbuf, msg.c_str(), len - 1);
    errbuf[len - 1] = '\0';
}

/// Maps the library's exception taxonomy onto the C status codes.
template <typename Fn>
wl_status guarded(char* errbuf, size_t errbuf_len, Fn&& fn) {
    try {
        return fn();
    } catch (const config_error& e) {
        put_err(errbuf, errbuf_len, e.what());
        return WL_ERR_CONFIG;
    } catch (const invalid_input& e) {
        put_err(errbuf, errbuf_len, e.what());
        return WL_ERR_CONFIG;
    } catch (const nonpositive_depth& e) {
        put_err(errbuf, errbuf_len, e.what());
        return WL_ERR_NUMERICAL;
    } catch (const instability_error& e) {
        put_err(errbuf, errbuf_len, e.what());
        return WL_ERR_NUMERICAL;
    } catch (const numerical_failure& e) {
        put_err(errbuf, errbuf_len, e.what());
        return WL_ERR_NUMERICAL;
    } catch (const reconstruction_singularity& e) {
        put_err(errbuf, errbuf_len, e.what());
        return WL_ERR_NUMERICAL;
    } catch (const domain_error_small& e) {
        put_err(errbuf, errbuf_len, e.what());
        return WL_ERR_NUMERICAL;
    } catch (const std::invalid_argument& e) {
        put_err(errbuf, errbuf_len, e.what());
        return WL_ERR_CONFIG;
    } catch (const std::exception& e) {
        put_err(errbuf, errbuf_len, e.what());
        return WL_ERR_INTERNAL;
    }
}

thread_local std::string g_table;

}  // namespace

extern "C" {

wl_study* wl_study_open(const char* config_path, char* errbuf, size_t errbuf_len) {
    if (!config_path) {
        put_err(errbuf, errbuf_len, "config path is null");
        return nullptr;
    }
    wl_study* s = nullptr;
    guarded(errbuf, errbuf_len, [&] {
        s = new wl_study{load_config(config_path), "", ""};
        return WL_OK;
    });
    return s;
}

wl_status wl_validate(const char* config_path, char* errbuf, size_t errbuf_len) {
    if (!config_path) {
        put_err(errbuf, errbuf_len, "config path is null");
        return WL_ERR_CONFIG;
    }
    return guarded(errbuf, errbuf_len, [&] {
        load_config(config_path);
        return WL_OK;
    });
}

wl_status wl_study_run(wl_study* study, const char* out_root) {
    if (!study) return WL_ERR_CONFIG;
    char err[512] = {0};
    const wl_status st = guarded(err, sizeof err, [&] {
        const StudyResult res = run_study(study->cfg, out_root ? out_root : ".");
        study->message = res.summary;
        study->output_dir = res.output_dir;
        return res.pass ? WL_OK : WL_FAIL_TOLERANCE;
    });
    if (st != WL_OK && st != WL_FAIL_TOLERANCE) study->message = err;
    return st;
}

const char* wl_study_message(const wl_study* study) {
    return study ? study->message.c_str() : "";
}

const char* wl_study_output_dir(const wl_study* study) {
    return study ? study->output_dir.c_str() : "";
}

void wl_study_close(wl_study* study) { delete study; }

wl_status wl_coeffs_family(char family, const char* value, double out[4], char* errbuf,
                           size_t errbuf_len) {
    if ((family != 'p' && family != 'q') || !value || !out) {
        put_err(errbuf, errbuf_len, "family must be 'p' or 'q' with a value");
        return WL_ERR_CONFIG;
    }
    return guarded(errbuf, errbuf_len, [&] {
        const Rational v = parse_rational(value);
        const ConstantCoeffs cc = family == 'p' ? coeffs_from_p(v) : coeffs_from_q(v);
        out[0] = boost::rational_cast<double>(cc.A);
        out[1] = boost::rational_cast<double>(cc.B);
        out[2] = boost::rational_cast<double>(cc.E);
        out[3] = boost::rational_cast<double>(cc.F);
        return WL_OK;
    });
}

wl_status wl_derived_aed(char family, const char* value, double out[3], char* errbuf,
                         size_t errbuf_len) {
    if ((family != 'p' && family != 'q') || !value || !out) {
        put_err(errbuf, errbuf_len, "family must be 'p' or 'q' with a value");
        return WL_ERR_CONFIG;
    }
    return guarded(errbuf, errbuf_len, [&] {
        const Rational v = parse_rational(value);
        const ConstantCoeffs cc = family == 'p' ? coeffs_from_p(v) : coeffs_from_q(v);
        const DerivedAED aed = derived_aed(cc);
        out[0] = boost::rational_cast<double>(aed.a);
        out[1] = boost::rational_cast<double>(aed.e);
        out[2] = boost::rational_cast<double>(aed.d);
        return WL_OK;
    });
}

const char* wl_coeffs_table(char family, const char* value, char* errbuf, size_t errbuf_len) {
    if ((family != 'p' && family != 'q') || !value) {
        put_err(errbuf, errbuf_len, "family must be 'p' or 'q' with a value");
        return nullptr;
    }
    const wl_status st = guarded(errbuf, errbuf_len, [&] {
        g_table = print_coeffs(family, value);
        return WL_OK;
    });
    return st == WL_OK ? g_table.c_str() : nullptr;
}

}  // extern "C"
