#include "fva.h"

#include "cohomology.hpp"
#include "reports.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

using namespace fva;

struct fva_report {
    VerificationReport rep;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fva_status fail(fva_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
fva_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::domain_error& e) {
        return fail(FVA_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FVA_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(FVA_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(FVA_ERR_INTERNAL, "unknown error");
    }
}

Weight weight_from_array(int n, const long long* coeffs, size_t len) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (!coeffs || len != static_cast<size_t>(n - 1))
        throw std::invalid_argument("weight must have n-1 coefficients");
    std::vector<Int> c(len);
    for (size_t k = 0; k < len; ++k) c[k] = coeffs[k];
    return Weight(std::move(c));
}

std::vector<std::optional<unsigned>> parse_f_values(const std::string& csv, int n) {
    std::vector<std::optional<unsigned>> out;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "inf" || item == "INF" || item == "oo") {
            out.push_back(std::nullopt);
        } else {
            size_t pos = 0;
            const unsigned long v = std::stoul(item, &pos);
            if (pos != item.size()) throw std::invalid_argument("bad f value: " + item);
            out.push_back(static_cast<unsigned>(v));
        }
    }
    if (out.size() != static_cast<size_t>(n - 1))
        throw std::invalid_argument("f needs one value per simple root (n-1 entries)");
    return out;
}

}  // namespace

extern "C" {

const char* fva_version(void) { return kToolVersion; }

const char* fva_last_error(void) { return g_last_error.c_str(); }

void fva_string_free(char* s) { std::free(s); }

fva_status fva_weyl_dim(int n, const long long* coeffs, size_t len, char** out_decimal) {
    if (!out_decimal) return fail(FVA_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] {
        const RootSystemA rs(n);
        const Int d = weyl_dim(rs, weight_from_array(n, coeffs, len));
        *out_decimal = dup_string(d.str());
        return *out_decimal ? FVA_OK : fail(FVA_ERR_INTERNAL, "allocation failed");
    });
}

fva_status fva_euler_char(int n, const long long* coeffs, size_t len, char** out_decimal) {
    if (!out_decimal) return fail(FVA_ERR_INVALID_ARGUMENT, "null output pointer");
    return guarded([&] {
        const RootSystemA rs(n);
        const Int d = euler_char(rs, weight_from_array(n, coeffs, len));
        *out_decimal = dup_string(d.str());
        return *out_decimal ? FVA_OK : fail(FVA_ERR_INTERNAL, "allocation failed");
    });
}

fva_status fva_gp_info(int n, unsigned long long p, const char* f_values_csv, char** out_json) {
    if (!out_json || !f_values_csv) return fail(FVA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const ParabolicFunction f(n, Int(p), parse_f_values(f_values_csv, n));
        json out;
        out["n"] = n;
        out["p"] = p;
        out["dimension"] = gp_dimension(f);
        out["picard_number"] = picard_number(f);
        json basis = json::array();
        for (int k = 1; k < n; ++k) {
            const auto& v = f.values[static_cast<size_t>(k - 1)];
            if (!v) continue;
            std::ostringstream b;
            if (*v > 0) b << "p^" << *v << "*";
            b << "w" << k;
            basis.push_back(b.str());
        }
        out["picard_basis"] = basis;
        const GPLineBundle mk = anticanonical(f);
        out["minus_k"] = to_string(mk.weight);
        out["fano"] = is_fano(f);
        out["divisibility"] = divisibility(mk).str();
        *out_json = dup_string(out.dump(2));
        return *out_json ? FVA_OK : fail(FVA_ERR_INTERNAL, "allocation failed");
    });
}

fva_status fva_verify_run(const char* target, unsigned long long p, int n_override,
                          unsigned flags, fva_report** out) {
    if (!out || !target) return fail(FVA_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        VerifyOptions opts;
        opts.seedless = (flags & FVA_VERIFY_SEEDLESS) != 0;
        opts.all_charts = (flags & FVA_VERIFY_ALL_CHARTS) != 0;
        if (n_override > 0) opts.n_override = n_override;
        std::optional<unsigned long long> pv;
        if (p > 0) pv = p;
        auto* handle = new fva_report{run_verify(target, pv, opts)};
        *out = handle;
        return FVA_OK;
    });
}

fva_status fva_sweep_run(unsigned long long max_p, unsigned flags, fva_report** out) {
    if (!out) return fail(FVA_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        VerifyOptions opts;
        opts.seedless = (flags & FVA_VERIFY_SEEDLESS) != 0;
        auto* handle = new fva_report{run_sweep(max_p, opts)};
        *out = handle;
        return FVA_OK;
    });
}

int fva_report_passed(const fva_report* r) {
    if (!r) return -1;
    return r->rep.passed() ? 1 : 0;
}

fva_status fva_report_render(const fva_report* r, fva_format fmt, char** out) {
    if (!r || !out) return fail(FVA_ERR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        std::string rendered;
        switch (fmt) {
            case FVA_FORMAT_JSON:
                rendered = r->rep.to_json().dump(2);
                break;
            case FVA_FORMAT_MARKDOWN:
                rendered = r->rep.to_markdown();
                break;
            case FVA_FORMAT_DOT:
                if (!r->rep.dot)
                    return fail(FVA_ERR_UNSUPPORTED, "report has no graph to render");
                rendered = *r->rep.dot;
                break;
            default:
                return fail(FVA_ERR_INVALID_ARGUMENT, "unknown format");
        }
        *out = dup_string(rendered);
        return *out ? FVA_OK : fail(FVA_ERR_INTERNAL, "allocation failed");
    });
}

void fva_report_free(fva_report* r) { delete r; }

}  // extern "C"
