// fva - batch verifier CLI.  All computation happens behind the C API of
// libfva; this tool parses flags, renders, and maps results to exit codes:
//   0 every assertion passed, 1 an assertion failed, 2 usage error.

#include <fva.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool is_prime(unsigned long long v) {
    if (v < 2) return false;
    for (unsigned long long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return kExitPass;
    }
    std::ofstream out(out_path);
    if (!out) return usage_error("cannot write " + out_path);
    out << text;
    return kExitPass;
}

std::optional<std::vector<long long>> parse_weight(const std::string& csv) {
    std::vector<long long> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) return std::nullopt;
        } catch (...) {
            return std::nullopt;
        }
    }
    if (out.empty()) return std::nullopt;
    return out;
}

fva_format parse_format(const std::string& name, bool* ok) {
    *ok = true;
    if (name == "json") return FVA_FORMAT_JSON;
    if (name == "md" || name == "markdown") return FVA_FORMAT_MARKDOWN;
    if (name == "dot") return FVA_FORMAT_DOT;
    *ok = false;
    return FVA_FORMAT_JSON;
}

int render_and_exit(fva_report* rep, const std::string& format, const std::string& out_path) {
    bool ok = false;
    const fva_format fmt = parse_format(format, &ok);
    if (!ok) {
        fva_report_free(rep);
        return usage_error("unknown format: " + format);
    }
    char* text = nullptr;
    const fva_status st = fva_report_render(rep, fmt, &text);
    if (st != FVA_OK) {
        std::cerr << "error: " << fva_last_error() << "\n";
        fva_report_free(rep);
        return kExitUsage;
    }
    const int emitted = emit(text, out_path);
    fva_string_free(text);
    const int passed = fva_report_passed(rep);
    fva_report_free(rep);
    if (emitted != kExitPass) return emitted;
    return passed == 1 ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for characteristic-p vanishing failures"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("fva ") + fva_version());

    std::string format = "md";
    std::string out_path;
    bool seedless = false;

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification target");
    std::string target;
    unsigned long long p = 0;
    int n_override = 0;
    bool all_charts = false;
    verify->add_option("target", target, "thm21 | thm31 | dim3 | yasuda")->required();
    verify->add_option("--p", p, "characteristic (prime)");
    verify->add_option("--n", n_override, "dimension override (yasuda)");
    verify->add_flag("--all-charts", all_charts, "dim3: verify each translated chart");
    verify->add_option("--format", format, "json | md | dot");
    verify->add_option("--out", out_path, "write the report to a file");
    verify->add_flag("--seedless", seedless, "omit timing for byte-stable output");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "verify both families for every prime <= max-p");
    unsigned long long max_p = 0;
    sweep->add_option("--max-p", max_p, "largest prime to test")->required();
    sweep->add_option("--format", format, "json | md");
    sweep->add_option("--out", out_path, "write the table to a file");
    sweep->add_flag("--seedless", seedless, "omit timing for byte-stable output");

    // weight tools
    auto* wd = app.add_subcommand("weyl-dim", "dimension of the Schur module of a dominant weight");
    int n = 0;
    std::string weight_csv;
    wd->add_option("--n", n, "SL(n)")->required();
    wd->add_option("--weight", weight_csv, "comma-separated omega coefficients")->required();
    wd->add_option("--format", format, "json | md");

    auto* eu = app.add_subcommand("euler", "Euler characteristic of a weight on the flag variety");
    eu->add_option("--n", n, "SL(n)")->required();
    eu->add_option("--weight", weight_csv, "comma-separated omega coefficients")->required();
    unsigned long long euler_p = 0;
    eu->add_option("--p", euler_p, "characteristic (echoed only; chi is independent of p)");
    eu->add_option("--format", format, "json | md");

    auto* gp = app.add_subcommand("gp-info", "dimension, Picard data and -K of G/P");
    std::string f_csv;
    gp->add_option("--n", n, "SL(n)")->required();
    gp->add_option("--p", p, "characteristic (prime)")->required();
    gp->add_option("--f", f_csv, "parabolic function values, e.g. 1,0,inf,inf")->required();
    gp->add_option("--format", format, "json | md");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    if (verify->parsed()) {
        if (target == "thm21" && (!is_prime(p) || p < 3))
            return usage_error("thm21 requires a prime --p >= 3");
        if (target == "thm31" && !is_prime(p)) return usage_error("thm31 requires a prime --p");
        if (target == "yasuda" && !is_prime(p)) return usage_error("yasuda requires a prime --p");
        if (target == "dim3" && p != 0 && p != 2) return usage_error("dim3 works over F_2 only");
        unsigned flags = 0;
        if (seedless) flags |= FVA_VERIFY_SEEDLESS;
        if (all_charts) flags |= FVA_VERIFY_ALL_CHARTS;
        fva_report* rep = nullptr;
        const fva_status st = fva_verify_run(target.c_str(), p, n_override, flags, &rep);
        if (st != FVA_OK) return usage_error(fva_last_error());
        return render_and_exit(rep, format, out_path);
    }

    if (sweep->parsed()) {
        unsigned flags = seedless ? FVA_VERIFY_SEEDLESS : 0u;
        fva_report* rep = nullptr;
        const fva_status st = fva_sweep_run(max_p, flags, &rep);
        if (st != FVA_OK) return usage_error(fva_last_error());
        return render_and_exit(rep, format, out_path);
    }

    if (wd->parsed() || eu->parsed()) {
        const auto coeffs = parse_weight(weight_csv);
        if (!coeffs) return usage_error("malformed --weight");
        char* text = nullptr;
        const fva_status st =
            wd->parsed() ? fva_weyl_dim(n, coeffs->data(), coeffs->size(), &text)
                         : fva_euler_char(n, coeffs->data(), coeffs->size(), &text);
        if (st != FVA_OK) return usage_error(fva_last_error());
        std::string value = text;
        fva_string_free(text);
        if (format == "json") {
            std::string name = wd->parsed() ? "weyl_dim" : "euler_char";
            std::string extra;
            if (eu->parsed() && euler_p > 0)
                extra = ",\n  \"p\": " + std::to_string(euler_p);
            value = "{\n  \"op\": \"" + name + "\",\n  \"n\": " + std::to_string(n) + extra +
                    ",\n  \"weight\": \"" + weight_csv + "\",\n  \"value\": \"" + value + "\"\n}";
        }
        return emit(value, out_path);
    }

    if (gp->parsed()) {
        if (!is_prime(p)) return usage_error("gp-info requires a prime --p");
        char* text = nullptr;
        const fva_status st = fva_gp_info(n, p, f_csv.c_str(), &text);
        if (st != FVA_OK) return usage_error(fva_last_error());
        std::string value = text;
        fva_string_free(text);
        return emit(value, out_path);
    }

    return usage_error("no subcommand");
}
