#pragma once

// Target dispatch and report assembly for the command-line verifier.

#include "report_types.hpp"

#include <optional>

namespace fva {

struct VerifyOptions {
    std::optional<int> n_override;  // yasuda only
    bool seedless = false;          // omit the timing field for reproducible bytes
    bool all_charts = false;        // dim3 only
};

// target in {thm21, thm31, dim3, yasuda}; p is required where applicable
// (dim3 fixes p = 2 and rejects anything else).
VerificationReport run_verify(const std::string& target, std::optional<unsigned long long> p,
                              const VerifyOptions& opts);

// One row per prime <= max_p and applicable theorem; merged by p.
VerificationReport run_sweep(unsigned long long max_p, const VerifyOptions& opts);

}  // namespace fva
