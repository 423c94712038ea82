#pragma once

// End-to-end verification of the 3-fold quotient (G_m)^3 / (Z/2) in
// characteristic 2: starting from the torus chart with sigma(x) = 1/x, derive
// the blow-up charts, fixed-point-scheme ideals, Cartier verdicts, Artin and
// Swan numbers, descend the canonical class through the quotient, and
// classify the singularity.  Every number feeding the ledger comes out of the
// chart calculus, never from a table.

#include "discrepancy.hpp"
#include "report_types.hpp"

namespace fva {

struct Dim3Options {
    // Verify the remaining fixed points of the first exceptional divisor by
    // translated blow-ups instead of citing the transitive symmetry.
    bool all_charts = false;
};

VerificationReport verify_dim3(const Dim3Options& opts = {});

// Numeric classifier for the linear quotient V/(Z/p); n defaults to the
// smallest window-admissible dimension for the given p.
VerificationReport verify_yasuda(unsigned long long p, std::optional<int> n_opt);

}  // namespace fva
