#pragma once

// Dimensions of Schur modules via the Weyl dimension formula and Euler
// characteristics of line bundles on the full flag variety, both exact.

#include "weight_lattice.hpp"

namespace fva {

// prod_{1<=i<j<=n} (a_i + ... + a_{j-1} + j - i) / (j - i) for dominant mu.
// Numerator and denominator are accumulated separately and divided once.
Int weyl_dim(const RootSystemA& rs, const Weight& mu);

// chi(G/B, mu) for arbitrary mu: dominantize mu + rho by sorting its
// L-coordinates with parity tracking; zero on singular weights.
Int euler_char(const RootSystemA& rs, const Weight& mu);

// Brute-force oracle: counts Gelfand-Tsetlin patterns whose top row is the
// partition to_l_coordinates(mu). Intentionally naive; small inputs only.
Int gt_pattern_count(const RootSystemA& rs, const Weight& mu);

}  // namespace fva
