#pragma once

// Exact arithmetic for the type A_{n-1} weight lattice of SL(n): fundamental
// weights, positive roots, coroot pairings, ordinary and dot reflections.
//
// Weights live in the fundamental-weight basis; L-coordinates (the standard
// basis of the character lattice modulo the all-ones relation) are a derived
// view normalized by b_n = 0.

#include "bigint.hpp"

#include <cstddef>
#include <vector>

namespace fva {

// The ambient root system A_{n-1} for SL(n), n >= 2.
struct RootSystemA {
    int n;

    explicit RootSystemA(int n_) : n(n_) {
        if (n < 2) throw std::invalid_argument("RootSystemA: n must be >= 2");
    }

    int rank() const { return n - 1; }
    long positive_root_count() const { return static_cast<long>(n) * (n - 1) / 2; }
};

// The positive root L_i - L_j, 1 <= i < j <= n.
struct PositiveRoot {
    int i;
    int j;

    PositiveRoot(int i_, int j_) : i(i_), j(j_) {
        if (i < 1 || j <= i) throw std::invalid_argument("PositiveRoot: need 1 <= i < j");
    }

    bool is_simple() const { return j == i + 1; }

    bool operator==(const PositiveRoot& o) const { return i == o.i && j == o.j; }
};

inline PositiveRoot simple_root(int k) { return PositiveRoot(k, k + 1); }

// Integer weight in the omega-basis; coeffs.size() == n - 1.
struct Weight {
    std::vector<Int> coeffs;

    Weight() = default;
    explicit Weight(std::vector<Int> c) : coeffs(std::move(c)) {}

    int rank() const { return static_cast<int>(coeffs.size()); }

    bool is_dominant() const {
        for (const Int& a : coeffs)
            if (a < 0) return false;
        return true;
    }

    bool is_zero() const {
        for (const Int& a : coeffs)
            if (a != 0) return false;
        return true;
    }

    bool operator==(const Weight& o) const { return coeffs == o.coeffs; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator*(const Int& s) const;
};

// Human-readable "3*w1 + w2" form; used in reports and error messages.
std::string to_string(const Weight& w);

// All positive roots of the system, ordered (i, j) lexicographically.
std::vector<PositiveRoot> positive_roots(const RootSystemA& rs);

// The simple root alpha_k expanded in the omega-basis:
// alpha_k = -w_{k-1} + 2 w_k - w_{k+1} (missing ends dropped).
Weight simple_root_weight(const RootSystemA& rs, int k);

// A positive root as a weight: L_i - L_j = alpha_i + ... + alpha_{j-1}.
Weight root_as_weight(const RootSystemA& rs, const PositiveRoot& beta);

// <mu, beta^vee> = a_i + ... + a_{j-1}.
Int pairing(const Weight& mu, const PositiveRoot& beta);

// Half the sum of the positive roots; equals the sum of the fundamental
// weights, i.e. the all-ones vector.
Weight rho(const RootSystemA& rs);

// s_alpha(mu) = mu - <mu, alpha^vee> alpha, alpha simple.
Weight simple_reflection(const RootSystemA& rs, const Weight& mu, const PositiveRoot& alpha);

// s_alpha . mu = mu - (<mu, alpha^vee> + 1) alpha, the dot action.
Weight dot_reflection(const RootSystemA& rs, const Weight& mu, const PositiveRoot& alpha);

// Simple-root indices with positive coefficient in beta: {i, ..., j-1}.
std::vector<int> support(const PositiveRoot& beta);

// L-coordinates (b_1, ..., b_n) with b_k - b_{k+1} = a_k, normalized b_n = 0.
std::vector<Int> to_l_coordinates(const Weight& mu);

// Inverse of to_l_coordinates (takes consecutive differences).
Weight weight_from_l_coordinates(const std::vector<Int>& b);

}  // namespace fva
