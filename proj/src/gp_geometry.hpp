#pragma once

// Homogeneous spaces G/P for SL(n) with non-reduced stabilizer, encoded by a
// parabolic function f from simple roots to N u {infinity}: Picard lattice
// membership, dimension, anticanonical class, ampleness/Fano tests,
// divisibility and fiber degrees.

#include "schur.hpp"
#include "weight_lattice.hpp"

#include <optional>

namespace fva {

// f : {1..n-1} -> N u {inf}; nullopt encodes infinity.  p is the ambient
// characteristic.  f extends to all positive roots by the infimum over the
// support.
struct ParabolicFunction {
    int n;
    Int p;
    std::vector<std::optional<unsigned>> values;  // index k-1 holds f(k)

    ParabolicFunction(int n_, Int p_, std::vector<std::optional<unsigned>> values_)
        : n(n_), p(std::move(p_)), values(std::move(values_)) {
        if (n < 2) throw std::invalid_argument("ParabolicFunction: n must be >= 2");
        if (p < 2) throw std::invalid_argument("ParabolicFunction: p must be >= 2");
        if (values.size() != static_cast<size_t>(n - 1))
            throw std::invalid_argument("ParabolicFunction: need one value per simple root");
    }

    RootSystemA root_system() const { return RootSystemA(n); }

    bool all_infinite() const {
        for (const auto& v : values)
            if (v) return false;
        return true;
    }

    int finite_count() const {
        int c = 0;
        for (const auto& v : values)
            if (v) ++c;
        return c;
    }
};

// The family studied throughout: finite exactly on the first two simple
// roots, with one Frobenius twist along the first (f(1) = 1, f(2) = 0).
// The reduced stabilizer is the parabolic of the flag Fl(1, 2, n).
ParabolicFunction fl12_twisted(int n, const Int& p);

// inf of f over support(beta); nullopt = infinity.
std::optional<unsigned> extend_f(const ParabolicFunction& f, const PositiveRoot& beta);

// Number of positive roots with finite extended value = dim G/P.
int gp_dimension(const ParabolicFunction& f);

// Rank of the Picard lattice (count of finite values).
int picard_number(const ParabolicFunction& f);

// Membership in Pic(G/P) inside the weight lattice: coefficient of w_i must
// vanish when f(i) = inf and be divisible by p^{f(i)} otherwise.
bool in_picard_lattice(const ParabolicFunction& f, const Weight& w);

// A line bundle on G/P; the weight is validated against the Picard lattice.
struct GPLineBundle {
    ParabolicFunction f;
    Weight weight;

    GPLineBundle(ParabolicFunction f_, Weight w) : f(std::move(f_)), weight(std::move(w)) {
        if (weight.rank() != f.n - 1) throw std::invalid_argument("GPLineBundle: rank mismatch");
        if (!in_picard_lattice(f, weight))
            throw std::invalid_argument("GPLineBundle: weight not in the Picard lattice");
    }
};

// -K_X = sum over positive roots beta with f(beta) finite of p^{f(beta)} beta.
// The result is checked against the Picard lattice rather than assumed.
GPLineBundle anticanonical(const ParabolicFunction& f);

// Ample iff the coefficient of w_i is positive for every i with f(i) finite.
// (Ample line bundles on these spaces are in fact very ample.)
bool is_ample(const GPLineBundle& L);

bool is_fano(const ParabolicFunction& f);

// Largest d >= 1 with weight/d still in the Picard lattice.
Int divisibility(const GPLineBundle& L);

// Degree on the P^1 fibers of G/P -> G/Q along a simple root with f = 1:
// <weight, alpha^vee> / p.
Int fiber_degree(const GPLineBundle& L, const PositiveRoot& alpha);

}  // namespace fva
