#include "gp_geometry.hpp"

#include <numeric>

namespace fva {

ParabolicFunction fl12_twisted(int n, const Int& p) {
    if (n < 3) throw std::invalid_argument("fl12_twisted: n must be >= 3");
    std::vector<std::optional<unsigned>> v(static_cast<size_t>(n - 1), std::nullopt);
    v[0] = 1u;
    v[1] = 0u;
    return ParabolicFunction(n, p, std::move(v));
}

std::optional<unsigned> extend_f(const ParabolicFunction& f, const PositiveRoot& beta) {
    if (beta.j > f.n) throw std::invalid_argument("extend_f: root outside the system");
    std::optional<unsigned> best;
    for (int k = beta.i; k < beta.j; ++k) {
        const auto& v = f.values[static_cast<size_t>(k - 1)];
        if (!v) continue;
        if (!best || *v < *best) best = *v;
    }
    return best;
}

int gp_dimension(const ParabolicFunction& f) {
    int count = 0;
    for (const PositiveRoot& beta : positive_roots(f.root_system()))
        if (extend_f(f, beta)) ++count;
    return count;
}

int picard_number(const ParabolicFunction& f) { return f.finite_count(); }

bool in_picard_lattice(const ParabolicFunction& f, const Weight& w) {
    if (w.rank() != f.n - 1) return false;
    for (int k = 1; k < f.n; ++k) {
        const Int& a = w.coeffs[static_cast<size_t>(k - 1)];
        const auto& v = f.values[static_cast<size_t>(k - 1)];
        if (!v) {
            if (a != 0) return false;
        } else {
            if (a % int_pow(f.p, *v) != 0) return false;
        }
    }
    return true;
}

GPLineBundle anticanonical(const ParabolicFunction& f) {
    if (f.all_infinite())
        throw std::invalid_argument("anticanonical: f is infinite on every simple root");
    const RootSystemA rs = f.root_system();
    Weight sum(std::vector<Int>(static_cast<size_t>(rs.rank()), 0));
    for (const PositiveRoot& beta : positive_roots(rs)) {
        const auto r = extend_f(f, beta);
        if (!r) continue;
        sum = sum + root_as_weight(rs, beta) * int_pow(f.p, *r);
    }
    if (!in_picard_lattice(f, sum))
        throw std::logic_error("anticanonical: computed class violates the Picard lattice");
    return GPLineBundle(f, sum);
}

bool is_ample(const GPLineBundle& L) {
    bool any = false;
    for (int k = 1; k < L.f.n; ++k) {
        if (!L.f.values[static_cast<size_t>(k - 1)]) continue;
        any = true;
        if (L.weight.coeffs[static_cast<size_t>(k - 1)] <= 0) return false;
    }
    return any;
}

bool is_fano(const ParabolicFunction& f) { return is_ample(anticanonical(f)); }

Int divisibility(const GPLineBundle& L) {
    if (L.weight.is_zero()) throw std::invalid_argument("divisibility: zero bundle");
    // weight/d stays in the lattice iff d divides every c_i / p^{f(i)}.
    Int g = 0;
    for (int k = 1; k < L.f.n; ++k) {
        const auto& v = L.f.values[static_cast<size_t>(k - 1)];
        if (!v) continue;
        const Int m = L.weight.coeffs[static_cast<size_t>(k - 1)] / int_pow(L.f.p, *v);
        g = boost::multiprecision::gcd(g, m);
    }
    if (g == 0) throw std::logic_error("divisibility: no finite coefficients");
    return g;
}

Int fiber_degree(const GPLineBundle& L, const PositiveRoot& alpha) {
    if (!alpha.is_simple()) throw std::invalid_argument("fiber_degree: root must be simple");
    const auto& v = L.f.values[static_cast<size_t>(alpha.i - 1)];
    if (!v || *v != 1u)
        throw std::invalid_argument("fiber_degree: requires f(alpha) = 1");
    const Int c = pairing(L.weight, alpha);
    if (c % L.f.p != 0)
        throw std::invalid_argument("fiber_degree: pairing not divisible by p (lattice violation)");
    return c / L.f.p;
}

}  // namespace fva
