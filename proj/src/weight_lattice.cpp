#include "weight_lattice.hpp"

#include <sstream>

namespace fva {

namespace {

void check_same_rank(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
}

void check_root_fits(const Weight& mu, const PositiveRoot& beta) {
    // beta = L_i - L_j needs j <= n = rank + 1.
    if (beta.j > mu.rank() + 1) throw std::invalid_argument("root/weight rank mismatch");
}

void check_simple(const PositiveRoot& alpha) {
    if (!alpha.is_simple()) throw std::invalid_argument("expected a simple root");
}

}  // namespace

Weight Weight::operator+(const Weight& o) const {
    check_same_rank(*this, o);
    std::vector<Int> c(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) c[k] = coeffs[k] + o.coeffs[k];
    return Weight(std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
    check_same_rank(*this, o);
    std::vector<Int> c(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) c[k] = coeffs[k] - o.coeffs[k];
    return Weight(std::move(c));
}

Weight Weight::operator*(const Int& s) const {
    std::vector<Int> c(coeffs.size());
    for (size_t k = 0; k < coeffs.size(); ++k) c[k] = coeffs[k] * s;
    return Weight(std::move(c));
}

std::string to_string(const Weight& w) {
    if (w.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < w.rank(); ++k) {
        const Int& a = w.coeffs[k];
        if (a == 0) continue;
        if (!first) out << (a > 0 ? " + " : " - ");
        else if (a < 0) out << "-";
        first = false;
        const Int mag = boost::multiprecision::abs(a);
        if (mag != 1) out << mag.str() << "*";
        out << "w" << (k + 1);
    }
    return out.str();
}

std::vector<PositiveRoot> positive_roots(const RootSystemA& rs) {
    std::vector<PositiveRoot> out;
    out.reserve(static_cast<size_t>(rs.positive_root_count()));
    for (int i = 1; i < rs.n; ++i)
        for (int j = i + 1; j <= rs.n; ++j) out.emplace_back(i, j);
    return out;
}

Weight simple_root_weight(const RootSystemA& rs, int k) {
    if (k < 1 || k > rs.rank()) throw std::invalid_argument("simple root index out of range");
    std::vector<Int> c(static_cast<size_t>(rs.rank()), 0);
    if (k - 2 >= 0) c[static_cast<size_t>(k - 2)] = -1;
    c[static_cast<size_t>(k - 1)] = 2;
    if (k < rs.rank()) c[static_cast<size_t>(k)] = -1;
    return Weight(std::move(c));
}

Weight root_as_weight(const RootSystemA& rs, const PositiveRoot& beta) {
    if (beta.j > rs.n) throw std::invalid_argument("root outside the system");
    std::vector<Int> c(static_cast<size_t>(rs.rank()), 0);
    Weight w(std::move(c));
    for (int k = beta.i; k < beta.j; ++k) w = w + simple_root_weight(rs, k);
    return w;
}

Int pairing(const Weight& mu, const PositiveRoot& beta) {
    check_root_fits(mu, beta);
    Int s = 0;
    for (int k = beta.i; k < beta.j; ++k) s += mu.coeffs[static_cast<size_t>(k - 1)];
    return s;
}

Weight rho(const RootSystemA& rs) {
    return Weight(std::vector<Int>(static_cast<size_t>(rs.rank()), 1));
}

Weight simple_reflection(const RootSystemA& rs, const Weight& mu, const PositiveRoot& alpha) {
    check_simple(alpha);
    check_root_fits(mu, alpha);
    const Int c = pairing(mu, alpha);
    return mu - simple_root_weight(rs, alpha.i) * c;
}

Weight dot_reflection(const RootSystemA& rs, const Weight& mu, const PositiveRoot& alpha) {
    check_simple(alpha);
    check_root_fits(mu, alpha);
    const Int c = pairing(mu, alpha) + 1;
    return mu - simple_root_weight(rs, alpha.i) * c;
}

std::vector<int> support(const PositiveRoot& beta) {
    std::vector<int> s;
    s.reserve(static_cast<size_t>(beta.j - beta.i));
    for (int k = beta.i; k < beta.j; ++k) s.push_back(k);
    return s;
}

std::vector<Int> to_l_coordinates(const Weight& mu) {
    const size_t n = mu.coeffs.size() + 1;
    std::vector<Int> b(n, 0);
    // b_k = a_k + a_{k+1} + ... + a_{n-1}, b_n = 0.
    for (size_t k = n - 1; k-- > 0;) b[k] = b[k + 1] + mu.coeffs[k];
    return b;
}

Weight weight_from_l_coordinates(const std::vector<Int>& b) {
    if (b.size() < 2) throw std::invalid_argument("need at least two L-coordinates");
    std::vector<Int> c(b.size() - 1);
    for (size_t k = 0; k + 1 < b.size(); ++k) c[k] = b[k] - b[k + 1];
    return Weight(std::move(c));
}

}  // namespace fva
