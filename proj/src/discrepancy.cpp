#include "discrepancy.hpp"

#include <algorithm>
#include <sstream>

namespace fva {

std::string DivisorExpression::to_string() const {
    std::ostringstream out;
    out << "pi*" << base;
    for (const auto& [name, c] : coeffs) {
        if (c >= 0)
            out << " + ";
        else
            out << " - ";
        const long long m = c < 0 ? -c : c;
        if (m != 1) out << m << "*";
        out << name;
    }
    return out.str();
}

DiscrepancyLedger::DiscrepancyLedger(std::string base_symbol) : base_(std::move(base_symbol)) {}

DivisorExpression DiscrepancyLedger::blowup_canonical(int center_codim,
                                                      const std::string& new_divisor,
                                                      const std::optional<std::string>& on_divisor) {
    if (center_codim < 2) throw std::invalid_argument("blowup_canonical: center codim must be >= 2");
    if (coeff_.count(new_divisor)) throw std::invalid_argument("blowup_canonical: duplicate divisor");
    if (on_divisor && !coeff_.count(*on_divisor))
        throw std::invalid_argument("blowup_canonical: unknown parent divisor");

    // K_new = pi^* K_old + (codim-1) * new; the total transform of the parent
    // contributes its own coefficient to the new divisor.
    long long c = center_codim - 1;
    if (on_divisor) c += coeff_[*on_divisor];
    coeff_[new_divisor] = c;
    order_.push_back(new_divisor);
    parent_[new_divisor] = on_divisor;
    rounds_.push_back({center_codim, new_divisor, on_divisor});
    return canonical();
}

DivisorExpression DiscrepancyLedger::canonical() const {
    DivisorExpression k;
    k.base = base_;
    for (const std::string& d : order_) {
        auto it = coeff_.find(d);
        if (it->second != 0) k.coeffs[d] = it->second;
    }
    return k;
}

DivisorExpression DiscrepancyLedger::canonical_by_expansion() const {
    // Replay the rounds symbolically: K_{i+1} = pi^* K_i + (codim-1) E_new,
    // expanding pi^* D = D + sum of divisors blown up from points of D.
    DivisorExpression k;
    k.base = base_;
    for (const Round& r : rounds_) {
        DivisorExpression pulled;
        pulled.base = k.base;
        for (const auto& [name, c] : k.coeffs) {
            pulled.add(name, c);
            if (r.on && *r.on == name) pulled.add(r.divisor, c);
        }
        pulled.add(r.divisor, r.codim - 1);
        k = pulled;
    }
    return k;
}

std::optional<std::string> DiscrepancyLedger::parent(const std::string& name) const {
    auto it = parent_.find(name);
    if (it == parent_.end()) throw std::invalid_argument("ledger: unknown divisor " + name);
    return it->second;
}

namespace {

struct DerivedRam {
    long long e;
    long long d;
};

DerivedRam derive_ram(const RamificationDatum& r, uint32_t p) {
    if (r.i < 1) throw std::invalid_argument("ramification: Artin number must be >= 1");
    if (r.type == RamificationType::Ambiguous)
        throw std::invalid_argument("ramification: ambiguous classification for " + r.divisor);
    DerivedRam out;
    out.e = (r.type == RamificationType::Wild) ? static_cast<long long>(p) : 1;
    out.d = different_coefficient(p, static_cast<long>(r.i));
    if (r.e != 0 && r.e != out.e)
        throw std::invalid_argument("ramification: supplied e disagrees with (i, type, p) for " +
                                    r.divisor);
    if (r.different != 0 && r.different != out.d)
        throw std::invalid_argument("ramification: supplied different disagrees with (p-1)*i for " +
                                    r.divisor);
    return out;
}

}  // namespace

DivisorExpression quotient_descend(const DivisorExpression& k_up,
                                   const std::vector<RamificationDatum>& ram, uint32_t p,
                                   const std::string& base_image) {
    std::map<std::string, const RamificationDatum*> by_name;
    for (const RamificationDatum& r : ram) by_name[r.divisor] = &r;

    DivisorExpression down;
    down.base = base_image;
    for (const auto& [name, b] : k_up.coeffs) {
        auto it = by_name.find(name);
        if (it == by_name.end())
            throw std::invalid_argument("quotient_descend: no ramification datum for " + name);
        const DerivedRam dr = derive_ram(*it->second, p);
        const long long num = b - dr.d;
        if (num % dr.e != 0)
            throw std::invalid_argument("quotient_descend: non-integral discrepancy at " + name);
        down.add(it->second->image, num / dr.e);
    }
    return down;
}

DivisorExpression pullback_plus_different(const DivisorExpression& k_down,
                                          const std::vector<RamificationDatum>& ram, uint32_t p,
                                          const std::string& base_preimage) {
    std::map<std::string, const RamificationDatum*> by_image;
    for (const RamificationDatum& r : ram) by_image[r.image] = &r;

    DivisorExpression up;
    up.base = base_preimage;
    for (const auto& [image, a] : k_down.coeffs) {
        auto it = by_image.find(image);
        if (it == by_image.end())
            throw std::invalid_argument("pullback: no ramification datum for " + image);
        const DerivedRam dr = derive_ram(*it->second, p);
        up.add(it->second->divisor, a * dr.e);
    }
    for (const RamificationDatum& r : ram) {
        const DerivedRam dr = derive_ram(r, p);
        up.add(r.divisor, dr.d);
    }
    return up;
}

SingularityVerdict classify_singularity(const DivisorExpression& k_down) {
    if (k_down.coeffs.empty()) return {SingularityClass::Terminal, true};
    long long mn = k_down.coeffs.begin()->second;
    for (const auto& [name, a] : k_down.coeffs) mn = std::min(mn, a);
    if (mn > 0) return {SingularityClass::Terminal, false};
    if (mn >= 0) return {SingularityClass::Canonical, false};
    if (mn > -1) return {SingularityClass::Klt, false};
    return {SingularityClass::None, false};
}

FogartyVerdict fogarty_cm_test(int fixed_locus_codim) {
    if (fixed_locus_codim < 0) throw std::invalid_argument("fogarty_cm_test: negative codimension");
    return fixed_locus_codim >= 3 ? FogartyVerdict::NotCohenMacaulay : FogartyVerdict::Inconclusive;
}

YasudaVerdict yasuda_classify(unsigned long long p, int n) {
    if (n < 2) throw std::invalid_argument("yasuda_classify: n must be >= 2");
    YasudaVerdict out;
    const unsigned long long half = static_cast<unsigned long long>(n) * (n - 1) / 2;
    out.klt = half >= p;
    out.terminal = half > p;
    out.not_cm = fogarty_cm_test(n - 1) == FogartyVerdict::NotCohenMacaulay;
    out.window_ok = half > p && p >= static_cast<unsigned long long>(n) && n >= 4;
    out.converse_known = false;
    return out;
}

std::string DualGraph::to_dot(const std::string& name) const {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (const std::string& v : vertices) out << "  " << v << ";\n";
    for (const auto& [a, b] : edges) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
    return out.str();
}

DualGraph dual_graph(const DiscrepancyLedger& ledger,
                     const std::map<std::string, std::string>& rename) {
    auto label = [&](const std::string& n) {
        auto it = rename.find(n);
        return it == rename.end() ? n : it->second;
    };
    DualGraph g;
    for (const std::string& d : ledger.divisors()) {
        g.vertices.push_back(label(d));
        const auto par = ledger.parent(d);
        if (par) g.edges.emplace_back(label(*par), label(d));
    }
    return g;
}

}  // namespace fva
