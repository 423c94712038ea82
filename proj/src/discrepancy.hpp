#pragma once

// Symbolic divisor bookkeeping through blow-ups and order-p quotients:
// canonical-class rewriting, ramification descent, discrepancy extraction,
// singularity classification, dual graphs, and the numeric quotient
// classifiers for linear Z/p representations.

#include "fixed_schemes.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fva {

// base pullback symbol plus an integer combination of named divisors.
struct DivisorExpression {
    std::string base;
    std::map<std::string, long long> coeffs;

    long long coeff(const std::string& name) const {
        auto it = coeffs.find(name);
        return it == coeffs.end() ? 0 : it->second;
    }

    void add(const std::string& name, long long c) {
        coeffs[name] += c;
        if (coeffs[name] == 0) coeffs.erase(name);
    }

    bool operator==(const DivisorExpression& o) const {
        return base == o.base && coeffs == o.coeffs;
    }

    std::string to_string() const;
};

struct RamificationDatum {
    std::string divisor;  // upstairs name, e.g. "E1"
    std::string image;    // downstairs name, e.g. "F1"
    long long i = 0;      // Artin number
    RamificationType type = RamificationType::Wild;
    long long e = 0;          // ramification index; re-derived and checked
    long long different = 0;  // (p-1)*i; re-derived and checked
};

// Tracks a tower of point blow-ups: the canonical class relative to the
// pullback of the base, the total-transform relations, and divisor parentage
// for the dual graph.  Relations form a tree, so substitution is confluent.
class DiscrepancyLedger {
  public:
    explicit DiscrepancyLedger(std::string base_symbol);

    // Blow up a center of the given codimension; the new divisor picks up
    // coefficient (codim - 1).  When the center lies on an existing divisor,
    // that divisor's total transform gains the new one and the parentage
    // edge is recorded.
    DivisorExpression blowup_canonical(int center_codim, const std::string& new_divisor,
                                       const std::optional<std::string>& on_divisor = std::nullopt);

    // Current K relative to the pullback of the base.
    DivisorExpression canonical() const;

    // Recompute canonical() from the raw per-round data by expanding the
    // registered pullback relations; used to check confluence.
    DivisorExpression canonical_by_expansion() const;

    const std::vector<std::string>& divisors() const { return order_; }
    std::optional<std::string> parent(const std::string& name) const;

  private:
    struct Round {
        int codim;
        std::string divisor;
        std::optional<std::string> on;
    };

    std::string base_;
    std::vector<std::string> order_;
    std::map<std::string, std::optional<std::string>> parent_;
    std::map<std::string, long long> coeff_;
    std::vector<Round> rounds_;
};

// Descend K through the degree-p quotient: each upstairs coefficient b_j with
// different d_j and index e_j gives downstairs a_j = (b_j - d_j)/e_j, which
// must be integral.  e and the different are re-derived from (i, type, p) and
// checked against the caller-supplied values.  The base descends unchanged
// (quotient etale in codimension one).
DivisorExpression quotient_descend(const DivisorExpression& k_up,
                                   const std::vector<RamificationDatum>& ram, uint32_t p,
                                   const std::string& base_image);

// Inverse direction, for the round-trip identity: pull a downstairs K back
// and add the different divisor.
DivisorExpression pullback_plus_different(const DivisorExpression& k_down,
                                          const std::vector<RamificationDatum>& ram, uint32_t p,
                                          const std::string& base_preimage);

enum class SingularityClass { Terminal, Canonical, Klt, None };

struct SingularityVerdict {
    SingularityClass cls;
    bool vacuous = false;  // no exceptional divisors present
};

// terminal if min a_j > 0; canonical if >= 0; klt if > -1; none otherwise.
SingularityVerdict classify_singularity(const DivisorExpression& k_down);

enum class FogartyVerdict { NotCohenMacaulay, Inconclusive };

// Z/p fixed locus of codimension >= 3 forces a non-Cohen-Macaulay quotient.
FogartyVerdict fogarty_cm_test(int fixed_locus_codim);

struct YasudaVerdict {
    bool klt = false;       // n(n-1)/2 >= p
    bool terminal = false;  // n(n-1)/2 > p
    bool not_cm = false;    // fixed locus has codim n-1 >= 3
    bool window_ok = false;  // the assumption n(n-1)/2 > p >= n >= 4
    // Terminality is only known to be implied by the inequality; the converse
    // would need resolution of singularities.
    bool converse_known = false;
};

// Classifier for V/(Z/p) with V the indecomposable n-dimensional
// representation in characteristic p.
YasudaVerdict yasuda_classify(unsigned long long p, int n);

struct DualGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;

    std::string to_dot(const std::string& name) const;
};

// Vertices are the (renamed) exceptional divisors; edges join each divisor to
// the divisor it was blown up from.
DualGraph dual_graph(const DiscrepancyLedger& ledger,
                     const std::map<std::string, std::string>& rename = {});

}  // namespace fva
