#pragma once

// Exact multivariate polynomial and rational-function arithmetic over F_p,
// order-2 chart actions, blow-up chart derivation, fixed-point-scheme ideals,
// Cartier tests and Artin/Swan ramification numbers.
//
// Rational functions are kept unreduced; equality is tested by
// cross-multiplication.  Simplification is limited to cancelling pure powers
// of single coordinates and dividing out declared unit factors.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fva {

class RatFp;

// Sparse polynomial over F_p in a fixed number of variables.  Exponent
// vectors are dense small-integer arrays; no zero coefficients are stored.
class PolyFp {
  public:
    using Exponents = std::vector<uint32_t>;

    PolyFp(uint32_t p, size_t nvars);  // the zero polynomial
    static PolyFp constant(uint32_t p, size_t nvars, long long c);
    static PolyFp variable(uint32_t p, size_t nvars, size_t idx);

    uint32_t p() const { return p_; }
    size_t nvars() const { return nvars_; }
    const std::map<Exponents, uint32_t>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    long total_degree() const;  // -1 for the zero polynomial

    PolyFp operator+(const PolyFp& o) const;
    PolyFp operator-(const PolyFp& o) const;
    PolyFp operator*(const PolyFp& o) const;
    PolyFp operator-() const;
    PolyFp pow(uint32_t e) const;
    bool operator==(const PolyFp& o) const { return p_ == o.p_ && terms_ == o.terms_; }
    bool operator!=(const PolyFp& o) const { return !(*this == o); }

    // Order of vanishing in the variable v; nullopt for the zero polynomial.
    std::optional<long> order(size_t v) const;
    // Exact division by v^k; requires order(v) >= k.
    PolyFp shift_down(size_t v, uint32_t k) const;

    // Exact polynomial division; nullopt when the division has a remainder.
    std::optional<PolyFp> div_exact(const PolyFp& divisor) const;

    uint32_t eval(const std::vector<uint32_t>& point) const;

    // Scale so the graded-lex leading coefficient is 1.
    PolyFp monic() const;

    // Leading (exponents, coefficient) under graded-lex; throws on zero.
    std::pair<Exponents, uint32_t> leading_term() const;

    // Substitute rational functions for the variables.
    RatFp substitute(const std::vector<RatFp>& images) const;
    // Substitute polynomials (used by chart reparametrizations).
    PolyFp substitute_poly(const std::vector<PolyFp>& images) const;

    // Deterministic print: terms sorted by total degree, then lex, descending.
    std::string to_string(const std::vector<std::string>& names) const;

  private:
    void add_term(const Exponents& e, uint32_t c);
    const std::pair<const Exponents, uint32_t>& leading() const;

    uint32_t p_;
    size_t nvars_;
    std::map<Exponents, uint32_t> terms_;
};

// Quotient of polynomials, den != 0.  Construction cancels common pure
// coordinate powers and normalizes the denominator to be monic.
class RatFp {
  public:
    explicit RatFp(PolyFp num);
    RatFp(PolyFp num, PolyFp den);

    const PolyFp& num() const { return num_; }
    const PolyFp& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFp operator+(const RatFp& o) const;
    RatFp operator-(const RatFp& o) const;
    RatFp operator*(const RatFp& o) const;
    RatFp operator/(const RatFp& o) const;

    // Equality as rational functions, by cross-multiplication.
    bool same_function(const RatFp& o) const;

    RatFp substitute(const std::vector<RatFp>& images) const;

    std::string to_string(const std::vector<std::string>& names) const;

  private:
    PolyFp num_;
    PolyFp den_;
};

// A coordinate chart with an order-2 action given coordinate-wise by
// rational functions whose denominators are products of the declared units.
// Both invariants are verified at construction.
struct ChartAction {
    uint32_t p;
    std::vector<std::string> coords;
    std::vector<RatFp> sigma;
    std::vector<PolyFp> units;

    ChartAction(uint32_t p_, std::vector<std::string> coords_, std::vector<RatFp> sigma_,
                std::vector<PolyFp> units_);

    size_t nvars() const { return coords.size(); }
    size_t coord_index(const std::string& name) const;
};

// True when q equals a product of (non-constant) declared units times a
// nonzero scalar; checked by repeated exact division.
bool is_unit_product(const PolyFp& q, const std::vector<PolyFp>& units);

// Strip declared unit factors and scalar content.
PolyFp normalize_generator(const PolyFp& g, const std::vector<PolyFp>& units);

// One generator per coordinate: the numerator of sigma(x) - x after clearing
// the (unit) denominator, normalized.  Identity actions yield zero entries.
std::vector<PolyFp> fixed_scheme_generators(const ChartAction& c);

// t-adic order of a rational function; nullopt encodes +infinity (f = 0).
std::optional<long> divisor_valuation(const RatFp& f, size_t v);

struct CartierVerdict {
    bool principal = false;
    // Principal branch: the generator and its factorization into coordinate
    // powers times a residual factor.
    std::optional<PolyFp> generator;
    std::vector<std::pair<size_t, uint32_t>> coordinate_powers;
    std::optional<PolyFp> residual_factor;
    // Non-principal branch (when a divisor coordinate t was requested):
    // min t-order, the cofactors gens/t^m, and the F_p points where every
    // cofactor vanishes (the locus where the ideal fails to be principal).
    std::optional<long> min_t_order;
    std::vector<PolyFp> cofactors;
    std::vector<std::vector<uint32_t>> failure_points;
};

CartierVerdict cartier_test(const std::vector<PolyFp>& gens, const std::vector<PolyFp>& units,
                            std::optional<size_t> t = std::nullopt);

// Blow up the chart at the origin of the given center coordinates.  The pivot
// keeps its name; every other center coordinate x is replaced by x/pivot
// under a caller-supplied name.  Declared units are transported; extra units
// may be added.  Chart invariants are re-verified.
ChartAction blowup_chart(const ChartAction& c, const std::vector<size_t>& center, size_t pivot,
                         const std::vector<std::string>& new_names,
                         const std::vector<PolyFp>& extra_units = {});

// Substitute x -> x + point coordinate-wise (moves `point` to the origin in
// the new coordinates); optionally renames the coordinates.
ChartAction translate_chart(const ChartAction& c, const std::vector<uint32_t>& point,
                            const std::optional<std::vector<std::string>>& new_names = std::nullopt);

// min over chart coordinates x of v_t(sigma(x) - x); by the cocycle identity
// this minimum over ring generators computes the Artin number i(sigma) of the
// divisor {t = 0}.  nullopt encodes +infinity (identity action).
std::optional<long> artin_number(const ChartAction& c, size_t t);

enum class RamificationType { Wild, Fierce, Ambiguous };

struct SwanResult {
    RamificationType type;
    std::optional<long> swan;            // s(sigma), when determined
    std::optional<long> ram_index;       // e
    std::optional<long> residue_degree;  // f, with e*f = p
    std::optional<long> generator_upper_bound;  // u = min v_t(sigma(x)/x - 1)
};

// i = 1 forces fierce ramification.  Otherwise the generator bound u decides:
// u = i-1 gives wild with s = i-1; u >= i leaves s in {i-1, i} undetermined.
SwanResult swan_classify(const ChartAction& c, size_t t, long i);

// Valuation of the different: (p-1) * i.
long long different_coefficient(uint32_t p, long i);

// Membership check by repeated leading-term reduction against the generator
// set.  Not a decision procedure in general; sufficient for the sigma-orbit
// checks performed here.
bool reduces_to_zero(PolyFp g, const std::vector<PolyFp>& gens);

}  // namespace fva
