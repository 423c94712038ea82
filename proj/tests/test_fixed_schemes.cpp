#include <doctest.h>

#include "fixed_schemes.hpp"

using namespace fva;

namespace {

PolyFp V(size_t nvars, size_t idx) { return PolyFp::variable(2, nvars, idx); }
PolyFp C(size_t nvars, long long c) { return PolyFp::constant(2, nvars, c); }

// (G_m)^3 over F_2 with sigma(x_i) = 1/x_i.
ChartAction torus3() {
    std::vector<RatFp> sigma;
    std::vector<PolyFp> units;
    for (size_t k = 0; k < 3; ++k) {
        sigma.emplace_back(C(3, 1), V(3, k));
        units.push_back(V(3, k));
    }
    return ChartAction(2, {"x1", "x2", "x3"}, sigma, units);
}

ChartAction y0_chart() { return translate_chart(torus3(), {1, 1, 1}, {{"y1", "y2", "y3"}}); }

ChartAction u1_chart() { return blowup_chart(y0_chart(), {0, 1, 2}, 0, {"w2", "w3"}); }

std::vector<std::string> print_all(const std::vector<PolyFp>& gens,
                                   const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const PolyFp& g : gens) out.push_back(g.to_string(names));
    return out;
}

}  // namespace

TEST_CASE("PolyFp arithmetic is F_p-exact") {
    const PolyFp x = V(2, 0), y = V(2, 1);
    CHECK((x + x).is_zero());  // char 2
    CHECK((x + y) * (x + y) == x * x + y * y);
    CHECK(x * (y + C(2, 1)) == x * y + x);
    CHECK((x * y).total_degree() == 2);
    CHECK(PolyFp(2, 2).is_zero());

    const PolyFp p5 = PolyFp::constant(5, 1, 3) + PolyFp::constant(5, 1, 4);
    CHECK(p5 == PolyFp::constant(5, 1, 2));
    CHECK(PolyFp::constant(5, 1, -1) == PolyFp::constant(5, 1, 4));
}

TEST_CASE("PolyFp printing is deterministic graded-lex") {
    const PolyFp x = V(2, 0), y = V(2, 1);
    const PolyFp g = x * y * y + x * y;
    CHECK(g.to_string({"y1", "w2"}) == "y1*w2^2 + y1*w2");
    CHECK(PolyFp(2, 2).to_string({"a", "b"}) == "0");
    CHECK(C(2, 1).to_string({"a", "b"}) == "1");
    const PolyFp a5 = PolyFp::variable(5, 2, 0);
    const PolyFp h = PolyFp::constant(5, 2, 3) * a5 * a5;
    CHECK(h.to_string({"a", "b"}) == "3*a^2");
}

TEST_CASE("exact division succeeds exactly when it should") {
    const PolyFp x = V(2, 0), y = V(2, 1);
    const PolyFp prod = (x + y) * (x * y + C(2, 1));
    auto q = prod.div_exact(x + y);
    REQUIRE(q);
    CHECK(*q == x * y + C(2, 1));
    CHECK_FALSE(prod.div_exact(x * x + C(2, 1)));
    CHECK_FALSE((x * x).div_exact(x * y));
    CHECK_THROWS_AS(x.div_exact(PolyFp(2, 2)), std::invalid_argument);
}

TEST_CASE("RatFp cancels coordinate powers and compares by cross-multiplication") {
    const PolyFp x = V(2, 0), y = V(2, 1);
    const RatFp a(x * x * y, x * (y + C(2, 1)));
    CHECK(a.num() == x * y);
    CHECK(a.den() == y + C(2, 1));
    const RatFp b(x * y * (x + y), (y + C(2, 1)) * (x + y));
    CHECK(a.same_function(b));
    CHECK_THROWS_AS(RatFp(x, PolyFp(2, 2)), std::invalid_argument);
}

TEST_CASE("divisor valuations") {
    const PolyFp y1 = V(3, 0);
    const RatFp f(y1 * y1, y1 + C(3, 1));
    CHECK(divisor_valuation(f, 0) == 2);
    const RatFp g(y1, y1 + C(3, 1));
    CHECK(divisor_valuation(g, 0) == 1);
    CHECK(divisor_valuation(RatFp(y1 + C(3, 1)), 0) == 0);  // unit
    CHECK(divisor_valuation(RatFp(PolyFp(2, 3)), 0) == std::nullopt);  // 0 -> +inf

    // Additivity under multiplication.
    const RatFp h = f * g;
    CHECK(*divisor_valuation(h, 0) ==
          *divisor_valuation(f, 0) + *divisor_valuation(g, 0));
}

TEST_CASE("the torus involution and its translated chart") {
    const ChartAction t = torus3();  // construction verifies sigma^2 = id
    const ChartAction y0 = y0_chart();
    // sigma(y_i) = y_i / (1 + y_i)
    for (size_t k = 0; k < 3; ++k) {
        const RatFp expected(V(3, k), V(3, k) + C(3, 1));
        CHECK(y0.sigma[k].same_function(expected));
    }
    // Translating by zero changes nothing; translating twice by one is the
    // identity transformation over F_2.
    const ChartAction same = translate_chart(y0, {0, 0, 0});
    const ChartAction twice = translate_chart(translate_chart(t, {1, 1, 1}), {1, 1, 1});
    for (size_t k = 0; k < 3; ++k) {
        CHECK(same.sigma[k].same_function(y0.sigma[k]));
        CHECK(twice.sigma[k].same_function(t.sigma[k]));
    }
}

TEST_CASE("chart invariants are enforced") {
    // Denominator not covered by units.
    std::vector<RatFp> sigma;
    sigma.emplace_back(V(1, 0), V(1, 0) + C(1, 1));
    CHECK_THROWS_AS(ChartAction(2, {"t"}, sigma, {}), std::invalid_argument);
    // Not an involution: t -> t + 1 is one over F_2, t -> t + t^2... is not.
    std::vector<RatFp> bad;
    bad.emplace_back(V(1, 0) * V(1, 0));
    CHECK_THROWS_AS(ChartAction(2, {"t"}, bad, {}), std::invalid_argument);
}

TEST_CASE("fixed-point scheme of the first blow-up chart") {
    const ChartAction u1 = u1_chart();
    // sigma on U1 matches the displayed action.
    const PolyFp y1 = V(3, 0), w2 = V(3, 1), w3 = V(3, 2);
    CHECK(u1.sigma[0].same_function(RatFp(y1, y1 + C(3, 1))));
    CHECK(u1.sigma[1].same_function(RatFp(w2 * (y1 + C(3, 1)), y1 * w2 + C(3, 1))));
    CHECK(u1.sigma[2].same_function(RatFp(w3 * (y1 + C(3, 1)), y1 * w3 + C(3, 1))));

    const std::vector<PolyFp> gens = fixed_scheme_generators(u1);
    CHECK(print_all(gens, u1.coords) ==
          std::vector<std::string>{"y1^2", "y1*w2^2 + y1*w2", "y1*w3^2 + y1*w3"});

    // sigma-stability of the fixed ideal.
    for (const PolyFp& g : gens) {
        const RatFp image = g.substitute(u1.sigma);
        CHECK(is_unit_product(image.den(), u1.units));
        CHECK(reduces_to_zero(normalize_generator(image.num(), u1.units), gens));
    }
}

TEST_CASE("identity action has all-zero fixed generators") {
    std::vector<RatFp> sigma;
    for (size_t k = 0; k < 2; ++k) sigma.emplace_back(V(2, k));
    const ChartAction id(2, {"a", "b"}, sigma, {});
    for (const PolyFp& g : fixed_scheme_generators(id)) CHECK(g.is_zero());
    CHECK(artin_number(id, 0) == std::nullopt);
    CHECK_THROWS_AS(cartier_test(fixed_scheme_generators(id), {}), std::invalid_argument);
}

TEST_CASE("cartier test on the first blow-up: not principal, 4 failure points") {
    const ChartAction u1 = u1_chart();
    const CartierVerdict v = cartier_test(fixed_scheme_generators(u1), u1.units, 0);
    CHECK_FALSE(v.principal);
    REQUIRE(v.min_t_order);
    CHECK(*v.min_t_order == 1);
    const std::vector<std::vector<uint32_t>> expected = {
        {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}};
    CHECK(v.failure_points == expected);
}

TEST_CASE("second blow-up, v1 pivot chart: principal (y1^2)") {
    const ChartAction u1 = u1_chart();
    const ChartAction v1 = blowup_chart(u1, {0, 1, 2}, 0, {"v2", "v3"});
    // sigma(v2) = v2 (y1+1)^2 / (y1^2 v2 + 1)
    const PolyFp y1 = V(3, 0), v2 = V(3, 1);
    CHECK(v1.sigma[1].same_function(
        RatFp(v2 * (y1 + C(3, 1)).pow(2), y1.pow(2) * v2 + C(3, 1))));

    const std::vector<PolyFp> gens = fixed_scheme_generators(v1);
    const CartierVerdict v = cartier_test(gens, v1.units);
    REQUIRE(v.principal);
    CHECK(v.generator->to_string(v1.coords) == "y1^2");
    REQUIRE(v.coordinate_powers.size() == 1);
    CHECK(v.coordinate_powers[0] == std::pair<size_t, uint32_t>{0, 2});
    CHECK(*v.residual_factor == C(3, 1));
    CHECK(artin_number(v1, 0) == 2);
}

TEST_CASE("second blow-up, v2 pivot chart: E0 + 2E1 once w2+1 is inverted") {
    const ChartAction u1 = u1_chart();
    const ChartAction raw = blowup_chart(u1, {0, 1, 2}, 1, {"v1", "v3"});
    // coords are (v1, w2, v3); check the displayed action.
    const PolyFp v1 = V(3, 0), w2 = V(3, 1), v3 = V(3, 2);
    CHECK(raw.sigma[1].same_function(
        RatFp(w2 * (w2 * v1 + C(3, 1)), w2.pow(2) * v1 + C(3, 1))));
    CHECK(raw.sigma[0].same_function(
        RatFp(v1 * (w2.pow(2) * v1 + C(3, 1)), (w2 * v1 + C(3, 1)).pow(2))));
    CHECK(raw.sigma[2].same_function(
        RatFp(v3 * (w2.pow(2) * v1 + C(3, 1)), w2.pow(2) * v1 * v3 + C(3, 1))));

    const std::vector<PolyFp> gens = fixed_scheme_generators(raw);
    // Without inverting w2 + 1 the minimal generator keeps its cofactor and
    // the ideal is not seen to be principal.
    CHECK_FALSE(cartier_test(gens, raw.units).principal);

    std::vector<PolyFp> units = raw.units;
    units.push_back(w2 + C(3, 1));
    const CartierVerdict v = cartier_test(gens, units);
    REQUIRE(v.principal);
    CHECK(v.generator->to_string(raw.coords) == "v1*w2^2");
    // E0 = {v1 = 0} with multiplicity 1, E1 = {w2 = 0} with multiplicity 2.
    REQUIRE(v.coordinate_powers.size() == 2);
    CHECK(v.coordinate_powers[0] == std::pair<size_t, uint32_t>{0, 1});
    CHECK(v.coordinate_powers[1] == std::pair<size_t, uint32_t>{1, 2});

    CHECK(artin_number(raw, 0) == 1);  // E0
    CHECK(artin_number(raw, 1) == 2);  // E1, agrees with the v1 chart
}

TEST_CASE("single generator t^2 is principal with multiplicity 2") {
    const PolyFp t = V(1, 0);
    const CartierVerdict v = cartier_test({t * t}, {});
    REQUIRE(v.principal);
    CHECK(v.coordinate_powers == std::vector<std::pair<size_t, uint32_t>>{{0, 2}});
}

TEST_CASE("blow-up preconditions") {
    const ChartAction y0 = y0_chart();
    CHECK_THROWS_AS(blowup_chart(y0, {0, 1}, 2, {"a"}), std::invalid_argument);     // pivot not in center
    CHECK_THROWS_AS(blowup_chart(y0, {0, 1, 2}, 0, {"a"}), std::invalid_argument);  // name count

    // A chart whose action moves the origin cannot be blown up there.
    std::vector<RatFp> shift;
    shift.emplace_back(V(1, 0) + C(1, 1));
    const ChartAction moved(2, {"t"}, shift, {});
    CHECK_THROWS_AS(blowup_chart(moved, {0}, 0, {}), std::invalid_argument);

    // Blowing up a chart with the identity action keeps the identity.
    std::vector<RatFp> ident;
    for (size_t k = 0; k < 2; ++k) ident.emplace_back(V(2, k));
    const ChartAction id(2, {"a", "b"}, ident, {});
    const ChartAction blown = blowup_chart(id, {0, 1}, 0, {"v"});
    for (size_t k = 0; k < 2; ++k)
        CHECK(blown.sigma[k].same_function(RatFp(V(2, k))));
}

TEST_CASE("artin numbers across the tower") {
    const ChartAction u1 = u1_chart();
    CHECK(artin_number(u1, 0) == 1);
    const ChartAction v1 = blowup_chart(u1, {0, 1, 2}, 0, {"v2", "v3"});
    CHECK(artin_number(v1, 0) == 2);
    CHECK_THROWS_AS(artin_number(u1, 9), std::invalid_argument);
}

TEST_CASE("swan classification: fierce at i = 1, wild at i = 2") {
    const ChartAction u1 = u1_chart();
    const ChartAction v2raw = blowup_chart(u1, {0, 1, 2}, 1, {"v1", "v3"});
    const SwanResult fierce = swan_classify(v2raw, 0, 1);
    CHECK(fierce.type == RamificationType::Fierce);
    CHECK(*fierce.ram_index == 1);
    CHECK(*fierce.residue_degree == 2);

    const ChartAction v1 = blowup_chart(u1, {0, 1, 2}, 0, {"v2", "v3"});
    const SwanResult wild = swan_classify(v1, 0, 2);
    CHECK(wild.type == RamificationType::Wild);
    CHECK(*wild.swan == 1);
    CHECK(*wild.ram_index == 2);
    CHECK(*wild.generator_upper_bound == 1);

    CHECK_THROWS_AS(swan_classify(v1, 0, 0), std::invalid_argument);
}

TEST_CASE("swan classification: formal rule application and the ambiguous verdict") {
    // sigma(z) = z / (1 + t^2 z) is an involution fixing t; the generator
    // bound along {t = 0} computes to 2.
    const PolyFp t = V(2, 0), z = V(2, 1);
    std::vector<RatFp> sigma;
    sigma.emplace_back(t);
    sigma.emplace_back(z, t * t * z + C(2, 1));
    const ChartAction c(2, {"t", "z"}, sigma, {t * t * z + C(2, 1)});

    // Called with i = 3 the bound u = 2 = i - 1 forces the wild branch.
    const SwanResult wild = swan_classify(c, 0, 3);
    CHECK(wild.type == RamificationType::Wild);
    CHECK(*wild.swan == 2);

    // Called with i = 2 the bound u = 2 = i cannot separate s = 1 from s = 2.
    const SwanResult amb = swan_classify(c, 0, 2);
    CHECK(amb.type == RamificationType::Ambiguous);
    CHECK(*amb.generator_upper_bound == 2);
}

TEST_CASE("different coefficients") {
    CHECK(different_coefficient(2, 1) == 1);
    CHECK(different_coefficient(2, 2) == 2);
    CHECK(different_coefficient(5, 3) == 12);
    CHECK_THROWS_AS(different_coefficient(2, 0), std::invalid_argument);
}
