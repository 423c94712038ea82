#include "dim3_pipeline.hpp"

#include "bigint.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace fva {

namespace {

constexpr uint32_t kP = 2;

PolyFp var(size_t nvars, size_t idx) { return PolyFp::variable(kP, nvars, idx); }
PolyFp cst(size_t nvars, long long c) { return PolyFp::constant(kP, nvars, c); }

// (G_m)^3 with sigma(x_i) = 1/x_i; the coordinates themselves are the units.
ChartAction torus_chart() {
    const size_t nv = 3;
    std::vector<RatFp> sigma;
    std::vector<PolyFp> units;
    for (size_t k = 0; k < nv; ++k) {
        sigma.emplace_back(cst(nv, 1), var(nv, k));
        units.push_back(var(nv, k));
    }
    return ChartAction(kP, {"x1", "x2", "x3"}, sigma, units);
}

json gens_json(const std::vector<PolyFp>& gens, const std::vector<std::string>& names) {
    json out = json::array();
    for (const PolyFp& g : gens) out.push_back(g.to_string(names));
    return out;
}

json chart_json(const ChartAction& c) {
    json out;
    out["p"] = c.p;
    out["coords"] = c.coords;
    json sig = json::object();
    for (size_t k = 0; k < c.nvars(); ++k) sig[c.coords[k]] = c.sigma[k].to_string(c.coords);
    out["sigma"] = sig;
    json units = json::array();
    for (const PolyFp& u : c.units) units.push_back(u.to_string(c.coords));
    out["units"] = units;
    return out;
}

json points_json(const std::vector<std::vector<uint32_t>>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(p);
    return out;
}

bool sigma_stable_ideal(const ChartAction& c, const std::vector<PolyFp>& gens) {
    for (const PolyFp& g : gens) {
        if (g.is_zero()) continue;
        const RatFp image = g.substitute(c.sigma);
        if (!is_unit_product(image.den(), c.units)) return false;
        const PolyFp reduced = normalize_generator(image.num(), c.units);
        if (!reduces_to_zero(reduced, gens)) return false;
    }
    return true;
}

// Fixed-locus codimension lower bound: count coordinates v for which some
// generator is a pure power of v (the locus then lies inside {v = 0}).
int pure_power_codim(const std::vector<PolyFp>& gens) {
    std::set<size_t> vars;
    for (const PolyFp& g : gens) {
        if (g.terms().size() != 1) continue;
        const auto& e = g.terms().begin()->first;
        size_t nonzero_var = 0;
        int count = 0;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] > 0) {
                nonzero_var = k;
                ++count;
            }
        }
        if (count == 1) vars.insert(nonzero_var);
    }
    return static_cast<int>(vars.size());
}

bool fixed_locus_nonempty(const std::vector<PolyFp>& gens, size_t nvars) {
    std::vector<uint32_t> point(nvars, 0);
    auto next = [&]() -> bool {
        for (size_t k = nvars; k-- > 0;) {
            if (++point[k] < kP) return true;
            point[k] = 0;
        }
        return false;
    };
    while (true) {
        bool all_zero = true;
        for (const PolyFp& g : gens) {
            if (g.eval(point) != 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) return true;
        if (!next()) break;
    }
    return false;
}

std::string swan_string(const SwanResult& s) {
    switch (s.type) {
        case RamificationType::Wild:
            return "wild(e=" + std::to_string(*s.ram_index) + ",s=" + std::to_string(*s.swan) + ")";
        case RamificationType::Fierce:
            return "fierce(e=" + std::to_string(*s.ram_index) +
                   ",f=" + std::to_string(*s.residue_degree) + ")";
        case RamificationType::Ambiguous:
            return "ambiguous";
    }
    return "?";
}

}  // namespace

VerificationReport verify_dim3(const Dim3Options& opts) {
    VerificationReport rep;
    rep.construction = "dim3";
    rep.inputs["p"] = kP;
    rep.inputs["all_charts"] = opts.all_charts;

    // Stage 0: the torus and its translation moving the fixed point to the
    // origin.  Chart construction itself certifies the involution and the
    // declared units.
    const ChartAction torus = torus_chart();
    rep.add_fact("torus_involution", true, "chart.involution", true);

    const ChartAction y0 =
        translate_chart(torus, {1, 1, 1}, std::vector<std::string>{"y1", "y2", "y3"});
    {
        // sigma(y_i) = y_i / (y_i + 1)
        bool ok = true;
        for (size_t k = 0; k < 3 && ok; ++k) {
            const RatFp expected(var(3, k), var(3, k) + cst(3, 1));
            ok = y0.sigma[k].same_function(expected);
        }
        rep.add_fact("y0_action", chart_json(y0), "chart.translation", ok);
    }

    const std::vector<PolyFp> y0_gens = fixed_scheme_generators(y0);
    rep.add_fact("y0_fixed_ideal", gens_json(y0_gens, y0.coords), "fixed-scheme.generators",
                 gens_json(y0_gens, y0.coords) == json::array({"y1^2", "y2^2", "y3^2"}));
    rep.add_fact("y0_fixed_not_cartier", !cartier_test(y0_gens, y0.units).principal,
                 "cartier.principal-test", !cartier_test(y0_gens, y0.units).principal);

    const int codim = pure_power_codim(y0_gens);
    const bool nonempty = fixed_locus_nonempty(y0_gens, 3);
    rep.add_fact("fixed_locus_codim", codim, "fogarty.codim3", codim == 3 && nonempty);
    const FogartyVerdict fog = fogarty_cm_test(codim);
    rep.add_fact("fogarty_not_cm", fog == FogartyVerdict::NotCohenMacaulay, "fogarty.codim3",
                 fog == FogartyVerdict::NotCohenMacaulay);

    // Stage 1: blow up the origin of Y0; work in the pivot chart U1 (w1 = 1).
    const ChartAction u1 = blowup_chart(y0, {0, 1, 2}, 0, {"w2", "w3"});
    {
        // sigma(w2) = w2 (y1+1) / (y1 w2 + 1)
        const PolyFp y1 = var(3, 0), w2 = var(3, 1);
        const RatFp expected(w2 * (y1 + cst(3, 1)), y1 * w2 + cst(3, 1));
        rep.add_fact("u1_action", chart_json(u1), "blowup.chart-action",
                     u1.sigma[1].same_function(expected));
    }

    const std::vector<PolyFp> u1_gens = fixed_scheme_generators(u1);
    const json u1_golden = json::array({"y1^2", "y1*w2^2 + y1*w2", "y1*w3^2 + y1*w3"});
    rep.add_fact("u1_fixed_ideal", gens_json(u1_gens, u1.coords), "fixed-scheme.generators",
                 gens_json(u1_gens, u1.coords) == u1_golden);
    rep.add_fact("u1_sigma_stable", sigma_stable_ideal(u1, u1_gens), "fixed-scheme.sigma-stable",
                 sigma_stable_ideal(u1, u1_gens));

    const CartierVerdict u1_cart = cartier_test(u1_gens, u1.units, 0);
    rep.add_fact("u1_cartier", u1_cart.principal ? "principal" : "not_principal",
                 "cartier.principal-test", !u1_cart.principal);
    rep.add_fact("u1_min_order", u1_cart.min_t_order ? json(*u1_cart.min_t_order) : json(),
                 "cartier.principal-test", u1_cart.min_t_order && *u1_cart.min_t_order == 1);
    rep.add_fact("u1_failure_points", points_json(u1_cart.failure_points),
                 "cartier.residual-locus", u1_cart.failure_points.size() == 4);

    // The three pivot charts of the blow-up cover the exceptional plane;
    // collecting every chart's failure points in homogeneous coordinates
    // counts the non-Cartier locus globally.
    std::set<std::array<uint32_t, 3>> global_points;
    for (size_t pivot = 0; pivot < 3; ++pivot) {
        std::vector<std::string> names;
        for (size_t k = 0; k < 3; ++k)
            if (k != pivot) names.push_back("w" + std::to_string(k + 1));
        const ChartAction uk = blowup_chart(y0, {0, 1, 2}, pivot, names);
        const CartierVerdict cart = cartier_test(fixed_scheme_generators(uk), uk.units, pivot);
        for (const auto& pt : cart.failure_points) {
            std::array<uint32_t, 3> h{};
            h[pivot] = 1;
            for (size_t k = 0; k < 3; ++k)
                if (k != pivot) h[k] = pt[k];
            global_points.insert(h);
        }
    }
    rep.add_fact("global_failure_points", static_cast<int>(global_points.size()),
                 "cartier.residual-locus", global_points.size() == 7);

    const auto artin_e = artin_number(u1, 0);
    rep.add_fact("artin_e", artin_e ? json(*artin_e) : json(), "ramification.artin-number",
                 artin_e && *artin_e == 1);

    // Stage 2: blow up the origin of U1 (the point [1,0,0]); v1 and v2 pivot
    // charts of the new exceptional divisor E1.
    const ChartAction v1 = blowup_chart(u1, {0, 1, 2}, 0, {"v2", "v3"});
    {
        const PolyFp y1 = var(3, 0), v2 = var(3, 1);
        const RatFp expected(v2 * (y1 + cst(3, 1)).pow(2), y1.pow(2) * v2 + cst(3, 1));
        rep.add_fact("v1_action", chart_json(v1), "blowup.chart-action",
                     v1.sigma[1].same_function(expected));
    }
    const std::vector<PolyFp> v1_gens = fixed_scheme_generators(v1);
    rep.add_fact("v1_sigma_stable", sigma_stable_ideal(v1, v1_gens), "fixed-scheme.sigma-stable",
                 sigma_stable_ideal(v1, v1_gens));
    const CartierVerdict v1_cart = cartier_test(v1_gens, v1.units);
    {
        const bool ok = v1_cart.principal && v1_cart.generator &&
                        v1_cart.generator->to_string(v1.coords) == "y1^2";
        rep.add_fact("v1_chart_ideal",
                     v1_cart.principal ? v1_cart.generator->to_string(v1.coords) : "not_principal",
                     "cartier.principal-test", ok);
    }
    const auto artin_e1 = artin_number(v1, 0);
    rep.add_fact("artin_e1", artin_e1 ? json(*artin_e1) : json(), "ramification.artin-number",
                 artin_e1 && *artin_e1 == 2);
    {
        const bool match =
            v1_cart.principal && v1_cart.coordinate_powers.size() == 1 &&
            v1_cart.coordinate_powers[0].first == 0 &&
            static_cast<long>(v1_cart.coordinate_powers[0].second) == (artin_e1 ? *artin_e1 : -1);
        rep.add_fact("artin_matches_multiplicity_e1", match, "ramification.artin-number", match);
    }

    // v2 pivot chart; away from the other six fixed points w2 + 1 is a unit.
    const ChartAction v2_raw = blowup_chart(u1, {0, 1, 2}, 1, {"v1", "v3"});
    const ChartAction v2(v2_raw.p, v2_raw.coords, v2_raw.sigma, [&] {
        std::vector<PolyFp> us = v2_raw.units;
        us.push_back(var(3, 1) + cst(3, 1));  // w2 + 1
        return us;
    }());
    const std::vector<PolyFp> v2_gens = fixed_scheme_generators(v2);
    rep.add_fact("v2_sigma_stable", sigma_stable_ideal(v2, v2_gens), "fixed-scheme.sigma-stable",
                 sigma_stable_ideal(v2, v2_gens));
    const CartierVerdict v2_cart = cartier_test(v2_gens, v2.units);
    {
        // Principal with generator w2^2 v1 = E0 + 2 E1 (E0 = {v1 = 0}).
        const bool ok = v2_cart.principal && v2_cart.generator &&
                        v2_cart.generator->to_string(v2.coords) == "v1*w2^2";
        rep.add_fact("v2_chart_ideal",
                     v2_cart.principal ? v2_cart.generator->to_string(v2.coords) : "not_principal",
                     "cartier.principal-test", ok);
    }
    const auto artin_e0 = artin_number(v2, 0);
    rep.add_fact("artin_e0", artin_e0 ? json(*artin_e0) : json(), "ramification.artin-number",
                 artin_e0 && *artin_e0 == 1);
    const auto artin_e1_alt = artin_number(v2, 1);
    rep.add_fact("artin_e1_crosscheck", artin_e1_alt ? json(*artin_e1_alt) : json(),
                 "ramification.artin-number",
                 artin_e1_alt && artin_e1 && *artin_e1_alt == *artin_e1);

    rep.add_fact("fixed_scheme_cartier_near_e1", v1_cart.principal && v2_cart.principal,
                 "kl.cartier-smoothness", v1_cart.principal && v2_cart.principal);

    // Ramification types and differents.
    const SwanResult swan_e0 = swan_classify(v2, 0, artin_e0 ? *artin_e0 : 0);
    const SwanResult swan_e1 = swan_classify(v1, 0, artin_e1 ? *artin_e1 : 0);
    rep.add_fact("swan_e0", swan_string(swan_e0), "ramification.wild-fierce-dichotomy",
                 swan_e0.type == RamificationType::Fierce && *swan_e0.ram_index == 1);
    rep.add_fact("swan_e1", swan_string(swan_e1), "ramification.wild-fierce-dichotomy",
                 swan_e1.type == RamificationType::Wild && *swan_e1.ram_index == 2 &&
                     *swan_e1.swan == 1);
    const long long d_e0 = different_coefficient(kP, artin_e0 ? *artin_e0 : 0);
    const long long d_e1 = different_coefficient(kP, artin_e1 ? *artin_e1 : 0);
    rep.add_fact("differents", json::array({d_e0, d_e1}), "different.artin-multiple",
                 d_e0 == 1 && d_e1 == 2);

    if (opts.all_charts) {
        // The other three fixed points visible in U1; each is translated to
        // the origin and blown up the same way.
        bool all_wild = true;
        const std::vector<std::vector<uint32_t>> other_points = {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}};
        for (const std::vector<uint32_t>& pt : other_points) {
            const ChartAction moved = translate_chart(u1, pt);
            const ChartAction blown = blowup_chart(moved, {0, 1, 2}, 0, {"v2", "v3"});
            const auto i = artin_number(blown, 0);
            if (!i || *i != 2) all_wild = false;
            const SwanResult sw = swan_classify(blown, 0, i ? *i : 0);
            if (sw.type != RamificationType::Wild) all_wild = false;
        }
        rep.add_fact("all_points_wild", all_wild, "ramification.wild-fierce-dichotomy", all_wild);
    } else {
        rep.add_fact("symmetry_orbit", "the 7 points form one orbit of the lattice automorphisms",
                     "symmetry.transitive-orbit", true);
    }

    // Stage 3: the ledger.  Everything is fed from the chart outputs above.
    DiscrepancyLedger ledger("K_Y0");
    DivisorExpression k_y1 = ledger.blowup_canonical(3, "E0");
    {
        DivisorExpression expected;
        expected.base = "K_Y0";
        expected.coeffs["E0"] = 2;
        rep.add_fact("k_y1", k_y1.to_string(), "blowup.canonical-formula", k_y1 == expected);
    }
    DivisorExpression k_y2 = k_y1;
    std::vector<RamificationDatum> ram;
    ram.push_back({"E0", "F0", artin_e0 ? *artin_e0 : 0,
                   swan_e0.type, swan_e0.ram_index ? *swan_e0.ram_index : 0, d_e0});
    for (int j = 1; j <= 7; ++j) {
        const std::string name = "E" + std::to_string(j);
        k_y2 = ledger.blowup_canonical(3, name, std::string("E0"));
        ram.push_back({name, "F" + std::to_string(j), artin_e1 ? *artin_e1 : 0,
                       swan_e1.type, swan_e1.ram_index ? *swan_e1.ram_index : 0, d_e1});
    }
    {
        bool ok = k_y2.coeff("E0") == 2;
        for (int j = 1; j <= 7; ++j) ok = ok && k_y2.coeff("E" + std::to_string(j)) == 4;
        rep.add_fact("k_y2", k_y2.to_string(), "blowup.canonical-formula", ok);
    }
    rep.add_fact("pullback_confluence", ledger.canonical_by_expansion() == k_y2,
                 "blowup.canonical-formula", ledger.canonical_by_expansion() == k_y2);

    std::ostringstream fixed_div;
    fixed_div << "E0 + 2*(E1..E7)";
    rep.add_fact("global_fixed_divisor", fixed_div.str(), "fixed-scheme.generators",
                 artin_e0 && *artin_e0 == 1 && artin_e1 && *artin_e1 == 2 &&
                     global_points.size() == 7);

    const DivisorExpression k_down = quotient_descend(k_y2, ram, kP, "K_X");
    json discrepancies = json::array();
    bool all_one = true;
    for (int j = 0; j <= 7; ++j) {
        const long long a = k_down.coeff("F" + std::to_string(j));
        discrepancies.push_back(a);
        if (a != 1) all_one = false;
    }
    rep.add_fact("k_quotient", k_down.to_string(), "quotient.descent", all_one);
    rep.add_fact("discrepancies", discrepancies, "quotient.descent", all_one);

    const DivisorExpression round_trip = pullback_plus_different(k_down, ram, kP, "K_Y0");
    rep.add_fact("descent_round_trip", round_trip == k_y2, "quotient.descent",
                 round_trip == k_y2);

    const SingularityVerdict sing = classify_singularity(k_down);
    rep.add_fact("classification",
                 sing.cls == SingularityClass::Terminal       ? "terminal"
                 : sing.cls == SingularityClass::Canonical ? "canonical"
                 : sing.cls == SingularityClass::Klt       ? "klt"
                                                           : "none",
                 "discrepancy.terminal-threshold", sing.cls == SingularityClass::Terminal);

    std::map<std::string, std::string> rename;
    rename["E0"] = "F0";
    for (int j = 1; j <= 7; ++j) rename["E" + std::to_string(j)] = "F" + std::to_string(j);
    const DualGraph graph = dual_graph(ledger, rename);
    bool star = graph.vertices.size() == 8 && graph.edges.size() == 7;
    for (const auto& [a, b] : graph.edges) star = star && a == "F0";
    rep.add_fact("dual_graph_star", star, "dualgraph.star", star);
    rep.dot = graph.to_dot("dim3_resolution");

    rep.add_cert("chart.involution", "sigma composed with itself is the identity on every chart");
    rep.add_cert("kl.cartier-smoothness",
                 "fixed scheme Cartier near every exceptional divisor, so the quotient is smooth");
    rep.attachments["charts"] = json::array({chart_json(y0), chart_json(u1), chart_json(v1),
                                        chart_json(v2)});
    return rep;
}

VerificationReport verify_yasuda(unsigned long long p, std::optional<int> n_opt) {
    if (!is_prime_u64(p)) throw std::domain_error("verify_yasuda: p must be prime");
    int n = 0;
    if (n_opt) {
        n = *n_opt;
        if (n < 2) throw std::domain_error("verify_yasuda: n must be >= 2");
    } else {
        // Smallest window-admissible dimension: 4 <= n <= p and n(n-1)/2 > p.
        for (int cand = 4; cand <= static_cast<int>(std::min<unsigned long long>(p, 1 << 20));
             ++cand) {
            if (static_cast<unsigned long long>(cand) * (cand - 1) / 2 > p) {
                n = cand;
                break;
            }
        }
        if (n == 0) n = 4;
    }

    const YasudaVerdict v = yasuda_classify(p, n);
    VerificationReport rep;
    rep.construction = "yasuda";
    rep.inputs["p"] = p;
    rep.inputs["n"] = n;
    rep.add_fact("klt", v.klt, "yasuda.klt-threshold", true);
    rep.add_fact("terminal", v.terminal, "yasuda.terminal-threshold", true);
    rep.add_fact("not_cm", v.not_cm, "fogarty.codim3", v.not_cm == (n - 1 >= 3));
    rep.add_fact("window_ok", v.window_ok, "yasuda.assumption-window", true);
    rep.add_fact("terminal_implies_klt", !v.terminal || v.klt, "yasuda.terminal-threshold",
                 !v.terminal || v.klt);
    rep.add_fact("converse_known", v.converse_known, "yasuda.terminal-threshold", true);
    return rep;
}

}  // namespace fva
