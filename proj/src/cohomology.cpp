#include "cohomology.hpp"

#include <sstream>

namespace fva {

namespace {

std::string entry_to_string(const CohEntry& e) {
    switch (e.kind) {
        case EntryKind::Exact:
            return e.value.str();
        case EntryKind::LowerBound:
            return ">=" + e.value.str();
        case EntryKind::Unknown:
            return "?";
    }
    return "?";
}

}  // namespace

Int CohomologyProfile::alternating_sum() const {
    if (!all_exact()) throw std::logic_error("alternating_sum: profile has non-exact entries");
    Int s = 0;
    for (int i = 0; i <= dim_; ++i) {
        const Int& v = entries_[static_cast<size_t>(i)].value;
        s += (i % 2 == 0) ? v : -v;
    }
    return s;
}

json CohomologyProfile::to_json() const {
    json degrees = json::array();
    for (int i = 0; i <= dim_; ++i) {
        const CohEntry e = entry(i);
        json d;
        d["i"] = i;
        switch (e.kind) {
            case EntryKind::Exact:
                d["kind"] = "exact";
                d["value"] = e.value.str();
                break;
            case EntryKind::LowerBound:
                d["kind"] = "lower_bound";
                d["value"] = e.value.str();
                break;
            case EntryKind::Unknown:
                d["kind"] = "unknown";
                break;
        }
        degrees.push_back(d);
    }
    json out;
    out["dim"] = dim_;
    out["degrees"] = degrees;
    if (euler_) out["euler"] = euler_->str();
    json cert = json::array();
    for (const CertStep& c : cert_) cert.push_back({{"rule", c.rule}, {"detail", c.detail}});
    out["certificate"] = cert;
    return out;
}

CohomologyProfile gb_profile(const RootSystemA& rs, const Int& p, const Weight& mu) {
    if (mu.rank() != rs.rank()) throw std::invalid_argument("gb_profile: rank mismatch");
    if (p < 2) throw std::invalid_argument("gb_profile: p must be >= 2");
    const int dim = static_cast<int>(rs.positive_root_count());

    // R1: dominant weights have cohomology concentrated in degree zero.
    if (mu.is_dominant()) {
        CohomologyProfile prof(dim, CohEntry::zero());
        prof.set_entry(0, CohEntry::exact(weyl_dim(rs, mu)));
        prof.set_euler(euler_char(rs, mu));
        prof.add_cert("kempf.vanishing", "dominant weight " + to_string(mu));
        return prof;
    }

    // R2: a pairing of -1 against a simple root kills all cohomology.
    for (int k = 1; k <= rs.rank(); ++k) {
        if (pairing(mu, simple_root(k)) == -1) {
            CohomologyProfile prof(dim, CohEntry::zero());
            prof.set_euler(0);
            std::ostringstream d;
            d << "pairing(" << to_string(mu) << ", alpha_" << k << "^vee) = -1";
            prof.add_cert("wall.vanishing", d.str());
            return prof;
        }
    }

    // R3: one dot-reflection step.  If nu = s_k . mu satisfies
    // <nu, alpha_k^vee> = s p^m - 1 with 0 < s < p and nu resolves by R1/R2,
    // then H^{i+1}(mu) = H^i(nu): shift nu's profile up one degree.
    for (int k = 1; k <= rs.rank(); ++k) {
        const PositiveRoot alpha = simple_root(k);
        const Weight nu = dot_reflection(rs, mu, alpha);
        const Int c = pairing(nu, alpha);
        if (c < 0) continue;
        Int q = c + 1;
        unsigned m = 0;
        while (q % p == 0) {
            q /= p;
            ++m;
        }
        const Int s = q;
        if (s <= 0 || s >= p) continue;
        bool nu_resolves = nu.is_dominant();
        if (!nu_resolves) {
            for (int t = 1; t <= rs.rank() && !nu_resolves; ++t)
                if (pairing(nu, simple_root(t)) == -1) nu_resolves = true;
        }
        if (!nu_resolves) continue;

        const CohomologyProfile base = gb_profile(rs, p, nu);
        if (!base.entry(dim).is_exact_zero())
            throw std::logic_error("gb_profile: shift would push cohomology past top degree");
        CohomologyProfile prof(dim, CohEntry::zero());
        for (int i = 1; i <= dim; ++i) prof.set_entry(i, base.entry(i - 1));
        prof.set_euler(euler_char(rs, mu));
        for (const CertStep& cstep : base.certificate()) prof.add_cert(cstep.rule, cstep.detail);
        std::ostringstream d;
        d << "H^i(" << to_string(nu) << ") = H^{i+1}(" << to_string(mu) << "), pairing "
          << c.str() << " = " << s.str() << "*p^" << m << " - 1";
        prof.add_cert("andersen.degree-shift", d.str());
        if (prof.all_exact() && prof.alternating_sum() != euler_char(rs, mu))
            throw std::logic_error("gb_profile: alternating sum disagrees with Euler characteristic");
        return prof;
    }

    CohomologyProfile prof(dim, CohEntry::unknown());
    prof.set_euler(euler_char(rs, mu));
    prof.add_cert("rules.exhausted", "no rule applies to " + to_string(mu));
    return prof;
}

namespace {

// Exact, positive in exactly one degree, zero elsewhere.
std::optional<std::pair<int, Int>> concentrated_degree(const CohomologyProfile& prof) {
    if (!prof.all_exact()) return std::nullopt;
    std::optional<std::pair<int, Int>> found;
    for (int i = 0; i <= prof.dim(); ++i) {
        const CohEntry e = prof.entry(i);
        if (e.value == 0) continue;
        if (found) return std::nullopt;
        found = {i, e.value};
    }
    return found;
}

}  // namespace

CohomologyProfile gp_profile(const GPLineBundle& L, const PositiveRoot& alpha) {
    const Int deg = fiber_degree(L, alpha);
    if (deg != 1)
        throw std::invalid_argument("gp_profile: only fiber degree 1 (rank-2 pushforward) is supported");
    const RootSystemA rs = L.f.root_system();
    const Int& p = L.f.p;
    const Weight lambda = L.weight;
    const Weight lambda_shift = lambda - simple_root_weight(rs, alpha.i) * p;

    const CohomologyProfile top = gb_profile(rs, p, lambda);
    const CohomologyProfile bot = gb_profile(rs, p, lambda_shift);
    const int dim_x = gp_dimension(L.f);
    const int dim_gb = static_cast<int>(rs.positive_root_count());

    CohomologyProfile out(dim_x, CohEntry::unknown());
    out.set_euler(euler_char(rs, lambda) + euler_char(rs, lambda_shift));
    out.add_cert("les.rank2-pushforward",
                 "H^*(X) spliced from H^*(" + to_string(lambda) + ") and H^*(" +
                     to_string(lambda_shift) + ")");
    for (const CertStep& c : top.certificate()) out.add_cert(c.rule, c.detail);
    for (const CertStep& c : bot.certificate()) out.add_cert(c.rule, c.detail);

    // Local exactness: ... -> B^i -> H^i(X) -> T^i -> B^{i+1} -> ...
    for (int i = 0; i <= dim_gb + 1; ++i) {
        CohEntry pinned = CohEntry::unknown();
        if (bot.entry(i).is_exact_zero() && bot.entry(i + 1).is_exact_zero())
            pinned = top.entry(i);  // H^i(X) = H^i(lambda)
        else if (top.entry(i - 1).is_exact_zero() && top.entry(i).is_exact_zero())
            pinned = bot.entry(i);  // H^i(X) = H^i(lambda - p alpha)
        else if (top.entry(i).is_exact_zero() && bot.entry(i).is_exact_zero())
            pinned = CohEntry::zero();
        if (i <= dim_x)
            out.set_entry(i, pinned);
        else if (pinned.certifies_nonzero())
            throw std::logic_error("gp_profile: nonzero cohomology above dim X");
    }

    // Four-term refinement: 0 -> H^0(X) -> T -> B -> H^1(X) -> 0.
    const auto top_c = concentrated_degree(top);
    const auto bot_c = concentrated_degree(bot);
    if (top_c && top_c->first == 0 && bot_c && bot_c->first == 1) {
        const Int& t0 = top_c->second;
        const Int& b1 = bot_c->second;
        out.set_entry(0, t0 > b1 ? CohEntry::lower_bound(t0 - b1) : CohEntry::unknown());
        out.set_entry(1, b1 > t0 ? CohEntry::lower_bound(b1 - t0) : CohEntry::unknown());
        std::ostringstream d;
        d << "0 -> H^0(X) -> " << t0.str() << " -> " << b1.str() << " -> H^1(X) -> 0";
        out.add_cert("les.four-term", d.str());
    }

    if (out.all_exact() && out.alternating_sum() != *out.euler())
        throw std::logic_error("gp_profile: alternating sum disagrees with Euler characteristic");
    return out;
}

SteinbergDatum steinberg_shape(const RootSystemA& rs, const Int& p, const Weight& lambda) {
    if (lambda.rank() != rs.rank()) throw std::invalid_argument("steinberg_shape: rank mismatch");
    int a = 0;
    int b = 0;
    for (int k = 1; k <= rs.rank(); ++k) {
        const Int& c = lambda.coeffs[static_cast<size_t>(k - 1)];
        if (c == 0) continue;
        if (c == p && a == 0)
            a = k;
        else if (c == 1 && b == 0)
            b = k;
        else
            throw std::invalid_argument("steinberg_shape: weight is not of shape p*w_a + w_b");
    }
    if (a == 0) throw std::invalid_argument("steinberg_shape: weight is not of shape p*w_a + w_b");
    return SteinbergDatum{rs.n, a, b};
}

Int steinberg_dim(const SteinbergDatum& d) {
    if (d.a < 1 || d.a >= d.n || d.b < 0 || d.b >= d.n)
        throw std::invalid_argument("steinberg_dim: index out of range");
    if (d.b != 0 && d.a == d.b)
        throw std::invalid_argument("steinberg_dim: twisted and untwisted factors must differ");
    return binomial(Int(d.n), static_cast<unsigned>(d.a)) *
           binomial(Int(d.n), static_cast<unsigned>(d.b));
}

SocleBound socle_h1_bound(const RootSystemA& rs, const Int& p, const Weight& lambda,
                          const PositiveRoot& alpha) {
    if (!alpha.is_simple()) throw std::invalid_argument("socle_h1_bound: alpha must be simple");
    // lambda - (lambda - alpha) = alpha is a positive root, so lambda is
    // strictly above lambda - alpha in the root ordering and does not occur
    // as a weight of H^0(lambda - alpha).
    const SteinbergDatum sd = steinberg_shape(rs, p, lambda);
    const Weight lambda_alpha = lambda - simple_root_weight(rs, alpha.i);
    if (!lambda.is_dominant() || !lambda_alpha.is_dominant())
        throw std::invalid_argument("socle_h1_bound: lambda and lambda - alpha must be dominant");
    const Int h0l = weyl_dim(rs, lambda);
    const Int h0la = weyl_dim(rs, lambda_alpha);

    SocleBound out;
    if (sd.b != 0) {
        const Int dim_socle = steinberg_dim(sd);
        out.bound = h0la - (h0l - dim_socle);
        out.variant = "socle";
        std::ostringstream d;
        d << "phi kills L(" << to_string(lambda) << ") of dim " << dim_socle.str()
          << "; image <= " << Int(h0l - dim_socle).str() << " inside " << h0la.str();
        out.certificate.push_back({"steinberg.socle-kernel", d.str()});
    } else {
        out.bound = h0la - h0l + 1;
        out.variant = "occurrence";
        std::ostringstream d;
        d << to_string(lambda) << " occurs in H^0(" << to_string(lambda) << ") but not in H^0("
          << to_string(lambda_alpha) << "); phi not surjective when " << h0la.str()
          << " >= " << h0l.str();
        out.certificate.push_back({"occurrence.highest-weight", d.str()});
    }
    return out;
}

ConeReport cone_report(const GPLineBundle& A, const CohomologyProfile& profile) {
    if (!is_ample(A)) throw std::invalid_argument("cone_report: A must be ample");
    ConeReport out;
    const int dim_x = gp_dimension(A.f);
    out.cone_dimension = Int(dim_x) + 1;

    const Weight minus_k = anticanonical(A.f).weight;
    bool proportional = true;
    std::optional<Rat> ratio;
    for (int k = 0; k < A.weight.rank(); ++k) {
        const Int& aw = A.weight.coeffs[static_cast<size_t>(k)];
        const Int& kw = minus_k.coeffs[static_cast<size_t>(k)];
        if (kw == 0) {
            if (aw != 0) proportional = false;
            continue;
        }
        const Rat r = Rat(aw) / Rat(kw);
        if (!ratio)
            ratio = r;
        else if (*ratio != r)
            proportional = false;
    }
    out.proportional_to_minus_k = proportional && ratio.has_value();
    if (out.proportional_to_minus_k) {
        out.a = *ratio;
        out.is_terminal = (*ratio > 0 && *ratio < 1);
        if (*ratio == 1)
            out.note =
                "a = 1 boundary: the cone is canonical, not terminal; a certified nonzero "
                "middle cohomology group then gives a canonical non-Cohen-Macaulay cone";
    }

    out.cm = CMVerdict::Undetermined;
    for (int i = 1; i < dim_x; ++i) {
        if (profile.entry(i).certifies_nonzero()) {
            out.cm = CMVerdict::NotCohenMacaulay;
            break;
        }
    }

    if (profile.euler()) {
        out.chi = *profile.euler();
        out.no_char0_lift = (out.chi < 0);
    }
    return out;
}

namespace {

json weight_json(const Weight& w) { return json(to_string(w)); }

std::string f_values_string(const ParabolicFunction& f) {
    std::string s;
    for (size_t k = 0; k < f.values.size(); ++k) {
        if (k) s += ",";
        s += f.values[k] ? std::to_string(*f.values[k]) : "inf";
    }
    return s;
}

}  // namespace

VerificationReport verify_thm_2_1(unsigned long long p_in) {
    if (!is_prime_u64(p_in) || p_in < 3)
        throw std::domain_error("verify_thm_2_1: p must be a prime >= 3");
    const Int p(p_in);
    const int n = static_cast<int>(p_in) + 2;
    const RootSystemA rs(n);
    const ParabolicFunction f = fl12_twisted(n, p);

    VerificationReport rep;
    rep.construction = "thm21";
    rep.inputs["p"] = p_in;
    rep.inputs["n"] = n;
    rep.inputs["f"] = f_values_string(f);

    const int dim_x = gp_dimension(f);
    rep.add_fact("dim_x", dim_x, "gp.root-count", dim_x == 2 * static_cast<int>(p_in) + 1);
    rep.add_fact("picard_number", picard_number(f), "picard.lattice", picard_number(f) == 2);

    const GPLineBundle minus_k = anticanonical(f);
    Weight expected_mk(std::vector<Int>(static_cast<size_t>(n - 1), 0));
    expected_mk.coeffs[0] = 2 * p;
    expected_mk.coeffs[1] = Int(n) - p;
    rep.add_fact("minus_k", weight_json(minus_k.weight), "anticanonical.sum-formula",
                 minus_k.weight == expected_mk);
    rep.add_fact("is_fano", is_fano(f), "ample.positive-coefficients", is_fano(f));

    const Int div = divisibility(minus_k);
    rep.add_fact("divisibility", div.str(), "picard.lattice", div == 2);

    Weight a_weight = minus_k.weight;
    for (Int& c : a_weight.coeffs) c /= 2;
    const GPLineBundle A(f, a_weight);
    Weight expected_a(std::vector<Int>(static_cast<size_t>(n - 1), 0));
    expected_a.coeffs[0] = p;
    expected_a.coeffs[1] = 1;
    rep.add_fact("a_bundle", weight_json(A.weight), "picard.lattice", A.weight == expected_a);
    rep.add_fact("a_ample", is_ample(A), "ample.positive-coefficients", is_ample(A));
    rep.add_fact("a_very_ample", is_ample(A), "veryample.homogeneous", is_ample(A));

    const PositiveRoot alpha = simple_root(1);
    const Int fdeg = fiber_degree(A, alpha);
    rep.add_fact("fiber_degree", fdeg.str(), "fiber.degree", fdeg == 1);

    const Weight lambda = A.weight;
    const Weight lambda_alpha = lambda - simple_root_weight(rs, 1);
    const Int h0l = weyl_dim(rs, lambda);
    const Int h0la = weyl_dim(rs, lambda_alpha);
    const Int closed_l = binomial(2 * p + 2, static_cast<unsigned>(p_in)) * (p + 1);
    const Int closed_la =
        binomial(2 * p + 1, static_cast<unsigned>(p_in)) * (p + 2) * (p - 1) / 2;
    rep.add_fact("h0_lambda", h0l.str(), "weyl.dim-formula", h0l == closed_l);
    rep.add_fact("h0_lambda_minus_alpha", h0la.str(), "weyl.dim-formula", h0la == closed_la);

    const Rat ratio = Rat(h0la) / Rat(h0l);
    const Rat ratio_closed = Rat((p - 1) * (p + 2) * (p + 2)) / Rat(4 * (p + 1) * (p + 1));
    rep.add_fact("h0_ratio", to_decimal(ratio), "ratio.identity", ratio == ratio_closed);
    rep.add_fact("ratio_gt_1_iff_p_ge_5", ratio > 1, "ratio.identity",
                 (ratio > 1) == (p_in >= 5));

    const SteinbergDatum sd = steinberg_shape(rs, p, lambda);
    const Int dim_l = steinberg_dim(sd);
    const Int closed_dim_l = Int(n) * Int(n) * Int(n - 1) / 2;
    rep.add_fact("dim_l_lambda", dim_l.str(), "steinberg.tensor-product", dim_l == closed_dim_l);

    CohomologyProfile prof = gp_profile(A, alpha);
    const Int chi = *prof.euler();
    rep.add_fact("chi_x_a", chi.str(), "les.rank2-pushforward", chi == h0l - h0la);

    bool high_zero = true;
    for (int i = 2; i <= prof.dim(); ++i)
        if (!prof.entry(i).is_exact_zero()) high_zero = false;
    rep.add_fact("h_ge_2_zero", high_zero, "les.four-term", high_zero);

    const SocleBound socle = socle_h1_bound(rs, p, lambda, alpha);
    rep.add_fact("h1_bound_socle", socle.bound.str(), "steinberg.socle-kernel",
                 socle.bound == h0la - (h0l - dim_l));
    const Int chi_bound = chi < 0 ? -chi : Int(0);
    rep.add_fact("h1_bound_chi", chi_bound.str(), "les.four-term",
                 (chi_bound > 0) == (p_in >= 5));

    Int h1_bound = socle.bound > chi_bound ? socle.bound : chi_bound;
    rep.add_fact("h1_positive", h1_bound >= 1,
                 p_in >= 5 ? "les.four-term" : "steinberg.socle-kernel", h1_bound >= 1);

    // Strengthen the profile with the socle data before the cone criteria:
    // ker phi contains L(lambda), so h^0(X, A) >= dim L(lambda).
    if (h1_bound > 0) prof.set_entry(1, CohEntry::lower_bound(h1_bound));
    prof.set_entry(0, CohEntry::lower_bound(dim_l));
    for (const CertStep& c : socle.certificate) prof.add_cert(c.rule, c.detail);
    rep.add_fact("h0_interval", json::array({dim_l.str(), h0l.str()}),
                 "steinberg.socle-kernel", dim_l <= h0l);

    const ConeReport cone = cone_report(A, prof);
    rep.add_fact("cone_dimension", cone.cone_dimension.str(), "cone.terminal-criterion",
                 cone.cone_dimension == 2 * p + 2);
    rep.add_fact("cone_a", to_decimal(cone.a), "cone.terminal-criterion",
                 cone.proportional_to_minus_k && cone.a == Rat(1, 2));
    rep.add_fact("cone_terminal", cone.is_terminal, "cone.terminal-criterion", cone.is_terminal);
    rep.add_fact("cone_not_cm", cone.cm == CMVerdict::NotCohenMacaulay, "cone.cm-criterion",
                 cone.cm == CMVerdict::NotCohenMacaulay);
    rep.add_fact("chi_negative_no_char0_lift", cone.no_char0_lift, "lift.chi-obstruction",
                 cone.no_char0_lift == (p_in >= 5));

    for (const CertStep& c : prof.certificate()) rep.add_cert(c.rule, c.detail);
    rep.attachments["profile"] = prof.to_json();
    return rep;
}

VerificationReport verify_thm_3_1(unsigned long long p_in) {
    if (!is_prime_u64(p_in)) throw std::domain_error("verify_thm_3_1: p must be prime");
    const Int p(p_in);

    VerificationReport rep;
    rep.construction = "thm31";
    rep.inputs["p"] = p_in;

    if (p_in >= 3) {
        const int n = static_cast<int>(p_in) + 1;
        const RootSystemA rs(n);
        const ParabolicFunction f = fl12_twisted(n, p);
        rep.inputs["n"] = n;
        rep.inputs["f"] = f_values_string(f);

        const int dim_x = gp_dimension(f);
        rep.add_fact("dim_x", dim_x, "gp.root-count", dim_x == 2 * static_cast<int>(p_in) - 1);
        rep.add_fact("picard_number", picard_number(f), "picard.lattice", picard_number(f) == 2);

        const GPLineBundle minus_k = anticanonical(f);
        Weight expected_mk(std::vector<Int>(static_cast<size_t>(n - 1), 0));
        expected_mk.coeffs[0] = 2 * p;
        expected_mk.coeffs[1] = 1;
        rep.add_fact("minus_k", weight_json(minus_k.weight), "anticanonical.sum-formula",
                     minus_k.weight == expected_mk);
        rep.add_fact("is_fano", is_fano(f), "ample.positive-coefficients", is_fano(f));
        const Int div = divisibility(minus_k);
        rep.add_fact("divisibility", div.str(), "picard.lattice", div == 1);

        Weight a_weight(std::vector<Int>(static_cast<size_t>(n - 1), 0));
        a_weight.coeffs[0] = 3 * p;
        a_weight.coeffs[1] = 1;
        const GPLineBundle A(f, a_weight);
        rep.add_fact("a_bundle", weight_json(A.weight), "picard.lattice", is_ample(A));
        rep.add_fact("a_very_ample", is_ample(A), "veryample.homogeneous", is_ample(A));

        // mu = K_X + A.
        const Weight mu = A.weight - minus_k.weight;
        Weight expected_mu(std::vector<Int>(static_cast<size_t>(n - 1), 0));
        expected_mu.coeffs[0] = p;
        rep.add_fact("mu", weight_json(mu), "picard.lattice", mu == expected_mu);
        const GPLineBundle Lmu(f, mu);

        const PositiveRoot alpha = simple_root(1);
        const Int fdeg = fiber_degree(Lmu, alpha);
        rep.add_fact("fiber_degree", fdeg.str(), "fiber.degree", fdeg == 1);

        const RootSystemA& rsr = rs;
        const Weight mu_alpha = mu - simple_root_weight(rsr, 1);
        const Int h0m = weyl_dim(rsr, mu);
        const Int h0ma = weyl_dim(rsr, mu_alpha);
        const Int closed_m = binomial(2 * p, static_cast<unsigned>(p_in));
        const Int sym_power = binomial(Int(n) + p - 1, static_cast<unsigned>(n - 1));
        const Int closed_ma =
            binomial(2 * p - 1, static_cast<unsigned>(p_in - 1)) * (p - 1);
        rep.add_fact("h0_mu", h0m.str(), "weyl.dim-formula",
                     h0m == closed_m && h0m == sym_power);
        rep.add_fact("h0_mu_minus_alpha", h0ma.str(), "weyl.dim-formula", h0ma == closed_ma);
        const Rat ratio = Rat(h0ma) / Rat(h0m);
        rep.add_fact("h0_ratio", to_decimal(ratio), "ratio.identity", ratio == Rat(p - 1) / 2);

        CohomologyProfile prof = gp_profile(Lmu, alpha);
        const Int chi = *prof.euler();
        rep.add_fact("chi_x_mu", chi.str(), "les.rank2-pushforward", chi == h0m - h0ma);
        bool high_zero = true;
        for (int i = 2; i <= prof.dim(); ++i)
            if (!prof.entry(i).is_exact_zero()) high_zero = false;
        rep.add_fact("h_ge_2_zero", high_zero, "les.four-term", high_zero);

        Int h1_bound = chi < 0 ? -chi : Int(0);
        std::string anchor = "les.four-term";
        if (p_in == 3) {
            rep.add_fact("dims_equal_20", h0m == 20 && h0ma == 20, "weyl.dim-formula",
                         h0m == 20 && h0ma == 20);
            const SocleBound occ = socle_h1_bound(rsr, p, mu, alpha);
            rep.add_fact("h1_bound_occurrence", occ.bound.str(), "occurrence.highest-weight",
                         occ.bound == 1);
            if (occ.bound > h1_bound) h1_bound = occ.bound;
            anchor = "occurrence.highest-weight";
            for (const CertStep& c : occ.certificate) rep.add_cert(c.rule, c.detail);
        }
        rep.add_fact("h1_positive", h1_bound >= 1, anchor, h1_bound >= 1);
        rep.add_fact("chi_negative_iff_p_ne_3", chi < 0, "les.rank2-pushforward",
                     (chi < 0) == (p_in != 3));
        if (h1_bound > 0) prof.set_entry(1, CohEntry::lower_bound(h1_bound));
        for (const CertStep& c : prof.certificate()) rep.add_cert(c.rule, c.detail);
        rep.attachments["profile"] = prof.to_json();
        return rep;
    }

    // p = 2: n = 4, A = 6 w1 + w2, mu = K_X + A = 2 w1 - w2.
    const int n = 4;
    const RootSystemA rs(n);
    const ParabolicFunction f = fl12_twisted(n, p);
    rep.inputs["n"] = n;
    rep.inputs["f"] = f_values_string(f);

    const int dim_x = gp_dimension(f);
    rep.add_fact("dim_x", dim_x, "gp.root-count", dim_x == 5);
    rep.add_fact("picard_number", picard_number(f), "picard.lattice", picard_number(f) == 2);

    const GPLineBundle minus_k = anticanonical(f);
    rep.add_fact("minus_k", weight_json(minus_k.weight), "anticanonical.sum-formula",
                 minus_k.weight == Weight({Int(4), Int(2), Int(0)}));
    rep.add_fact("is_fano", is_fano(f), "ample.positive-coefficients", is_fano(f));

    const GPLineBundle A(f, Weight({Int(6), Int(1), Int(0)}));
    rep.add_fact("a_bundle", weight_json(A.weight), "picard.lattice", is_ample(A));
    rep.add_fact("a_very_ample", is_ample(A), "veryample.homogeneous", is_ample(A));

    const Weight mu = A.weight - minus_k.weight;
    rep.add_fact("mu", weight_json(mu), "picard.lattice", mu == Weight({Int(2), Int(-1), Int(0)}));
    const GPLineBundle Lmu(f, mu);

    const PositiveRoot alpha = simple_root(1);
    const Int fdeg = fiber_degree(Lmu, alpha);
    rep.add_fact("fiber_degree", fdeg.str(), "fiber.degree", fdeg == 1);

    const Weight mu_shift = mu - simple_root_weight(rs, 1) * p;
    const Int chi_mu = euler_char(rs, mu);
    const Int chi_shift = euler_char(rs, mu_shift);
    rep.add_fact("euler_gb_mu", chi_mu.str(), "weyl.character-euler", chi_mu == 0);
    rep.add_fact("euler_gb_mu_shift", chi_shift.str(), "weyl.character-euler", chi_shift == -1);

    const CohomologyProfile gb_mu = gb_profile(rs, p, mu);
    rep.add_fact("h0_x_mu", gb_mu.all_zero() ? "0" : "?", "wall.vanishing", gb_mu.all_zero());

    CohomologyProfile prof = gp_profile(Lmu, alpha);
    const Int chi = *prof.euler();
    rep.add_fact("chi_x_mu", chi.str(), "les.rank2-pushforward", chi == -1);
    bool pinned = prof.entry(1).kind == EntryKind::Exact && prof.entry(1).value == 1;
    bool others_zero = prof.entry(0).is_exact_zero();
    for (int i = 2; i <= prof.dim(); ++i)
        if (!prof.entry(i).is_exact_zero()) others_zero = false;
    rep.add_fact("h1_exact", entry_to_string(prof.entry(1)), "andersen.degree-shift", pinned);
    rep.add_fact("h_other_zero", others_zero, "wall.vanishing", others_zero);
    rep.add_fact("h1_positive", pinned, "andersen.degree-shift", pinned);

    for (const CertStep& c : prof.certificate()) rep.add_cert(c.rule, c.detail);
    rep.attachments["profile"] = prof.to_json();
    return rep;
}

}  // namespace fva
