#include "fixed_schemes.hpp"

#include <algorithm>
#include <sstream>

namespace fva {

namespace {

uint32_t mod_inverse(uint32_t a, uint32_t p) {
    // Fermat: a^(p-2) mod p.
    uint64_t base = a % p;
    uint64_t result = 1;
    uint32_t e = p - 2;
    while (e) {
        if (e & 1u) result = result * base % p;
        base = base * base % p;
        e >>= 1u;
    }
    return static_cast<uint32_t>(result);
}

// Graded-lex comparison: true when a < b.
bool term_less(const std::pair<std::vector<uint32_t>, long>& a,
               const std::pair<std::vector<uint32_t>, long>& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
}

long degree_of(const PolyFp::Exponents& e) {
    long d = 0;
    for (uint32_t x : e) d += x;
    return d;
}

void check_compatible(const PolyFp& a, const PolyFp& b, const char* what) {
    if (a.p() != b.p() || a.nvars() != b.nvars())
        throw std::invalid_argument(std::string(what) + ": mixed characteristics or arities");
}

}  // namespace

PolyFp::PolyFp(uint32_t p, size_t nvars) : p_(p), nvars_(nvars) {
    if (p < 2) throw std::invalid_argument("PolyFp: p must be >= 2");
}

PolyFp PolyFp::constant(uint32_t p, size_t nvars, long long c) {
    PolyFp out(p, nvars);
    long long r = c % static_cast<long long>(p);
    if (r < 0) r += p;
    if (r != 0) out.terms_[Exponents(nvars, 0)] = static_cast<uint32_t>(r);
    return out;
}

PolyFp PolyFp::variable(uint32_t p, size_t nvars, size_t idx) {
    if (idx >= nvars) throw std::invalid_argument("PolyFp::variable: index out of range");
    PolyFp out(p, nvars);
    Exponents e(nvars, 0);
    e[idx] = 1;
    out.terms_[e] = 1;
    return out;
}

bool PolyFp::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0;
}

long PolyFp::total_degree() const {
    long best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, degree_of(e));
    return best;
}

void PolyFp::add_term(const Exponents& e, uint32_t c) {
    if (c % p_ == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c % p_;
    } else {
        const uint32_t v = (it->second + c) % p_;
        if (v == 0)
            terms_.erase(it);
        else
            it->second = v;
    }
}

PolyFp PolyFp::operator+(const PolyFp& o) const {
    check_compatible(*this, o, "PolyFp::+");
    PolyFp out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

PolyFp PolyFp::operator-() const {
    PolyFp out(p_, nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = p_ - c;
    return out;
}

PolyFp PolyFp::operator-(const PolyFp& o) const { return *this + (-o); }

PolyFp PolyFp::operator*(const PolyFp& o) const {
    check_compatible(*this, o, "PolyFp::*");
    PolyFp out(p_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (size_t k = 0; k < nvars_; ++k) e[k] = ea[k] + eb[k];
            out.add_term(e, static_cast<uint32_t>(
                                static_cast<uint64_t>(ca) * cb % p_));
        }
    }
    return out;
}

PolyFp PolyFp::pow(uint32_t e) const {
    PolyFp out = PolyFp::constant(p_, nvars_, 1);
    PolyFp base = *this;
    while (e) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

std::optional<long> PolyFp::order(size_t v) const {
    if (v >= nvars_) throw std::invalid_argument("PolyFp::order: variable out of range");
    if (terms_.empty()) return std::nullopt;
    long best = -1;
    for (const auto& [e, c] : terms_) {
        const long o = static_cast<long>(e[v]);
        if (best < 0 || o < best) best = o;
    }
    return best;
}

PolyFp PolyFp::shift_down(size_t v, uint32_t k) const {
    PolyFp out(p_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] < k) throw std::invalid_argument("PolyFp::shift_down: order too small");
        Exponents ne = e;
        ne[v] -= k;
        out.terms_[ne] = c;
    }
    return out;
}

std::pair<PolyFp::Exponents, uint32_t> PolyFp::leading_term() const {
    const auto& l = leading();
    return {l.first, l.second};
}

const std::pair<const PolyFp::Exponents, uint32_t>& PolyFp::leading() const {
    if (terms_.empty()) throw std::logic_error("PolyFp::leading: zero polynomial");
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (term_less({best->first, degree_of(best->first)}, {it->first, degree_of(it->first)}))
            best = it;
    }
    return *best;
}

std::optional<PolyFp> PolyFp::div_exact(const PolyFp& divisor) const {
    check_compatible(*this, divisor, "PolyFp::div_exact");
    if (divisor.is_zero()) throw std::invalid_argument("PolyFp::div_exact: division by zero");
    PolyFp r = *this;
    PolyFp q(p_, nvars_);
    const auto& ld = divisor.leading();
    const uint32_t inv = mod_inverse(ld.second, p_);
    while (!r.is_zero()) {
        const auto& lr = r.leading();
        Exponents e(nvars_);
        for (size_t k = 0; k < nvars_; ++k) {
            if (lr.first[k] < ld.first[k]) return std::nullopt;
            e[k] = lr.first[k] - ld.first[k];
        }
        const uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(lr.second) * inv % p_);
        PolyFp mono(p_, nvars_);
        mono.terms_[e] = c;
        q = q + mono;
        r = r - mono * divisor;
    }
    return q;
}

uint32_t PolyFp::eval(const std::vector<uint32_t>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("PolyFp::eval: wrong point arity");
    uint64_t total = 0;
    for (const auto& [e, c] : terms_) {
        uint64_t t = c;
        for (size_t k = 0; k < nvars_; ++k) {
            for (uint32_t j = 0; j < e[k]; ++j) t = t * (point[k] % p_) % p_;
        }
        total = (total + t) % p_;
    }
    return static_cast<uint32_t>(total);
}

PolyFp PolyFp::monic() const {
    if (is_zero()) return *this;
    const uint32_t lc = leading().second;
    if (lc == 1) return *this;
    const uint32_t inv = mod_inverse(lc, p_);
    PolyFp out(p_, nvars_);
    for (const auto& [e, c] : terms_)
        out.terms_[e] = static_cast<uint32_t>(static_cast<uint64_t>(c) * inv % p_);
    return out;
}

RatFp PolyFp::substitute(const std::vector<RatFp>& images) const {
    if (images.size() != nvars_) throw std::invalid_argument("PolyFp::substitute: arity mismatch");
    const size_t target_vars = images.empty() ? 0 : images[0].num().nvars();
    RatFp acc(PolyFp(p_, target_vars));
    for (const auto& [e, c] : terms_) {
        RatFp term(PolyFp::constant(p_, target_vars, c));
        for (size_t k = 0; k < nvars_; ++k) {
            for (uint32_t j = 0; j < e[k]; ++j) term = term * images[k];
        }
        acc = acc + term;
    }
    return acc;
}

PolyFp PolyFp::substitute_poly(const std::vector<PolyFp>& images) const {
    if (images.size() != nvars_)
        throw std::invalid_argument("PolyFp::substitute_poly: arity mismatch");
    const size_t target_vars = images.empty() ? 0 : images[0].nvars();
    PolyFp acc(p_, target_vars);
    for (const auto& [e, c] : terms_) {
        PolyFp term = PolyFp::constant(p_, target_vars, c);
        for (size_t k = 0; k < nvars_; ++k) term = term * images[k].pow(e[k]);
        acc = acc + term;
    }
    return acc;
}

std::string PolyFp::to_string(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw std::invalid_argument("PolyFp::to_string: names mismatch");
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, uint32_t>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return term_less({b.first, degree_of(b.first)}, {a.first, degree_of(a.first)});
    });
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : sorted) {
        if (!first) out << " + ";
        first = false;
        const bool is_const_term = degree_of(e) == 0;
        bool printed = false;
        if (c != 1 || is_const_term) {
            out << c;
            printed = true;
        }
        for (size_t k = 0; k < nvars_; ++k) {
            if (e[k] == 0) continue;
            if (printed) out << "*";
            out << names[k];
            if (e[k] > 1) out << "^" << e[k];
            printed = true;
        }
    }
    return out.str();
}

RatFp::RatFp(PolyFp num) : num_(std::move(num)), den_(PolyFp::constant(num_.p(), num_.nvars(), 1)) {}

RatFp::RatFp(PolyFp num, PolyFp den) : num_(std::move(num)), den_(std::move(den)) {
    check_compatible(num_, den_, "RatFp");
    if (den_.is_zero()) throw std::invalid_argument("RatFp: zero denominator");
    // Cancel pure powers of each coordinate.
    for (size_t v = 0; v < num_.nvars(); ++v) {
        if (num_.is_zero()) break;
        const long k = std::min(*num_.order(v), *den_.order(v));
        if (k > 0) {
            num_ = num_.shift_down(v, static_cast<uint32_t>(k));
            den_ = den_.shift_down(v, static_cast<uint32_t>(k));
        }
    }
    if (num_.is_zero()) den_ = PolyFp::constant(num_.p(), num_.nvars(), 1);
    // Normalize the denominator scalar.
    PolyFp monic_den = den_.monic();
    if (!(monic_den == den_)) {
        // scale numerator by the same unit
        // den = c * monic_den with c the leading coefficient
        // find c by dividing
        auto q = den_.div_exact(monic_den);
        if (q && q->is_constant() && !q->is_zero()) {
            const uint32_t c = q->terms().begin()->second;
            const uint32_t inv = mod_inverse(c, den_.p());
            num_ = num_ * PolyFp::constant(num_.p(), num_.nvars(), inv);
            den_ = monic_den;
        }
    }
}

RatFp RatFp::operator+(const RatFp& o) const {
    return RatFp(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFp RatFp::operator-(const RatFp& o) const {
    return RatFp(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFp RatFp::operator*(const RatFp& o) const { return RatFp(num_ * o.num_, den_ * o.den_); }

RatFp RatFp::operator/(const RatFp& o) const {
    if (o.is_zero()) throw std::invalid_argument("RatFp: division by zero");
    return RatFp(num_ * o.den_, den_ * o.num_);
}

bool RatFp::same_function(const RatFp& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RatFp RatFp::substitute(const std::vector<RatFp>& images) const {
    return num_.substitute(images) / den_.substitute(images);
}

std::string RatFp::to_string(const std::vector<std::string>& names) const {
    if (den_.is_constant() && !den_.is_zero() && den_.terms().begin()->second == 1 &&
        den_.total_degree() == 0)
        return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

ChartAction::ChartAction(uint32_t p_, std::vector<std::string> coords_, std::vector<RatFp> sigma_,
                         std::vector<PolyFp> units_)
    : p(p_), coords(std::move(coords_)), sigma(std::move(sigma_)), units(std::move(units_)) {
    if (sigma.size() != coords.size())
        throw std::invalid_argument("ChartAction: one sigma image per coordinate");
    for (const RatFp& s : sigma) {
        if (s.num().nvars() != coords.size() || s.num().p() != p)
            throw std::invalid_argument("ChartAction: sigma arity/characteristic mismatch");
        if (!is_unit_product(s.den(), units))
            throw std::invalid_argument(
                "ChartAction: sigma denominator is not a product of declared units");
    }
    // sigma must be an involution on every coordinate.
    for (size_t i = 0; i < coords.size(); ++i) {
        const RatFp twice = sigma[i].substitute(sigma);
        const RatFp xi(PolyFp::variable(p, coords.size(), i));
        if (!twice.same_function(xi))
            throw std::invalid_argument("ChartAction: sigma composed with itself is not the identity");
    }
}

size_t ChartAction::coord_index(const std::string& name) const {
    for (size_t k = 0; k < coords.size(); ++k)
        if (coords[k] == name) return k;
    throw std::invalid_argument("ChartAction: no coordinate named " + name);
}

bool is_unit_product(const PolyFp& q, const std::vector<PolyFp>& units) {
    if (q.is_zero()) return false;
    PolyFp r = q;
    bool progressed = true;
    while (progressed && !r.is_constant()) {
        progressed = false;
        for (const PolyFp& u : units) {
            if (u.is_constant()) continue;
            if (auto d = r.div_exact(u)) {
                r = *d;
                progressed = true;
                break;
            }
        }
    }
    return r.is_constant() && !r.is_zero();
}

PolyFp normalize_generator(const PolyFp& g, const std::vector<PolyFp>& units) {
    if (g.is_zero()) return g;
    PolyFp r = g;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (const PolyFp& u : units) {
            if (u.is_constant() || u.total_degree() < 1) continue;
            if (auto d = r.div_exact(u)) {
                if (!d->is_zero()) {
                    r = *d;
                    progressed = true;
                    break;
                }
            }
        }
    }
    return r.monic();
}

std::vector<PolyFp> fixed_scheme_generators(const ChartAction& c) {
    std::vector<PolyFp> out;
    out.reserve(c.nvars());
    for (size_t i = 0; i < c.nvars(); ++i) {
        const RatFp xi(PolyFp::variable(c.p, c.nvars(), i));
        const RatFp diff = c.sigma[i] - xi;
        if (!is_unit_product(diff.den(), c.units))
            throw std::invalid_argument("fixed_scheme_generators: denominator not a unit product");
        out.push_back(normalize_generator(diff.num(), c.units));
    }
    return out;
}

std::optional<long> divisor_valuation(const RatFp& f, size_t v) {
    if (f.is_zero()) return std::nullopt;
    return *f.num().order(v) - *f.den().order(v);
}

CartierVerdict cartier_test(const std::vector<PolyFp>& gens, const std::vector<PolyFp>& units,
                            std::optional<size_t> t) {
    std::vector<PolyFp> norm;
    for (const PolyFp& g : gens) {
        const PolyFp n = normalize_generator(g, units);
        if (!n.is_zero()) norm.push_back(n);
    }
    if (norm.empty()) throw std::invalid_argument("cartier_test: zero ideal");

    // First generator of minimal total degree; the generator order is fixed
    // by the coordinate order, so the choice is deterministic.
    size_t best = 0;
    for (size_t k = 1; k < norm.size(); ++k) {
        if (norm[k].total_degree() < norm[best].total_degree()) best = k;
    }
    const PolyFp& g = norm[best];

    bool divides_all = true;
    for (const PolyFp& h : norm) {
        if (!h.div_exact(g)) {
            divides_all = false;
            break;
        }
    }

    CartierVerdict out;
    if (divides_all) {
        out.principal = true;
        out.generator = g;
        PolyFp residual = g;
        for (size_t v = 0; v < g.nvars(); ++v) {
            const long k = *residual.order(v);
            if (k > 0) {
                out.coordinate_powers.emplace_back(v, static_cast<uint32_t>(k));
                residual = residual.shift_down(v, static_cast<uint32_t>(k));
            }
        }
        out.residual_factor = residual;
        return out;
    }

    out.principal = false;
    if (t) {
        long m = -1;
        for (const PolyFp& h : norm) {
            const long o = *h.order(*t);
            if (m < 0 || o < m) m = o;
        }
        out.min_t_order = m;
        for (const PolyFp& h : norm)
            out.cofactors.push_back(h.shift_down(*t, static_cast<uint32_t>(m)));
        // Enumerate F_p points of {t = 0} where every cofactor vanishes.
        const size_t nv = norm[0].nvars();
        const uint32_t p = norm[0].p();
        std::vector<uint32_t> point(nv, 0);
        auto next = [&]() -> bool {
            for (size_t k = nv; k-- > 0;) {
                if (k == *t) continue;  // stay on t = 0
                if (++point[k] < p) return true;
                point[k] = 0;
            }
            return false;
        };
        while (true) {
            bool all_zero = true;
            for (const PolyFp& cf : out.cofactors) {
                if (cf.eval(point) != 0) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) out.failure_points.push_back(point);
            if (!next()) break;
        }
        std::sort(out.failure_points.begin(), out.failure_points.end());
    }
    return out;
}

ChartAction blowup_chart(const ChartAction& c, const std::vector<size_t>& center, size_t pivot,
                         const std::vector<std::string>& new_names,
                         const std::vector<PolyFp>& extra_units) {
    const size_t nv = c.nvars();
    if (std::find(center.begin(), center.end(), pivot) == center.end())
        throw std::invalid_argument("blowup_chart: pivot must belong to the center");
    if (new_names.size() != center.size() - 1)
        throw std::invalid_argument("blowup_chart: need a name per non-pivot center coordinate");
    const std::vector<uint32_t> origin(nv, 0);
    for (size_t x : center) {
        if (x >= nv) throw std::invalid_argument("blowup_chart: center coordinate out of range");
        if (c.sigma[x].num().eval(origin) != 0 || c.sigma[x].den().eval(origin) == 0)
            throw std::invalid_argument("blowup_chart: sigma does not fix the center");
    }

    // Old coordinates in terms of the new chart: x = pivot * v_x on the
    // center, identity elsewhere.  Arity is unchanged; names are replaced in
    // place.
    std::vector<std::string> names = c.coords;
    {
        size_t ni = 0;
        for (size_t x : center) {
            if (x == pivot) continue;
            names[x] = new_names[ni++];
        }
    }
    std::vector<PolyFp> old_in_new;
    old_in_new.reserve(nv);
    const PolyFp pv = PolyFp::variable(c.p, nv, pivot);
    for (size_t k = 0; k < nv; ++k) {
        const bool in_center = std::find(center.begin(), center.end(), k) != center.end();
        if (in_center && k != pivot)
            old_in_new.push_back(pv * PolyFp::variable(c.p, nv, k));
        else
            old_in_new.push_back(PolyFp::variable(c.p, nv, k));
    }
    std::vector<RatFp> old_in_new_rat;
    old_in_new_rat.reserve(nv);
    for (const PolyFp& q : old_in_new) old_in_new_rat.emplace_back(q);

    std::vector<RatFp> sigma_new;
    sigma_new.reserve(nv);
    const RatFp sigma_pivot = c.sigma[pivot].substitute(old_in_new_rat);
    for (size_t k = 0; k < nv; ++k) {
        const RatFp pushed = c.sigma[k].substitute(old_in_new_rat);
        const bool in_center = std::find(center.begin(), center.end(), k) != center.end();
        if (in_center && k != pivot)
            sigma_new.push_back(pushed / sigma_pivot);
        else
            sigma_new.push_back(pushed);
    }

    std::vector<PolyFp> units_new;
    for (const PolyFp& u : c.units) units_new.push_back(u.substitute_poly(old_in_new));
    for (const PolyFp& u : extra_units) units_new.push_back(u);

    return ChartAction(c.p, names, sigma_new, units_new);
}

ChartAction translate_chart(const ChartAction& c, const std::vector<uint32_t>& point,
                            const std::optional<std::vector<std::string>>& new_names) {
    const size_t nv = c.nvars();
    if (point.size() != nv) throw std::invalid_argument("translate_chart: wrong point arity");
    std::vector<std::string> names = new_names ? *new_names : c.coords;
    if (names.size() != nv) throw std::invalid_argument("translate_chart: wrong name count");

    // x_k = y_k + a_k; sigma_new(y_k) = sigma(x)|_{x -> y+a} - a_k.
    std::vector<PolyFp> shift;
    std::vector<RatFp> shift_rat;
    for (size_t k = 0; k < nv; ++k) {
        const PolyFp s =
            PolyFp::variable(c.p, nv, k) + PolyFp::constant(c.p, nv, point[k]);
        shift.push_back(s);
        shift_rat.emplace_back(s);
    }
    std::vector<RatFp> sigma_new;
    for (size_t k = 0; k < nv; ++k) {
        const RatFp moved = c.sigma[k].substitute(shift_rat);
        sigma_new.push_back(moved - RatFp(PolyFp::constant(c.p, nv, point[k])));
    }
    std::vector<PolyFp> units_new;
    for (const PolyFp& u : c.units) units_new.push_back(u.substitute_poly(shift));
    return ChartAction(c.p, names, sigma_new, units_new);
}

std::optional<long> artin_number(const ChartAction& c, size_t t) {
    if (t >= c.nvars()) throw std::invalid_argument("artin_number: coordinate out of range");
    std::optional<long> best;
    for (size_t i = 0; i < c.nvars(); ++i) {
        const RatFp xi(PolyFp::variable(c.p, c.nvars(), i));
        const auto v = divisor_valuation(c.sigma[i] - xi, t);
        if (!v) continue;
        if (!best || *v < *best) best = v;
    }
    return best;
}

SwanResult swan_classify(const ChartAction& c, size_t t, long i) {
    if (i < 1) throw std::invalid_argument("swan_classify: need i >= 1 (sigma must fix the divisor)");
    SwanResult out{RamificationType::Ambiguous, std::nullopt, std::nullopt, std::nullopt,
                   std::nullopt};
    if (i == 1) {
        // s > 0 and s in {i-1, i} force s = 1 = i.
        out.type = RamificationType::Fierce;
        out.swan = 1;
        out.ram_index = 1;
        out.residue_degree = c.p;
        return out;
    }
    std::optional<long> u;
    for (size_t k = 0; k < c.nvars(); ++k) {
        const RatFp xk(PolyFp::variable(c.p, c.nvars(), k));
        const RatFp ratio = c.sigma[k] / xk - RatFp(PolyFp::constant(c.p, c.nvars(), 1));
        const auto v = divisor_valuation(ratio, t);
        if (!v) continue;
        if (!u || *v < *u) u = v;
    }
    if (!u) throw std::logic_error("swan_classify: no coordinate is moved by sigma");
    out.generator_upper_bound = u;
    if (*u < i - 1)
        throw std::logic_error("swan_classify: generator bound below i-1 contradicts s >= i-1");
    if (*u == i - 1) {
        out.type = RamificationType::Wild;
        out.swan = i - 1;
        out.ram_index = c.p;
        out.residue_degree = 1;
        return out;
    }
    // u >= i: the generators alone cannot separate s = i-1 from s = i.
    out.type = RamificationType::Ambiguous;
    return out;
}

long long different_coefficient(uint32_t p, long i) {
    if (i < 1) throw std::invalid_argument("different_coefficient: need i >= 1");
    return static_cast<long long>(p - 1) * i;
}

bool reduces_to_zero(PolyFp g, const std::vector<PolyFp>& gens) {
    while (!g.is_zero()) {
        const auto [ge, gc] = g.leading_term();
        bool reduced = false;
        for (const PolyFp& d : gens) {
            if (d.is_zero()) continue;
            const auto [de, dc] = d.leading_term();
            bool fits = true;
            PolyFp::Exponents e(g.nvars());
            for (size_t k = 0; k < g.nvars(); ++k) {
                if (ge[k] < de[k]) {
                    fits = false;
                    break;
                }
                e[k] = ge[k] - de[k];
            }
            if (!fits) continue;
            PolyFp mono(g.p(), g.nvars());
            mono = PolyFp::constant(g.p(), g.nvars(),
                                    static_cast<long long>(static_cast<uint64_t>(gc) *
                                                           mod_inverse(dc, g.p()) % g.p()));
            for (size_t k = 0; k < g.nvars(); ++k)
                mono = mono * PolyFp::variable(g.p(), g.nvars(), k).pow(e[k]);
            g = g - mono * d;
            reduced = true;
            break;
        }
        if (!reduced) return false;
    }
    return true;
}

}  // namespace fva
