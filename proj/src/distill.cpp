#include "qmsd/distill.hpp"

#include <cstdio>

#include <json.hpp>

namespace qmsd {

namespace {

ZPoly poly_of(const WeightEnumerator& w) {
    ZPoly p(w.coeffs.begin(), w.coeffs.end());
    zp_trim(p);
    return p;
}

// sum_w c_w (3-eps)^w (8eps-6)^(n-w): the enumerator evaluated at z(eps) with
// the (8eps-6)^n denominator cleared.
ZPoly homogenize(const WeightEnumerator& w, std::size_t n) {
    std::vector<ZPoly> low(n + 1), high(n + 1);
    low[0] = high[0] = ZPoly{1};
    ZPoly three_minus{3, -1}, eight_minus6{-6, 8};
    for (std::size_t d = 1; d <= n; ++d) {
        low[d] = zp_mul(low[d - 1], three_minus);
        high[d] = zp_mul(high[d - 1], eight_minus6);
    }
    ZPoly sum;
    for (std::size_t d = 0; d < w.coeffs.size(); ++d) {
        if (w.coeffs[d] == 0) continue;
        if (d > n) throw Error("distillation: enumerator degree exceeds n");
        sum = zp_add(sum, zp_scale(zp_mul(low[d], high[n - d]), w.coeffs[d]));
    }
    return sum;
}

int sign_near_zero(const ZPoly& p) {
    for (const auto& c : p) {
        if (c > 0) return 1;
        if (c < 0) return -1;
    }
    return 0;
}

}  // namespace

StrangeParams strange_params(const BigRat& epsilon) {
    if (epsilon < 0 || epsilon > 1)
        throw Error("strange_params: out-of-range epsilon");
    StrangeParams p;
    p.epsilon = epsilon;
    p.x = (BigRat(-1) + BigRat(4) * epsilon / 3) / 3;
    p.y = (BigRat(1) - epsilon / 3) / 6;
    return p;
}

BigRat z_of_eps(const BigRat& epsilon) {
    BigRat den = BigRat(8) * epsilon - 6;
    if (den == 0) throw Error("z_of_eps: pole at epsilon = 3/4");
    return (BigRat(3) - epsilon) / den;
}

RationalFunction distillation_map(const WeightEnumerator& a,
                                  const WeightEnumerator& b, std::size_t n) {
    ZPoly ahat = homogenize(a, n);
    ZPoly bhat = homogenize(b, n);
    ZPoly num = zp_scale(zp_add(zp_scale(ahat, 3), bhat), 3);
    ZPoly den = zp_scale(bhat, 4);
    return make_rational_function(std::move(num), std::move(den));
}

ConditionFlags check_conditions(const WeightEnumerator& a,
                                const WeightEnumerator& b, std::size_t) {
    ZPoly pa = poly_of(a), pb = poly_of(b);
    ZPoly pa1 = zp_derivative(pa), pb1 = zp_derivative(pb);
    ZPoly pa2 = zp_derivative(pa1), pb2 = zp_derivative(pb1);
    BigRat z(-1, 2);
    ConditionFlags f;
    f.b_nonzero = zp_eval(pb, z) != 0;
    f.sum_zero = BigRat(3) * zp_eval(pa, z) + zp_eval(pb, z) == 0;
    f.deriv1_zero = BigRat(3) * zp_eval(pa1, z) + zp_eval(pb1, z) == 0;
    f.deriv2_zero = BigRat(3) * zp_eval(pa2, z) + zp_eval(pb2, z) == 0;
    return f;
}

std::optional<NoiseExponent> noise_exponent(const RationalFunction& map) {
    if (map.den.empty() || map.den[0] == 0) return std::nullopt;
    if (map.num.empty()) return std::nullopt;
    std::size_t delta = 0;
    while (map.num[delta] == 0) ++delta;
    return NoiseExponent{delta, BigRat(map.num[delta], map.den[0])};
}

double threshold(const RationalFunction& map) {
    // R(eps) = num - eps * den; roots of R in (0, 3/4) are the fixed points
    ZPoly shifted(map.den.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < map.den.size(); ++i) shifted[i + 1] = map.den[i];
    ZPoly r = zp_sub(map.num, shifted);
    if (r.empty()) return 0.0;  // eps' = eps identically: nothing to distill
    // eps' - eps = R/den; its sign just right of 0 decides the degenerate case
    if (sign_near_zero(r) * sign_near_zero(map.den) > 0) return 0.0;
    std::size_t m = 0;
    while (r[m] == 0) ++m;
    ZPoly stripped(r.begin() + long(m), r.end());
    auto root = smallest_root(stripped, BigRat(0), BigRat(3, 4));
    if (root) return *root;
    return 0.75;  // contraction on all of (0, 3/4)
}

BigRat success_probability(const WeightEnumerator& b, std::size_t n, int,
                           const BigRat& epsilon) {
    StrangeParams p = strange_params(epsilon);
    BigRat nu = 0;
    for (std::size_t w = 0; w < b.coeffs.size(); ++w) {
        if (b.coeffs[w] == 0) continue;
        if (w > n) throw Error("success_probability: enumerator degree exceeds n");
        BigRat term(b.coeffs[w]);
        for (std::size_t i = 0; i < n - w; ++i) term *= p.x;
        for (std::size_t i = 0; i < w; ++i) term *= p.y;
        nu += term;
    }
    if (nu < 0 || nu > 1)
        throw Error("success_probability: inconsistent-enumerator (nu = " +
                    rat_num(nu) + "/" + rat_den(nu) + " outside [0,1])");
    return nu;
}

OutputState output_state(const WeightEnumerator& a, const WeightEnumerator& b,
                         const BigRat& epsilon) {
    StrangeParams p = strange_params(epsilon);
    std::size_t n = a.n;
    auto eval_enum = [&](const WeightEnumerator& w) {
        BigRat acc = 0;
        for (std::size_t d = 0; d < w.coeffs.size(); ++d) {
            if (w.coeffs[d] == 0) continue;
            BigRat term(w.coeffs[d]);
            for (std::size_t i = 0; i < n - d; ++i) term *= p.x;
            for (std::size_t i = 0; i < d; ++i) term *= p.y;
            acc += term;
        }
        return acc;
    };
    BigRat ws = eval_enum(a);
    BigRat nu = eval_enum(b);
    if (nu == 0) throw Error("output_state: zero-success-probability");
    OutputState out;
    out.x = ws / nu;
    out.y = (nu - ws) / (8 * nu);
    out.epsilon = 3 * (out.x + 2 * out.y);
    return out;
}

DistillationProfile screen_enumerators(const WeightEnumerator& a,
                                       const WeightEnumerator& b,
                                       std::size_t n, int k) {
    DistillationProfile p;
    p.map = distillation_map(a, b, n);
    p.b_at_minus_half = zp_eval(poly_of(b), BigRat(-1, 2));
    p.conditions = check_conditions(a, b, n);
    auto ne = noise_exponent(p.map);
    if (ne) {
        p.delta = ne->delta;
        p.leading = ne->leading;
    }
    p.distills = p.conditions.b_nonzero && ne &&
                 (ne->delta >= 2 || (ne->delta == 1 && ne->leading < 1));
    if (!p.distills) p.classification = "none";
    else if (ne->delta == 1) p.classification = "linear";
    else p.classification = "order-" + std::to_string(ne->delta);
    p.threshold_value = threshold(p.map);
    p.success_at_zero = success_probability(b, n, k, BigRat(0));
    return p;
}

std::string format_threshold(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", t);
    return buf;
}

std::string rat_num(const BigRat& q) { return numerator(q).str(); }
std::string rat_den(const BigRat& q) { return denominator(q).str(); }

std::string profile_to_json(const DistillationProfile& p, const std::string& id,
                            std::size_t n, int k) {
    nlohmann::ordered_json j;
    j["id"] = id;
    j["n"] = n;
    j["k"] = k;
    j["distills"] = p.distills;
    j["classification"] = p.classification;
    j["b_at_minus_half"] = {{"num", rat_num(p.b_at_minus_half)},
                            {"den", rat_den(p.b_at_minus_half)}};
    if (p.delta) j["delta"] = *p.delta;
    else j["delta"] = nullptr;
    j["leading"] = {{"num", rat_num(p.leading)}, {"den", rat_den(p.leading)}};
    j["threshold"] = format_threshold(p.threshold_value);
    j["success_at_zero"] = {{"num", rat_num(p.success_at_zero)},
                            {"den", rat_den(p.success_at_zero)}};
    j["conditions"] = {{"b_nonzero", p.conditions.b_nonzero},
                       {"sum_zero", p.conditions.sum_zero},
                       {"deriv1_zero", p.conditions.deriv1_zero},
                       {"deriv2_zero", p.conditions.deriv2_zero}};
    return j.dump(2) + "\n";
}

}  // namespace qmsd
