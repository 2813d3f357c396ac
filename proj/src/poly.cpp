#include "qmsd/poly.hpp"

namespace qmsd {

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

ZPoly zp_scale(const ZPoly& a, const BigInt& c) {
    if (c == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

ZPoly zp_derivative(const ZPoly& a) {
    if (a.size() <= 1) return {};
    ZPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * BigInt(i);
    zp_trim(r);
    return r;
}

BigRat zp_eval(const ZPoly& a, const BigRat& x) {
    BigRat acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = acc * x + BigRat(a[i]);
    return acc;
}

BigInt zp_content(const ZPoly& a) {
    BigInt g = 0;
    for (const auto& c : a) g = boost::multiprecision::gcd(g, abs(c));
    return g;
}

ZPoly zp_primitive(const ZPoly& a) {
    if (a.empty()) return {};
    BigInt g = zp_content(a);
    if (a.back() < 0) g = -g;
    ZPoly r = a;
    for (auto& c : r) c /= g;
    return r;
}

// Euclid over Q with primitive normalization at each step.
ZPoly zp_gcd(const ZPoly& a, const ZPoly& b) {
    ZPoly p = zp_primitive(a), q = zp_primitive(b);
    if (p.empty()) return q;
    if (q.empty()) return p;
    while (!q.empty()) {
        // remainder of p / q computed with rational coefficients
        QPoly r(p.begin(), p.end());
        QPoly d(q.begin(), q.end());
        while (r.size() >= d.size()) {
            BigRat f = r.back() / d.back();
            std::size_t sh = r.size() - d.size();
            for (std::size_t i = 0; i < d.size(); ++i) r[i + sh] -= f * d[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (r.empty()) break;
        }
        // clear denominators, take primitive part
        ZPoly rem;
        if (!r.empty()) {
            BigInt lcm = 1;
            for (const auto& c : r)
                lcm = boost::multiprecision::lcm(lcm, BigInt(denominator(c)));
            rem.reserve(r.size());
            for (const auto& c : r)
                rem.push_back(BigInt(numerator(c)) * (lcm / BigInt(denominator(c))));
            rem = zp_primitive(rem);
        }
        p = std::move(q);
        q = std::move(rem);
    }
    return zp_primitive(p);
}

ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw Error("zp_divexact: division by zero polynomial");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw Error("zp_divexact: inexact-division");
    ZPoly rem = a;
    ZPoly quot(a.size() - b.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
        BigInt top = rem[i + b.size() - 1];
        if (top == 0) continue;
        if (top % b.back() != 0) throw Error("zp_divexact: inexact-division");
        BigInt f = top / b.back();
        quot[i] = f;
        for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= f * b[j];
    }
    zp_trim(rem);
    if (!rem.empty()) throw Error("zp_divexact: inexact-division");
    return quot;
}

RationalFunction make_rational_function(ZPoly num, ZPoly den) {
    zp_trim(num);
    zp_trim(den);
    if (den.empty()) throw Error("rational function: zero denominator");
    if (!num.empty()) {
        ZPoly g = zp_gcd(num, den);
        if (zp_degree(g) > 0) {
            num = zp_divexact(num, g);
            den = zp_divexact(den, g);
        }
    }
    BigInt c = boost::multiprecision::gcd(zp_content(num), zp_content(den));
    if (c == 0) c = zp_content(den);  // num is zero
    if (den.back() < 0) c = -c;
    for (auto& x : num) x /= c;
    for (auto& x : den) x /= c;
    return RationalFunction{std::move(num), std::move(den)};
}

BigRat rf_eval(const RationalFunction& f, const BigRat& x) {
    BigRat d = zp_eval(f.den, x);
    if (d == 0) throw Error("rational function: pole at evaluation point");
    return zp_eval(f.num, x) / d;
}

namespace {

BigRat qp_eval(const QPoly& p, const BigRat& x) {
    BigRat acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

int sign_of(const BigRat& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

int sign_changes(const SturmChain& c, const BigRat& x) {
    int changes = 0, prev = 0;
    for (const auto& p : c.seq) {
        int s = sign_of(qp_eval(p, x));
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
        }
    }
    return changes;
}

}  // namespace

SturmChain sturm_chain(const ZPoly& p) {
    SturmChain chain;
    ZPoly sf = p;
    if (!sf.empty()) {
        ZPoly g = zp_gcd(sf, zp_derivative(sf));
        if (zp_degree(g) > 0) sf = zp_divexact(sf, g);
    }
    if (sf.empty()) return chain;
    QPoly p0(sf.begin(), sf.end());
    QPoly p1;
    {
        ZPoly d = zp_derivative(sf);
        p1.assign(d.begin(), d.end());
    }
    chain.seq.push_back(p0);
    if (p1.empty()) return chain;
    chain.seq.push_back(p1);
    while (true) {
        const QPoly& a = chain.seq[chain.seq.size() - 2];
        const QPoly& b = chain.seq.back();
        QPoly r = a;
        while (r.size() >= b.size()) {
            BigRat f = r.back() / b.back();
            std::size_t sh = r.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) r[i + sh] -= f * b[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (r.empty()) break;
        }
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.seq.push_back(std::move(r));
        if (chain.seq.back().size() == 1) break;
    }
    return chain;
}

// roots in (a, b]
int sturm_count(const SturmChain& c, const BigRat& a, const BigRat& b) {
    if (c.seq.empty()) return 0;
    return sign_changes(c, a) - sign_changes(c, b);
}

std::optional<double> smallest_root(const ZPoly& p, const BigRat& lo,
                                    const BigRat& hi, double tol) {
    SturmChain chain = sturm_chain(p);
    if (chain.seq.empty()) return std::nullopt;  // zero polynomial: treated as rootless
    // exclude an exact root at hi: count over (lo, hi)
    int total = sturm_count(chain, lo, hi);
    if (sign_of(qp_eval(chain.seq[0], hi)) == 0) --total;
    if (total <= 0) return std::nullopt;
    // bisect for the infimum of {x : at least one root in (lo, x]}
    BigRat tol_r(tol);  // exact: doubles are dyadic rationals
    BigRat a = lo, b = hi;
    while (b - a > tol_r) {
        BigRat mid = (a + b) / 2;
        if (sturm_count(chain, lo, mid) >= 1)
            b = mid;
        else
            a = mid;
    }
    return ((a + b) / 2).convert_to<double>();
}

}  // namespace qmsd
