#pragma once

// Arbitrary-precision integer polynomials, rational functions in lowest
// common form, and Sturm-sequence root isolation. All evaluation at rational
// points is exact; only the final threshold is a decimal.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "qmsd/gf3.hpp"  // Error

namespace qmsd {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Coefficients ascending by degree; the zero polynomial is the empty vector.
using ZPoly = std::vector<BigInt>;
using QPoly = std::vector<BigRat>;

void zp_trim(ZPoly& p);
inline bool zp_is_zero(const ZPoly& p) { return p.empty(); }
inline int zp_degree(const ZPoly& p) { return int(p.size()) - 1; }  // -1 for zero

ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_scale(const ZPoly& a, const BigInt& c);
ZPoly zp_derivative(const ZPoly& a);
BigRat zp_eval(const ZPoly& a, const BigRat& x);

BigInt zp_content(const ZPoly& a);        // gcd of |coefficients|, 0 for zero poly
ZPoly zp_primitive(const ZPoly& a);       // content removed, leading coeff > 0
ZPoly zp_gcd(const ZPoly& a, const ZPoly& b);  // primitive, leading coeff > 0
// exact division; throws if the division is not exact
ZPoly zp_divexact(const ZPoly& a, const ZPoly& b);

// num/den with the polynomial gcd cancelled, joint integer content removed,
// and the leading denominator coefficient positive.
struct RationalFunction {
    ZPoly num;
    ZPoly den;
};

RationalFunction make_rational_function(ZPoly num, ZPoly den);
BigRat rf_eval(const RationalFunction& f, const BigRat& x);  // throws if den(x)=0

// Distinct real roots of p in the half-open interval (a, b], counted via a
// Sturm chain of the square-free part.
struct SturmChain {
    std::vector<QPoly> seq;
};
SturmChain sturm_chain(const ZPoly& p);
int sturm_count(const SturmChain& c, const BigRat& a, const BigRat& b);

// Smallest root of p in the open interval (lo, hi), bisected until the
// bracketing interval is narrower than tol; nullopt when p has no root there.
std::optional<double> smallest_root(const ZPoly& p, const BigRat& lo,
                                    const BigRat& hi, double tol = 1e-12);

}  // namespace qmsd
