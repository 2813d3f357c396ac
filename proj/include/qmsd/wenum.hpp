#pragma once

// Weight enumerator value types and the WENUM v1 text format.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmsd/poly.hpp"

namespace qmsd {

struct WeightEnumerator {
    enum class Kind { A, B, Coset, Classical };

    std::vector<BigInt> coeffs;  // index = degree in z
    std::size_t n = 0;           // code length
    int k = 0;                   // code dimension (logical count for A/B)
    Kind kind = Kind::A;

    BigRat eval(const BigRat& z) const {
        ZPoly p(coeffs.begin(), coeffs.end());
        return zp_eval(p, z);
    }
    BigInt total() const {
        BigInt s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }
    bool same_coeffs(const WeightEnumerator& o) const { return coeffs == o.coeffs; }
};

std::string kind_name(WeightEnumerator::Kind kind);
WeightEnumerator::Kind kind_from_name(const std::string& s);

// WENUM v1:
//   WENUM v1
//   n=<int> k=<int> kind=<A|B|coset|classical>
//   <degree> <decimal coefficient>   (ascending, zero coefficients omitted)
WeightEnumerator parse_wenum(const std::string& text);
std::string format_wenum(const WeightEnumerator& w);

// Complete enumerator: one term per group element, the exponent vector counts
// coordinates carrying each of the nine symplectic symbols (u,v), indexed
// 3*u+v.
struct CompleteEnumerator {
    std::map<std::array<std::uint8_t, 9>, BigInt> terms;
    std::size_t n = 0;
};

std::string format_complete(const CompleteEnumerator& c, std::size_t r);

}  // namespace qmsd
