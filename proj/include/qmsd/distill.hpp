#pragma once

// Strange-state distillation screening: parameter maps, the exact rational
// distillation map eps' = 3(3A(z)+B(z))/(4B(z)) at z = (3-eps)/(8eps-6),
// exact condition checks, noise-suppression exponent, threshold, and success
// probability. All zero tests are exact; only thresholds are decimals.

#include <optional>
#include <string>

#include "qmsd/poly.hpp"
#include "qmsd/wenum.hpp"

namespace qmsd {

// Wigner parameters of the twirled strange state: x at the origin, y
// elsewhere; x + 8y = 1, 3x = -1 + 4*eps/3, 6y = 1 - eps/3.
struct StrangeParams {
    BigRat epsilon;
    BigRat x;
    BigRat y;
};

StrangeParams strange_params(const BigRat& epsilon);

// z(eps) = (3-eps)/(8eps-6); pole at eps = 3/4.
BigRat z_of_eps(const BigRat& epsilon);

// The reduced rational map eps'(eps) with (8eps-6)^n cleared.
RationalFunction distillation_map(const WeightEnumerator& a,
                                  const WeightEnumerator& b, std::size_t n);

struct ConditionFlags {
    bool b_nonzero;      // B(-1/2) != 0
    bool sum_zero;       // 3A(-1/2) + B(-1/2) = 0
    bool deriv1_zero;    // 3A'(-1/2) + B'(-1/2) = 0
    bool deriv2_zero;    // 3A''(-1/2) + B''(-1/2) = 0
};

ConditionFlags check_conditions(const WeightEnumerator& a,
                                const WeightEnumerator& b, std::size_t n);

struct NoiseExponent {
    std::size_t delta;
    BigRat leading;  // coefficient of eps^delta
};

// Order of vanishing of the reduced numerator at 0; nullopt when the reduced
// denominator vanishes at 0 (not distillable) or the numerator is zero.
std::optional<NoiseExponent> noise_exponent(const RationalFunction& map);

// Smallest root of eps'(eps) - eps in (0, 3/4); 0 when eps' > eps near 0,
// 3/4 when eps' < eps on the whole interval.
double threshold(const RationalFunction& map);

// nu = sum_w b_w x^(n-w) y^w; must land in [0, 1].
BigRat success_probability(const WeightEnumerator& b, std::size_t n, int k,
                           const BigRat& epsilon);

struct OutputState {
    BigRat x;
    BigRat y;
    BigRat epsilon;  // 3(x + 2y)
};

// Output Wigner parameters after one round; requires nu(eps) != 0.
OutputState output_state(const WeightEnumerator& a, const WeightEnumerator& b,
                         const BigRat& epsilon);

struct DistillationProfile {
    RationalFunction map;
    BigRat b_at_minus_half;
    ConditionFlags conditions;
    std::optional<std::size_t> delta;
    BigRat leading;
    bool distills = false;
    std::string classification;  // none | linear | order-<delta>
    double threshold_value = 0.0;
    BigRat success_at_zero;
};

// Full screening of an (A, B) pair.
DistillationProfile screen_enumerators(const WeightEnumerator& a,
                                       const WeightEnumerator& b,
                                       std::size_t n, int k);

// JSON record with decimal-string rationals; threshold printed with nine
// fractional digits.
std::string profile_to_json(const DistillationProfile& p, const std::string& id,
                            std::size_t n, int k);

std::string format_threshold(double t);  // nine fractional digits
std::string rat_num(const BigRat& q);
std::string rat_den(const BigRat& q);

}  // namespace qmsd
