#pragma once

// Simple, complete, and coset weight enumerators of stabilizer codes, the
// quantum MacWilliams transform, and distance extraction.

#include <cstdint>
#include <optional>

#include "qmsd/classical.hpp"
#include "qmsd/stabilizer.hpp"
#include "qmsd/wenum.hpp"

namespace qmsd {

inline constexpr std::uint64_t kDefaultMemCap = std::uint64_t(2) << 30;  // 2 GiB

// Enumerates all 3^r group elements; r <= 22.
WeightEnumerator simple_wenum_naive(const StabilizerCode& code);

// Zeta transform over support masks, pointwise square, Moebius inversion.
// Requires a self-orthogonal code; allocates 8 * 2^n bytes (n <= 29, capped
// by mem_cap).
WeightEnumerator simple_wenum_css_fast(const ClassicalTernaryCode& c,
                                       std::uint64_t mem_cap = kDefaultMemCap);

// B(z) = 3^-(n-k) sum_w a_w (1-z)^w (1+8z)^(n-w); every division must be
// exact or the input was not a stabilizer enumerator.
WeightEnumerator macwilliams(const WeightEnumerator& a, std::size_t n, int k);

// Smallest degree with a nonzero coefficient in B - A; nullopt when B = A.
// Throws on a negative coefficient in B - A.
std::optional<std::size_t> distance_from_enums(const WeightEnumerator& a,
                                               const WeightEnumerator& b);

// One monomial per group element; r <= 12.
CompleteEnumerator complete_wenum(const StabilizerCode& code);

// Specialize y00 -> z^0, all other y_uv -> z^1 per coordinate; equals the
// simple enumerator of the same group.
WeightEnumerator specialize_complete(const CompleteEnumerator& c,
                                     const StabilizerCode& code);

// Enumerator of the coset S + logical; logical must commute with all
// stabilizer rows. r <= 22.
WeightEnumerator coset_wenum(const StabilizerCode& code,
                             const SymplecticVector& logical);

}  // namespace qmsd
