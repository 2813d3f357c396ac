#include "qmsd/enumerators.hpp"

#include <utility>

namespace qmsd {

namespace {

constexpr std::size_t kNaiveBudget = 22;     // 3^r group elements
constexpr std::size_t kCompleteBudget = 12;  // one monomial each
constexpr std::size_t kFastBudget = 29;      // 2^n counters

struct PackedRow {
    PackedTrits u, v;
};

std::vector<PackedRow> pack_rows(const StabilizerCode& code) {
    std::vector<PackedRow> rows;
    rows.reserve(code.r);
    for (std::size_t i = 0; i < code.r; ++i) {
        SymplecticVector s = code.row(i);
        rows.push_back(PackedRow{PackedTrits::pack(s.u), PackedTrits::pack(s.v)});
    }
    return rows;
}

// Visits every element of the group generated by the rows, starting from the
// given element (identity for the group itself, a logical for its coset).
// The ternary odometer adds one generator per carry; the third add returns
// that digit's contribution to zero.
template <typename Fn>
void for_each_group_element(const StabilizerCode& code, PackedTrits cu,
                            PackedTrits cv, Fn&& fn) {
    auto rows = pack_rows(code);
    std::vector<std::uint8_t> digits(code.r, 0);
    for (;;) {
        fn(cu, cv);
        std::size_t pos = 0;
        while (pos < code.r) {
            cu.add_inplace(rows[pos].u);
            cv.add_inplace(rows[pos].v);
            if (++digits[pos] < 3) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == code.r) break;
    }
}

std::size_t symplectic_weight(const PackedTrits& u, const PackedTrits& v) {
    std::size_t s = 0;
    for (std::size_t w = 0; w < u.lo.size(); ++w)
        s += std::size_t(__builtin_popcountll(u.support_word(w) | v.support_word(w)));
    return s;
}

WeightEnumerator histogram_group(const StabilizerCode& code, PackedTrits start_u,
                                 PackedTrits start_v, WeightEnumerator::Kind kind) {
    if (code.r > kNaiveBudget)
        throw ResourceLimit("resource-limit: 3^" + std::to_string(code.r) +
                            " group elements exceed the naive enumeration budget (r <= " +
                            std::to_string(kNaiveBudget) + ")");
    WeightEnumerator w;
    w.n = code.n;
    w.k = int(code.k());
    w.kind = kind;
    w.coeffs.assign(code.n + 1, BigInt(0));
    std::vector<std::uint64_t> counts(code.n + 1, 0);
    for_each_group_element(code, std::move(start_u), std::move(start_v),
                           [&](const PackedTrits& u, const PackedTrits& v) {
                               ++counts[symplectic_weight(u, v)];
                           });
    for (std::size_t d = 0; d <= code.n; ++d) w.coeffs[d] = counts[d];
    return w;
}

}  // namespace

WeightEnumerator simple_wenum_naive(const StabilizerCode& code) {
    FFVector zero(code.n, 0);
    return histogram_group(code, PackedTrits::pack(zero), PackedTrits::pack(zero),
                           WeightEnumerator::Kind::A);
}

WeightEnumerator simple_wenum_css_fast(const ClassicalTernaryCode& c,
                                       std::uint64_t mem_cap) {
    if (!is_self_orthogonal(c))
        throw Error("fast enumerator: classical code '" + c.id + "': not-self-orthogonal");
    if (c.n > kFastBudget)
        throw ResourceLimit("resource-limit: fast enumerator supports n <= " +
                            std::to_string(kFastBudget) + " (got n=" +
                            std::to_string(c.n) + ")");
    std::uint64_t need = std::uint64_t(8) << c.n;
    if (need > mem_cap)
        throw ResourceLimit("resource-limit: fast enumerator needs " + std::to_string(need) +
                            " bytes for n=" + std::to_string(c.n) + ", cap is " +
                            std::to_string(mem_cap));
    std::vector<std::uint64_t> g(std::size_t(1) << c.n, 0);
    for (const auto& [mask, count] : support_distribution(c).counts) g[mask] += count;
    // zeta: g[mask] = number of codewords with support contained in mask
    for (std::size_t bit = 0; bit < c.n; ++bit) {
        std::uint64_t b = std::uint64_t(1) << bit;
        for (std::uint64_t mask = 0; mask < g.size(); ++mask)
            if (mask & b) g[mask] += g[mask ^ b];
    }
    for (auto& x : g) x *= x;
    // moebius: g[mask] = number of codeword pairs whose union of supports is mask
    for (std::size_t bit = 0; bit < c.n; ++bit) {
        std::uint64_t b = std::uint64_t(1) << bit;
        for (std::uint64_t mask = 0; mask < g.size(); ++mask)
            if (mask & b) g[mask] -= g[mask ^ b];
    }
    WeightEnumerator w;
    w.n = c.n;
    w.k = int(c.n) - 2 * int(c.k);
    w.kind = WeightEnumerator::Kind::A;
    w.coeffs.assign(c.n + 1, BigInt(0));
    std::vector<std::uint64_t> counts(c.n + 1, 0);
    for (std::uint64_t mask = 0; mask < g.size(); ++mask)
        counts[std::size_t(__builtin_popcountll(mask))] += g[mask];
    for (std::size_t d = 0; d <= c.n; ++d) w.coeffs[d] = counts[d];
    return w;
}

WeightEnumerator macwilliams(const WeightEnumerator& a, std::size_t n, int k) {
    if (a.coeffs.empty() || a.coeffs[0] != 1)
        throw Error("macwilliams: enumerator must have constant term 1");
    if (a.coeffs.size() > n + 1)
        for (std::size_t d = n + 1; d < a.coeffs.size(); ++d)
            if (a.coeffs[d] != 0)
                throw Error("macwilliams: degree exceeds n=" + std::to_string(n));
    // powers of (1-z) and (1+8z)
    std::vector<ZPoly> low(n + 1), high(n + 1);
    low[0] = high[0] = ZPoly{1};
    ZPoly one_minus{1, -1}, one_plus8{1, 8};
    for (std::size_t d = 1; d <= n; ++d) {
        low[d] = zp_mul(low[d - 1], one_minus);
        high[d] = zp_mul(high[d - 1], one_plus8);
    }
    ZPoly sum;
    for (std::size_t w = 0; w < a.coeffs.size() && w <= n; ++w) {
        if (a.coeffs[w] == 0) continue;
        sum = zp_add(sum, zp_scale(zp_mul(low[w], high[n - w]), a.coeffs[w]));
    }
    BigInt divisor = 1;
    for (long i = 0; i < long(n) - k; ++i) divisor *= 3;
    WeightEnumerator b;
    b.n = n;
    b.k = k;
    b.kind = WeightEnumerator::Kind::B;
    b.coeffs.assign(n + 1, BigInt(0));
    for (std::size_t d = 0; d < sum.size(); ++d) {
        if (sum[d] % divisor != 0)
            throw Error("macwilliams: inexact-division at degree " + std::to_string(d) +
                        " (input was not a stabilizer enumerator)");
        b.coeffs[d] = sum[d] / divisor;
    }
    return b;
}

std::optional<std::size_t> distance_from_enums(const WeightEnumerator& a,
                                               const WeightEnumerator& b) {
    if (a.n != b.n) throw Error("distance: invalid-input (mismatched n)");
    std::optional<std::size_t> first;
    for (std::size_t d = 0; d <= a.n; ++d) {
        BigInt av = d < a.coeffs.size() ? a.coeffs[d] : BigInt(0);
        BigInt bv = d < b.coeffs.size() ? b.coeffs[d] : BigInt(0);
        BigInt diff = bv - av;
        if (diff < 0)
            throw Error("distance: inconsistent-pair (negative coefficient at degree " +
                        std::to_string(d) + ")");
        if (diff != 0 && !first) first = d;
    }
    return first;
}

CompleteEnumerator complete_wenum(const StabilizerCode& code) {
    if (code.r > kCompleteBudget)
        throw ResourceLimit("resource-limit: 3^" + std::to_string(code.r) +
                            " monomials exceed the complete enumeration budget (r <= " +
                            std::to_string(kCompleteBudget) + ")");
    CompleteEnumerator c;
    c.n = code.n;
    FFVector zero(code.n, 0);
    for_each_group_element(
        code, PackedTrits::pack(zero), PackedTrits::pack(zero),
        [&](const PackedTrits& pu, const PackedTrits& pv) {
            FFVector u = pu.unpack(), v = pv.unpack();
            std::array<std::uint8_t, 9> expo{};
            for (std::size_t i = 0; i < code.n; ++i) ++expo[3 * u[i] + v[i]];
            c.terms[expo] += 1;
        });
    return c;
}

WeightEnumerator specialize_complete(const CompleteEnumerator& c,
                                     const StabilizerCode& code) {
    WeightEnumerator w;
    w.n = c.n;
    w.k = int(code.k());
    w.kind = WeightEnumerator::Kind::A;
    w.coeffs.assign(c.n + 1, BigInt(0));
    for (const auto& [expo, coeff] : c.terms) {
        std::size_t weight = c.n - expo[0];
        w.coeffs[weight] += coeff;
    }
    return w;
}

WeightEnumerator coset_wenum(const StabilizerCode& code,
                             const SymplecticVector& logical) {
    if (logical.u.size() != code.n || logical.v.size() != code.n)
        throw Error("coset_wenum: invalid-input (logical length mismatch)");
    for (std::size_t i = 0; i < code.r; ++i)
        if (symplectic_product(logical, code.row(i)) != 0)
            throw Error("coset_wenum: logical-not-in-dual (anticommutes with row " +
                        std::to_string(i) + ")");
    return histogram_group(code, PackedTrits::pack(logical.u),
                           PackedTrits::pack(logical.v),
                           WeightEnumerator::Kind::Coset);
}

}  // namespace qmsd
