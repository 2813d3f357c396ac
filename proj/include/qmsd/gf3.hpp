#pragma once

// Exact arithmetic over GF(3): scalars, vectors, matrices, row reduction,
// kernels, and the symplectic inner product. Everything here is immutable
// after construction and safe to use from multiple threads.

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmsd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimit : Error {
    using Error::Error;
};

using FFElement = std::uint8_t;  // value in {0,1,2}

inline FFElement ff_add(FFElement a, FFElement b) { return FFElement((a + b) % 3); }
inline FFElement ff_sub(FFElement a, FFElement b) { return FFElement((a + 3 - b) % 3); }
inline FFElement ff_mul(FFElement a, FFElement b) { return FFElement((a * b) % 3); }
inline FFElement ff_neg(FFElement a) { return FFElement((3 - a) % 3); }
// 1 and 2 are their own inverses.
inline FFElement ff_inv(FFElement a) {
    if (a == 0) throw Error("ff_inv: zero has no inverse");
    return a;
}

using FFVector = std::vector<FFElement>;

inline FFElement ff_dot(const FFVector& a, const FFVector& b) {
    if (a.size() != b.size()) throw Error("ff_dot: length mismatch");
    unsigned s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return FFElement(s % 3);
}

struct FFMatrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<FFElement> a;  // row-major

    FFMatrix() = default;
    FFMatrix(std::size_t r, std::size_t c) : n_rows(r), n_cols(c), a(r * c, 0) {}

    FFElement& at(std::size_t i, std::size_t j) { return a[i * n_cols + j]; }
    FFElement at(std::size_t i, std::size_t j) const { return a[i * n_cols + j]; }

    FFVector row(std::size_t i) const {
        return FFVector(a.begin() + i * n_cols, a.begin() + (i + 1) * n_cols);
    }
    void set_row(std::size_t i, const FFVector& r) {
        if (r.size() != n_cols) throw Error("set_row: length mismatch");
        std::copy(r.begin(), r.end(), a.begin() + i * n_cols);
    }
    static FFMatrix from_rows(const std::vector<FFVector>& rows) {
        if (rows.empty()) return FFMatrix();
        FFMatrix m(rows.size(), rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
        return m;
    }
    bool operator==(const FFMatrix& o) const {
        return n_rows == o.n_rows && n_cols == o.n_cols && a == o.a;
    }
};

struct SymplecticVector {
    FFVector u;  // X part
    FFVector v;  // Z part
};

struct RrefResult {
    FFMatrix mat;
    std::size_t rank;
};

// Reduced row echelon form over GF(3); preserves row span.
RrefResult ff_rref(const FFMatrix& m);

std::size_t ff_rank(const FFMatrix& m);

// Basis of {x : m x^T = 0}, returned in rref form (rows independent).
FFMatrix ff_kernel(const FFMatrix& m);

// True iff x is a linear combination of the rows of m.
bool in_row_span(const FFMatrix& m, const FFVector& x);

// [a,b] = u_a.v_b - u_b.v_a mod 3
FFElement symplectic_product(const SymplecticVector& a, const SymplecticVector& b);

inline SymplecticVector split_symplectic(const FFVector& row2n) {
    if (row2n.size() % 2 != 0) throw Error("split_symplectic: odd length");
    std::size_t n = row2n.size() / 2;
    return SymplecticVector{FFVector(row2n.begin(), row2n.begin() + n),
                            FFVector(row2n.begin() + n, row2n.end())};
}

inline FFVector join_symplectic(const SymplecticVector& s) {
    FFVector r(s.u);
    r.insert(r.end(), s.v.begin(), s.v.end());
    return r;
}

// Two-bitplane packed trit vector: trit i lives in bit i of lo/hi words.
// 0 -> (0,0), 1 -> (1,0), 2 -> (0,1). Round-trips through FFVector.
struct PackedTrits {
    std::size_t n = 0;
    std::vector<std::uint64_t> lo, hi;

    static PackedTrits pack(const FFVector& v) {
        PackedTrits p;
        p.n = v.size();
        std::size_t words = (v.size() + 63) / 64;
        p.lo.assign(words, 0);
        p.hi.assign(words, 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 1) p.lo[i / 64] |= std::uint64_t(1) << (i % 64);
            else if (v[i] == 2) p.hi[i / 64] |= std::uint64_t(1) << (i % 64);
        }
        return p;
    }

    FFVector unpack() const {
        FFVector v(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if ((lo[i / 64] >> (i % 64)) & 1) v[i] = 1;
            else if ((hi[i / 64] >> (i % 64)) & 1) v[i] = 2;
        }
        return v;
    }

    // this += o, per-trit mod 3
    void add_inplace(const PackedTrits& o) {
        for (std::size_t w = 0; w < lo.size(); ++w) {
            std::uint64_t al = lo[w], ah = hi[w], bl = o.lo[w], bh = o.hi[w];
            lo[w] = (al & ~bl & ~bh) | (~al & ~ah & bl) | (ah & bh);
            hi[w] = (ah & ~bl & ~bh) | (~al & ~ah & bh) | (al & bl);
        }
    }

    // doubling swaps the planes (2*1 = 2, 2*2 = 1)
    PackedTrits doubled() const {
        PackedTrits p(*this);
        p.lo.swap(p.hi);
        return p;
    }

    std::uint64_t support_word(std::size_t w) const { return lo[w] | hi[w]; }

    std::size_t support_size() const {
        std::size_t s = 0;
        for (std::size_t w = 0; w < lo.size(); ++w)
            s += std::size_t(__builtin_popcountll(lo[w] | hi[w]));
        return s;
    }
};

}  // namespace qmsd
