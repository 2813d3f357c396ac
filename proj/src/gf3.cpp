#include "qmsd/gf3.hpp"

namespace qmsd {

RrefResult ff_rref(const FFMatrix& m) {
    FFMatrix r = m;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < r.n_cols && rank < r.n_rows; ++col) {
        std::size_t piv = rank;
        while (piv < r.n_rows && r.at(piv, col) == 0) ++piv;
        if (piv == r.n_rows) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < r.n_cols; ++j)
                std::swap(r.at(rank, j), r.at(piv, j));
        FFElement inv = ff_inv(r.at(rank, col));
        if (inv != 1)
            for (std::size_t j = 0; j < r.n_cols; ++j)
                r.at(rank, j) = ff_mul(r.at(rank, j), inv);
        for (std::size_t i = 0; i < r.n_rows; ++i) {
            FFElement f = r.at(i, col);
            if (i == rank || f == 0) continue;
            for (std::size_t j = 0; j < r.n_cols; ++j)
                r.at(i, j) = ff_sub(r.at(i, j), ff_mul(f, r.at(rank, j)));
        }
        ++rank;
    }
    return RrefResult{std::move(r), rank};
}

std::size_t ff_rank(const FFMatrix& m) {
    if (m.n_rows == 0) return 0;
    return ff_rref(m).rank;
}

FFMatrix ff_kernel(const FFMatrix& m) {
    RrefResult rr = ff_rref(m);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(m.n_cols, false);
    {
        std::size_t col = 0;
        for (std::size_t row = 0; row < rr.rank; ++row) {
            while (col < m.n_cols && rr.mat.at(row, col) == 0) ++col;
            pivot_col.push_back(col);
            is_pivot[col] = true;
        }
    }
    std::vector<FFVector> basis;
    for (std::size_t f = 0; f < m.n_cols; ++f) {
        if (is_pivot[f]) continue;
        FFVector x(m.n_cols, 0);
        x[f] = 1;
        for (std::size_t row = 0; row < rr.rank; ++row)
            x[pivot_col[row]] = ff_neg(rr.mat.at(row, f));
        basis.push_back(std::move(x));
    }
    if (basis.empty()) return FFMatrix(0, m.n_cols);
    // canonicalize: the kernel basis is returned in rref form
    return ff_rref(FFMatrix::from_rows(basis)).mat;
}

bool in_row_span(const FFMatrix& m, const FFVector& x) {
    if (x.size() != m.n_cols) throw Error("in_row_span: length mismatch");
    FFMatrix aug(m.n_rows + 1, m.n_cols);
    aug.a.assign(m.a.begin(), m.a.end());
    aug.a.insert(aug.a.end(), x.begin(), x.end());
    return ff_rank(aug) == ff_rank(m);
}

// u_a.v_b - u_b.v_a mod 3
FFElement symplectic_product(const SymplecticVector& a, const SymplecticVector& b) {
    if (a.u.size() != b.u.size() || a.v.size() != b.v.size() || a.u.size() != a.v.size())
        throw Error("symplectic_product: invalid-input (length mismatch)");
    unsigned acc = 0;
    for (std::size_t i = 0; i < a.u.size(); ++i)
        acc += unsigned(a.u[i]) * b.v[i] + unsigned(b.u[i]) * ((3u - a.v[i]) % 3);
    return FFElement(acc % 3);
}

}  // namespace qmsd
