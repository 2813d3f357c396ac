#include "qmsd/stabilizer.hpp"

#include <sstream>

#include "text_util.hpp"

namespace qmsd {

StabilizerCode make_stabilizer(const FFMatrix& h, const std::string& id) {
    if (h.n_cols % 2 != 0) throw Error("stabilizer '" + id + "': odd column count");
    StabilizerCode c;
    c.h = h;
    c.n = h.n_cols / 2;
    c.r = h.n_rows;
    c.id = id;
    return c;
}

StabilizerCode parse_stabilizer(const std::string& text) {
    auto lines = detail::split_lines(text);
    std::size_t i = 0;
    auto next_line = [&]() -> const std::string& {
        while (i < lines.size() && detail::is_comment_or_blank(lines[i])) ++i;
        if (i == lines.size()) throw Error("STABILIZER-CODE: unexpected end of file");
        return lines[i++];
    };
    if (next_line() != "STABILIZER-CODE v1")
        throw Error("STABILIZER-CODE: missing 'STABILIZER-CODE v1' header");
    auto kv = detail::parse_header(next_line());
    if (detail::header_int(kv, "p") != 3)
        throw Error("STABILIZER-CODE: only p=3 is supported");
    long n = detail::header_int(kv, "n");
    long r = detail::header_int(kv, "r");
    std::string id = detail::header_str(kv, "id");
    if (n <= 0 || r < 0 || r > n)
        throw Error("STABILIZER-CODE '" + id + "': bad dimensions n=" + std::to_string(n) +
                    " r=" + std::to_string(r));
    FFMatrix h{std::size_t(r), std::size_t(2 * n)};
    for (long row = 0; row < r; ++row) {
        std::size_t line_no = i;
        const std::string& line = next_line();
        if (long(line.size()) != 2 * n + 1 || line[std::size_t(n)] != '|')
            throw Error("STABILIZER-CODE '" + id + "' line " + std::to_string(line_no + 1) +
                        ": expected <" + std::to_string(n) + " chars>|<" +
                        std::to_string(n) + " chars>");
        for (long col = 0; col < 2 * n; ++col) {
            char ch = line[std::size_t(col < n ? col : col + 1)];
            if (ch < '0' || ch > '2')
                throw Error("STABILIZER-CODE '" + id + "' line " + std::to_string(line_no + 1) +
                            ": invalid character '" + std::string(1, ch) + "'");
            h.at(std::size_t(row), std::size_t(col)) = FFElement(ch - '0');
        }
    }
    return make_stabilizer(h, id);
}

std::string format_stabilizer(const StabilizerCode& c) {
    std::ostringstream out;
    out << "STABILIZER-CODE v1\n";
    out << "p=3 n=" << c.n << " r=" << c.r << " id=" << c.id << "\n";
    for (std::size_t i = 0; i < c.r; ++i) {
        for (std::size_t j = 0; j < c.n; ++j) out << char('0' + c.h.at(i, j));
        out << '|';
        for (std::size_t j = c.n; j < 2 * c.n; ++j) out << char('0' + c.h.at(i, j));
        out << "\n";
    }
    return out.str();
}

void validate(const StabilizerCode& code) {
    if (code.r > 0 && ff_rank(code.h) != code.r)
        throw Error("stabilizer '" + code.id + "': dependent-rows");
    for (std::size_t i = 0; i < code.r; ++i)
        for (std::size_t j = i + 1; j < code.r; ++j)
            if (symplectic_product(code.row(i), code.row(j)) != 0)
                throw Error("stabilizer '" + code.id + "': non-commuting-rows (" +
                            std::to_string(i) + ", " + std::to_string(j) + ")");
}

StabilizerCode css_from_classical(const ClassicalTernaryCode& c) {
    if (!is_self_orthogonal(c))
        throw Error("css: classical code '" + c.id + "': not-self-orthogonal");
    if (c.n % 2 == 0)
        throw Error("css: classical code '" + c.id + "': even-length");
    FFMatrix h(2 * c.k, 2 * c.n);
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = 0; j < c.n; ++j) {
            h.at(i, j) = c.generator.at(i, j);                  // X block
            h.at(c.k + i, c.n + j) = c.generator.at(i, j);      // Z block
        }
    return make_stabilizer(h, c.id);
}

bool is_css(const StabilizerCode& code) {
    for (std::size_t i = 0; i < code.r; ++i) {
        SymplecticVector s = code.row(i);
        bool has_u = false, has_v = false;
        for (std::size_t j = 0; j < code.n; ++j) {
            has_u = has_u || s.u[j] != 0;
            has_v = has_v || s.v[j] != 0;
        }
        if (has_u && has_v) return false;
    }
    return true;
}

DualBasis dual_basis(const StabilizerCode& code) {
    // (u'|v') commutes with (u|v) iff (u'|v') . (v|-u) = 0
    FFMatrix twist(code.r, 2 * code.n);
    for (std::size_t i = 0; i < code.r; ++i)
        for (std::size_t j = 0; j < code.n; ++j) {
            twist.at(i, j) = code.h.at(i, code.n + j);
            twist.at(i, code.n + j) = ff_neg(code.h.at(i, j));
        }
    DualBasis d;
    if (code.r == 0) {
        // everything commutes: the full 2n-dimensional space
        FFMatrix eye(2 * code.n, 2 * code.n);
        for (std::size_t i = 0; i < 2 * code.n; ++i) eye.at(i, i) = 1;
        d.rows = eye;
        return d;
    }
    d.rows = ff_kernel(twist);
    return d;
}

LogicalPair logical_operators(const StabilizerCode& code) {
    if (code.k() != 1)
        throw Error("logical_operators: only k=1 codes are supported (got k=" +
                    std::to_string(code.k()) + ")");
    DualBasis dual = dual_basis(code);
    std::size_t xi = dual.rows.n_rows;
    for (std::size_t i = 0; i < dual.rows.n_rows; ++i) {
        if (!in_row_span(code.h, dual.rows.row(i))) { xi = i; break; }
    }
    if (xi == dual.rows.n_rows)
        throw Error("logical_operators: dual span equals stabilizer span");
    SymplecticVector xbar = split_symplectic(dual.rows.row(xi));
    for (std::size_t j = xi + 1; j < dual.rows.n_rows; ++j) {
        SymplecticVector cand = split_symplectic(dual.rows.row(j));
        FFElement pr = symplectic_product(xbar, cand);
        if (pr == 0) continue;
        FFElement scale = ff_inv(pr);
        for (auto& e : cand.u) e = ff_mul(e, scale);
        for (auto& e : cand.v) e = ff_mul(e, scale);
        return LogicalPair{std::move(xbar), std::move(cand)};
    }
    throw Error("logical_operators: no conjugate partner found");
}

const std::vector<Rotation>& sl23_rotations() {
    static const std::vector<Rotation> rots = [] {
        std::vector<Rotation> v;
        for (FFElement a = 0; a < 3; ++a)
            for (FFElement b = 0; b < 3; ++b)
                for (FFElement c = 0; c < 3; ++c)
                    for (FFElement d = 0; d < 3; ++d)
                        if (ff_sub(ff_mul(a, d), ff_mul(b, c)) == 1)
                            v.push_back(Rotation{a, b, c, d});
        return v;
    }();
    return rots;
}

Rotation identity_rotation() { return Rotation{1, 0, 0, 1}; }

StabilizerCode shorten(const StabilizerCode& state, std::size_t coord,
                       const Rotation& rot) {
    if (state.k() != 0)
        throw Error("shorten: input must be an [[n,0]] state (got k=" +
                    std::to_string(state.k()) + ")");
    if (coord < 1 || coord > state.n)
        throw Error("shorten: coordinate " + std::to_string(coord) + " out of range 1.." +
                    std::to_string(state.n));
    std::size_t c0 = coord - 1;
    // rotate the site: (u,v) -> (a u + b v, c u + d v)
    FFMatrix h = state.h;
    for (std::size_t i = 0; i < state.r; ++i) {
        FFElement u = h.at(i, c0), v = h.at(i, state.n + c0);
        h.at(i, c0) = ff_add(ff_mul(rot[0], u), ff_mul(rot[1], v));
        h.at(i, state.n + c0) = ff_add(ff_mul(rot[2], u), ff_mul(rot[3], v));
    }
    // the subgroup acting trivially at c0 is the kernel of the coefficient
    // map row-combination -> (u_c0, v_c0)
    FFMatrix coeff(2, state.r);
    for (std::size_t i = 0; i < state.r; ++i) {
        coeff.at(0, i) = h.at(i, c0);
        coeff.at(1, i) = h.at(i, state.n + c0);
    }
    FFMatrix combos = ff_kernel(coeff);
    if (combos.n_rows != state.n - 2)
        throw Error("shorten '" + state.id + "': degenerate-shortening at coord " +
                    std::to_string(coord) + " (subgroup rank " +
                    std::to_string(combos.n_rows) + ", expected " +
                    std::to_string(state.n - 2) + ")");
    // build surviving rows and delete the coordinate
    FFMatrix out(combos.n_rows, 2 * (state.n - 1));
    for (std::size_t i = 0; i < combos.n_rows; ++i) {
        FFVector full(2 * state.n, 0);
        for (std::size_t s = 0; s < state.r; ++s) {
            FFElement f = combos.at(i, s);
            if (f == 0) continue;
            for (std::size_t j = 0; j < 2 * state.n; ++j)
                full[j] = ff_add(full[j], ff_mul(f, h.at(s, j)));
        }
        if (full[c0] != 0 || full[state.n + c0] != 0)
            throw Error("shorten: internal error: subgroup row acts on the deleted site");
        std::size_t w = 0;
        for (std::size_t j = 0; j < 2 * state.n; ++j) {
            if (j == c0 || j == state.n + c0) continue;
            out.at(i, w++) = full[j];
        }
    }
    StabilizerCode result = make_stabilizer(ff_rref(out).mat, state.id + "-c" +
                                            std::to_string(coord));
    validate(result);
    return result;
}

}  // namespace qmsd
