#include "qmsd/classical.hpp"

#include <sstream>

#include "text_util.hpp"

namespace qmsd {

ClassicalTernaryCode make_classical(const FFMatrix& generator, const std::string& id) {
    RrefResult rr = ff_rref(generator);
    if (rr.rank != generator.n_rows)
        throw Error("classical code '" + id + "': rank-mismatch (rank " +
                    std::to_string(rr.rank) + " of " + std::to_string(generator.n_rows) + ")");
    ClassicalTernaryCode c;
    c.generator = std::move(rr.mat);
    c.n = generator.n_cols;
    c.k = generator.n_rows;
    c.id = id;
    return c;
}

ClassicalTernaryCode parse_classical(const std::string& text) {
    auto lines = detail::split_lines(text);
    std::size_t i = 0;
    auto next_line = [&]() -> const std::string& {
        while (i < lines.size() && detail::is_comment_or_blank(lines[i])) ++i;
        if (i == lines.size()) throw Error("TERNARY-CODE: unexpected end of file");
        return lines[i++];
    };
    if (next_line() != "TERNARY-CODE v1")
        throw Error("TERNARY-CODE: missing 'TERNARY-CODE v1' header");
    auto kv = detail::parse_header(next_line());
    long n = detail::header_int(kv, "n");
    long k = detail::header_int(kv, "k");
    std::string id = detail::header_str(kv, "id");
    if (n <= 0 || k < 0 || k > n)
        throw Error("TERNARY-CODE '" + id + "': bad dimensions n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
    FFMatrix g{std::size_t(k), std::size_t(n)};
    for (long row = 0; row < k; ++row) {
        std::size_t line_no = i;
        const std::string& line = next_line();
        if (long(line.size()) != n)
            throw Error("TERNARY-CODE '" + id + "' line " + std::to_string(line_no + 1) +
                        ": row has " + std::to_string(line.size()) + " characters, expected " +
                        std::to_string(n));
        for (long col = 0; col < n; ++col) {
            char ch = line[std::size_t(col)];
            if (ch < '0' || ch > '2')
                throw Error("TERNARY-CODE '" + id + "' line " + std::to_string(line_no + 1) +
                            ": invalid character '" + std::string(1, ch) + "'");
            g.at(std::size_t(row), std::size_t(col)) = FFElement(ch - '0');
        }
    }
    ClassicalTernaryCode c = make_classical(g, id);
    if (long(c.k) != k)  // make_classical throws earlier on dependent rows
        throw Error("TERNARY-CODE '" + id + "': rank-mismatch");
    return c;
}

std::string format_classical(const ClassicalTernaryCode& c) {
    std::ostringstream out;
    out << "TERNARY-CODE v1\n";
    out << "n=" << c.n << " k=" << c.k << " id=" << c.id << "\n";
    for (std::size_t i = 0; i < c.k; ++i) {
        for (std::size_t j = 0; j < c.n; ++j) out << char('0' + c.generator.at(i, j));
        out << "\n";
    }
    return out.str();
}

bool is_self_orthogonal(const ClassicalTernaryCode& c) {
    for (std::size_t i = 0; i < c.k; ++i)
        for (std::size_t j = i; j < c.k; ++j)
            if (ff_dot(c.generator.row(i), c.generator.row(j)) != 0) return false;
    return true;
}

namespace {

constexpr std::size_t kEnumBudget = 30;  // 3^k codewords

// Calls fn(support_mask) for every codeword (3^k of them) via an odometer
// over mixed-radix digits; masks fit in 64 bits.
template <typename Fn>
void for_each_codeword_mask(const ClassicalTernaryCode& c, Fn&& fn) {
    if (c.n > 64) throw Error("support enumeration limited to n <= 64");
    if (c.k > kEnumBudget)
        throw ResourceLimit("resource-limit: codeword enumeration budget exceeded: k=" + std::to_string(c.k));
    std::vector<PackedTrits> rows;
    rows.reserve(c.k);
    for (std::size_t i = 0; i < c.k; ++i)
        rows.push_back(PackedTrits::pack(c.generator.row(i)));
    PackedTrits cur = PackedTrits::pack(FFVector(c.n, 0));
    std::vector<std::uint8_t> digits(c.k, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < c.k; ++i) total *= 3;
    fn(cur.support_word(0));
    for (std::uint64_t step = 1; step < total; ++step) {
        std::size_t pos = 0;
        while (digits[pos] == 2) {
            digits[pos] = 0;
            cur.add_inplace(rows[pos]);  // third add returns the trit to 0
            ++pos;
        }
        ++digits[pos];
        cur.add_inplace(rows[pos]);
        fn(cur.support_word(0));
    }
}

}  // namespace

SupportDistribution support_distribution(const ClassicalTernaryCode& c) {
    SupportDistribution d;
    d.n = c.n;
    for_each_codeword_mask(c, [&](std::uint64_t mask) { ++d.counts[mask]; });
    return d;
}

WeightEnumerator classical_wenum(const ClassicalTernaryCode& c) {
    if (c.k > kEnumBudget)
        throw ResourceLimit("resource-limit: codeword enumeration budget exceeded: k=" + std::to_string(c.k));
    WeightEnumerator w;
    w.n = c.n;
    w.k = int(c.k);
    w.kind = WeightEnumerator::Kind::Classical;
    w.coeffs.assign(c.n + 1, 0);
    // reuse the mask walk; popcount of the support mask is the weight
    for_each_codeword_mask(c, [&](std::uint64_t mask) {
        w.coeffs[std::size_t(__builtin_popcountll(mask))] += 1;
    });
    while (!w.coeffs.empty() && w.coeffs.back() == 0) w.coeffs.pop_back();
    return w;
}

std::vector<ClassicalTernaryCode> convert_magma(const std::string& text,
                                                const std::string& label,
                                                std::vector<std::string>* errors) {
    auto lines = detail::split_lines(text);
    std::vector<ClassicalTernaryCode> out;
    std::size_t blocks_seen = 0;
    std::vector<FFVector> block;
    auto flush = [&]() {
        if (block.empty()) return;
        FFMatrix g = FFMatrix::from_rows(block);
        block.clear();
        std::string id = label + "#" + std::to_string(++blocks_seen);
        try {
            out.push_back(make_classical(g, id));
        } catch (const Error& e) {
            if (!errors) throw;
            errors->push_back(e.what());
        }
    };
    for (const auto& raw : lines) {
        // keep only digit content; rows look like "[0 1 2 ...]" or "0 1 2"
        FFVector row;
        bool garbage = false;
        for (char ch : raw) {
            if (ch >= '0' && ch <= '2') row.push_back(FFElement(ch - '0'));
            else if (ch == ' ' || ch == '\t' || ch == '[' || ch == ']' ||
                     ch == ',' || ch == '|' || ch == '\r')
                continue;
            else { garbage = true; break; }
        }
        if (garbage || row.empty()) {
            flush();  // delimiter line ends the current matrix block
            continue;
        }
        if (!block.empty() && block.front().size() != row.size()) flush();
        block.push_back(std::move(row));
    }
    flush();
    return out;
}

}  // namespace qmsd
