#include "qmsd/wenum.hpp"

#include <sstream>

#include "text_util.hpp"

namespace qmsd {

std::string kind_name(WeightEnumerator::Kind kind) {
    switch (kind) {
        case WeightEnumerator::Kind::A: return "A";
        case WeightEnumerator::Kind::B: return "B";
        case WeightEnumerator::Kind::Coset: return "coset";
        case WeightEnumerator::Kind::Classical: return "classical";
    }
    throw Error("kind_name: bad kind");
}

WeightEnumerator::Kind kind_from_name(const std::string& s) {
    if (s == "A") return WeightEnumerator::Kind::A;
    if (s == "B") return WeightEnumerator::Kind::B;
    if (s == "coset") return WeightEnumerator::Kind::Coset;
    if (s == "classical") return WeightEnumerator::Kind::Classical;
    throw Error("WENUM: unknown kind '" + s + "'");
}

WeightEnumerator parse_wenum(const std::string& text) {
    auto lines = detail::split_lines(text);
    std::size_t i = 0;
    auto next_line = [&]() -> const std::string& {
        while (i < lines.size() && detail::is_comment_or_blank(lines[i])) ++i;
        if (i == lines.size()) throw Error("WENUM: unexpected end of file");
        return lines[i++];
    };
    if (next_line() != "WENUM v1") throw Error("WENUM: missing 'WENUM v1' header");
    auto kv = detail::parse_header(next_line());
    long n = detail::header_int(kv, "n");
    long k = detail::header_int(kv, "k");
    WeightEnumerator w;
    w.n = std::size_t(n);
    w.k = int(k);
    w.kind = kind_from_name(detail::header_str(kv, "kind"));
    if (n < 0) throw Error("WENUM: negative n");
    w.coeffs.assign(std::size_t(n) + 1, BigInt(0));
    long prev_degree = -1;
    while (i < lines.size()) {
        if (detail::is_comment_or_blank(lines[i])) { ++i; continue; }
        std::istringstream ss(lines[i]);
        long degree;
        std::string coeff_str;
        if (!(ss >> degree >> coeff_str))
            throw Error("WENUM line " + std::to_string(i + 1) + ": expected '<degree> <coefficient>'");
        std::string trailing;
        if (ss >> trailing)
            throw Error("WENUM line " + std::to_string(i + 1) + ": trailing tokens");
        if (degree < 0 || degree > n)
            throw Error("WENUM line " + std::to_string(i + 1) + ": degree " +
                        std::to_string(degree) + " outside 0.." + std::to_string(n));
        if (degree <= prev_degree)
            throw Error("WENUM line " + std::to_string(i + 1) + ": degrees must be ascending");
        BigInt coeff;
        try {
            coeff = BigInt(coeff_str);
        } catch (const std::exception&) {
            throw Error("WENUM line " + std::to_string(i + 1) + ": bad coefficient '" +
                        coeff_str + "'");
        }
        if (coeff == 0)
            throw Error("WENUM line " + std::to_string(i + 1) + ": zero coefficients are omitted");
        w.coeffs[std::size_t(degree)] = coeff;
        prev_degree = degree;
        ++i;
    }
    return w;
}

std::string format_wenum(const WeightEnumerator& w) {
    std::ostringstream out;
    out << "WENUM v1\n";
    out << "n=" << w.n << " k=" << w.k << " kind=" << kind_name(w.kind) << "\n";
    for (std::size_t d = 0; d < w.coeffs.size(); ++d)
        if (w.coeffs[d] != 0) out << d << ' ' << w.coeffs[d] << "\n";
    return out.str();
}

std::string format_complete(const CompleteEnumerator& c, std::size_t r) {
    static const char* names[9] = {"y00", "y01", "y02", "y10", "y11",
                                   "y12", "y20", "y21", "y22"};
    std::ostringstream out;
    out << "CWENUM v1\n";
    out << "n=" << c.n << " r=" << r << " terms=" << c.terms.size() << "\n";
    for (const auto& [expo, coeff] : c.terms) {
        out << coeff;
        for (std::size_t s = 0; s < 9; ++s) {
            if (expo[s] == 0) continue;
            out << ' ' << names[s];
            if (expo[s] > 1) out << '^' << unsigned(expo[s]);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qmsd
