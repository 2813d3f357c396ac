#pragma once

// Classical ternary linear codes: TERNARY-CODE v1 parsing, self-orthogonality,
// support distributions, classical weight enumerators, and a best-effort
// converter for MAGMA-style matrix listings.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmsd/gf3.hpp"
#include "qmsd/wenum.hpp"

namespace qmsd {

struct ClassicalTernaryCode {
    FFMatrix generator;  // k x n, rref, full rank
    std::size_t n = 0;
    std::size_t k = 0;
    std::string id;
};

// TERNARY-CODE v1:
//   TERNARY-CODE v1
//   n=<int> k=<int> id=<token>
//   k rows of exactly n characters from {0,1,2}
// '#' lines are comments; LF or CRLF.
ClassicalTernaryCode parse_classical(const std::string& text);
std::string format_classical(const ClassicalTernaryCode& c);

ClassicalTernaryCode make_classical(const FFMatrix& generator, const std::string& id);

bool is_self_orthogonal(const ClassicalTernaryCode& c);

// counts[mask] = number of codewords whose nonzero-coordinate set is mask.
struct SupportDistribution {
    std::size_t n = 0;
    std::map<std::uint64_t, std::uint64_t> counts;
};

SupportDistribution support_distribution(const ClassicalTernaryCode& c);

WeightEnumerator classical_wenum(const ClassicalTernaryCode& c);

// Extract generator matrices from a MAGMA-style listing (blocks of rows of
// digits between delimiters). Each block must row-reduce to a full-rank
// matrix; ids are <label>#<block index>. With an error sink, bad blocks are
// recorded and skipped instead of aborting the conversion.
std::vector<ClassicalTernaryCode> convert_magma(const std::string& text,
                                                const std::string& label,
                                                std::vector<std::string>* errors = nullptr);

}  // namespace qmsd
