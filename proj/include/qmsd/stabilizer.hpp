#pragma once

// Qutrit stabilizer codes as symplectic matrices: validation, CSS
// construction, dual basis, logical operators, shortening, and the
// STABILIZER-CODE v1 text format.

#include <array>
#include <string>
#include <vector>

#include "qmsd/classical.hpp"
#include "qmsd/gf3.hpp"

namespace qmsd {

// Rows are (u|v) with trivial syndrome throughout; only +1 eigenspaces are
// represented.
struct StabilizerCode {
    FFMatrix h;  // r x 2n
    std::size_t n = 0;
    std::size_t r = 0;
    std::string id;

    int k() const { return int(n) - int(r); }
    SymplecticVector row(std::size_t i) const { return split_symplectic(h.row(i)); }
};

// STABILIZER-CODE v1:
//   STABILIZER-CODE v1
//   p=3 n=<int> r=<int> id=<token>
//   r lines: n chars (u part), '|', n chars (v part)
StabilizerCode parse_stabilizer(const std::string& text);
std::string format_stabilizer(const StabilizerCode& c);

StabilizerCode make_stabilizer(const FFMatrix& h, const std::string& id);

// Throws on dependent rows or a non-commuting row pair (names the pair).
void validate(const StabilizerCode& code);

// H = (G 0; 0 G) for a self-orthogonal classical code of odd length.
StabilizerCode css_from_classical(const ClassicalTernaryCode& c);

// True iff the rows split into pure-X rows and pure-Z rows.
bool is_css(const StabilizerCode& code);

struct DualBasis {
    FFMatrix rows;  // (n+k) x 2n, rref
};

// Basis of the symplectic kernel of h; contains row_span(h).
DualBasis dual_basis(const StabilizerCode& code);

struct LogicalPair {
    SymplecticVector xbar;
    SymplecticVector zbar;  // rescaled so [xbar, zbar] = 1
};

// Deterministic representatives for k = 1: first dual-basis row outside
// row_span(h), then the first later row with nonzero pairing.
LogicalPair logical_operators(const StabilizerCode& code);

// Single-site symplectic rotation (a b; c d) with det = 1: 24 elements of
// SL(2, Z3), listed in lexicographic (a,b,c,d) order.
using Rotation = std::array<FFElement, 4>;
const std::vector<Rotation>& sl23_rotations();
Rotation identity_rotation();

// Shorten an [[n,0]] state at 1-based coordinate coord: rotate the site,
// keep the stabilizer subgroup trivial there, delete the coordinate.
// Throws degenerate-shortening unless the result is an [[n-1,1]] code.
StabilizerCode shorten(const StabilizerCode& state, std::size_t coord,
                       const Rotation& rot);

}  // namespace qmsd
