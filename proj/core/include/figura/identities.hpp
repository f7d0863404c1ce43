#pragma once

// Closed-form matrix entries and exact verifiers for the three-square,
// two-equal-cube and mod-9 identity families.
//
// Matrix indexing is 1-based: j selects the row, i the column.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "figura/exact.hpp"

namespace figura::identities {

enum class Family { R, S, T, MN, Cor5, Cor6 };

std::string to_string(Family f);

struct IdentityReport {
    Family family;
    // (j, i) or (j, i, l); for the mod-9 line with h, (j, h, l).
    std::vector<Int> indices;
    Int lhs;
    // For Cor6 this is the target residue 5, and holds means lhs = 5 (mod 9).
    Int rhs;
    bool holds;
};

// All entry functions throw InvalidArgument unless i, j >= 1.
Int r_entry(Int j, Int i);
Int s_entry(Int j, Int i);
Int t_entry(Int j, Int i);
Int m_entry(Int j, Int i);
Int n_entry(Int j, Int i);

/// Reports for the R, S and T lines, in that order:
///   24(r - 2p^5_{i+1}) + 3  = (6i+5)^2 + (6j+11)^2 + (12j+29)^2
///   8(s - 3p^6_{i+1}) + 3   = (4i+3)^2 + (4j+7)^2 + (8j+19)^2
///   40(t - 4p^7_{i+1}) + 27 = (10i+7)^2 + (10j+17)^2 + (20j+47)^2
std::array<IdentityReport, 3> verify_thm3(Int j, Int i);

/// x^3 + y^3 + 2z^3 = m - n with x = -(4j+8), y = -(2j+4), z = 2j+i+8.
IdentityReport verify_thm4(Int j, Int i);

/// (j+3)^3 + (2j+7)^3 + 2(2j+i+8)^3 = m - q_{2j+i+8}.
IdentityReport verify_cor5(Int j, Int i);

enum class MatrixId { M, N };
/// rows x cols window of M or N starting at (1, 1).
std::vector<std::vector<Int>> matrix_window(MatrixId which, Int rows, Int cols);

// Mod-9 family. The five lines, with i, j = 2 (mod 3), h = 1 (mod 3), l >= 1:
//   1: m(j,i) - q_{2j+i+8}
//   2: n(j,i) - q_{4j+8}
//   3: m(j,i) - 2q_{2j+i+8} + q_{2j+4}
//   4: m(j,h) - 3q_{2j+h+8} + 2q_{2j+h+k},  k = 6 + 45l
//   5: m(j,i) - 3q_{2j+i+8} + 2q_{2j+i+m},  m = 2 + 9l
// Each value is claimed to be = -4 (mod 9) and a sum of four positive cubes.
struct Cor6Params {
    Int j;
    Int i;      // h on line 4
    Int l = 0;  // only lines 4 and 5

    friend bool operator==(const Cor6Params&, const Cor6Params&) = default;
};

// Throws InvalidArgument if the line is outside 1..5 or params violate it.
void check_cor6_params(int line, const Cor6Params& p);
Int cor6_value(int line, const Cor6Params& p);
IdentityReport cor6_residues(int line, const Cor6Params& p);

/// The first `count` admissible parameter tuples of a line. Lines 1-3 order
/// (j, i) by j+i, then j; lines 4-5 order (j, i, l) by j+i+l, then j, then i.
std::vector<Cor6Params> cor6_tuples(int line, std::size_t count);

/// Lexicographically smallest a <= b <= c <= d, all >= 1 and d <= rank_bound,
/// with a^3+b^3+c^3+d^3 = n.
std::optional<std::array<Int, 4>> four_cube_witness(Int n, Int rank_bound);

// Smallest r >= 0 with r^3 >= n (n >= 0).
Int icbrt_ceil(Int n);

}  // namespace figura::identities
