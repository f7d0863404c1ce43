#pragma once

// Monotone paths in the triangular lattice region {(i, j) : 1 <= j <= i}.
// A path may start at any vertex of the region and moves by unit steps that
// increase either coordinate, never leaving the region. The single vertex is
// the trivial path.

#include <functional>
#include <vector>

#include "figura/exact.hpp"

namespace figura::lattice {

struct LatticeIndex {
    Int i;
    Int j;

    friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
    friend auto operator<=>(const LatticeIndex&, const LatticeIndex&) = default;
};

enum class Step { IncFirst, IncSecond };

struct LatticePath {
    LatticeIndex start;
    std::vector<Step> steps;

    LatticeIndex end() const;
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

/// Number of paths ending at (i, j), the trivial one included:
/// N(i, 1) = i and N(i, j) = 1 + N(i-1, j)[i-1 >= j] + N(i, j-1).
/// Throws InvalidArgument unless 1 <= j <= i.
Int path_count(Int i, Int j);

/// Memoized N(i, j) over 1 <= j <= min(i, j_max), i <= i_max.
class PathCountTable {
public:
    // Throws InvalidArgument unless i_max >= j_max >= 1.
    PathCountTable(Int i_max, Int j_max);

    Int i_max() const noexcept { return i_max_; }
    Int j_max() const noexcept { return j_max_; }
    // Throws InvalidArgument outside the table.
    Int at(Int i, Int j) const;
    bool contains(Int i, Int j) const noexcept;

private:
    Int i_max_;
    Int j_max_;
    std::vector<std::vector<Int>> rows_;  // rows_[i-1][j-1]
};

PathCountTable weight_table(Int i_max, Int j_max);

/// t-th forward difference of m -> N(j+m, j) at m = 0. Requires j >= 2, t >= 0.
Int delta(Int j, Int t);

/// Newton-series closed form of N(i, j): with s = i - j + 1,
/// sum over h = 0..j of C(s-1, h) * delta(j, h); i itself when j = 1.
Int path_count_closed(Int i, Int j);

/// Calls f for every path ending at (i, j): starts in lexicographic order,
/// then step sequences in lexicographic order with IncFirst < IncSecond.
void for_each_path(Int i, Int j, const std::function<void(const LatticePath&)>& f);

std::vector<LatticePath> enumerate_paths(Int i, Int j);

Int binomial(Int n, Int k);

}  // namespace figura::lattice
