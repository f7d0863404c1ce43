#pragma once

// Sums of three figurate numbers located on linear lattice representations.
//
// A representation assigns value(i, j) = base + coefI*i + coefJ*j to every
// vertex (i, j) >= (0, 0). A decomposition of n carries witnesses
// (i, j, k0, alpha, beta, gamma): vertex (i, j) has value n and, for the rep,
//
//   Rt(t)      i - (t-1)k0 = T(a) + T(b) + T(c)         j + (t-2)k0 - 3 = a+b+c
//   SquareAll  i - k0      = T(a) + T(b) + T(c)         j + 2k0 - 3     = a+b+c
//   Octa       i - 5k0     = R(a)+R(b)+R(c) - (a+b+c)   j + 4k0         = a+b+c
//   Cube       i - 7k0     = R(a)+R(b)+2R(c) - (a+b+2c) j + 6k0         = a+b+2c
//
// with T = triangular, R = tetrahedral (both zero-extended), (a, b, c) =
// (alpha, beta, gamma). Term ranks are alpha+2 for Rt and alpha+1 otherwise.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "figura/exact.hpp"

namespace figura::decompose {

class LatticeRep {
public:
    enum class Id { Rt, ROcta, RCube, RSquareAll };

    // Throws InvalidArgument when t < 3.
    static LatticeRep rt(Int t);
    static LatticeRep octa() { return LatticeRep(Id::ROcta, 0, 3, 4, 5); }
    static LatticeRep cube() { return LatticeRep(Id::RCube, 0, 4, 6, 7); }
    static LatticeRep square_all() { return LatticeRep(Id::RSquareAll, 0, 0, 2, 1); }

    Id id() const noexcept { return id_; }
    // Polygon order for Rt, 0 otherwise.
    Int t() const noexcept { return t_; }
    Int base() const noexcept { return base_; }
    Int coef_i() const noexcept { return coef_i_; }
    Int coef_j() const noexcept { return coef_j_; }

    // "Rt(4)", "ROcta", "RCube", "RSquareAll"
    std::string name() const;

    friend bool operator==(const LatticeRep&, const LatticeRep&) = default;

private:
    LatticeRep(Id id, Int t, Int base, Int ci, Int cj) : id_(id), t_(t), base_(base), coef_i_(ci), coef_j_(cj) {}

    Id id_;
    Int t_;
    Int base_;
    Int coef_i_;
    Int coef_j_;
};

struct Witness {
    Int i;
    Int j;
    Int k0;
    Int alpha;
    Int beta;
    Int gamma;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Decomposition {
    Int target;
    LatticeRep rep;
    // Nonincreasing, except for RCube where the third rank is the doubled term.
    std::vector<Int> ranks;
    // Term values; for RCube the last entry is 2 gamma^3 and the terms sum to n.
    std::vector<Int> terms;
    // One witness per admissible k0, k0 ascending.
    std::vector<Witness> witnesses;
    // Set when no vertex (i, j) >= (0, 0) carries this decomposition
    // (octahedral sums 0, 1, 2, 6 using rank-0 terms).
    bool off_lattice = false;
};

using Ranks = std::vector<Int>;

struct SolveOptions {
    // When false only the k0 = 0 witness is kept.
    bool all_shifts = true;
};

Int vertex_value(const LatticeRep& rep, Int i, Int j);

/// All (i, j) >= (0, 0) with vertex_value = n, j ascending.
std::vector<std::pair<Int, Int>> representable_pairs(const LatticeRep& rep, Int n);

// Figurate term of witness component x under the rep (rank x+2 for Rt,
// x+1 otherwise).
Int term_of(const LatticeRep& rep, Int x);
Int rank_of_component(const LatticeRep& rep, Int x);

/// Checks the linear conditions above and that the terms sum to
/// vertex_value(i, j).
bool check_witness(const LatticeRep& rep, const Witness& w);

/// Every decomposition of n under the rep, ordered by ranks descending.
std::vector<Decomposition> solve(const LatticeRep& rep, Int n, const SolveOptions& opts = {});

// Throws InvalidArgument when t < 3.
std::vector<Decomposition> solve_three_polygonal(Int t, Int n, const SolveOptions& opts = {});
// Throws InvalidArgument when n < 0.
std::vector<Decomposition> solve_three_squares_all(Int n, const SolveOptions& opts = {});
// Throws InvalidArgument when n < 0.
std::vector<Decomposition> solve_three_octahedral(Int n, const SolveOptions& opts = {});
// Throws InvalidArgument when n < 4.
std::vector<Decomposition> solve_four_cubes_two_equal(Int n, const SolveOptions& opts = {});

// Keeps only decompositions whose ranks are all >= 1.
std::vector<Decomposition> positive_only(std::vector<Decomposition> ds);

// True iff solve(rep, n) is nonempty, without building witnesses.
bool decomposable(const LatticeRep& rep, Int n);

/// Exhaustive search over rank tuples using the figurate generators directly:
/// ranks >= 1 for Rt and RCube, >= 0 for ROcta and RSquareAll. Same ordering
/// as solve().
std::vector<Ranks> brute_oracle(const LatticeRep& rep, Int n);

/// brute_oracle for every n in [0, n_max] at once; result[n].
std::vector<std::vector<Ranks>> brute_oracle_upto(const LatticeRep& rep, Int n_max);

struct LbpVertex {
    Int i;
    Int j;
    Int value;
};

/// i-th vertex of the left boundary path and its value:
///   Rt(t):        (T(i-1), i),        value 2 + p^t_{i+1}
///   ROcta, RCube: (R(s) - s, s), s = i+1, value O_{i+2} + 2 or q_{i+2} + 3
/// Throws InvalidArgument for RSquareAll or i < 0.
LbpVertex lbp_value(const LatticeRep& rep, Int i);

/// The first `count` left-boundary vertices; for ROcta and RCube the path
/// starts at (0, 0) before lbp_value(rep, 0) = (0, 1).
std::vector<LbpVertex> left_boundary_path(const LatticeRep& rep, Int count);

/// (T(2i-1) + 1, i+1): a location formula for the octahedral/cube boundary
/// that coincides with lbp_value only for 1 <= i <= 3.
std::pair<Int, Int> lbp_location_triangular_form(Int i);

/// (decomposable under Rt(3) at (i, j), decomposable under Rt(t) at (i, j)),
/// each judged on the vertex value of its own representation.
std::pair<bool, bool> cross_equivalence(Int i, Int j, Int t);
/// Same pairing for ROcta and RCube.
std::pair<bool, bool> cross_equivalence_octa_cube(Int i, Int j);

}  // namespace figura::decompose
