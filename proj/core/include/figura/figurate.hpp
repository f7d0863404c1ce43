#pragma once

// Figurate-number generators and the elementary criteria built on them.
//
// Every generator uses the zero-extension convention: a rank <= 0 maps to 0.
// All values are exact; arithmetic that leaves 63 bits throws OverflowError.

#include <optional>
#include <string>
#include <utility>

#include "figura/exact.hpp"

namespace figura::figurate {

class FigurateKind {
public:
    enum class Family { Polygonal, Octahedral, Tetrahedral, Cube };

    // Throws InvalidKind when t < 3.
    static FigurateKind polygonal(Int t);
    static FigurateKind octahedral() { return FigurateKind(Family::Octahedral, 0); }
    static FigurateKind tetrahedral() { return FigurateKind(Family::Tetrahedral, 0); }
    static FigurateKind cube() { return FigurateKind(Family::Cube, 0); }

    Family family() const noexcept { return family_; }
    // Polygon order; 0 for the solid families.
    Int order() const noexcept { return t_; }

    std::string name() const;

    friend bool operator==(const FigurateKind&, const FigurateKind&) = default;

private:
    FigurateKind(Family f, Int t) : family_(f), t_(t) {}

    Family family_;
    Int t_;
};

struct FigurateValue {
    FigurateKind kind;
    Int rank;
    Int value;

    friend bool operator==(const FigurateValue&, const FigurateValue&) = default;
};

// p^t_k = ((t-2)k^2 - (t-4)k) / 2. Throws InvalidKind for t < 3.
Int polygonal(Int t, Int k);
Int triangular(Int k);
// n(2n^2+1)/3
Int octahedral(Int n);
// n(n+1)(n+2)/6
Int tetrahedral(Int n);
Int cube(Int k);

Int value(const FigurateKind& kind, Int rank);
FigurateValue make_value(const FigurateKind& kind, Int rank);

/// Inverse of value() on ranks >= 1: the rank k >= 1 with value(kind, k) == v,
/// or nullopt when v is not in the sequence. v == 0 yields nullopt because
/// every rank <= 0 maps to 0. Throws InvalidArgument for v < 0.
std::optional<Int> rank_of(const FigurateKind& kind, Int v);

bool is_triangular(Int v);
// floor(sqrt(v)) for v >= 0
Int isqrt(Int v);
bool is_square(Int v);

/// n is a sum of two triangular numbers (0 allowed) iff 2(4n+1) is a sum of
/// two odd squares.
bool is_sum_two_triangular(Int n);

/// d1(4n+1) - d3(4n+1), where d_r counts divisors congruent to r mod 4.
/// Equals the number of ordered pairs of triangular numbers summing to n.
Int count_two_triangular(Int n);

/// m^2 n + (m^2-1)/8, triangular whenever n is and m is odd. Throws
/// InvalidArgument when m is even or < 1, or n is not triangular.
Int euler_triangular_scale(Int m, Int n);

// n = 4^k(8m+7)
bool is_forbidden_three_squares(Int n);

/// Both sides of 24p^5_k+1 = (6k-1)^2, 8p^6_k+1 = (4k-1)^2 or
/// 40p^7_k+9 = (10k-3)^2, for t = 5, 6, 7. Other t throw InvalidArgument.
std::pair<Int, Int> square_shift_identity(Int t, Int k);

}  // namespace figura::figurate
