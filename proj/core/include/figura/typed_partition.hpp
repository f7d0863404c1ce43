#pragma once

// Partitions of three-term figurate sums indexed by lattice paths.
//
// For ranks (i, j, k) write O_ijk = O_i + O_j + O_k, P_ijk = p^5_i + p^5_j + p^5_k
// and Q_ijk = q_i + q_j + 2q_k. A path from (r, s) to (i, j) yields a partition
// whose first part is the base value at (r, s) (plus a constant offset for
// some types) followed by one gap group per step p -> p+1:
//
//   type   base             offset                 gap group      total
//   O      O_rsk            0                      p^2, (p+1)^2   O_ijk
//   Sigma  P_rsk            offset_sigma(k, i)     3p+1           O_iik
//   Q      Q_rsk            0                      3p^2+3p+1      Q_iik
//   Tau    O_rsk            offset_tau(k, i)       p^2, (p+1)^2   Q_iik
//   Xi     P_rsk            offset_xi(k, i, j)     3p+1           O_ijk
//
// Sigma, Q and Tau are defined on the diagonal i = j only.

#include <optional>
#include <string>
#include <vector>

#include "figura/exact.hpp"
#include "figura/lattice.hpp"

namespace figura::typed {

enum class TypeTag { O, Sigma, Q, Tau, Xi };

std::string to_string(TypeTag t);
// Accepts O, sigma, Q, tau, xi (case-insensitive). Throws InvalidArgument.
TypeTag parse_type_tag(const std::string& s);

struct TypedPartition {
    TypeTag type;
    // Ranks of the path start; 0 when unknown (e.g. parsed from text).
    Int r = 0;
    Int s = 0;
    Int k = 0;
    Int base_value = 0;
    Int offset = 0;
    std::vector<Int> tail;
    Int total = 0;

    friend bool operator==(const TypedPartition&, const TypedPartition&) = default;
};

// O_ijk, P_ijk, Q_ijk as above.
Int octa_sum(Int i, Int j, Int k);
Int penta_sum(Int i, Int j, Int k);
Int cube_sum(Int i, Int j, Int k);

// O_iik - P_iik = 2 sum_{m<i} p^6_m + sum_{m<k} p^6_m.
Int offset_sigma(Int k, Int i);
// Q_iik - O_iik = 4 rho_{i-1} + rho_{2k-1}.
Int offset_tau(Int k, Int i);
// O_ijk - P_ijk. Throws InvalidArgument when j > i.
Int offset_xi(Int k, Int i, Int j);

// The closed forms as commonly printed; they agree with the forced offsets
// only for small i. printed_sigma(k, i) is the printed polynomial evaluated
// at i - 1, so it lines up with offset_sigma(k, i).
Int printed_sigma(Int k, Int i);
Int printed_tau(Int k, Int i);
Int printed_xi(Int k, Int i, Int j);

struct OffsetComparison {
    TypeTag type;
    Int k;
    Int i;
    Int j;
    Int forced;
    Int printed;
    bool agree;
};

/// Forced versus printed offsets for 1 <= k <= k_max, 1 <= i <= i_max
/// (and 1 <= j <= i for Xi). Type must be Sigma, Tau or Xi.
std::vector<OffsetComparison> compare_offsets(TypeTag type, Int k_max, Int i_max);

// Throws InvalidArgument when j > i, j < 1, k < 1, or i != j for Sigma/Q/Tau.
void check_domain(TypeTag type, Int i, Int j, Int k);

// Value that every partition of the type at (i, j, k) sums to.
Int expected_total(TypeTag type, Int i, Int j, Int k);

/// One partition per path ending at (i, j), in path enumeration order.
/// Throws InvalidArgument when j > i, k < 1, or i != j for Sigma/Q/Tau.
std::vector<TypedPartition> enumerate_typed(TypeTag type, Int i, Int j, Int k);

// Same count as enumerate_typed without materializing the partitions.
Int count_typed(TypeTag type, Int i, Int j, Int k);

/// Reconstructs a path (r, s) -> (i, j) whose gap groups reproduce the tail
/// and checks base family, offset, partial sums, tail-length cap and total.
/// Never throws; malformed input yields false.
bool validate_typed_partition(const TypedPartition& p, Int i, Int j, Int k);

// Additive notation: "26+2^2+3^2", "3+14+4+7+4+7", "4+7+19+7+19".
std::string format_typed(const TypedPartition& p);

/// Inverse of format_typed for a given type; ranks are left 0 and k is set
/// to the argument. "a^2" parts are squared. Throws ParseError.
TypedPartition parse_typed(TypeTag type, const std::string& text, Int k);

// Gap group contributed by one step p -> p+1 for the type.
std::vector<Int> gap_group(TypeTag type, Int p);

}  // namespace figura::typed
