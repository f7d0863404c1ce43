#pragma once

// Representations of a finite poset over the naturals: x -> (n_x, lambda_x),
// with the parts of every lambda_x drawn from an ambient set. Monotonicity:
// x <= y implies n_x <= n_y, |lambda_x| <= |lambda_y| and
// max(lambda_x) <= max(lambda_y), where |lambda| is the number of parts.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "figura/exact.hpp"
#include "figura/partition.hpp"
#include "figura/poset.hpp"

namespace figura::poset {

class AmbientSet {
public:
    enum class Kind { All, Polygonal, Explicit };

    static AmbientSet all() { return AmbientSet(Kind::All, 0, {}); }
    // Throws InvalidKind for t < 3.
    static AmbientSet polygonal(Int t);
    static AmbientSet explicit_set(std::set<Int> values) { return AmbientSet(Kind::Explicit, 0, std::move(values)); }

    Kind kind() const noexcept { return kind_; }
    Int order() const noexcept { return t_; }
    const std::set<Int>& values() const noexcept { return values_; }
    bool contains(Int v) const;
    std::string to_string() const;

private:
    AmbientSet(Kind k, Int t, std::set<Int> v) : kind_(k), t_(t), values_(std::move(v)) {}

    Kind kind_;
    Int t_;
    std::set<Int> values_;
};

struct RepEntry {
    Int n;
    MultisetPartition lambda;
};

struct RepresentationN {
    AmbientSet ambient = AmbientSet::all();
    std::map<std::string, RepEntry> assignment;
};

struct RepresentationReport {
    bool valid = true;
    std::vector<std::string> violations;
    // Parts that do not sum to n_x; reported but not a violation.
    std::vector<std::string> warnings;
};

/// Full check with messages. Throws IncompleteRepresentation when an
/// element of P has no assignment.
RepresentationReport check_representation(const FinitePoset& p, const RepresentationN& rep);

bool validate_representation(const FinitePoset& p, const RepresentationN& rep);

// Sum of n_x.
Int weight(const RepresentationN& rep);

struct PosetFixture {
    FinitePoset poset;
    RepresentationN rep;
    // The pair suitable for differentiation in this fixture (empty for N_i).
    std::string a;
    std::string b;
};

/// Chain c1 < ... < c_{i+1} and d covering c1, with n_{c_j} = j (j <= i),
/// n_{c_{i+1}} = n_d = i and single-part partitions. Weight T(i) + 2i.
/// Throws InvalidArgument for i < 1.
PosetFixture build_N_family(Int i);

/// The family member where a_v is covered by c_v, over b covering b1 and a
/// chain c1 < ... < cn above b. Ambient set: the n0-gonal numbers.
///   n_{b1} = n0 p_1, n_b = n0 p_2, n_{ci} = n0 p_{i+2}  (n0 equal parts each)
///   n_{a1} = p_2 + p_3;  n_{av} = p_{v+2} + p_{companion} for v >= 2
/// with p = p^{n0}. The suitable pair is (a1, b) for v = 1 and (av, c_{v-1})
/// otherwise. Throws InvalidArgument unless 1 <= v <= n, n0 >= 5 and
/// 2 <= companion < v + 2.
PosetFixture build_P_ci(Int variant, Int chain_len, Int n0, Int companion = 2);

}  // namespace figura::poset
