#pragma once

// Finite posets over string labels, stored as a dense order matrix.

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace figura::poset {

using Relation = std::pair<std::string, std::string>;

class FinitePoset {
public:
    FinitePoset() = default;

    std::size_t size() const noexcept { return labels_.size(); }
    // Labels in insertion order; element indices follow this order.
    const std::vector<std::string>& elements() const noexcept { return labels_; }
    const std::string& label(std::size_t idx) const { return labels_.at(idx); }
    bool contains(const std::string& x) const { return index_.count(x) != 0; }
    // Throws UnknownElement.
    std::size_t index(const std::string& x) const;

    bool leq(std::size_t x, std::size_t y) const { return leq_[x * size() + y] != 0; }
    bool leq(const std::string& x, const std::string& y) const { return leq(index(x), index(y)); }
    bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }
    bool less(const std::string& x, const std::string& y) const { return less(index(x), index(y)); }
    bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

    friend FinitePoset build_poset(const std::vector<std::string>&, const std::vector<Relation>&);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<unsigned char> leq_;  // row-major size() x size()
};

/// Reflexive-transitive closure of the generators x < y. Labels used only in
/// relations are appended after `elements` in order of first use. Throws
/// InvalidArgument on duplicate labels and NotAPoset on a cycle through
/// distinct elements. A generator x < x is accepted as reflexivity.
FinitePoset build_poset(const std::vector<std::string>& elements, const std::vector<Relation>& generators);

/// Covering pairs (x, y): x < y with nothing strictly between. Ordered by the
/// index of x, then of y.
std::vector<Relation> hasse_edges(const FinitePoset& p);

// {x : x <= a}, in element order. Throws UnknownElement.
std::vector<std::string> down_set(const FinitePoset& p, const std::string& a);
// {x : a <= x}, in element order. Throws UnknownElement.
std::vector<std::string> up_set(const FinitePoset& p, const std::string& a);

std::vector<std::string> minimal_elements(const FinitePoset& p);
std::vector<std::string> maximal_elements(const FinitePoset& p);
bool is_chain(const FinitePoset& p, const std::vector<std::string>& xs);

struct SuitablePair {
    std::string a;
    std::string b;
    // c1 < ... < cn
    std::vector<std::string> chain;

    friend bool operator==(const SuitablePair&, const SuitablePair&) = default;
};

/// The pair with its chain when P = {a} + down_set(b) + C, C a nonempty chain
/// with a < c1 and b < c1, and a, b incomparable. Throws UnknownElement.
std::optional<SuitablePair> is_L_suitable(const FinitePoset& p, const std::string& a, const std::string& b);

// Label of the new minimal element and of the split chain elements.
std::string minus_label(const std::string& x);
std::string plus_label(const std::string& x);

/// Replaces C by chains C- and C+ and adds a new element a- below a.
/// Elements: a-, c1- = a (keeps its label), ci- for i >= 2, ci+ for all i,
/// and down_set(b) unchanged. Relations: a- < c1- < ... < cn-,
/// c1+ < ... < cn+, ci- < ci+; C- and a- sit above what a was above; C+ sits
/// above what C was above. |P'| = |P| + |C|. Throws InvalidArgument when the
/// pair is not suitable for P.
FinitePoset derive_poset(const FinitePoset& p, const SuitablePair& pair);

/// A bijection f with x <= y iff f(x) <= f(y), as label pairs (x, f(x)).
std::optional<std::vector<Relation>> isomorphism(const FinitePoset& p, const FinitePoset& q);
bool isomorphic(const FinitePoset& p, const FinitePoset& q);

// Graphviz digraph of the Hasse diagram, edges pointing upward.
std::string to_dot(const FinitePoset& p, const std::string& name = "P");

}  // namespace figura::poset
