#pragma once

#include <map>
#include <string>
#include <vector>

#include "figura/exact.hpp"

namespace figura {

/// A partition in multiplicity notation (1^{f1} 2^{f2} ...). Parts are
/// positive; multiplicities are >= 1 (zero entries are never stored).
class MultisetPartition {
public:
    MultisetPartition() = default;
    // Throws InvalidArgument on a part <= 0.
    explicit MultisetPartition(const std::vector<Int>& parts);
    // Throws InvalidArgument on a part <= 0 or multiplicity < 0.
    static MultisetPartition from_multiplicities(const std::map<Int, Int>& f);

    const std::map<Int, Int>& multiplicities() const noexcept { return f_; }
    Int multiplicity(Int part) const;

    // Number of parts, counted with multiplicity.
    Int num_parts() const noexcept;
    Int total() const;
    bool empty() const noexcept { return f_.empty(); }
    // Largest part; 0 for the empty partition.
    Int max_part() const noexcept;

    // Parts in nonincreasing order.
    std::vector<Int> parts() const;

    void add(Int part, Int count = 1);
    // Throws InvalidArgument if fewer than `count` copies are present.
    void remove(Int part, Int count = 1);

    // "(1^2 5^1)"
    std::string to_string() const;

    friend bool operator==(const MultisetPartition&, const MultisetPartition&) = default;

private:
    std::map<Int, Int> f_;
};

/// Replace one occurrence of part i by u. Throws InvalidArgument when i does
/// not occur in lambda.
MultisetPartition subst_derivative(const MultisetPartition& lambda, Int i, Int u);

}  // namespace figura
