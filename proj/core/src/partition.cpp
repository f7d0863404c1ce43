#include "figura/partition.hpp"

#include <sstream>

namespace figura {

MultisetPartition::MultisetPartition(const std::vector<Int>& parts) {
    for (Int p : parts) add(p);
}

MultisetPartition MultisetPartition::from_multiplicities(const std::map<Int, Int>& f) {
    MultisetPartition out;
    for (const auto& [part, count] : f) {
        if (count < 0) throw InvalidArgument("multiplicity must be >= 0");
        if (count > 0) out.add(part, count);
    }
    return out;
}

Int MultisetPartition::multiplicity(Int part) const {
    const auto it = f_.find(part);
    return it == f_.end() ? 0 : it->second;
}

Int MultisetPartition::num_parts() const noexcept {
    Int n = 0;
    for (const auto& [part, count] : f_) n += count;
    return n;
}

Int MultisetPartition::total() const {
    Exact s = 0;
    for (const auto& [part, count] : f_) s += Exact(part) * count;
    return s.value();
}

Int MultisetPartition::max_part() const noexcept { return f_.empty() ? 0 : f_.rbegin()->first; }

std::vector<Int> MultisetPartition::parts() const {
    std::vector<Int> out;
    for (auto it = f_.rbegin(); it != f_.rend(); ++it)
        out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
    return out;
}

void MultisetPartition::add(Int part, Int count) {
    if (part <= 0) throw InvalidArgument("partition parts must be positive");
    if (count <= 0) return;
    f_[part] += count;
}

void MultisetPartition::remove(Int part, Int count) {
    const auto it = f_.find(part);
    if (it == f_.end() || it->second < count)
        throw InvalidArgument("part " + std::to_string(part) + " does not occur often enough");
    it->second -= count;
    if (it->second == 0) f_.erase(it);
}

std::string MultisetPartition::to_string() const {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& [part, count] : f_) {
        if (!first) os << ' ';
        first = false;
        os << part << '^' << count;
    }
    os << ')';
    return os.str();
}

MultisetPartition subst_derivative(const MultisetPartition& lambda, Int i, Int u) {
    if (lambda.multiplicity(i) < 1)
        throw InvalidArgument("subst_derivative: part " + std::to_string(i) + " is absent");
    MultisetPartition out = lambda;
    out.remove(i);
    out.add(u);
    return out;
}

}  // namespace figura
