#include "figura/poset.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "figura/error.hpp"

namespace figura::poset {

std::size_t FinitePoset::index(const std::string& x) const {
    const auto it = index_.find(x);
    if (it == index_.end()) throw UnknownElement("unknown element '" + x + "'");
    return it->second;
}

FinitePoset build_poset(const std::vector<std::string>& elements, const std::vector<Relation>& generators) {
    FinitePoset p;
    auto add = [&](const std::string& x) {
        if (p.index_.emplace(x, p.labels_.size()).second) p.labels_.push_back(x);
    };
    for (const auto& x : elements) {
        if (p.contains(x)) throw InvalidArgument("duplicate element '" + x + "'");
        add(x);
    }
    for (const auto& [x, y] : generators) {
        add(x);
        add(y);
    }
    const std::size_t n = p.size();
    p.leq_.assign(n * n, 0);
    for (std::size_t x = 0; x < n; ++x) p.leq_[x * n + x] = 1;
    for (const auto& [x, y] : generators) p.leq_[p.index(x) * n + p.index(y)] = 1;

    // Warshall closure.
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t x = 0; x < n; ++x) {
            if (!p.leq_[x * n + k]) continue;
            for (std::size_t y = 0; y < n; ++y)
                if (p.leq_[k * n + y]) p.leq_[x * n + y] = 1;
        }

    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (p.leq_[x * n + y] && p.leq_[y * n + x])
                throw NotAPoset("cycle through '" + p.labels_[x] + "' and '" + p.labels_[y] + "'");
    return p;
}

std::vector<Relation> hasse_edges(const FinitePoset& p) {
    std::vector<Relation> out;
    const std::size_t n = p.size();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (!p.less(x, y)) continue;
            bool covered = true;
            for (std::size_t z = 0; z < n && covered; ++z)
                if (p.less(x, z) && p.less(z, y)) covered = false;
            if (covered) out.emplace_back(p.label(x), p.label(y));
        }
    return out;
}

std::vector<std::string> down_set(const FinitePoset& p, const std::string& a) {
    const std::size_t ia = p.index(a);
    std::vector<std::string> out;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(x, ia)) out.push_back(p.label(x));
    return out;
}

std::vector<std::string> up_set(const FinitePoset& p, const std::string& a) {
    const std::size_t ia = p.index(a);
    std::vector<std::string> out;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (p.leq(ia, x)) out.push_back(p.label(x));
    return out;
}

std::vector<std::string> minimal_elements(const FinitePoset& p) {
    std::vector<std::string> out;
    for (std::size_t x = 0; x < p.size(); ++x) {
        bool minimal = true;
        for (std::size_t y = 0; y < p.size() && minimal; ++y)
            if (p.less(y, x)) minimal = false;
        if (minimal) out.push_back(p.label(x));
    }
    return out;
}

std::vector<std::string> maximal_elements(const FinitePoset& p) {
    std::vector<std::string> out;
    for (std::size_t x = 0; x < p.size(); ++x) {
        bool maximal = true;
        for (std::size_t y = 0; y < p.size() && maximal; ++y)
            if (p.less(x, y)) maximal = false;
        if (maximal) out.push_back(p.label(x));
    }
    return out;
}

bool is_chain(const FinitePoset& p, const std::vector<std::string>& xs) {
    for (std::size_t u = 0; u < xs.size(); ++u)
        for (std::size_t v = u + 1; v < xs.size(); ++v)
            if (!p.comparable(p.index(xs[u]), p.index(xs[v]))) return false;
    return true;
}

std::optional<SuitablePair> is_L_suitable(const FinitePoset& p, const std::string& a, const std::string& b) {
    const std::size_t ia = p.index(a), ib = p.index(b);
    if (ia == ib || p.comparable(ia, ib)) return std::nullopt;

    std::vector<std::size_t> chain;
    for (std::size_t x = 0; x < p.size(); ++x)
        if (x != ia && !p.leq(x, ib)) chain.push_back(x);
    if (chain.empty()) return std::nullopt;

    // Sorting by the size of the down-set linearizes a chain.
    auto below = [&](std::size_t x) {
        std::size_t c = 0;
        for (std::size_t y = 0; y < p.size(); ++y) c += p.leq(y, x);
        return c;
    };
    std::sort(chain.begin(), chain.end(), [&](std::size_t x, std::size_t y) { return below(x) < below(y); });
    for (std::size_t u = 0; u + 1 < chain.size(); ++u)
        if (!p.less(chain[u], chain[u + 1])) return std::nullopt;
    if (!p.less(ia, chain.front()) || !p.less(ib, chain.front())) return std::nullopt;

    SuitablePair out{a, b, {}};
    for (std::size_t x : chain) out.chain.push_back(p.label(x));
    return out;
}

std::string minus_label(const std::string& x) { return x + "-"; }
std::string plus_label(const std::string& x) { return x + "+"; }

FinitePoset derive_poset(const FinitePoset& p, const SuitablePair& pair) {
    const auto check = is_L_suitable(p, pair.a, pair.b);
    if (!check || check->chain != pair.chain)
        throw InvalidArgument("(" + pair.a + ", " + pair.b + ") is not a suitable pair for this poset");

    const auto block = down_set(p, pair.b);
    const std::string a_minus = minus_label(pair.a);
    if (p.contains(a_minus)) throw InvalidArgument("label '" + a_minus + "' already in use");

    std::vector<std::string> minus_chain{pair.a};
    std::vector<std::string> plus_chain;
    for (std::size_t u = 0; u < pair.chain.size(); ++u) {
        if (u > 0) minus_chain.push_back(minus_label(pair.chain[u]));
        plus_chain.push_back(plus_label(pair.chain[u]));
    }

    std::vector<std::string> elements{a_minus};
    elements.insert(elements.end(), block.begin(), block.end());
    elements.insert(elements.end(), minus_chain.begin(), minus_chain.end());
    elements.insert(elements.end(), plus_chain.begin(), plus_chain.end());
    for (const auto& e : elements)
        if (std::count(elements.begin(), elements.end(), e) > 1)
            throw InvalidArgument("label '" + e + "' collides in the derived poset");

    std::vector<Relation> gen;
    for (std::size_t u = 0; u < block.size(); ++u)
        for (std::size_t v = 0; v < block.size(); ++v)
            if (u != v && p.less(block[u], block[v])) gen.emplace_back(block[u], block[v]);
    gen.emplace_back(a_minus, minus_chain.front());
    for (std::size_t u = 0; u + 1 < minus_chain.size(); ++u) gen.emplace_back(minus_chain[u], minus_chain[u + 1]);
    for (std::size_t u = 0; u + 1 < plus_chain.size(); ++u) gen.emplace_back(plus_chain[u], plus_chain[u + 1]);
    for (std::size_t u = 0; u < plus_chain.size(); ++u) gen.emplace_back(minus_chain[u], plus_chain[u]);
    for (const auto& x : block) {
        // The old chain was above the whole block; the old a only above part of it.
        gen.emplace_back(x, plus_chain.front());
        if (p.less(x, pair.a)) gen.emplace_back(x, a_minus);
    }
    return build_poset(elements, gen);
}

std::optional<std::vector<Relation>> isomorphism(const FinitePoset& p, const FinitePoset& q) {
    const std::size_t n = p.size();
    if (n != q.size()) return std::nullopt;
    auto profile = [](const FinitePoset& r, std::size_t x) {
        std::size_t up = 0, down = 0;
        for (std::size_t y = 0; y < r.size(); ++y) {
            up += r.leq(x, y);
            down += r.leq(y, x);
        }
        return std::pair{up, down};
    };
    std::vector<std::pair<std::size_t, std::size_t>> pp(n), qp(n);
    for (std::size_t x = 0; x < n; ++x) {
        pp[x] = profile(p, x);
        qp[x] = profile(q, x);
    }
    std::vector<std::size_t> map(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> extend = [&](std::size_t x) {
        if (x == n) return true;
        for (std::size_t y = 0; y < n; ++y) {
            if (used[y] || pp[x] != qp[y]) continue;
            bool ok = true;
            for (std::size_t z = 0; z < x && ok; ++z)
                ok = p.leq(z, x) == q.leq(map[z], y) && p.leq(x, z) == q.leq(y, map[z]);
            if (!ok) continue;
            map[x] = y;
            used[y] = true;
            if (extend(x + 1)) return true;
            used[y] = false;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    std::vector<Relation> out;
    for (std::size_t x = 0; x < n; ++x) out.emplace_back(p.label(x), q.label(map[x]));
    return out;
}

bool isomorphic(const FinitePoset& p, const FinitePoset& q) { return isomorphism(p, q).has_value(); }

namespace {

std::string dot_id(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const FinitePoset& p, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << dot_id(name) << " {\n";
    os << "  rankdir=BT;\n";
    os << "  node [shape=circle];\n";
    for (const auto& x : p.elements()) os << "  " << dot_id(x) << ";\n";
    for (const auto& [x, y] : hasse_edges(p)) os << "  " << dot_id(x) << " -> " << dot_id(y) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace figura::poset
