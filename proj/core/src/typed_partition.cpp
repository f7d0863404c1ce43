#include "figura/typed_partition.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "figura/figurate.hpp"

namespace figura::typed {

namespace fg = figura::figurate;

namespace {

bool diagonal_only(TypeTag t) { return t == TypeTag::Sigma || t == TypeTag::Q || t == TypeTag::Tau; }
bool pair_gaps(TypeTag t) { return t == TypeTag::O || t == TypeTag::Tau; }

}  // namespace

void check_domain(TypeTag type, Int i, Int j, Int k) {
    if (k < 1) throw InvalidArgument("k must be >= 1");
    if (j < 1 || j > i) throw InvalidArgument("typed partitions need 1 <= j <= i");
    if (diagonal_only(type) && i != j)
        throw InvalidArgument("type " + to_string(type) + " is defined on the diagonal i = j only");
}

namespace {

Exact hex_prefix(Int n) {
    // sum_{m=0}^{n-1} p^6_m
    Exact s = 0;
    for (Int m = 1; m < n; ++m) s += fg::polygonal(6, m);
    return s;
}

Int base_at(TypeTag type, Int r, Int s, Int k) {
    switch (type) {
        case TypeTag::O:
        case TypeTag::Tau: return octa_sum(r, s, k);
        case TypeTag::Sigma:
        case TypeTag::Xi: return penta_sum(r, s, k);
        case TypeTag::Q: return cube_sum(r, s, k);
    }
    return 0;
}

Int offset_at(TypeTag type, Int i, Int j, Int k) {
    switch (type) {
        case TypeTag::O:
        case TypeTag::Q: return 0;
        case TypeTag::Sigma: return offset_sigma(k, i);
        case TypeTag::Tau: return offset_tau(k, i);
        case TypeTag::Xi: return offset_xi(k, i, j);
    }
    return 0;
}

Int tail_cap(TypeTag type, Int i, Int j) { return (pair_gaps(type) ? 2 : 1) * (i + j - 2); }

}  // namespace

std::string to_string(TypeTag t) {
    switch (t) {
        case TypeTag::O: return "O";
        case TypeTag::Sigma: return "sigma";
        case TypeTag::Q: return "Q";
        case TypeTag::Tau: return "tau";
        case TypeTag::Xi: return "xi";
    }
    return "?";
}

TypeTag parse_type_tag(const std::string& s) {
    std::string low;
    for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low == "o") return TypeTag::O;
    if (low == "sigma") return TypeTag::Sigma;
    if (low == "q") return TypeTag::Q;
    if (low == "tau") return TypeTag::Tau;
    if (low == "xi") return TypeTag::Xi;
    throw InvalidArgument("unknown partition type '" + s + "' (expected O, sigma, Q, tau or xi)");
}

Int octa_sum(Int i, Int j, Int k) {
    return (Exact(fg::octahedral(i)) + fg::octahedral(j) + fg::octahedral(k)).value();
}

Int penta_sum(Int i, Int j, Int k) {
    return (Exact(fg::polygonal(5, i)) + fg::polygonal(5, j) + fg::polygonal(5, k)).value();
}

Int cube_sum(Int i, Int j, Int k) {
    return (Exact(fg::cube(i)) + fg::cube(j) + Exact(2) * fg::cube(k)).value();
}

Int offset_sigma(Int k, Int i) {
    if (k < 1 || i < 1) throw InvalidArgument("offset_sigma needs k, i >= 1");
    return (Exact(2) * hex_prefix(i) + hex_prefix(k)).value();
}

Int offset_tau(Int k, Int i) {
    if (k < 1 || i < 1) throw InvalidArgument("offset_tau needs k, i >= 1");
    return (Exact(4) * fg::tetrahedral(i - 1) + fg::tetrahedral(2 * k - 1)).value();
}

Int offset_xi(Int k, Int i, Int j) {
    if (k < 1 || i < 1 || j < 1) throw InvalidArgument("offset_xi needs k, i, j >= 1");
    if (j > i) throw InvalidArgument("offset_xi needs j <= i");
    return (hex_prefix(i) + hex_prefix(j) + hex_prefix(k)).value();
}

Int printed_sigma(Int k, Int i) {
    const Int a = i - 1;
    Exact s = 0;
    for (Int m = 0; m < k; ++m) s += fg::triangular(2 * m - 1);
    return (s + Exact(12) * a + Exact(18) * fg::triangular(a - 3) - 10).value();
}

Int printed_tau(Int k, Int i) {
    return (Exact(fg::tetrahedral(2 * k - 1)) + Exact(4) * (i - 1) + Exact(8) * fg::triangular(i - 2) +
            Exact(4) * fg::triangular(i - 3))
        .value();
}

Int printed_xi(Int k, Int i, Int j) {
    Exact s = fg::polygonal(6, k - 1);
    for (Int m = 1; m <= j; ++m) s += fg::polygonal(6, m - 1);
    for (Int h = j; h <= i; ++h) s += fg::polygonal(6, h);
    return s.value();
}

std::vector<OffsetComparison> compare_offsets(TypeTag type, Int k_max, Int i_max) {
    std::vector<OffsetComparison> out;
    for (Int k = 1; k <= k_max; ++k)
        for (Int i = 1; i <= i_max; ++i) {
            switch (type) {
                case TypeTag::Sigma: {
                    const Int f = offset_sigma(k, i), p = printed_sigma(k, i);
                    out.push_back({type, k, i, i, f, p, f == p});
                    break;
                }
                case TypeTag::Tau: {
                    const Int f = offset_tau(k, i), p = printed_tau(k, i);
                    out.push_back({type, k, i, i, f, p, f == p});
                    break;
                }
                case TypeTag::Xi:
                    for (Int j = 1; j <= i; ++j) {
                        const Int f = offset_xi(k, i, j), p = printed_xi(k, i, j);
                        out.push_back({type, k, i, j, f, p, f == p});
                    }
                    break;
                default: throw InvalidArgument("offset comparison needs sigma, tau or xi");
            }
        }
    return out;
}

Int expected_total(TypeTag type, Int i, Int j, Int k) {
    switch (type) {
        case TypeTag::O:
        case TypeTag::Sigma:
        case TypeTag::Xi: return octa_sum(i, j, k);
        case TypeTag::Q:
        case TypeTag::Tau: return cube_sum(i, j, k);
    }
    return 0;
}

std::vector<Int> gap_group(TypeTag type, Int p) {
    switch (type) {
        case TypeTag::O:
        case TypeTag::Tau: return {(Exact(p) * p).value(), (Exact(p + 1) * (p + 1)).value()};
        case TypeTag::Sigma:
        case TypeTag::Xi: return {(Exact(3) * p + 1).value()};
        case TypeTag::Q: return {(Exact(3) * p * p + Exact(3) * p + 1).value()};
    }
    return {};
}

std::vector<TypedPartition> enumerate_typed(TypeTag type, Int i, Int j, Int k) {
    check_domain(type, i, j, k);
    const Int offset = offset_at(type, i, j, k);
    const Int total = expected_total(type, i, j, k);
    std::vector<TypedPartition> out;
    lattice::for_each_path(i, j, [&](const lattice::LatticePath& path) {
        TypedPartition tp{type, path.start.i, path.start.j, k, base_at(type, path.start.i, path.start.j, k),
                          offset, {}, total};
        Int p = path.start.i, q = path.start.j;
        for (auto step : path.steps) {
            Int& rank = step == lattice::Step::IncFirst ? p : q;
            const auto g = gap_group(type, rank);
            tp.tail.insert(tp.tail.end(), g.begin(), g.end());
            ++rank;
        }
        out.push_back(std::move(tp));
    });
    return out;
}

Int count_typed(TypeTag type, Int i, Int j, Int k) {
    check_domain(type, i, j, k);
    Int n = 0;
    lattice::for_each_path(i, j, [&](const lattice::LatticePath&) { ++n; });
    return n;
}

bool validate_typed_partition(const TypedPartition& p, Int i, Int j, Int k) {
    try {
        check_domain(p.type, i, j, k);
        if (p.k != 0 && p.k != k) return false;
        if (p.offset != offset_at(p.type, i, j, k)) return false;
        if (static_cast<Int>(p.tail.size()) > tail_cap(p.type, i, j)) return false;

        Exact sum = Exact(p.base_value) + p.offset;
        for (Int part : p.tail) {
            if (part <= 0) return false;
            sum += part;
        }
        const Int want = expected_total(p.type, i, j, k);
        if (sum != want || p.total != want) return false;

        const std::size_t group = pair_gaps(p.type) ? 2 : 1;
        // Depth-first reconstruction of the path; at the diagonal both step
        // directions can produce the same gap group.
        auto walk = [&](auto&& self, Int a, Int b, std::size_t pos) -> bool {
            if (pos == p.tail.size()) return a == i && b == j;
            if (pos + group > p.tail.size()) return false;
            auto matches = [&](Int rank) {
                const auto g = gap_group(p.type, rank);
                return std::equal(g.begin(), g.end(), p.tail.begin() + static_cast<std::ptrdiff_t>(pos));
            };
            if (a < i && matches(a) && self(self, a + 1, b, pos + group)) return true;
            if (b < j && b + 1 <= a && matches(b) && self(self, a, b + 1, pos + group)) return true;
            return false;
        };
        for (Int r = 1; r <= i; ++r)
            for (Int s = 1; s <= std::min(r, j); ++s) {
                if (p.r != 0 && (r != p.r || s != p.s)) continue;
                if (base_at(p.type, r, s, k) != p.base_value) continue;
                if (walk(walk, r, s, 0)) return true;
            }
        return false;
    } catch (const Error&) {
        return false;
    }
}

std::string format_typed(const TypedPartition& p) {
    std::ostringstream os;
    os << p.base_value;
    if (p.type != TypeTag::O && p.type != TypeTag::Q) os << '+' << p.offset;
    for (Int part : p.tail) {
        os << '+';
        if (pair_gaps(p.type) && fg::is_square(part))
            os << fg::isqrt(part) << "^2";
        else
            os << part;
    }
    return os.str();
}

TypedPartition parse_typed(TypeTag type, const std::string& text, Int k) {
    std::vector<Int> values;
    std::size_t pos = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> Int {
        skip_ws();
        const std::size_t begin = pos;
        Exact v = 0;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        if (pos == begin) throw ParseError(1, pos + 1, "expected a number");
        return v.value();
    };
    while (true) {
        Int v = number();
        skip_ws();
        if (pos < n && text[pos] == '^') {
            ++pos;
            const std::size_t at = pos + 1;
            if (number() != 2) throw ParseError(1, at, "only squares (^2) are supported");
            v = (Exact(v) * v).value();
            skip_ws();
        }
        values.push_back(v);
        if (pos == n) break;
        if (text[pos] != '+') throw ParseError(1, pos + 1, "expected '+'");
        ++pos;
    }
    TypedPartition tp{type, 0, 0, k, values[0], 0, {}, 0};
    std::size_t first_tail = 1;
    if (type != TypeTag::O && type != TypeTag::Q) {
        if (values.size() < 2) throw ParseError(1, n + 1, "missing offset term");
        tp.offset = values[1];
        first_tail = 2;
    }
    tp.tail.assign(values.begin() + static_cast<std::ptrdiff_t>(first_tail), values.end());
    Exact sum = Exact(tp.base_value) + tp.offset;
    for (Int v : tp.tail) sum += v;
    tp.total = sum.value();
    return tp;
}

}  // namespace figura::typed
