#include "figura/decompose.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "figura/figurate.hpp"

namespace figura::decompose {

namespace fg = figura::figurate;

namespace {

using Id = LatticeRep::Id;

Int min_component(const LatticeRep& rep) { return rep.id() == Id::RCube ? 0 : -1; }

// Witness components x >= min_component with term_of(x) <= n, and their terms.
struct TermTable {
    std::vector<Int> x;
    std::vector<Int> value;
};

TermTable term_table(const LatticeRep& rep, Int n) {
    TermTable tt;
    for (Int x = min_component(rep);; ++x) {
        const Int v = term_of(rep, x);
        if (v > n) break;
        tt.x.push_back(x);
        tt.value.push_back(v);
    }
    return tt;
}

Int value_sum(const LatticeRep& rep, const Witness& w) {
    const Exact c = term_of(rep, w.gamma);
    return (Exact(term_of(rep, w.alpha)) + term_of(rep, w.beta) + (rep.id() == Id::RCube ? c * 2 : c)).value();
}

// Vertex carrying the components with k0 = 0; j may be negative (octahedral
// sums with rank-0 terms).
std::pair<Int, Int> canonical_vertex(const LatticeRep& rep, Int a, Int b, Int c) {
    switch (rep.id()) {
        case Id::Rt:
        case Id::RSquareAll:
            return {(Exact(fg::triangular(a)) + fg::triangular(b) + fg::triangular(c)).value(), a + b + c + 3};
        case Id::ROcta:
            return {(Exact(fg::tetrahedral(a)) + fg::tetrahedral(b) + fg::tetrahedral(c) - (a + b + c)).value(),
                    a + b + c};
        case Id::RCube:
            return {(Exact(fg::tetrahedral(a)) + fg::tetrahedral(b) + Exact(2) * fg::tetrahedral(c) -
                     (a + b + 2 * c))
                        .value(),
                    a + b + 2 * c};
    }
    return {0, 0};
}

Decomposition make_decomposition(const LatticeRep& rep, Int n, Int a, Int b, Int c, const SolveOptions& opts) {
    Decomposition d{n, rep, {}, {}, {}, false};
    for (Int x : {a, b, c}) {
        d.ranks.push_back(rank_of_component(rep, x));
        d.terms.push_back(term_of(rep, x));
    }
    if (rep.id() == Id::RCube) d.terms[2] *= 2;

    const auto [i0, j0] = canonical_vertex(rep, a, b, c);
    if (j0 < 0) {
        d.off_lattice = true;
        return d;
    }
    // Moving k0 units keeps the value: coef_i * coef_j - coef_j * coef_i = 0.
    for (Int k0 = 0; j0 - rep.coef_i() * k0 >= 0; ++k0) {
        const Witness w{i0 + rep.coef_j() * k0, j0 - rep.coef_i() * k0, k0, a, b, c};
        if (!check_witness(rep, w) || vertex_value(rep, w.i, w.j) != n)
            throw std::logic_error("decompose: emitted witness fails its identity");
        d.witnesses.push_back(w);
        if (!opts.all_shifts) break;
    }
    return d;
}

// Calls emit(a, b, c) for every component triple summing to n, in
// descending order of (a, b, c). Stops early when emit returns false.
void for_each_triple(const LatticeRep& rep, Int n, const std::function<bool(Int, Int, Int)>& emit) {
    if (n < 0) return;
    const TermTable tt = term_table(rep, n);
    const auto m = static_cast<std::ptrdiff_t>(tt.value.size());
    const auto& v = tt.value;

    if (rep.id() == Id::RCube) {
        // n = g(a) + g(b) + 2 g(c), a >= b, c free.
        for (std::ptrdiff_t ia = m - 1; ia >= 0; --ia) {
            for (std::ptrdiff_t ib = ia; ib >= 0; --ib) {
                const Int rem = n - v[ia] - v[ib];
                if (rem < 2 * v[0]) continue;
                if (rem > 2 * v[m - 1]) break;
                if (rem % 2 != 0) continue;
                const auto it = std::lower_bound(v.begin(), v.end(), rem / 2);
                if (it != v.end() && *it == rem / 2) {
                    if (!emit(tt.x[ia], tt.x[ib], tt.x[it - v.begin()])) return;
                }
            }
        }
        return;
    }

    // n = g(a) + g(b) + g(c), a >= b >= c; two pointers over (b, c).
    for (std::ptrdiff_t ia = m - 1; ia >= 0; --ia) {
        if (3 * v[ia] < n) break;
        const Int rem = n - v[ia];
        std::ptrdiff_t ib = ia, ic = 0;
        while (ib >= ic) {
            const Int s = v[ib] + v[ic];
            if (s > rem) {
                --ib;
            } else if (s < rem) {
                ++ic;
            } else {
                if (!emit(tt.x[ia], tt.x[ib], tt.x[ic])) return;
                --ib;
                ++ic;
            }
        }
    }
}

bool ranks_desc(const Ranks& x, const Ranks& y) { return x > y; }

}  // namespace

LatticeRep LatticeRep::rt(Int t) {
    if (t < 3) throw InvalidArgument("Rt(t) needs t >= 3, got " + std::to_string(t));
    return LatticeRep(Id::Rt, t, 3, t - 2, t - 1);
}

std::string LatticeRep::name() const {
    switch (id_) {
        case Id::Rt: return "Rt(" + std::to_string(t_) + ")";
        case Id::ROcta: return "ROcta";
        case Id::RCube: return "RCube";
        case Id::RSquareAll: return "RSquareAll";
    }
    return "?";
}

Int vertex_value(const LatticeRep& rep, Int i, Int j) {
    return (Exact(rep.base()) + Exact(rep.coef_i()) * i + Exact(rep.coef_j()) * j).value();
}

std::vector<std::pair<Int, Int>> representable_pairs(const LatticeRep& rep, Int n) {
    std::vector<std::pair<Int, Int>> out;
    for (Int j = 0; rep.base() + rep.coef_j() * j <= n; ++j) {
        const Int rem = n - rep.base() - rep.coef_j() * j;
        if (rem % rep.coef_i() == 0) out.emplace_back(rem / rep.coef_i(), j);
    }
    return out;
}

Int term_of(const LatticeRep& rep, Int x) {
    switch (rep.id()) {
        case Id::Rt: return fg::polygonal(rep.t(), x + 2);
        case Id::RSquareAll: return x + 1 <= 0 ? 0 : (Exact(x + 1) * (x + 1)).value();
        case Id::ROcta: return fg::octahedral(x + 1);
        case Id::RCube: return fg::cube(x + 1);
    }
    return 0;
}

Int rank_of_component(const LatticeRep& rep, Int x) { return rep.id() == Id::Rt ? x + 2 : x + 1; }

bool check_witness(const LatticeRep& rep, const Witness& w) {
    const Int lo = min_component(rep);
    if (w.i < 0 || w.j < 0 || w.k0 < 0 || w.alpha < lo || w.beta < lo || w.gamma < lo) return false;
    const Int a = w.alpha, b = w.beta, c = w.gamma;
    bool linear = false;
    switch (rep.id()) {
        case Id::Rt:
            linear = w.i - (rep.t() - 1) * w.k0 == fg::triangular(a) + fg::triangular(b) + fg::triangular(c) &&
                     w.j + (rep.t() - 2) * w.k0 - 3 == a + b + c;
            break;
        case Id::RSquareAll:
            linear = w.i - w.k0 == fg::triangular(a) + fg::triangular(b) + fg::triangular(c) &&
                     w.j + 2 * w.k0 - 3 == a + b + c;
            break;
        case Id::ROcta:
            linear = w.i - 5 * w.k0 ==
                         fg::tetrahedral(a) + fg::tetrahedral(b) + fg::tetrahedral(c) - (a + b + c) &&
                     w.j + 4 * w.k0 == a + b + c;
            break;
        case Id::RCube:
            linear = w.i - 7 * w.k0 ==
                         fg::tetrahedral(a) + fg::tetrahedral(b) + 2 * fg::tetrahedral(c) - (a + b + 2 * c) &&
                     w.j + 6 * w.k0 == a + b + 2 * c;
            break;
    }
    return linear && value_sum(rep, w) == vertex_value(rep, w.i, w.j);
}

std::vector<Decomposition> solve(const LatticeRep& rep, Int n, const SolveOptions& opts) {
    std::vector<Decomposition> out;
    for_each_triple(rep, n, [&](Int a, Int b, Int c) {
        out.push_back(make_decomposition(rep, n, a, b, c, opts));
        return true;
    });
    std::stable_sort(out.begin(), out.end(),
                     [](const Decomposition& x, const Decomposition& y) { return ranks_desc(x.ranks, y.ranks); });
    return out;
}

std::vector<Decomposition> solve_three_polygonal(Int t, Int n, const SolveOptions& opts) {
    return solve(LatticeRep::rt(t), n, opts);
}

std::vector<Decomposition> solve_three_squares_all(Int n, const SolveOptions& opts) {
    if (n < 0) throw InvalidArgument("n must be >= 0");
    return solve(LatticeRep::square_all(), n, opts);
}

std::vector<Decomposition> solve_three_octahedral(Int n, const SolveOptions& opts) {
    if (n < 0) throw InvalidArgument("n must be >= 0");
    return solve(LatticeRep::octa(), n, opts);
}

std::vector<Decomposition> solve_four_cubes_two_equal(Int n, const SolveOptions& opts) {
    if (n < 4) throw InvalidArgument("four cubes need n >= 4");
    return solve(LatticeRep::cube(), n, opts);
}

std::vector<Decomposition> positive_only(std::vector<Decomposition> ds) {
    std::erase_if(ds, [](const Decomposition& d) {
        return std::any_of(d.ranks.begin(), d.ranks.end(), [](Int r) { return r < 1; });
    });
    return ds;
}

bool decomposable(const LatticeRep& rep, Int n) {
    bool found = false;
    for_each_triple(rep, n, [&](Int, Int, Int) {
        found = true;
        return false;
    });
    return found;
}

std::vector<std::vector<Ranks>> brute_oracle_upto(const LatticeRep& rep, Int n_max) {
    std::vector<std::vector<Ranks>> out(static_cast<std::size_t>(std::max<Int>(n_max, -1) + 1));
    if (n_max < 0) return out;

    // Figurate values straight from the generators, ranks from lo upward.
    const Int lo = (rep.id() == Id::Rt || rep.id() == Id::RCube) ? 1 : 0;
    auto f = [&](Int k) -> Int {
        switch (rep.id()) {
            case Id::Rt: return fg::polygonal(rep.t(), k);
            case Id::RSquareAll: return k * k;
            case Id::ROcta: return fg::octahedral(k);
            case Id::RCube: return fg::cube(k);
        }
        return 0;
    };
    std::vector<Int> val;
    for (Int k = lo; f(k) <= n_max; ++k) val.push_back(f(k));
    const auto m = static_cast<Int>(val.size());
    auto bucket = [&](Int n) -> std::vector<Ranks>& { return out[static_cast<std::size_t>(n)]; };

    if (rep.id() == Id::RCube) {
        for (Int a = 0; a < m; ++a)
            for (Int b = 0; b <= a && val[a] + val[b] <= n_max; ++b)
                for (Int c = 0; c < m && val[a] + val[b] + 2 * val[c] <= n_max; ++c)
                    bucket(val[a] + val[b] + 2 * val[c]).push_back({a + lo, b + lo, c + lo});
    } else {
        for (Int a = 0; a < m; ++a)
            for (Int b = 0; b <= a && val[a] + val[b] <= n_max; ++b)
                for (Int c = 0; c <= b && val[a] + val[b] + val[c] <= n_max; ++c)
                    bucket(val[a] + val[b] + val[c]).push_back({a + lo, b + lo, c + lo});
    }
    for (auto& v : out) std::sort(v.begin(), v.end(), ranks_desc);
    return out;
}

std::vector<Ranks> brute_oracle(const LatticeRep& rep, Int n) {
    if (n < 0) throw InvalidArgument("n must be >= 0");
    return std::move(brute_oracle_upto(rep, n)[static_cast<std::size_t>(n)]);
}

LbpVertex lbp_value(const LatticeRep& rep, Int i) {
    if (i < 0) throw InvalidArgument("left boundary index must be >= 0");
    LbpVertex v{};
    switch (rep.id()) {
        case Id::Rt:
            v = {fg::triangular(i - 1), i, (Exact(2) + fg::polygonal(rep.t(), i + 1)).value()};
            break;
        case Id::ROcta:
        case Id::RCube: {
            const Int s = i + 1;
            const Int tail = rep.id() == Id::ROcta ? fg::octahedral(i + 2) + 2 : fg::cube(i + 2) + 3;
            v = {fg::tetrahedral(s) - s, s, tail};
            break;
        }
        case Id::RSquareAll: throw InvalidArgument("RSquareAll has no left boundary path");
    }
    if (vertex_value(rep, v.i, v.j) != v.value) throw std::logic_error("left boundary value mismatch");
    return v;
}

std::vector<LbpVertex> left_boundary_path(const LatticeRep& rep, Int count) {
    std::vector<LbpVertex> out;
    if (count <= 0) return out;
    if (rep.id() == Id::ROcta || rep.id() == Id::RCube) out.push_back({0, 0, rep.base()});
    for (Int i = 0; static_cast<Int>(out.size()) < count; ++i) out.push_back(lbp_value(rep, i));
    return out;
}

std::pair<Int, Int> lbp_location_triangular_form(Int i) { return {fg::triangular(2 * i - 1) + 1, i + 1}; }

std::pair<bool, bool> cross_equivalence(Int i, Int j, Int t) {
    const auto r3 = LatticeRep::rt(3), rt = LatticeRep::rt(t);
    return {decomposable(r3, vertex_value(r3, i, j)), decomposable(rt, vertex_value(rt, i, j))};
}

std::pair<bool, bool> cross_equivalence_octa_cube(Int i, Int j) {
    const auto ro = LatticeRep::octa(), rc = LatticeRep::cube();
    return {decomposable(ro, vertex_value(ro, i, j)), decomposable(rc, vertex_value(rc, i, j))};
}

}  // namespace figura::decompose
