#include "figura/figurate.hpp"

#include <limits>

namespace figura::figurate {

FigurateKind FigurateKind::polygonal(Int t) {
    if (t < 3) throw InvalidKind("polygonal order must be >= 3, got " + std::to_string(t));
    return FigurateKind(Family::Polygonal, t);
}

std::string FigurateKind::name() const {
    switch (family_) {
        case Family::Polygonal: return "polygonal(" + std::to_string(t_) + ")";
        case Family::Octahedral: return "octahedral";
        case Family::Tetrahedral: return "tetrahedral";
        case Family::Cube: return "cube";
    }
    return "?";
}

Int polygonal(Int t, Int k) {
    if (t < 3) throw InvalidKind("polygonal order must be >= 3, got " + std::to_string(t));
    if (k <= 0) return 0;
    const Exact kk(k);
    return (((Exact(t) - 2) * kk * kk - (Exact(t) - 4) * kk) / 2).value();
}

Int triangular(Int k) { return polygonal(3, k); }

Int octahedral(Int n) {
    if (n <= 0) return 0;
    const Exact nn(n);
    return (nn * (Exact(2) * nn * nn + 1) / 3).value();
}

Int tetrahedral(Int n) {
    if (n <= 0) return 0;
    const Exact nn(n);
    // n(n+1) is even, and n(n+1)(n+2) is a multiple of 6; divide early to
    // widen the usable range.
    return (nn * (nn + 1) / 2 * (nn + 2) / 3).value();
}

Int cube(Int k) {
    if (k <= 0) return 0;
    const Exact kk(k);
    return (kk * kk * kk).value();
}

Int value(const FigurateKind& kind, Int rank) {
    switch (kind.family()) {
        case FigurateKind::Family::Polygonal: return polygonal(kind.order(), rank);
        case FigurateKind::Family::Octahedral: return octahedral(rank);
        case FigurateKind::Family::Tetrahedral: return tetrahedral(rank);
        case FigurateKind::Family::Cube: return cube(rank);
    }
    return 0;
}

FigurateValue make_value(const FigurateKind& kind, Int rank) {
    return FigurateValue{kind, rank, value(kind, rank)};
}

std::optional<Int> rank_of(const FigurateKind& kind, Int v) {
    if (v < 0) throw InvalidArgument("rank_of: value must be >= 0");
    if (v == 0) return std::nullopt;

    // Every family is strictly increasing on k >= 1 and value(k) >= k, so
    // the rank lies in [1, v]. Probe values that overflow count as "too big".
    auto at_least = [&](Int k) {
        try {
            return value(kind, k) >= v;
        } catch (const OverflowError&) {
            return true;
        }
    };
    Int lo = 1, hi = v;
    while (lo < hi) {
        const Int mid = lo + (hi - lo) / 2;
        if (at_least(mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    if (value(kind, lo) == v) return lo;
    return std::nullopt;
}

Int isqrt(Int v) {
    if (v < 0) throw InvalidArgument("isqrt of a negative number");
    if (v < 2) return v;
    // Floating estimate, then exact correction; r*r <= v is tested as r <= v/r.
    auto r = static_cast<Int>(__builtin_sqrt(static_cast<double>(v)));
    while (r > v / r) --r;
    while (r + 1 <= v / (r + 1)) ++r;
    return r;
}

bool is_square(Int v) {
    if (v < 0) return false;
    const Int r = isqrt(v);
    return r * r == v;
}

bool is_triangular(Int v) {
    if (v < 0) return false;
    // v = k(k+1)/2  <=>  8v+1 is a perfect square
    const Exact d = Exact(8) * v + 1;
    return is_square(d.value());
}

bool is_sum_two_triangular(Int n) {
    if (n < 0) return false;
    const Int target = (Exact(2) * (Exact(4) * n + 1)).value();
    for (Int a = 1; a * a <= target; a += 2) {
        const Int rest = target - a * a;
        if (rest < 1) break;
        if (is_square(rest) && isqrt(rest) % 2 == 1) return true;
    }
    return false;
}

Int count_two_triangular(Int n) {
    if (n < 0) throw InvalidArgument("count_two_triangular: n must be >= 0");
    const Int m = (Exact(4) * n + 1).value();
    Int d1 = 0, d3 = 0;
    auto tally = [&](Int d) {
        if (d % 4 == 1)
            ++d1;
        else if (d % 4 == 3)
            ++d3;
    };
    for (Int d = 1; d <= m / d; ++d) {
        if (m % d != 0) continue;
        tally(d);
        if (d != m / d) tally(m / d);
    }
    return d1 - d3;
}

Int euler_triangular_scale(Int m, Int n) {
    if (m < 1 || m % 2 == 0)
        throw InvalidArgument("euler_triangular_scale: m must be odd and >= 1");
    if (!is_triangular(n)) throw InvalidArgument("euler_triangular_scale: n is not triangular");
    const Exact m2 = Exact(m) * m;
    const Int r = (m2 * n + (m2 - 1) / 8).value();
    if (!is_triangular(r)) throw Error("euler_triangular_scale: result is not triangular");
    return r;
}

bool is_forbidden_three_squares(Int n) {
    if (n <= 0) return false;
    while (n % 4 == 0) n /= 4;
    return n % 8 == 7;
}

std::pair<Int, Int> square_shift_identity(Int t, Int k) {
    const Exact kk(k);
    switch (t) {
        case 5: return {(Exact(24) * polygonal(5, k) + 1).value(), ((kk * 6 - 1) * (kk * 6 - 1)).value()};
        case 6: return {(Exact(8) * polygonal(6, k) + 1).value(), ((kk * 4 - 1) * (kk * 4 - 1)).value()};
        case 7:
            return {(Exact(40) * polygonal(7, k) + 9).value(), ((kk * 10 - 3) * (kk * 10 - 3)).value()};
        default: throw InvalidArgument("square_shift_identity: t must be 5, 6 or 7");
    }
}

}  // namespace figura::figurate
