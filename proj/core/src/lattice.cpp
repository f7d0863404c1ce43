#include "figura/lattice.hpp"

namespace figura::lattice {

namespace {

void check_region(Int i, Int j) {
    if (j < 1 || j > i)
        throw InvalidArgument("lattice index (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") is outside 1 <= j <= i");
}

}  // namespace

LatticeIndex LatticePath::end() const {
    LatticeIndex e = start;
    for (Step s : steps) (s == Step::IncFirst ? e.i : e.j) += 1;
    return e;
}

PathCountTable::PathCountTable(Int i_max, Int j_max) : i_max_(i_max), j_max_(j_max) {
    if (j_max < 1 || i_max < j_max)
        throw InvalidArgument("weight table needs i_max >= j_max >= 1");
    rows_.resize(static_cast<std::size_t>(i_max));
    for (Int i = 1; i <= i_max; ++i) {
        auto& row = rows_[i - 1];
        const Int top = std::min(i, j_max);
        row.resize(static_cast<std::size_t>(top));
        row[0] = i;
        for (Int j = 2; j <= top; ++j) {
            Exact v = Exact(1) + row[j - 2];
            if (i - 1 >= j) v += rows_[i - 2][j - 1];
            row[j - 1] = v.value();
        }
    }
}

bool PathCountTable::contains(Int i, Int j) const noexcept {
    return i >= 1 && i <= i_max_ && j >= 1 && j <= std::min(i, j_max_);
}

Int PathCountTable::at(Int i, Int j) const {
    if (!contains(i, j)) throw InvalidArgument("index outside the path-count table");
    return rows_[i - 1][j - 1];
}

PathCountTable weight_table(Int i_max, Int j_max) { return PathCountTable(i_max, j_max); }

Int path_count(Int i, Int j) {
    check_region(i, j);
    return PathCountTable(i, j).at(i, j);
}

Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Exact r = 1;
    for (Int m = 1; m <= k; ++m) r = r * (n - k + m) / m;
    return r.value();
}

Int delta(Int j, Int t) {
    if (j < 2 || t < 0) throw InvalidArgument("delta needs j >= 2 and t >= 0");
    const PathCountTable table(j + t, j);
    Exact d = 0;
    for (Int m = 0; m <= t; ++m) {
        const Exact term = Exact(binomial(t, m)) * table.at(j + m, j);
        d += ((t + m) % 2 == 0) ? term : -term;
    }
    return d.value();
}

Int path_count_closed(Int i, Int j) {
    check_region(i, j);
    if (j == 1) return i;
    const Int s = i - j + 1;
    Exact sum = 0;
    for (Int h = 0; h <= j; ++h) sum += Exact(binomial(s - 1, h)) * delta(j, h);
    return sum.value();
}

void for_each_path(Int i, Int j, const std::function<void(const LatticePath&)>& f) {
    check_region(i, j);
    LatticePath path;
    // Depth-first over steps from the current vertex, IncFirst explored first.
    std::function<void(Int, Int)> walk = [&](Int p, Int q) {
        if (p == i && q == j) {
            f(path);
            return;
        }
        if (p < i) {
            path.steps.push_back(Step::IncFirst);
            walk(p + 1, q);
            path.steps.pop_back();
        }
        if (q < j && q + 1 <= p) {
            path.steps.push_back(Step::IncSecond);
            walk(p, q + 1);
            path.steps.pop_back();
        }
    };
    for (Int r = 1; r <= i; ++r)
        for (Int s = 1; s <= std::min(r, j); ++s) {
            path.start = {r, s};
            walk(r, s);
        }
}

std::vector<LatticePath> enumerate_paths(Int i, Int j) {
    std::vector<LatticePath> out;
    for_each_path(i, j, [&](const LatticePath& p) { out.push_back(p); });
    return out;
}

}  // namespace figura::lattice
