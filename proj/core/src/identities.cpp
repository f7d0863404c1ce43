#include "figura/identities.hpp"

#include <algorithm>

#include "figura/figurate.hpp"

namespace figura::identities {

namespace fg = figura::figurate;

namespace {

void require_positive(Int j, Int i) {
    if (i < 1 || j < 1) throw InvalidArgument("matrix indices must be >= 1");
}

Exact tri(Int k) { return fg::triangular(k); }
Exact tet(Int k) { return fg::tetrahedral(k); }
Exact cub(Int k) { return fg::cube(k); }
Exact sq(Exact x) { return x * x; }
Exact cb(Exact x) { return x * x * x; }

IdentityReport report(Family f, std::vector<Int> idx, Exact lhs, Exact rhs) {
    return IdentityReport{f, std::move(idx), lhs.value(), rhs.value(), lhs == rhs};
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::R: return "R";
        case Family::S: return "S";
        case Family::T: return "T";
        case Family::MN: return "MN";
        case Family::Cor5: return "COR5";
        case Family::Cor6: return "COR6";
    }
    return "?";
}

Int r_entry(Int j, Int i) {
    require_positive(j, i);
    return (Exact(97) + Exact(57) * (j - 1) + Exact(15) * tri(j - 2) + Exact(9) * tri(i - 2) +
            Exact(21) * (i - 1))
        .value();
}

Int s_entry(Int j, Int i) {
    require_positive(j, i);
    return (Exact(130) + Exact(75) * (j - 1) + Exact(20) * tri(j - 2) + Exact(16) * tri(i - 2) +
            Exact(36) * (i - 1))
        .value();
}

Int t_entry(Int j, Int i) {
    require_positive(j, i);
    return (Exact(165) + Exact(93) * (j - 1) + Exact(25) * tri(j - 2) + Exact(25) * tri(i - 2) +
            Exact(55) * (i - 1))
        .value();
}

Int m_entry(Int j, Int i) {
    require_positive(j, i);
    const Exact jj(j), ii(i);
    return (Exact(508) + (jj + 1) * 891 + Exact(690) * tri(j) +
            (Exact(507) + jj * 306 + Exact(72) * tri(j - 1)) * (ii + 1) +
            (Exact(144) + jj * 36) * tri(i) + Exact(18) * tet(i - 1) + Exact(198) * tet(j - 1))
        .value();
}

Int n_entry(Int j, Int i) {
    require_positive(j, i);
    const Exact jj(j), ii(i);
    return (Exact(4068) + Exact(4193) * (jj - 1) + Exact(1167) * (jj - 2) * (jj - 1) +
            Exact(89) * (jj - 3) * (jj - 2) * (jj - 1) +
            (Exact(397) + Exact(150) * (jj - 1) + Exact(12) * (jj - 2) * (jj - 1)) * (ii - 1) +
            Exact(6) * (jj + 5) * (ii - 2) * (ii - 1) + (ii - 3) * (ii - 2) * (ii - 1))
        .value();
}

std::array<IdentityReport, 3> verify_thm3(Int j, Int i) {
    require_positive(j, i);
    const Exact jj(j), ii(i);
    return {
        report(Family::R, {j, i}, Exact(24) * (Exact(r_entry(j, i)) - Exact(2) * fg::polygonal(5, i + 1)) + 3,
               sq(ii * 6 + 5) + sq(jj * 6 + 11) + sq(jj * 12 + 29)),
        report(Family::S, {j, i}, Exact(8) * (Exact(s_entry(j, i)) - Exact(3) * fg::polygonal(6, i + 1)) + 3,
               sq(ii * 4 + 3) + sq(jj * 4 + 7) + sq(jj * 8 + 19)),
        report(Family::T, {j, i},
               Exact(40) * (Exact(t_entry(j, i)) - Exact(4) * fg::polygonal(7, i + 1)) + 27,
               sq(ii * 10 + 7) + sq(jj * 10 + 17) + sq(jj * 20 + 47)),
    };
}

IdentityReport verify_thm4(Int j, Int i) {
    require_positive(j, i);
    const Exact x = -(Exact(4) * j + 8), y = -(Exact(2) * j + 4), z = Exact(2) * j + i + 8;
    return report(Family::MN, {j, i}, cb(x) + cb(y) + Exact(2) * cb(z),
                  Exact(m_entry(j, i)) - n_entry(j, i));
}

IdentityReport verify_cor5(Int j, Int i) {
    require_positive(j, i);
    const Exact x = Exact(j) + 3, y = Exact(2) * j + 7, z = Exact(2) * j + i + 8;
    return report(Family::Cor5, {j, i}, cb(x) + cb(y) + Exact(2) * cb(z),
                  Exact(m_entry(j, i)) - cub(2 * j + i + 8));
}

std::vector<std::vector<Int>> matrix_window(MatrixId which, Int rows, Int cols) {
    if (rows < 0 || cols < 0) throw InvalidArgument("matrix window dimensions must be >= 0");
    std::vector<std::vector<Int>> out;
    out.reserve(static_cast<std::size_t>(rows));
    for (Int j = 1; j <= rows; ++j) {
        std::vector<Int> row;
        row.reserve(static_cast<std::size_t>(cols));
        for (Int i = 1; i <= cols; ++i)
            row.push_back(which == MatrixId::M ? m_entry(j, i) : n_entry(j, i));
        out.push_back(std::move(row));
    }
    return out;
}

void check_cor6_params(int line, const Cor6Params& p) {
    if (line < 1 || line > 5) throw InvalidArgument("mod-9 line must be in 1..5");
    if (p.j < 1 || p.i < 1) throw InvalidArgument("mod-9 parameters must be >= 1");
    if (mod_floor(p.j, 3) != 2) throw InvalidArgument("j must be 2 mod 3");
    const Int want_i = line == 4 ? 1 : 2;
    if (mod_floor(p.i, 3) != want_i)
        throw InvalidArgument(line == 4 ? "h must be 1 mod 3" : "i must be 2 mod 3");
    if (line >= 4 && p.l < 1) throw InvalidArgument("l must be >= 1");
}

Int cor6_value(int line, const Cor6Params& p) {
    check_cor6_params(line, p);
    const Int j = p.j, i = p.i;
    const Exact m = m_entry(j, i);
    switch (line) {
        case 1: return (m - cub(2 * j + i + 8)).value();
        case 2: return (Exact(n_entry(j, i)) - cub(4 * j + 8)).value();
        case 3: return (m - Exact(2) * cub(2 * j + i + 8) + cub(2 * j + 4)).value();
        case 4: {
            const Int k = 6 + 45 * p.l;
            return (m - Exact(3) * cub(2 * j + i + 8) + Exact(2) * cub(2 * j + i + k)).value();
        }
        default: {
            const Int mm = 2 + 9 * p.l;
            return (m - Exact(3) * cub(2 * j + i + 8) + Exact(2) * cub(2 * j + i + mm)).value();
        }
    }
}

IdentityReport cor6_residues(int line, const Cor6Params& p) {
    const Int v = cor6_value(line, p);
    std::vector<Int> idx{p.j, p.i};
    if (line >= 4) idx.push_back(p.l);
    return IdentityReport{Family::Cor6, std::move(idx), v, 5, mod_floor(v, 9) == 5};
}

std::vector<Cor6Params> cor6_tuples(int line, std::size_t count) {
    if (line < 1 || line > 5) throw InvalidArgument("mod-9 line must be in 1..5");
    std::vector<Cor6Params> out;
    const Int i_res = line == 4 ? 1 : 2;
    auto ok = [&](Int j, Int i) { return mod_floor(j, 3) == 2 && mod_floor(i, 3) == i_res; };
    for (Int total = 2; out.size() < count; ++total) {
        if (line <= 3) {
            for (Int j = 1; j < total && out.size() < count; ++j) {
                const Int i = total - j;
                if (ok(j, i)) out.push_back({j, i, 0});
            }
        } else {
            for (Int j = 1; j < total && out.size() < count; ++j)
                for (Int i = 1; j + i < total && out.size() < count; ++i) {
                    const Int l = total - j - i;
                    if (ok(j, i)) out.push_back({j, i, l});
                }
        }
    }
    return out;
}

Int icbrt_ceil(Int n) {
    if (n <= 0) return 0;
    Int r = 0;
    while (Exact(r) * r * r < n) ++r;
    return r;
}

std::optional<std::array<Int, 4>> four_cube_witness(Int n, Int rank_bound) {
    if (rank_bound < 1) throw InvalidArgument("rank_bound must be >= 1");
    if (n < 4) return std::nullopt;
    // Cubes up to the bound (and not beyond n).
    std::vector<Int> cubes{0};
    for (Int k = 1; k <= rank_bound; ++k) {
        const Int c = fg::cube(k);
        if (c > n) break;
        cubes.push_back(c);
    }
    const Int top = static_cast<Int>(cubes.size()) - 1;
    for (Int a = 1; a <= top && 4 * cubes[a] <= n; ++a)
        for (Int b = a; b <= top && cubes[a] + 3 * cubes[b] <= n; ++b)
            for (Int c = b; c <= top && cubes[a] + cubes[b] + 2 * cubes[c] <= n; ++c) {
                const Int rest = n - cubes[a] - cubes[b] - cubes[c];
                const auto it = std::lower_bound(cubes.begin() + c, cubes.end(), rest);
                if (it != cubes.end() && *it == rest)
                    return std::array<Int, 4>{a, b, c, static_cast<Int>(it - cubes.begin())};
            }
    return std::nullopt;
}

}  // namespace figura::identities
