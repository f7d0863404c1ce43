// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact integers, so
// every tolerance below is zero.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "figura/cli/poset_file.hpp"
#include "figura/decompose.hpp"
#include "figura/figurate.hpp"
#include "figura/identities.hpp"
#include "figura/lattice.hpp"
#include "figura/poset.hpp"
#include "figura/representation.hpp"
#include "figura/typed_partition.hpp"
#include "oracles/oracles.hpp"

using figura::Int;
namespace fg = figura::figurate;
namespace id = figura::identities;
namespace lt = figura::lattice;
namespace tp = figura::typed;
namespace dc = figura::decompose;
namespace ps = figura::poset;

namespace {

constexpr Int kTolerance = 0;  // exact equality everywhere

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the first failure message; later ones only flip the flag.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (out_.pass) out_.detail = what;
        out_.pass = false;
        ++failures_;
    }
    void note(const std::string& s) {
        if (out_.pass) out_.detail = s;
    }
    Outcome done() {
        if (!out_.pass && failures_ > 1) out_.detail += " (+" + std::to_string(failures_ - 1) + " more)";
        return out_;
    }

private:
    Outcome out_;
    Int failures_ = 0;
};

bool exact(Int a, Int b) { return (a > b ? a - b : b - a) <= kTolerance; }

std::string str(Int v) { return std::to_string(v); }

std::string fixture(const std::string& name) { return std::string(FIGURA_FIXTURE_DIR) + "/" + name; }

Outcome golden_table() {
    Check c;
    struct E {
        Int i, j, n;
    };
    const std::vector<E> table = {
        {2, 2, 3},   {3, 3, 8},    {4, 4, 22},   {5, 5, 64},    {3, 2, 7},   {4, 3, 21},   {5, 4, 63},   {6, 5, 195},
        {4, 2, 12},  {5, 3, 40},   {6, 4, 130},  {7, 5, 427},   {5, 2, 18},  {6, 3, 66},   {7, 4, 231},  {8, 5, 803},
        {6, 2, 25},  {7, 3, 100},  {8, 4, 375},  {9, 5, 1376},  {7, 2, 33},  {8, 3, 143},  {9, 4, 572},  {10, 5, 2210},
        {8, 2, 42},  {9, 3, 196},  {10, 4, 833}, {11, 5, 3381}, {9, 2, 52},  {10, 3, 260}, {11, 4, 1170},
    };
    for (const auto& e : table) {
        const std::string at = "(" + str(e.i) + "," + str(e.j) + ")";
        c.expect(exact(lt::path_count(e.i, e.j), e.n), "path_count" + at);
        c.expect(exact(lt::path_count_closed(e.i, e.j), e.n), "path_count_closed" + at);
        c.expect(exact(static_cast<Int>(lt::enumerate_paths(e.i, e.j).size()), e.n), "enumerate_paths" + at);
        c.expect(exact(oracle::paths_by_search(e.i, e.j), e.n), "search oracle" + at);
    }
    c.note(str(static_cast<Int>(table.size())) + " table values, 3 methods each");
    return c.done();
}

Outcome partitions_of_39() {
    Check c;
    const std::set<std::string> expected = {
        "39",
        "13+2^2+3^2+2^2+3^2",
        "26+2^2+3^2",
        "21+1^2+2^2+2^2+3^2",
        "8+2^2+3^2+1^2+2^2+2^2+3^2",
        "8+1^2+2^2+2^2+3^2+2^2+3^2",
        "3+1^2+2^2+1^2+2^2+2^2+3^2+2^2+3^2",
        "3+1^2+2^2+2^2+3^2+1^2+2^2+2^2+3^2",
    };
    const auto parts = tp::enumerate_typed(tp::TypeTag::O, 3, 3, 1);
    std::set<std::string> got;
    for (const auto& p : parts) got.insert(tp::format_typed(p));
    c.expect(parts.size() == expected.size(), "expected 8 partitions, got " + str(static_cast<Int>(parts.size())));
    c.expect(got == expected, "partition set differs");
    c.note("8 ordered part sequences");
    return c.done();
}

Outcome three_square_lines() {
    Check c;
    Int checks = 0;
    for (Int j = 1; j <= 200; ++j)
        for (Int i = 1; i <= 200; ++i)
            for (const auto& r : id::verify_thm3(j, i)) {
                ++checks;
                c.expect(r.holds && exact(r.lhs, r.rhs),
                         id::to_string(r.family) + " fails at (" + str(j) + "," + str(i) + ")");
            }
    c.note(str(checks) + " equalities");
    return c.done();
}

Outcome cube_lines() {
    Check c;
    const std::vector<std::vector<Int>> m = {
        {4786, 5977, 7384}, {8047, 9688, 11581}, {12538, 14701, 17152}, {18457, 21214, 24295}};
    const std::vector<std::vector<Int>> n = {
        {4068, 4465, 4934}, {8261, 8808, 9439}, {14788, 15509, 16326}, {24183, 25102, 26129}};
    for (Int j = 1; j <= 4; ++j)
        for (Int i = 1; i <= 3; ++i) {
            c.expect(exact(id::m_entry(j, i), m[j - 1][i - 1]), "M(" + str(j) + "," + str(i) + ")");
            c.expect(exact(id::n_entry(j, i), n[j - 1][i - 1]), "N(" + str(j) + "," + str(i) + ")");
        }
    for (Int j = 1; j <= 100; ++j)
        for (Int i = 1; i <= 100; ++i) {
            c.expect(id::verify_thm4(j, i).holds, "cube difference at (" + str(j) + "," + str(i) + ")");
            c.expect(id::verify_cor5(j, i).holds, "cube sum at (" + str(j) + "," + str(i) + ")");
        }
    c.note("24 entries, 20000 identities");
    return c.done();
}

Outcome mod_nine() {
    Check c;
    Int certified = 0;
    for (int line = 1; line <= 5; ++line) {
        const auto tuples = id::cor6_tuples(line, 20);
        c.expect(tuples.size() == 20, "line " + std::to_string(line) + " has fewer than 20 tuples");
        for (const auto& p : tuples) {
            const auto rep = id::cor6_residues(line, p);
            c.expect(rep.holds && figura::mod_floor(rep.lhs, 9) == 5,
                     "residue on line " + std::to_string(line) + " value " + str(rep.lhs));
            const Int v = rep.lhs;
            if (v < 1 || v > 1000000) continue;
            const auto w = id::four_cube_witness(v, 100);
            c.expect(w.has_value(), "no four-cube witness for " + str(v));
            if (w) {
                Int s = 0;
                for (Int x : *w) s += x * x * x;
                c.expect(s == v && (*w)[0] >= 1, "bad four-cube witness for " + str(v));
                ++certified;
            }
        }
    }
    c.note("100 residues, " + str(certified) + " values <= 10^6 certified");
    return c.done();
}

bool contains_witness(const std::vector<dc::Decomposition>& ds, const dc::Ranks& r, Int i, Int j, Int k0) {
    for (const auto& d : ds)
        if (d.ranks == r)
            for (const auto& w : d.witnesses)
                if (w.i == i && w.j == j && w.k0 == k0) return true;
    return false;
}

Outcome worked_decompositions() {
    Check c;
    c.expect(contains_witness(dc::solve_three_polygonal(4, 75), {5, 5, 5}, 24, 8, 2), "75 = 3 squares");
    c.expect(contains_witness(dc::solve_three_octahedral(51), {4, 2, 1}, 7, 4, 0), "51 = 3 octahedral");
    c.expect(contains_witness(dc::solve_four_cubes_two_equal(130), {4, 4, 1}, 14, 6, 0), "130 = 4 cubes");
    c.note("3 witnesses found");
    return c.done();
}

Outcome oracle_equivalence() {
    Check c;
    const dc::SolveOptions opts{.all_shifts = false};
    auto sweep = [&](const dc::LatticeRep& rep, Int n_max, Int n_min) {
        const auto table = dc::brute_oracle_upto(rep, n_max);
        for (Int n = n_min; n <= n_max; ++n) {
            std::vector<dc::Ranks> got;
            for (const auto& d : dc::solve(rep, n, opts)) got.push_back(d.ranks);
            std::set<dc::Ranks> a(got.begin(), got.end());
            const auto& want = table[static_cast<std::size_t>(n)];
            std::set<dc::Ranks> b(want.begin(), want.end());
            c.expect(a == b && got.size() == a.size(), rep.name() + " differs at " + str(n));
        }
    };
    sweep(dc::LatticeRep::square_all(), 20000, 0);
    sweep(dc::LatticeRep::octa(), 5000, 0);
    sweep(dc::LatticeRep::cube(), 5000, 4);
    for (Int t = 3; t <= 7; ++t) sweep(dc::LatticeRep::rt(t), 5000, 0);
    // Spot-check the bulk oracle against the naive triple loop.
    for (Int n = 0; n <= 300; ++n) {
        auto naive = oracle::three_sums([](Int k) { return k * k; }, 0, n);
        std::sort(naive.begin(), naive.end(), std::greater<>());
        c.expect(dc::brute_oracle(dc::LatticeRep::square_all(), n) == naive, "oracle vs naive at " + str(n));
    }
    c.note("8 families swept");
    return c.done();
}

Outcome legendre() {
    Check c;
    for (Int n = 0; n <= 20000; ++n) {
        Int m = n;
        bool forbidden = false;
        if (m > 0) {
            while (m % 4 == 0) m /= 4;
            forbidden = m % 8 == 7;
        }
        c.expect(dc::solve_three_squares_all(n).empty() == forbidden, "n = " + str(n));
        c.expect(fg::is_forbidden_three_squares(n) == forbidden, "criterion at n = " + str(n));
    }
    c.note("n <= 20000");
    return c.done();
}

Outcome count_equality() {
    Check c;
    Int emitted = 0;
    for (auto t : {tp::TypeTag::O, tp::TypeTag::Sigma, tp::TypeTag::Q, tp::TypeTag::Tau, tp::TypeTag::Xi}) {
        const bool diagonal = t == tp::TypeTag::Sigma || t == tp::TypeTag::Q || t == tp::TypeTag::Tau;
        for (Int i = 1; i <= 8; ++i)
            for (Int j = 1; j <= i; ++j) {
                if (diagonal && i != j) continue;
                for (Int k = 1; k <= 3; ++k) {
                    const std::string at = tp::to_string(t) + "(" + str(i) + "," + str(j) + "," + str(k) + ")";
                    const auto parts = tp::enumerate_typed(t, i, j, k);
                    const Int n = tp::expected_total(t, i, j, k);
                    c.expect(exact(static_cast<Int>(parts.size()), lt::path_count(i, j)), "count " + at);
                    c.expect(exact(tp::count_typed(t, i, j, k), lt::path_count(i, j)), "count_typed " + at);
                    for (const auto& p : parts) {
                        Int s = p.base_value + p.offset;
                        for (Int x : p.tail) s += x;
                        c.expect(s == n && p.total == n, "total " + at);
                        c.expect(tp::validate_typed_partition(p, i, j, k), "validation " + at);
                        ++emitted;
                    }
                }
            }
    }
    c.note(str(emitted) + " partitions validated");
    return c.done();
}

Outcome offsets() {
    Check c;
    c.expect(tp::offset_sigma(1, 3) == 14, "offset_sigma(1,3)");
    c.expect(tp::offset_tau(1, 3) == 17, "offset_tau(1,3)");
    for (Int i = 1; i <= 50; ++i)
        for (Int k = 1; k <= 50; ++k) {
            c.expect(tp::penta_sum(i, i, k) + tp::offset_sigma(k, i) == tp::octa_sum(i, i, k),
                     "sigma identity (" + str(i) + "," + str(k) + ")");
            c.expect(tp::octa_sum(i, i, k) + tp::offset_tau(k, i) == tp::cube_sum(i, i, k),
                     "tau identity (" + str(i) + "," + str(k) + ")");
        }
    c.expect(tp::printed_sigma(1, 3) == 14, "printed sigma at the example point");
    c.expect(tp::printed_tau(1, 3) == 17, "printed tau at the example point");
    Int diverging = 0;
    Int first_sigma = 0, first_tau = 0;
    for (auto t : {tp::TypeTag::Sigma, tp::TypeTag::Tau}) {
        for (const auto& r : tp::compare_offsets(t, 3, 10)) {
            c.expect(r.forced == (t == tp::TypeTag::Sigma ? tp::offset_sigma(r.k, r.i) : tp::offset_tau(r.k, r.i)),
                     "comparison report forced value");
            if (r.agree) continue;
            ++diverging;
            Int& first = t == tp::TypeTag::Sigma ? first_sigma : first_tau;
            if (r.k == 1 && (first == 0 || r.i < first)) first = r.i;
        }
    }
    c.expect(diverging > 0, "comparison report shows no divergence");
    c.note("printed forms diverge from i = " + str(first_sigma) + " (sigma), " + str(first_tau) + " (tau) at k = 1; " +
           str(diverging) + " differing points");
    return c.done();
}

Outcome poset_machinery() {
    Check c;
    const auto left = figura::cli::parse_poset_file(fixture("derive_input.poset"));
    const auto right = figura::cli::parse_poset_file(fixture("derive_expected.poset"));
    const auto pair = ps::is_L_suitable(left.poset, "a", "b");
    c.expect(pair.has_value(), "fixture pair not suitable");
    if (pair) c.expect(ps::isomorphic(ps::derive_poset(left.poset, *pair), right.poset), "derived poset shape");

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int nb = 1 + static_cast<int>(rng() % 6);
        const int nc = 1 + static_cast<int>(rng() % 6);
        std::vector<ps::Relation> rel;
        for (int m = 0; m < nb; ++m) {
            rel.push_back({"x" + std::to_string(m), "b"});
            for (int q = m + 1; q < nb; ++q)
                if (rng() % 2) rel.push_back({"x" + std::to_string(m), "x" + std::to_string(q)});
        }
        rel.push_back({"a", "c1"});
        rel.push_back({"b", "c1"});
        for (int m = 1; m < nc; ++m) rel.push_back({"c" + std::to_string(m), "c" + std::to_string(m + 1)});
        const auto p = ps::build_poset({}, rel);
        const auto s = ps::is_L_suitable(p, "a", "b");
        c.expect(s.has_value(), "random instance not suitable");
        if (s) c.expect(ps::derive_poset(p, *s).size() == p.size() + static_cast<std::size_t>(nc), "|P'| != |P| + |C|");
    }

    const auto pc1 = figura::cli::parse_poset_file(fixture("pc1.poset"));
    c.expect(pc1.rep && ps::validate_representation(pc1.poset, *pc1.rep), "pc1 fixture file");
    for (Int n = 1; n <= 8; ++n)
        for (Int v = 1; v <= n; ++v)
            for (Int n0 = 5; n0 <= 9; ++n0) {
                const auto f = ps::build_P_ci(v, n, n0);
                c.expect(ps::validate_representation(f.poset, f.rep), "P_c fixture v=" + str(v) + " n=" + str(n));
                c.expect(ps::is_L_suitable(f.poset, f.a, f.b).has_value(), "P_c pair v=" + str(v));
            }
    for (Int s = 0; s <= 30; ++s) {
        const auto f = ps::build_N_family(s + 1);
        c.expect(ps::validate_representation(f.poset, f.rep), "N fixture " + str(s + 1));
        const Int w = ps::weight(f.rep);
        c.expect(w == lt::path_count(s + 2, 2) && w == 3 + 4 * s + fg::polygonal(3, s - 1),
                 "weight identity at s = " + str(s));
    }
    c.note("fixtures, 50 random instances, 31 weights");
    return c.done();
}

Outcome elementary() {
    Check c;
    for (Int n = 0; n <= 2000; ++n)
        c.expect(fg::count_two_triangular(n) == oracle::ordered_triangular_pairs(n), "pairs at " + str(n));
    for (Int m = 1; m <= 99; m += 2)
        for (Int k = 0; k <= 100; ++k)
            c.expect(oracle::is_triangular(fg::euler_triangular_scale(m, fg::triangular(k))),
                     "scale m=" + str(m) + " k=" + str(k));
    for (Int t = 5; t <= 7; ++t)
        for (Int k = 1; k <= 10000; ++k) {
            const auto [l, r] = fg::square_shift_identity(t, k);
            c.expect(l == r, "square shift t=" + str(t) + " k=" + str(k));
        }
    c.note("pairs n <= 2000, 5050 scalings, 30000 shifts");
    return c.done();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden path-count table", golden_table},
        {"partitions of 39", partitions_of_39},
        {"three-square identity lines, i, j <= 200", three_square_lines},
        {"cube matrices and identities, i, j <= 100", cube_lines},
        {"mod-9 residues and four-cube witnesses", mod_nine},
        {"worked decompositions", worked_decompositions},
        {"solver equals brute-force oracle", oracle_equivalence},
        {"three squares vs 4^k(8m+7), n <= 20000", legendre},
        {"typed partition counts equal path counts", count_equality},
        {"forced offsets and printed forms", offsets},
        {"poset differentiation and representations", poset_machinery},
        {"elementary criteria", elementary},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("AC%-2d %s  %s: %s [%.2fs]\n", index, o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
