#include "figura/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "figura/cli/poset_file.hpp"
#include "figura/cli/table.hpp"
#include "figura/decompose.hpp"
#include "figura/figurate.hpp"
#include "figura/identities.hpp"
#include "figura/lattice.hpp"
#include "figura/typed_partition.hpp"

namespace figura::cli {

namespace {

using ojson = nlohmann::ordered_json;

// Thrown for bad option values discovered after parsing.
struct UsageError : Error {
    using Error::Error;
};

struct Outcome {
    int code = kExitOk;
    std::string out;
};

std::string join(const std::vector<Int>& v, const char* sep) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
    return s;
}

std::string json_text(const ojson& j) { return j.dump(2) + "\n"; }

// ---- gen ----------------------------------------------------------------

struct GenOpts {
    std::string kind;
    Int t = 3;
    Int from = 1;
    Int to = 10;
    std::string matrix;
    Int rows = 4;
    Int cols = 3;
};

Outcome do_gen(const GenOpts& o, Format fmt) {
    Table tab;
    if (!o.matrix.empty()) {
        if (o.matrix != "M" && o.matrix != "N") throw UsageError("--matrix must be M or N");
        if (o.rows < 1 || o.cols < 1 || o.rows > 1000 || o.cols > 1000)
            throw UsageError("--rows and --cols must be in 1..1000");
        const auto w = identities::matrix_window(o.matrix == "M" ? identities::MatrixId::M : identities::MatrixId::N,
                                                 o.rows, o.cols);
        tab.header.push_back("j");
        for (Int i = 1; i <= o.cols; ++i) tab.header.push_back("i=" + std::to_string(i));
        for (Int j = 1; j <= o.rows; ++j) {
            std::vector<Cell> row{j};
            for (Int v : w[j - 1]) row.emplace_back(v);
            tab.rows.push_back(std::move(row));
        }
        return {kExitOk, emit_table(tab, fmt)};
    }
    if (o.kind.empty()) throw UsageError("gen needs --kind or --matrix");
    if (o.to - o.from > 100000) throw UsageError("gen range is limited to 100000 ranks");
    figurate::FigurateKind kind = figurate::FigurateKind::cube();
    if (o.kind == "polygonal")
        kind = figurate::FigurateKind::polygonal(o.t);
    else if (o.kind == "octahedral")
        kind = figurate::FigurateKind::octahedral();
    else if (o.kind == "tetrahedral")
        kind = figurate::FigurateKind::tetrahedral();
    else if (o.kind != "cube")
        throw UsageError("--kind must be polygonal, octahedral, tetrahedral or cube");
    tab.header = {"rank", "value"};
    for (Int k = o.from; k <= o.to; ++k) tab.rows.push_back({k, figurate::value(kind, k)});
    return {kExitOk, emit_table(tab, fmt)};
}

// ---- decompose ----------------------------------------------------------

struct DecomposeOpts {
    std::string family;
    Int t = 3;
    Int n = 0;
    bool positive = false;
};

Outcome do_decompose(const DecomposeOpts& o, Format fmt) {
    using namespace decompose;
    std::vector<Decomposition> ds;
    LatticeRep rep = LatticeRep::octa();
    if (o.n < 0) throw UsageError("--n must be >= 0");
    if (o.n > 1000000000) throw UsageError("--n is limited to 10^9");
    if (o.family == "octahedral3") {
        ds = solve_three_octahedral(o.n);
        if (o.positive) ds = positive_only(std::move(ds));
    } else if (o.family == "squares3") {
        rep = LatticeRep::square_all();
        ds = solve_three_squares_all(o.n);
        if (o.positive) ds = positive_only(std::move(ds));
    } else if (o.family == "polygonal3") {
        rep = LatticeRep::rt(o.t);
        ds = solve(rep, o.n);
    } else if (o.family == "cubes4") {
        rep = LatticeRep::cube();
        ds = solve_four_cubes_two_equal(o.n);
    } else {
        throw UsageError("--family must be octahedral3, squares3, polygonal3 or cubes4");
    }

    if (fmt == Format::Json) {
        ojson doc = ojson::object();
        doc["target"] = o.n;
        doc["rep"] = rep.name();
        ojson arr = ojson::array();
        for (const auto& d : ds) {
            ojson jd = ojson::object();
            jd["ranks"] = d.ranks;
            jd["terms"] = d.terms;
            ojson ws = ojson::array();
            for (const auto& w : d.witnesses)
                ws.push_back(
                    ojson{{"i", w.i}, {"j", w.j}, {"k0", w.k0}, {"alpha", w.alpha}, {"beta", w.beta}, {"gamma", w.gamma}});
            jd["witnesses"] = std::move(ws);
            if (d.off_lattice) jd["off_lattice"] = true;
            arr.push_back(std::move(jd));
        }
        doc["decompositions"] = std::move(arr);
        return {kExitOk, json_text(doc)};
    }
    if (fmt == Format::Csv) {
        Table tab{{"ranks", "terms", "i", "j", "k0", "alpha", "beta", "gamma"}, {}};
        for (const auto& d : ds) {
            const std::string r = join(d.ranks, " "), t = join(d.terms, " ");
            if (d.witnesses.empty()) tab.rows.push_back({r, t, "", "", "", "", "", ""});
            for (const auto& w : d.witnesses) tab.rows.push_back({r, t, w.i, w.j, w.k0, w.alpha, w.beta, w.gamma});
        }
        return {kExitOk, emit_table(tab, fmt)};
    }
    std::ostringstream os;
    os << o.n << " under " << rep.name() << ": " << ds.size() << " decomposition" << (ds.size() == 1 ? "" : "s")
       << '\n';
    for (const auto& d : ds) {
        os << "  " << join(d.terms, "+") << "  ranks (" << join(d.ranks, ",") << ")";
        if (d.off_lattice) {
            os << "  no lattice vertex\n";
            continue;
        }
        const auto& w = d.witnesses.front();
        os << "  alpha,beta,gamma = " << w.alpha << "," << w.beta << "," << w.gamma << "\n";
        for (const auto& x : d.witnesses) os << "    i=" << x.i << " j=" << x.j << " k0=" << x.k0 << '\n';
    }
    return {kExitOk, os.str()};
}

// ---- count / enum -------------------------------------------------------

constexpr Int kEnumLimit = 12;

struct CountOpts {
    std::string type = "O";
    Int i = 1;
    Int j = 1;
    Int k = 1;
    bool table = false;
    Int imax = 11;
    Int jmax = 5;
};

Outcome do_count(const CountOpts& o, Format fmt) {
    const auto type = typed::parse_type_tag(o.type);
    if (o.table) {
        if (type != typed::TypeTag::O && type != typed::TypeTag::Xi)
            throw UsageError("--table is available for types O and xi");
        if (o.jmax < 1 || o.imax < o.jmax || o.imax > 200) throw UsageError("--table needs 1 <= jmax <= imax <= 200");
        const auto tab = lattice::weight_table(o.imax, o.jmax);
        Table out{{"i", "j", "count"}, {}};
        for (Int i = 2; i <= o.imax; ++i)
            for (Int j = 2; j <= std::min(i, o.jmax); ++j) out.rows.push_back({i, j, tab.at(i, j)});
        return {kExitOk, emit_table(out, fmt)};
    }
    if (o.i > 60) throw UsageError("--i is limited to 60");
    // Beyond kEnumLimit the partitions are too many to walk; the count is the
    // path count, which the enumeration matches wherever it is run.
    Int c = 0;
    if (o.i <= kEnumLimit) {
        c = typed::count_typed(type, o.i, o.j, o.k);
    } else {
        typed::check_domain(type, o.i, o.j, o.k);
        c = lattice::path_count(o.i, o.j);
    }
    if (fmt == Format::Text) return {kExitOk, std::to_string(c) + "\n"};
    Table out{{"type", "i", "j", "k", "count"}, {{typed::to_string(type), o.i, o.j, o.k, c}}};
    return {kExitOk, emit_table(out, fmt)};
}

Outcome do_enum(const CountOpts& o, Format fmt) {
    const auto type = typed::parse_type_tag(o.type);
    if (o.i > kEnumLimit) throw UsageError("enum is limited to i <= " + std::to_string(kEnumLimit));
    const auto parts = typed::enumerate_typed(type, o.i, o.j, o.k);
    if (fmt == Format::Text) {
        std::string s;
        for (const auto& p : parts) s += typed::format_typed(p) + "\n";
        return {kExitOk, s};
    }
    if (fmt == Format::Json) {
        ojson arr = ojson::array();
        for (const auto& p : parts)
            arr.push_back(ojson{{"start", {p.r, p.s}},
                                {"k", p.k},
                                {"base", p.base_value},
                                {"offset", p.offset},
                                {"tail", p.tail},
                                {"total", p.total},
                                {"text", typed::format_typed(p)}});
        return {kExitOk, json_text(arr)};
    }
    Table out{{"r", "s", "base", "offset", "tail", "total"}, {}};
    for (const auto& p : parts) out.rows.push_back({p.r, p.s, p.base_value, p.offset, join(p.tail, " "), p.total});
    return {kExitOk, emit_table(out, fmt)};
}

// ---- verify -------------------------------------------------------------

struct VerifyOpts {
    std::string thm;
    Int imax = 100;
    Int jmax = 100;
    Int count = 20;
};

Outcome do_verify(const VerifyOpts& o, Format fmt) {
    using namespace identities;
    if (o.imax < 1 || o.jmax < 1 || o.imax > kVerifyCap || o.jmax > kVerifyCap)
        throw UsageError("--imax and --jmax must be in 1.." + std::to_string(kVerifyCap));
    if (o.count < 1 || o.count > 200) throw UsageError("--count must be in 1..200");

    std::vector<IdentityReport> failures;
    Int checks = 0;
    auto take = [&](const IdentityReport& r) {
        ++checks;
        if (!r.holds) failures.push_back(r);
    };
    Int certified = 0;
    Int uncertified = 0;
    if (o.thm == "3") {
        for (Int j = 1; j <= o.jmax; ++j)
            for (Int i = 1; i <= o.imax; ++i)
                for (const auto& r : verify_thm3(j, i)) take(r);
    } else if (o.thm == "4" || o.thm == "cor5") {
        for (Int j = 1; j <= o.jmax; ++j)
            for (Int i = 1; i <= o.imax; ++i) take(o.thm == "4" ? verify_thm4(j, i) : verify_cor5(j, i));
    } else if (o.thm == "cor6") {
        for (int line = 1; line <= 5; ++line)
            for (const auto& p : cor6_tuples(line, static_cast<std::size_t>(o.count))) {
                const auto r = cor6_residues(line, p);
                take(r);
                if (r.lhs >= 4 && r.lhs <= 1000000) {
                    if (four_cube_witness(r.lhs, icbrt_ceil(r.lhs)))
                        ++certified;
                    else {
                        ++uncertified;
                        failures.push_back(r);
                    }
                }
            }
    } else {
        throw UsageError("--thm must be 3, 4, cor5 or cor6");
    }

    const int code = failures.empty() ? kExitOk : kExitCounterexample;
    if (fmt == Format::Json) {
        ojson doc{{"thm", o.thm}, {"checks", checks}, {"failures", failures.size()}};
        if (o.thm == "cor6") doc["four_cube_certified"] = certified;
        ojson fs = ojson::array();
        for (const auto& f : failures)
            fs.push_back(ojson{{"family", to_string(f.family)}, {"indices", f.indices}, {"lhs", f.lhs}, {"rhs", f.rhs}});
        doc["failing"] = std::move(fs);
        return {code, json_text(doc)};
    }
    if (fmt == Format::Csv) {
        Table t{{"family", "indices", "lhs", "rhs"}, {}};
        for (const auto& f : failures) t.rows.push_back({to_string(f.family), join(f.indices, " "), f.lhs, f.rhs});
        return {code, emit_table(t, fmt)};
    }
    std::ostringstream os;
    os << checks << " checks, " << failures.size() << " failures\n";
    if (o.thm == "cor6") os << certified << " values <= 10^6 certified as sums of four positive cubes\n";
    for (const auto& f : failures)
        os << "  " << to_string(f.family) << " (" << join(f.indices, ",") << "): lhs " << f.lhs << ", rhs " << f.rhs
           << '\n';
    return {code, os.str()};
}

// ---- poset --------------------------------------------------------------

struct PosetOpts {
    std::string file;
    std::string a;
    std::string b;
    bool dot = false;
};

ojson poset_json(const poset::FinitePoset& p) {
    ojson edges = ojson::array();
    for (const auto& [x, y] : poset::hasse_edges(p)) edges.push_back({x, y});
    return ojson{{"elements", p.elements()}, {"hasse_edges", std::move(edges)}};
}

std::string poset_text(const poset::FinitePoset& p) {
    std::ostringstream os;
    os << "elements:";
    for (const auto& x : p.elements()) os << ' ' << x;
    os << '\n';
    for (const auto& [x, y] : poset::hasse_edges(p)) os << x << " < " << y << '\n';
    return os.str();
}

Outcome do_poset(const PosetOpts& o, Format fmt) {
    const auto file = parse_poset_file(o.file);
    if (o.a.empty() != o.b.empty()) throw UsageError("--a and --b must be given together");

    std::optional<poset::RepresentationReport> report;
    if (file.rep) report = poset::check_representation(file.poset, *file.rep);

    std::optional<poset::SuitablePair> pair;
    std::optional<poset::FinitePoset> derived;
    if (!o.a.empty()) {
        pair = poset::is_L_suitable(file.poset, o.a, o.b);
        if (pair) derived = poset::derive_poset(file.poset, *pair);
    }
    const poset::FinitePoset& shown = derived ? *derived : file.poset;

    if (o.dot) return {kExitOk, poset::to_dot(shown, derived ? "derived" : "P")};

    if (fmt == Format::Json) {
        ojson doc{{"poset", poset_json(file.poset)}};
        if (report) {
            doc["representation"] = ojson{{"valid", report->valid},
                                          {"weight", poset::weight(*file.rep)},
                                          {"violations", report->violations},
                                          {"warnings", report->warnings}};
        }
        if (!o.a.empty()) {
            doc["pair"] = ojson{{"a", o.a}, {"b", o.b}, {"suitable", pair.has_value()}};
            if (pair) {
                doc["pair"]["chain"] = pair->chain;
                doc["derived"] = poset_json(*derived);
            }
        }
        return {kExitOk, json_text(doc)};
    }
    if (fmt == Format::Csv) {
        Table t{{"lower", "upper"}, {}};
        for (const auto& [x, y] : poset::hasse_edges(shown)) t.rows.push_back({x, y});
        return {kExitOk, emit_table(t, fmt)};
    }
    std::ostringstream os;
    os << poset_text(file.poset);
    if (report) {
        os << "representation: " << (report->valid ? "valid" : "invalid") << ", weight " << poset::weight(*file.rep)
           << '\n';
        for (const auto& v : report->violations) os << "  violation: " << v << '\n';
        for (const auto& w : report->warnings) os << "  warning: " << w << '\n';
    }
    if (!o.a.empty()) {
        if (!pair) {
            os << "(" << o.a << ", " << o.b << ") is not suitable for differentiation\n";
        } else {
            os << "derived poset for (" << o.a << ", " << o.b << "):\n" << poset_text(*derived);
        }
    }
    return {kExitOk, os.str()};
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult res;
    CLI::App app{"Figurate-number decompositions, lattice-path partitions and poset differentiation", "figura"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    bool json = false, csv = false;
    app.add_flag("--json", json, "JSON output");
    app.add_flag("--csv", csv, "CSV output");

    GenOpts gen;
    auto* g = app.add_subcommand("gen", "Generate figurate values or matrix windows");
    g->add_option("--kind", gen.kind, "polygonal, octahedral, tetrahedral or cube");
    g->add_option("--t", gen.t, "Polygon order for --kind polygonal");
    g->add_option("--from", gen.from, "First rank");
    g->add_option("--to", gen.to, "Last rank");
    g->add_option("--matrix", gen.matrix, "M or N");
    g->add_option("--rows", gen.rows, "Matrix rows (j)");
    g->add_option("--cols", gen.cols, "Matrix columns (i)");

    DecomposeOpts dec;
    auto* d = app.add_subcommand("decompose", "All decompositions of n with lattice witnesses");
    d->add_option("--family", dec.family, "octahedral3, squares3, polygonal3 or cubes4")->required();
    d->add_option("--t", dec.t, "Polygon order for polygonal3");
    d->add_option("--n", dec.n, "Target")->required();
    d->add_flag("--positive", dec.positive, "Drop rank-0 terms (octahedral3, squares3)");

    CountOpts cnt;
    auto* c = app.add_subcommand("count", "Number of typed partitions (lattice paths)");
    c->add_option("--type", cnt.type, "O, sigma, Q, tau or xi");
    c->add_option("--i", cnt.i, "First rank");
    c->add_option("--j", cnt.j, "Second rank");
    c->add_option("--k", cnt.k, "Third rank");
    c->add_flag("--table", cnt.table, "Emit the table for 2 <= j <= i");
    c->add_option("--imax", cnt.imax, "Table rows");
    c->add_option("--jmax", cnt.jmax, "Table columns");

    CountOpts en;
    auto* e = app.add_subcommand("enum", "List typed partitions");
    e->add_option("--type", en.type, "O, sigma, Q, tau or xi");
    e->add_option("--i", en.i, "First rank")->required();
    e->add_option("--j", en.j, "Second rank")->required();
    e->add_option("--k", en.k, "Third rank");

    VerifyOpts ver;
    auto* v = app.add_subcommand("verify", "Sweep an identity family");
    v->add_option("--thm", ver.thm, "3, 4, cor5 or cor6")->required();
    v->add_option("--imax", ver.imax, "Largest i");
    v->add_option("--jmax", ver.jmax, "Largest j");
    v->add_option("--count", ver.count, "Parameter tuples per line (cor6)");

    PosetOpts pos;
    auto* p = app.add_subcommand("poset", "Inspect a poset file and derive it at a pair");
    p->add_option("--file", pos.file, "Poset file")->required();
    p->add_option("--a", pos.a, "First element of the pair");
    p->add_option("--b", pos.b, "Second element of the pair");
    p->add_flag("--dot", pos.dot, "Emit Graphviz DOT");

    // Global flags are accepted after the subcommand too.
    for (auto* sub : {g, d, c, e, v, p}) {
        sub->add_flag("--json", json, "JSON output");
        sub->add_flag("--csv", csv, "CSV output");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        res.output = app.help();
        return res;
    } catch (const CLI::CallForAllHelp&) {
        res.output = app.help("", CLI::AppFormatMode::All);
        return res;
    } catch (const CLI::ParseError& err) {
        res.exit_code = kExitUsage;
        res.diagnostics = std::string("error: ") + err.what() + "\n";
        return res;
    }

    try {
        if (json && csv) throw UsageError("--json and --csv are mutually exclusive");
        Format fmt = Format::Text;
        if (json)
            fmt = Format::Json;
        else if (csv)
            fmt = Format::Csv;
        else if (const char* env = std::getenv(kFormatEnv); env && *env)
            fmt = parse_format(env);

        Outcome o;
        if (g->parsed())
            o = do_gen(gen, fmt);
        else if (d->parsed())
            o = do_decompose(dec, fmt);
        else if (c->parsed())
            o = do_count(cnt, fmt);
        else if (e->parsed())
            o = do_enum(en, fmt);
        else if (v->parsed())
            o = do_verify(ver, fmt);
        else
            o = do_poset(pos, fmt);
        res.exit_code = o.code;
        res.output = std::move(o.out);
    } catch (const UsageError& err) {
        res.exit_code = kExitUsage;
        res.diagnostics = std::string("error: ") + err.what() + "\n";
    } catch (const InvalidArgument& err) {
        res.exit_code = kExitUsage;
        res.diagnostics = std::string("error: ") + err.what() + "\n";
    } catch (const std::exception& err) {
        res.exit_code = kExitFailure;
        res.diagnostics = std::string("error: ") + err.what() + "\n";
    }
    return res;
}

}  // namespace figura::cli
