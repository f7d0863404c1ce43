#include "figura/representation.hpp"

#include "figura/figurate.hpp"

namespace figura::poset {

namespace fg = figura::figurate;

AmbientSet AmbientSet::polygonal(Int t) {
    (void)fg::FigurateKind::polygonal(t);
    return AmbientSet(Kind::Polygonal, t, {});
}

bool AmbientSet::contains(Int v) const {
    if (v < 1) return false;
    switch (kind_) {
        case Kind::All: return true;
        case Kind::Polygonal: return fg::rank_of(fg::FigurateKind::polygonal(t_), v).has_value();
        case Kind::Explicit: return values_.count(v) != 0;
    }
    return false;
}

std::string AmbientSet::to_string() const {
    switch (kind_) {
        case Kind::All: return "all";
        case Kind::Polygonal: return "polygonal " + std::to_string(t_);
        case Kind::Explicit: {
            std::string s;
            for (Int v : values_) s += (s.empty() ? "" : " ") + std::to_string(v);
            return s;
        }
    }
    return "?";
}

RepresentationReport check_representation(const FinitePoset& p, const RepresentationN& rep) {
    RepresentationReport r;
    auto fail = [&](std::string msg) {
        r.valid = false;
        r.violations.push_back(std::move(msg));
    };
    for (const auto& x : p.elements())
        if (!rep.assignment.count(x)) throw IncompleteRepresentation("no assignment for element '" + x + "'");
    for (const auto& [x, e] : rep.assignment)
        if (!p.contains(x)) fail("assignment for unknown element '" + x + "'");

    for (const auto& x : p.elements()) {
        const RepEntry& e = rep.assignment.at(x);
        if (e.n < 1) fail(x + ": n must be positive");
        for (const auto& [part, count] : e.lambda.multiplicities())
            if (!rep.ambient.contains(part))
                fail(x + ": part " + std::to_string(part) + " is not in the ambient set");
        if (e.lambda.total() != e.n)
            r.warnings.push_back(x + ": parts sum to " + std::to_string(e.lambda.total()) + ", n is " +
                                 std::to_string(e.n));
    }
    for (std::size_t u = 0; u < p.size(); ++u)
        for (std::size_t v = 0; v < p.size(); ++v) {
            if (!p.less(u, v)) continue;
            const auto& x = p.label(u);
            const auto& y = p.label(v);
            const RepEntry& ex = rep.assignment.at(x);
            const RepEntry& ey = rep.assignment.at(y);
            const std::string rel = x + " < " + y + ": ";
            if (ex.n > ey.n) fail(rel + "n decreases");
            if (ex.lambda.num_parts() > ey.lambda.num_parts()) fail(rel + "number of parts decreases");
            if (ex.lambda.max_part() > ey.lambda.max_part()) fail(rel + "largest part decreases");
        }
    return r;
}

bool validate_representation(const FinitePoset& p, const RepresentationN& rep) {
    return check_representation(p, rep).valid;
}

Int weight(const RepresentationN& rep) {
    Exact w = 0;
    for (const auto& [x, e] : rep.assignment) w += e.n;
    return w.value();
}

PosetFixture build_N_family(Int i) {
    if (i < 1) throw InvalidArgument("N family needs i >= 1");
    std::vector<std::string> elems;
    std::vector<Relation> gen;
    for (Int j = 1; j <= i + 1; ++j) {
        elems.push_back("c" + std::to_string(j));
        if (j > 1) gen.emplace_back(elems[j - 2], elems[j - 1]);
    }
    elems.push_back("d");
    gen.emplace_back("c1", "d");

    PosetFixture f{build_poset(elems, gen), {}, "", ""};
    auto single = [](Int v) { return RepEntry{v, MultisetPartition({v})}; };
    for (Int j = 1; j <= i; ++j) f.rep.assignment.emplace("c" + std::to_string(j), single(j));
    f.rep.assignment.emplace("c" + std::to_string(i + 1), single(i));
    f.rep.assignment.emplace("d", single(i));
    return f;
}

PosetFixture build_P_ci(Int variant, Int chain_len, Int n0, Int companion) {
    if (chain_len < 1 || variant < 1 || variant > chain_len)
        throw InvalidArgument("variant must satisfy 1 <= variant <= chain length");
    if (n0 < 5) throw InvalidArgument("n0 must be >= 5");
    if (variant >= 2 && (companion < 2 || companion >= variant + 2))
        throw InvalidArgument("companion index must satisfy 2 <= companion < variant + 2");

    auto c = [](Int i) { return "c" + std::to_string(i); };
    const std::string a = "a" + std::to_string(variant);
    std::vector<std::string> elems{"b1", "b", a};
    std::vector<Relation> gen{{"b1", "b"}, {"b", c(1)}, {a, c(variant)}};
    for (Int i = 1; i <= chain_len; ++i) {
        elems.push_back(c(i));
        if (i > 1) gen.emplace_back(c(i - 1), c(i));
    }

    PosetFixture f{build_poset(elems, gen), {}, a, variant == 1 ? "b" : c(variant - 1)};
    f.rep.ambient = AmbientSet::polygonal(n0);
    auto p = [n0](Int k) { return fg::polygonal(n0, k); };
    auto equal_parts = [n0](Int part) {
        return RepEntry{(Exact(n0) * part).value(), MultisetPartition::from_multiplicities({{part, n0}})};
    };
    f.rep.assignment.emplace("b1", equal_parts(p(1)));
    f.rep.assignment.emplace("b", equal_parts(p(2)));
    for (Int i = 1; i <= chain_len; ++i) f.rep.assignment.emplace(c(i), equal_parts(p(i + 2)));
    const Int lo = variant == 1 ? p(2) : p(companion);
    const Int hi = p(variant + 2);
    f.rep.assignment.emplace(a, RepEntry{(Exact(lo) + hi).value(), MultisetPartition({hi, lo})});
    return f;
}

}  // namespace figura::poset
