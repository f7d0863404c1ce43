#include "figura/cli/poset_file.hpp"

#include <cctype>
#include <fstream>

namespace figura::cli {

namespace {

bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '+' || c == '-' || c == '.';
}

// Cursor over one line; columns are 1-based.
class LineScanner {
public:
    LineScanner(const std::string& text, std::size_t line) : s_(text), line_(line) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string label() {
        skip_ws();
        const std::size_t begin = pos_;
        while (pos_ < s_.size() && label_char(s_[pos_])) ++pos_;
        if (pos_ == begin) fail("expected an element label");
        return s_.substr(begin, pos_ - begin);
    }
    Int integer() {
        skip_ws();
        const std::size_t begin = pos_;
        Exact v = 0;
        try {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                v = v * 10 + (s_[pos_++] - '0');
        } catch (const OverflowError&) {
            pos_ = begin;
            fail("integer too large");
        }
        if (pos_ == begin) fail("expected a nonnegative integer");
        return v.value();
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, pos_ + 1, what); }

private:
    const std::string& s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

}  // namespace

PosetFile parse_poset_file(std::istream& in) {
    std::vector<std::string> elements;
    std::vector<poset::Relation> relations;
    std::optional<poset::RepresentationN> rep;
    std::vector<std::pair<std::size_t, std::string>> rep_lines;  // for unknown-label diagnostics

    std::string raw;
    for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
        const auto hash = raw.find('#');
        const std::string text = hash == std::string::npos ? raw : raw.substr(0, hash);
        LineScanner sc(text, lineno);
        if (sc.done()) continue;

        const std::string first = sc.label();
        if (first == "elements" && sc.peek(':')) {
            sc.expect(':');
            while (!sc.done()) elements.push_back(sc.label());
        } else if (first == "ambient" && sc.peek(':')) {
            sc.expect(':');
            if (!rep) rep.emplace();
            if (sc.done()) sc.fail("ambient set is empty");
            if (sc.peek('a')) {
                if (sc.label() != "all") sc.fail("expected 'all', 'polygonal t' or integers");
                rep->ambient = poset::AmbientSet::all();
            } else if (sc.peek('p')) {
                if (sc.label() != "polygonal") sc.fail("expected 'all', 'polygonal t' or integers");
                const Int t = sc.integer();
                if (t < 3) sc.fail("polygonal order must be >= 3");
                rep->ambient = poset::AmbientSet::polygonal(t);
            } else {
                std::set<Int> vals;
                while (!sc.done()) vals.insert(sc.integer());
                rep->ambient = poset::AmbientSet::explicit_set(std::move(vals));
            }
            if (!sc.done()) sc.fail("unexpected trailing text");
        } else if (sc.peek(':')) {
            sc.expect(':');
            if (!rep) rep.emplace();
            poset::RepEntry e{sc.integer(), {}};
            sc.expect(',');
            sc.expect('[');
            std::vector<Int> parts;
            if (!sc.peek(']')) {
                while (true) {
                    const Int part = sc.integer();
                    if (part < 1) sc.fail("parts must be positive");
                    parts.push_back(part);
                    if (sc.peek(']')) break;
                    sc.expect(',');
                }
            }
            sc.expect(']');
            if (!sc.done()) sc.fail("unexpected trailing text");
            e.lambda = MultisetPartition(parts);
            if (!rep->assignment.emplace(first, std::move(e)).second)
                throw ParseError(lineno, 1, "duplicate assignment for '" + first + "'");
            rep_lines.emplace_back(lineno, first);
        } else {
            std::string prev = first;
            if (sc.done()) {
                relations.emplace_back(prev, prev);
                continue;
            }
            while (!sc.done()) {
                sc.expect('<');
                const std::string next = sc.label();
                relations.emplace_back(prev, next);
                prev = next;
            }
        }
    }

    PosetFile out{poset::build_poset(elements, relations), std::move(rep)};
    for (const auto& [lineno, label] : rep_lines)
        if (!out.poset.contains(label)) throw ParseError(lineno, 1, "assignment for unknown element '" + label + "'");
    return out;
}

PosetFile parse_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_poset_file(in);
}

}  // namespace figura::cli
