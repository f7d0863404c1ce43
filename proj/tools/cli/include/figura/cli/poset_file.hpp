#pragma once

// Text format for posets with an optional representation:
//
//   # comment
//   elements: a b c          optional; fixes element order
//   a < b < c                generator relations, chains allowed
//   ambient: polygonal 5     or "all", or a list of integers
//   a: 5, [5]                n_x and the parts of lambda_x
//
// Labels are made of letters, digits and _ ' + - . characters.

#include <istream>
#include <optional>
#include <string>

#include "figura/poset.hpp"
#include "figura/representation.hpp"

namespace figura::cli {

struct PosetFile {
    poset::FinitePoset poset;
    std::optional<poset::RepresentationN> rep;
};

// Throws ParseError with line and column, or NotAPoset.
PosetFile parse_poset_file(std::istream& in);
// Throws Error when the file cannot be opened.
PosetFile parse_poset_file(const std::string& path);

}  // namespace figura::cli
