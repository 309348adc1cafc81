#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latforge/basis.hpp"

namespace latforge {

struct LatticeFile {
  Basis basis;
  std::string source;
  std::vector<std::string> diagnostics;
};

// Bracketed challenge format: "[" then rows "[x1 x2 ... xn]" of optionally
// signed decimal integers of any length, then "]". Whitespace and newlines
// are free between tokens. Throws ParseError with the 1-based line/column of
// the offending character, or LatticeError(kRankDeficient).
LatticeFile parse_lattice(std::string_view text,
                          std::string source = "<memory>");

LatticeFile read_lattice_file(const std::string& path);

// One row per line; parse_lattice(serialize_lattice(b)).basis == b.
std::string serialize_lattice(const Basis& b);

}  // namespace latforge
