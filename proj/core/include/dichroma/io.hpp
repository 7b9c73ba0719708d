#pragma once

#include <string>
#include <string_view>

#include "dichroma/digraph.hpp"
#include "dichroma/error.hpp"
#include "dichroma/multigraph.hpp"

namespace dichroma {

// SyntaxError or SemanticError with a 1-based position in the input text.
class ParseError : public Error {
 public:
  ParseError(Errc code, int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

// "digraph n" followed by one "u v" line per arc. Vertices are 0-indexed and
// lines whose first token starts with '#' are ignored.
Digraph parse_digraph(std::string_view text);
// "multigraph n" followed by one "u v" line per edge; repeats add multiplicity.
Multigraph parse_multigraph(std::string_view text);

std::string serialize(const Digraph& d);
std::string serialize(const Multigraph& g);

}  // namespace dichroma
