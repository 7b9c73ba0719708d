#include "dichroma/io.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace dichroma {

ParseError::ParseError(Errc code, int line, int column, const std::string& message)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    for (std::size_t i = 0; i < raw.size();) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty() && line.tokens.front().text.front() != '#') lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

int to_int(const Line& line, const Token& t) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size() || value < 0)
    throw ParseError(Errc::SyntaxError, line.number, t.column,
                     "expected a non-negative integer, got '" + std::string(t.text) + "'");
  return value;
}

// Header size and the validated endpoint pairs.
struct Parsed {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;
};

Parsed parse_pairs(std::string_view text, std::string_view keyword) {
  auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(Errc::SyntaxError, 1, 1, "missing '" + std::string(keyword) + " n' header");
  const Line& head = lines.front();
  if (head.tokens.front().text != keyword)
    throw ParseError(Errc::SyntaxError, head.number, head.tokens.front().column,
                     "expected header '" + std::string(keyword) + " n'");
  if (head.tokens.size() != 2) {
    int col = head.tokens.size() < 2 ? head.tokens.back().column : head.tokens[2].column;
    throw ParseError(Errc::SyntaxError, head.number, col, "header takes exactly one vertex count");
  }
  Parsed p;
  p.n = to_int(head, head.tokens[1]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) {
      int col = line.tokens.size() < 2 ? line.tokens.back().column : line.tokens[2].column;
      throw ParseError(Errc::SyntaxError, line.number, col, "expected two vertex indices");
    }
    int u = to_int(line, line.tokens[0]), v = to_int(line, line.tokens[1]);
    for (int k = 0; k < 2; ++k) {
      int x = k == 0 ? u : v;
      if (x >= p.n)
        throw ParseError(Errc::SemanticError, line.number, line.tokens[k].column,
                         "vertex " + std::to_string(x) + " out of range for n = " + std::to_string(p.n));
    }
    if (u == v) throw ParseError(Errc::SemanticError, line.number, line.tokens[0].column, "loop at vertex " + std::to_string(u));
    p.pairs.emplace_back(u, v);
  }
  return p;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  auto lines = tokenize(text);
  Parsed p = parse_pairs(text, "digraph");
  std::set<Arc> seen;
  for (std::size_t i = 0; i < p.pairs.size(); ++i)
    if (!seen.insert(p.pairs[i]).second) {
      const Line& line = lines[i + 1];
      throw ParseError(Errc::SemanticError, line.number, line.tokens[0].column,
                       "duplicate arc " + std::to_string(p.pairs[i].first) + " " + std::to_string(p.pairs[i].second));
    }
  return Digraph::build(p.n, p.pairs);
}

Multigraph parse_multigraph(std::string_view text) {
  Parsed p = parse_pairs(text, "multigraph");
  return Multigraph::build(p.n, p.pairs);
}

std::string serialize(const Digraph& d) {
  std::ostringstream out;
  out << "digraph " << d.n() << '\n';
  for (auto [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize(const Multigraph& g) {
  std::ostringstream out;
  out << "multigraph " << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace dichroma
