#include "flagcert/notation.hpp"

#include <cctype>

namespace flagcert {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("graph notation: unexpected end of input");
    return s[pos++];
  }
  void expect(char c) {
    char got = take();
    if (got != c)
      throw ParseError(std::string("graph notation: expected '") + c + "', got '" + got + "'");
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError("graph notation: expected an integer");
    return std::stoi(s.substr(start, pos - start));
  }
};

}  // namespace

Graph parse_graph(const std::string& text) {
  Cursor c{text};
  c.expect('{');

  // Collect raw pair tokens first; vertex ids can only be validated once the
  // trailing {n, k} subscript is known.
  std::vector<std::pair<char, char>> raw;
  if (c.peek() != '}') {
    while (true) {
      char u = c.take();
      char v = c.take();
      raw.emplace_back(u, v);
      char sep = c.take();
      if (sep == '}') break;
      if (sep != ',') throw ParseError("graph notation: expected ',' or '}' after a pair");
    }
  } else {
    c.expect('}');
  }
  c.expect('_');
  c.expect('{');
  int n = c.integer();
  c.expect(',');
  int k = c.integer();
  c.expect('}');
  c.skip_ws();
  if (c.pos != text.size()) throw ParseError("graph notation: trailing characters after subscript");

  if (n < 1 || n > kMaxVertices) throw ParseError("graph notation: vertex count out of range");
  if (k < 0 || k > n) throw ParseError("graph notation: label count out of range");

  auto vertex = [&](char id) -> int {
    if (isdigit(static_cast<unsigned char>(id))) {
      int v = id - '0';
      if (v < 1 || v > k) throw ParseError(std::string("graph notation: labeled vertex '") + id + "' out of range");
      return v - 1;
    }
    if (id >= 'a' && id <= 'z') {
      int v = k + (id - 'a');
      if (v >= n) throw ParseError(std::string("graph notation: unlabeled vertex '") + id + "' out of range");
      return v;
    }
    throw ParseError(std::string("graph notation: bad vertex id '") + id + "'");
  };

  Graph g{n, k, 0};
  for (auto [cu, cv] : raw) {
    int u = vertex(cu), v = vertex(cv);
    if (u == v) throw ParseError("graph notation: loop");
    if (g.edge(u, v)) throw ParseError("graph notation: duplicate edge");
    g.set_edge(u, v);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  auto id = [&](int v) -> char {
    return v < g.k ? static_cast<char>('1' + v) : static_cast<char>('a' + (v - g.k));
  };
  std::string out = "{";
  bool first = true;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.edge(u, v)) {
        if (!first) out += ",";
        out += id(u);
        out += id(v);
        first = false;
      }
  out += "}_{" + std::to_string(g.n) + "," + std::to_string(g.k) + "}";
  return out;
}

}  // namespace flagcert
