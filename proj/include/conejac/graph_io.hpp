#pragma once

#include <conejac/errors.hpp>
#include <conejac/multigraph.hpp>

#include <cctype>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace conejac {

namespace detail {

/// Cursor over one line of text that reports 1-based columns.
class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t column() const { return pos_ + 1; }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  std::size_t number(const char* what) {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    std::size_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > (static_cast<std::size_t>(-1) - 9) / 10) fail(std::string(what) + " is too large");
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline std::vector<std::size_t> parse_jump_list(LineScanner& sc, char close) {
  std::vector<std::size_t> jumps;
  if (sc.consume(std::string(1, close))) sc.fail("empty jump list");
  for (;;) {
    jumps.push_back(sc.number("jump"));
    if (sc.consume(",")) continue;
    sc.expect(std::string(1, close));
    return jumps;
  }
}

} // namespace detail

/// Edge-list text: first line "n m", then m lines "u v" (0-based). Blank lines
/// and lines starting with '#' are ignored.
inline Multigraph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0, seen = 0;
  Multigraph g;
  while (std::getline(in, raw)) {
    ++line_no;
    detail::LineScanner sc(raw, line_no);
    sc.skip_space();
    if (sc.at_end() || sc.consume("#")) continue;
    if (!have_header) {
      n = sc.number("vertex count");
      sc.skip_space();
      m = sc.number("edge count");
      g = Multigraph(n);
      have_header = true;
    } else {
      if (seen == m) sc.fail("more edge lines than the declared " + std::to_string(m));
      const std::size_t u = sc.number("vertex index");
      sc.skip_space();
      const std::size_t v_col = sc.column();
      const std::size_t v = sc.number("vertex index");
      if (u >= n || v >= n)
        throw ParseError("vertex index out of range [0, " + std::to_string(n) + ")", line_no, u >= n ? 1 : v_col);
      if (u == v) throw ParseError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ")", line_no, 1);
      g.add_edge(u, v);
      ++seen;
    }
    sc.skip_space();
    if (!sc.at_end()) sc.fail("trailing characters");
  }
  if (!have_header) throw ParseError("missing 'n m' header", line_no + 1, 1);
  if (seen != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(seen), line_no + 1, 1);
  return g;
}

inline Multigraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline std::string write_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
  return out.str();
}

using GraphSpec = std::variant<CirculantSpec, CobordismSpec>;

/// Parses "C<n>(<s1>,...)" or "COB<n>(<jumps1>|<jumps2>)" and validates the jumps.
inline GraphSpec parse_graph_spec(std::string_view text) {
  detail::LineScanner sc(text, 1);
  GraphSpec spec;
  if (sc.consume("COB")) {
    CobordismSpec cob;
    cob.n = sc.number("vertex count");
    sc.expect("(");
    cob.jumps1 = detail::parse_jump_list(sc, '|');
    cob.jumps2 = detail::parse_jump_list(sc, ')');
    spec = cob;
  } else if (sc.consume("C")) {
    CirculantSpec circ;
    circ.n = sc.number("vertex count");
    sc.expect("(");
    circ.jumps = detail::parse_jump_list(sc, ')');
    spec = circ;
  } else {
    sc.fail("graph spec must start with 'C' or 'COB'");
  }
  if (!sc.at_end()) sc.fail("trailing characters");
  try {
    std::visit([](const auto& s) { s.validate(); }, spec);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return spec;
}

inline Multigraph build_graph(const GraphSpec& spec) {
  return std::visit(
      [](const auto& s) -> Multigraph {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, CirculantSpec>)
          return circulant(s);
        else
          return cobordism(s);
      },
      spec);
}

inline std::string to_string(const GraphSpec& spec) {
  return std::visit([](const auto& s) { return s.to_string(); }, spec);
}

} // namespace conejac
