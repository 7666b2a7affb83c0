#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace bfg {

// Graph file format:
//   bfg 1
//   # comment
//   vertex <id> <pos> <neg>
//   edge <id> <id> <pos> <neg>
// Single spaces between tokens, LF line endings, ids [A-Za-z0-9_]+, all
// vertex lines before all edge lines. The writer is canonical: vertices
// sorted by id, edges sorted by endpoint pair, values with minimal digits.

namespace detail {

inline bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id)
    if (!(c == '_' || (c >= '0' && c <= '9') || (c >= 'A' && c <= 'Z') ||
          (c >= 'a' && c <= 'z')))
      return false;
  return true;
}

inline std::vector<std::string_view> split_fields(std::string_view line,
                                                  int line_no) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t sp = line.find(' ', start);
    std::string_view field = sp == std::string_view::npos
                                 ? line.substr(start)
                                 : line.substr(start, sp - start);
    if (field.empty())
      throw syntax_error("fields must be separated by single spaces", line_no);
    fields.push_back(field);
    if (sp == std::string_view::npos) return fields;
    start = sp + 1;
  }
}

inline scalar parse_scalar_at(std::string_view text, int line_no) {
  try {
    return scalar::parse(text);
  } catch (const precision_error& e) {
    throw precision_error(e.what(), line_no);
  } catch (const syntax_error& e) {
    throw syntax_error(e.what(), line_no);
  }
}

inline bipolar parse_membership_at(std::string_view pos, std::string_view neg,
                                   int line_no) {
  try {
    return bipolar(parse_scalar_at(pos, line_no),
                   parse_scalar_at(neg, line_no));
  } catch (const range_error& e) {
    if (e.line() != 0) throw;
    throw range_error(e.what(), line_no);
  }
}

}  // namespace detail

inline graph parse_graph(std::string_view text) {
  graph_builder builder;
  std::size_t pos = 0;
  int line_no = 0;
  bool saw_header = false;
  bool saw_edge = false;
  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;
    std::size_t eol = text.find('\n', pos);
    std::string_view line = eol == std::string_view::npos
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line_no;

    if (!saw_header) {
      if (line != "bfg 1")
        throw syntax_error("expected header 'bfg 1'", line_no);
      saw_header = true;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;

    auto fields = detail::split_fields(line, line_no);
    if (fields[0] == "vertex") {
      if (saw_edge)
        throw syntax_error("vertex line after an edge line", line_no);
      if (fields.size() != 4)
        throw syntax_error("vertex line needs 'vertex <id> <pos> <neg>'",
                           line_no);
      if (!detail::valid_id(fields[1]))
        throw syntax_error("bad vertex id '" + std::string(fields[1]) + "'",
                           line_no);
      builder.at_line(line_no).add_vertex(
          vertex_id(fields[1]),
          detail::parse_membership_at(fields[2], fields[3], line_no));
    } else if (fields[0] == "edge") {
      saw_edge = true;
      if (fields.size() != 5)
        throw syntax_error("edge line needs 'edge <id> <id> <pos> <neg>'",
                           line_no);
      if (!detail::valid_id(fields[1]) || !detail::valid_id(fields[2]))
        throw syntax_error("bad vertex id in edge line", line_no);
      builder.at_line(line_no).add_edge(
          vertex_id(fields[1]), vertex_id(fields[2]),
          detail::parse_membership_at(fields[3], fields[4], line_no));
    } else {
      throw syntax_error("unknown directive '" + std::string(fields[0]) + "'",
                         line_no);
    }
  }
  if (!saw_header) throw syntax_error("expected header 'bfg 1'", 1);
  return std::move(builder).build();
}

/// Canonical bytes: parse(write_graph(g)) == g, and equal graphs produce
/// identical bytes.
inline std::string write_graph(const graph& g) {
  std::string out = "bfg 1\n";
  for (const auto& [id, m] : g.vertices())
    out += "vertex " + id + " " + m.pos().str() + " " + m.neg().str() + "\n";
  for (const auto& [key, m] : g.edges())
    out += "edge " + key.a + " " + key.b + " " + m.pos().str() + " " +
           m.neg().str() + "\n";
  return out;
}

}  // namespace bfg
