#pragma once

#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "torelli/intmatrix.hpp"
#include "torelli/multigraph.hpp"
#include "torelli/surface.hpp"
#include "torelli/torelli.hpp"

namespace torelli {

/// Result of parsing the line-based graph text format:
///   vertex <id> [genus=<nonnegative integer>]
///   edge <id> <vertex-id> <vertex-id> [weight=<integer>]
/// Lines whose first non-blank character is '#' are comments.  Vertex
/// lines must precede the edge lines that reference them.
struct ParsedInput {
  Multigraph graph;
  std::map<VertexId, std::size_t> genus;  ///< defaulted to 0 when absent
  std::set<VertexId> explicit_genus;      ///< vertices that carried genus=
  ExponentMap weights;                    ///< defaulted to 0 when absent

  bool all_genus_explicit() const {
    return explicit_genus.size() == graph.vertex_count();
  }

  SurfaceModel surface() const { return SurfaceModel(graph, genus); }
  Multitwist multitwist() const { return Multitwist(graph, weights); }
};

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    tokens.push_back({line.substr(start, i - start), start + 1});
  }
  return tokens;
}

inline bool looks_like_integer(const std::string& text) {
  std::size_t i = (text.size() > 1 && (text[0] == '-' || text[0] == '+')) ? 1
                                                                          : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  return true;
}

inline Int parse_integer(const Token& token, std::size_t line,
                         const std::string& what) {
  if (!looks_like_integer(token.text))
    throw ParseError(line, token.column,
                     "malformed " + what + " '" + token.text + "'");
  return Int(token.text);
}

inline std::size_t parse_nonnegative(const Token& token, std::size_t line,
                                     const std::string& what) {
  const Int value = parse_integer(token, line, what);
  if (value < 0)
    throw ParseError(line, token.column, what + " must be nonnegative");
  if (value > std::numeric_limits<std::size_t>::max() / 4)
    throw ParseError(line, token.column, what + " is unreasonably large");
  return static_cast<std::size_t>(value);
}

/// Splits "key=value"; returns false when no '=' is present.
inline bool split_attribute(const Token& token, std::string& key,
                            Token& value) {
  const auto eq = token.text.find('=');
  if (eq == std::string::npos) return false;
  key = token.text.substr(0, eq);
  value.text = token.text.substr(eq + 1);
  value.column = token.column + eq + 1;
  return true;
}

}  // namespace detail

inline ParsedInput parse_graph_text(std::string_view text) {
  std::vector<VertexId> vertices;
  std::vector<EdgeSpec> edges;
  std::map<VertexId, std::size_t> genus;
  std::set<VertexId> explicit_genus;
  ExponentMap weights;
  std::set<VertexId> vertex_seen;
  std::set<EdgeId> edge_seen;

  std::istringstream stream{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto tokens = detail::tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    const auto& head = tokens.front();
    if (head.text == "vertex") {
      if (tokens.size() < 2)
        throw ParseError(line_no, head.column, "vertex line needs an id");
      const VertexId id = tokens[1].text;
      if (!vertex_seen.insert(id).second)
        throw ParseError(line_no, tokens[1].column,
                         "duplicate vertex '" + id + "'");
      std::size_t vertex_genus = 0;
      bool has_genus = false;
      for (std::size_t t = 2; t < tokens.size(); ++t) {
        std::string key;
        detail::Token value;
        if (!detail::split_attribute(tokens[t], key, value) || key != "genus")
          throw ParseError(line_no, tokens[t].column,
                           "unexpected vertex attribute '" + tokens[t].text +
                               "'");
        if (has_genus)
          throw ParseError(line_no, tokens[t].column,
                           "duplicate genus attribute");
        vertex_genus = detail::parse_nonnegative(value, line_no, "genus");
        has_genus = true;
      }
      vertices.push_back(id);
      genus[id] = vertex_genus;
      if (has_genus) explicit_genus.insert(id);
    } else if (head.text == "edge") {
      if (tokens.size() < 4)
        throw ParseError(line_no, head.column,
                         "edge line needs an id and two vertex ids");
      const EdgeId id = tokens[1].text;
      if (!edge_seen.insert(id).second)
        throw ParseError(line_no, tokens[1].column,
                         "duplicate edge '" + id + "'");
      for (std::size_t t = 2; t <= 3; ++t) {
        if (!vertex_seen.count(tokens[t].text))
          throw ParseError(line_no, tokens[t].column,
                           "unknown vertex '" + tokens[t].text + "'");
      }
      Int weight = 0;
      bool has_weight = false;
      for (std::size_t t = 4; t < tokens.size(); ++t) {
        std::string key;
        detail::Token value;
        if (!detail::split_attribute(tokens[t], key, value) || key != "weight")
          throw ParseError(line_no, tokens[t].column,
                           "unexpected edge attribute '" + tokens[t].text +
                               "'");
        if (has_weight)
          throw ParseError(line_no, tokens[t].column,
                           "duplicate weight attribute");
        weight = detail::parse_integer(value, line_no, "weight");
        has_weight = true;
      }
      edges.push_back({id, tokens[2].text, tokens[3].text});
      weights[id] = weight;
    } else {
      throw ParseError(line_no, head.column,
                       "unknown directive '" + head.text + "'");
    }
  }

  if (vertices.empty()) throw ParseError(0, 0, "empty graph (no vertices)");

  try {
    Multigraph graph(std::move(vertices), std::move(edges));
    return ParsedInput{std::move(graph), std::move(genus),
                       std::move(explicit_genus), std::move(weights)};
  } catch (const GraphError& e) {
    throw ParseError(0, 0, e.what());
  }
}

/// Serialization that round-trips through parse_graph_text: vertex lines
/// with explicit genus, then edge lines, both in identifier order.
inline std::string to_graph_text(const SurfaceModel& model) {
  std::ostringstream out;
  const Multigraph& g = model.graph();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "vertex " << g.vertex_id(v) << " genus=" << model.genus_of_index(v)
        << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "edge " << e.id << ' ' << g.vertex_id(e.u) << ' '
        << g.vertex_id(e.v) << '\n';
  }
  return out.str();
}

}  // namespace torelli
