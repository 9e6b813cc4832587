#pragma once

#include <string>
#include <vector>

#include "torelli/multigraph.hpp"

namespace fixtures {

using torelli::EdgeSpec;
using torelli::Multigraph;

/// u --a1-- v --a2-- w.  Both edges are cut edges.
inline Multigraph path_graph() {
  return Multigraph({"u", "v", "w"},
                    {{"a1", "u", "v"}, {"a2", "v", "w"}});
}

/// Triangle with b1, b2 sharing the least vertex, so the deterministic
/// spanning tree is {b1, b2}.
inline Multigraph triangle() {
  return Multigraph({"u", "v", "w"},
                    {{"b1", "u", "v"}, {"b2", "u", "w"}, {"b3", "v", "w"}});
}

/// Two vertices joined by three parallel edges.
inline Multigraph theta() {
  return Multigraph({"u", "v"},
                    {{"c1", "u", "v"}, {"c2", "u", "v"}, {"c3", "u", "v"}});
}

/// Two vertices joined by two parallel edges (a bounding pair).
inline Multigraph banana() {
  return Multigraph({"u", "v"}, {{"b1", "u", "v"}, {"b2", "u", "v"}});
}

/// Single vertex carrying one loop.
inline Multigraph loop_vertex() {
  return Multigraph({"v"}, {{"c1", "v", "v"}});
}

/// Single vertex, no edges.
inline Multigraph point() { return Multigraph({"v"}, {}); }

/// Star K_{1,3}: center x, leaves l1..l3; every edge is a cut edge.
inline Multigraph star3() {
  return Multigraph({"l1", "l2", "l3", "x"},
                    {{"a1", "x", "l1"}, {"a2", "x", "l2"}, {"a3", "x", "l3"}});
}

/// Complete graph on four vertices.
inline Multigraph k4() {
  return Multigraph({"1", "2", "3", "4"},
                    {{"e12", "1", "2"},
                     {"e13", "1", "3"},
                     {"e14", "1", "4"},
                     {"e23", "2", "3"},
                     {"e24", "2", "4"},
                     {"e34", "3", "4"}});
}

/// Cycle graph on n >= 2 vertices (n = 2 gives parallel edges).
inline Multigraph cycle_graph(std::size_t n) {
  std::vector<torelli::VertexId> vertices;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i)
    vertices.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({"g" + std::to_string(i), vertices[i],
                     vertices[(i + 1) % n]});
  }
  return Multigraph(std::move(vertices), std::move(edges));
}

}  // namespace fixtures
