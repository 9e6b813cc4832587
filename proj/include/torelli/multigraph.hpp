#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torelli/errors.hpp"

namespace torelli {

using VertexId = std::string;
using EdgeId = std::string;

/// One edge as supplied by the caller.  Loops (u == v) and parallel edges
/// are allowed.
struct EdgeSpec {
  EdgeId id;
  VertexId u;
  VertexId v;
};

/// A finite connected multigraph.  Vertices and edges are stored sorted by
/// identifier, so index order coincides with identifier order everywhere.
/// Instances are immutable after construction.
class Multigraph {
 public:
  struct Edge {
    EdgeId id;
    std::size_t u = 0;  ///< endpoint index (tail of the stored direction)
    std::size_t v = 0;  ///< endpoint index (head of the stored direction)
    bool is_loop() const { return u == v; }
  };

  Multigraph(std::vector<VertexId> vertices, std::vector<EdgeSpec> edges) {
    if (vertices.empty()) throw GraphError("graph has no vertices");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) !=
        vertices.end()) {
      throw GraphError("duplicate vertex identifier");
    }
    vertex_ids_ = std::move(vertices);
    for (std::size_t i = 0; i < vertex_ids_.size(); ++i)
      vertex_lookup_.emplace(vertex_ids_[i], i);

    std::sort(edges.begin(), edges.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      if (edges[i].id == edges[i + 1].id)
        throw GraphError("duplicate edge identifier '" + edges[i].id + "'");
    }
    edges_.reserve(edges.size());
    for (const EdgeSpec& spec : edges) {
      Edge e;
      e.id = spec.id;
      e.u = require_vertex(spec.u);
      e.v = require_vertex(spec.v);
      edges_.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < edges_.size(); ++i)
      edge_lookup_.emplace(edges_[i].id, i);

    incidences_.resize(vertex_ids_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      incidences_[e.u].emplace_back(i, e.v);
      if (!e.is_loop()) incidences_[e.v].emplace_back(i, e.u);
    }

    if (component_count_without(std::vector<bool>(edges_.size(), false)) != 1)
      throw GraphError("graph is not connected");
  }

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<VertexId>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }
  const VertexId& vertex_id(std::size_t index) const {
    return vertex_ids_.at(index);
  }

  bool has_vertex(const VertexId& id) const {
    return vertex_lookup_.count(id) != 0;
  }
  bool has_edge(const EdgeId& id) const { return edge_lookup_.count(id) != 0; }

  std::size_t vertex_index(const VertexId& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end())
      throw GraphError("unknown vertex '" + id + "'");
    return it->second;
  }

  std::size_t edge_index(const EdgeId& id) const {
    auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end()) throw GraphError("unknown edge '" + id + "'");
    return it->second;
  }

  /// Incidences of a vertex as (edge index, opposite endpoint), in edge-id
  /// order.  A loop contributes a single entry with the vertex itself as
  /// the opposite end.
  const std::vector<std::pair<std::size_t, std::size_t>>& incidences(
      std::size_t vertex) const {
    return incidences_.at(vertex);
  }

  /// Vertex degree, each loop counting as two edges.
  std::size_t degree(std::size_t vertex) const {
    std::size_t d = 0;
    for (const auto& [ei, other] : incidences(vertex))
      d += edges_[ei].is_loop() ? 2 : 1;
    return d;
  }

  /// Component labels of the graph with the flagged edges removed.
  /// Labels are consecutive from 0 in order of least member vertex.
  std::vector<std::size_t> component_labels_without(
      const std::vector<bool>& removed_edge) const {
    std::vector<std::size_t> label(vertex_count(), npos);
    std::size_t next = 0;
    std::vector<std::size_t> queue;
    for (std::size_t start = 0; start < vertex_count(); ++start) {
      if (label[start] != npos) continue;
      label[start] = next;
      queue.assign(1, start);
      while (!queue.empty()) {
        std::size_t x = queue.back();
        queue.pop_back();
        for (const auto& [ei, other] : incidences_[x]) {
          if (removed_edge[ei] || label[other] != npos) continue;
          label[other] = next;
          queue.push_back(other);
        }
      }
      ++next;
    }
    return label;
  }

  std::size_t component_count_without(
      const std::vector<bool>& removed_edge) const {
    const auto labels = component_labels_without(removed_edge);
    return labels.empty()
               ? 0
               : *std::max_element(labels.begin(), labels.end()) + 1;
  }

  /// Rank of the fundamental group: |E| - |V| + 1.
  std::size_t cycle_rank() const { return edge_count() - vertex_count() + 1; }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_ids_ != b.vertex_ids_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const Edge& x = a.edges_[i];
      const Edge& y = b.edges_[i];
      if (x.id != y.id || x.u != y.u || x.v != y.v) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t require_vertex(const VertexId& id) const {
    auto it = vertex_lookup_.find(id);
    if (it == vertex_lookup_.end())
      throw GraphError("edge references unknown vertex '" + id + "'");
    return it->second;
  }

  std::vector<VertexId> vertex_ids_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> vertex_lookup_;
  std::map<EdgeId, std::size_t> edge_lookup_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incidences_;
};

/// One step of a walk: an edge together with its traversal direction.
/// `forward` means the edge is traversed from its stored tail to its head.
struct TrailStep {
  EdgeId edge;
  bool forward = true;

  friend bool operator==(const TrailStep&, const TrailStep&) = default;
};

/// A walk with pairwise distinct edges.  Stores the visited vertex
/// sequence v_0 .. v_n alongside the steps, so a Trail is self-contained
/// once built.
class Trail {
 public:
  /// Validates that the steps form a trail in `g`: positive length,
  /// no repeated edge, and consecutive steps sharing the required vertex.
  static Trail over(const Multigraph& g, std::vector<TrailStep> steps) {
    if (steps.empty()) throw PreconditionError("trail must have length >= 1");
    std::set<EdgeId> seen;
    std::vector<VertexId> vertices;
    vertices.reserve(steps.size() + 1);
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const TrailStep& step = steps[i];
      if (!seen.insert(step.edge).second)
        throw PreconditionError("trail repeats edge '" + step.edge + "'");
      const auto& e = g.edge(g.edge_index(step.edge));
      const std::size_t from = step.forward ? e.u : e.v;
      const std::size_t to = step.forward ? e.v : e.u;
      if (i == 0) {
        vertices.push_back(g.vertex_id(from));
      } else if (g.vertex_id(from) != vertices.back()) {
        throw PreconditionError("trail steps do not share endpoints at '" +
                                step.edge + "'");
      }
      vertices.push_back(g.vertex_id(to));
    }
    return Trail(std::move(steps), std::move(vertices));
  }

  const std::vector<TrailStep>& steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }

  /// Visited vertices v_0 .. v_n (length + 1 entries).
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const VertexId& origin() const { return vertices_.front(); }
  const VertexId& terminus() const { return vertices_.back(); }
  bool closed() const { return origin() == terminus(); }

  bool contains(const EdgeId& id) const {
    return std::any_of(steps_.begin(), steps_.end(),
                       [&](const TrailStep& s) { return s.edge == id; });
  }

 private:
  Trail(std::vector<TrailStep> steps, std::vector<VertexId> vertices)
      : steps_(std::move(steps)), vertices_(std::move(vertices)) {}

  std::vector<TrailStep> steps_;
  std::vector<VertexId> vertices_;
};

/// An embedded cycle: a closed trail of positive length whose origin and
/// internal vertices are distinct.  Stored in canonical form -- the
/// lexicographically least rotation or reflection of the edge-identifier
/// sequence -- so two cycles compare equal exactly when they are the same
/// embedded circle.
class Cycle {
 public:
  static Cycle of(const Trail& trail) {
    if (!trail.closed())
      throw PreconditionError("cycle trail must be closed");
    // Distinctness of v_0 .. v_{n-1}.
    std::set<VertexId> distinct(trail.vertices().begin(),
                                trail.vertices().end() - 1);
    if (distinct.size() != trail.length())
      throw PreconditionError("cycle trail revisits a vertex");
    std::vector<EdgeId> ids;
    ids.reserve(trail.length());
    for (const TrailStep& s : trail.steps()) ids.push_back(s.edge);
    return Cycle(canonicalize(std::move(ids)));
  }

  static Cycle of(const Multigraph& g, std::vector<TrailStep> steps) {
    return of(Trail::over(g, std::move(steps)));
  }

  /// Edge identifiers in canonical cyclic order.
  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }

  bool contains(const EdgeId& id) const {
    return std::find(edges_.begin(), edges_.end(), id) != edges_.end();
  }

  std::set<EdgeId> edge_set() const {
    return std::set<EdgeId>(edges_.begin(), edges_.end());
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend bool operator<(const Cycle& a, const Cycle& b) {
    return a.edges_ < b.edges_;
  }

 private:
  explicit Cycle(std::vector<EdgeId> canonical)
      : edges_(std::move(canonical)) {}

  static std::vector<EdgeId> canonicalize(std::vector<EdgeId> ids) {
    std::vector<EdgeId> best = ids;
    auto consider = [&](const std::vector<EdgeId>& seq) {
      for (std::size_t r = 0; r < seq.size(); ++r) {
        std::vector<EdgeId> rot(seq.begin() + static_cast<std::ptrdiff_t>(r),
                                seq.end());
        rot.insert(rot.end(), seq.begin(),
                   seq.begin() + static_cast<std::ptrdiff_t>(r));
        if (rot < best) best = std::move(rot);
      }
    };
    consider(ids);
    std::reverse(ids.begin(), ids.end());
    consider(ids);
    return best;
  }

  std::vector<EdgeId> edges_;
};

/// A deterministic spanning tree together with the fundamental cycle of
/// every non-tree edge.
class SpanningTree {
 public:
  /// Tree edges, sorted by identifier.  Always vertex_count - 1 of them.
  const std::vector<EdgeId>& tree_edges() const { return tree_edges_; }

  /// Non-tree edges sorted by identifier; position j is "the j-th
  /// non-tree edge" used for fundamental-cycle indexing.
  const std::vector<EdgeId>& nontree_edges() const { return nontree_edges_; }

  /// Rank of the fundamental group of the graph.
  std::size_t rank() const { return nontree_edges_.size(); }

  bool in_tree(const EdgeId& id) const {
    return std::binary_search(tree_edges_.begin(), tree_edges_.end(), id);
  }

  /// The oriented fundamental circuit of the j-th non-tree edge.  The
  /// first step traverses the non-tree edge in its stored direction.
  const Trail& fundamental_trail(std::size_t j) const {
    return trails_.at(j);
  }

  const Cycle& fundamental_cycle(std::size_t j) const { return cycles_.at(j); }

  const Cycle& fundamental_cycle(const EdgeId& id) const {
    auto it = std::lower_bound(nontree_edges_.begin(), nontree_edges_.end(),
                               id);
    if (it == nontree_edges_.end() || *it != id)
      throw PreconditionError("edge '" + id + "' is not a non-tree edge");
    return cycles_.at(
        static_cast<std::size_t>(it - nontree_edges_.begin()));
  }

 private:
  friend SpanningTree spanning_tree(const Multigraph& g);

  std::vector<EdgeId> tree_edges_;
  std::vector<EdgeId> nontree_edges_;
  std::vector<Trail> trails_;
  std::vector<Cycle> cycles_;
};

/// The cut edges of g.  Loops are never cut edges.
inline std::set<EdgeId> bridges(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::set<EdgeId> out;

  struct Frame {
    std::size_t vertex;
    std::size_t next_incidence;
    std::size_t entry_edge;
  };
  std::vector<Frame> stack;
  std::size_t timer = 0;

  visited[0] = true;
  disc[0] = low[0] = timer++;
  stack.push_back({0, 0, none});
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto& inc = g.incidences(frame.vertex);
    if (frame.next_incidence < inc.size()) {
      const auto [ei, other] = inc[frame.next_incidence++];
      if (ei == frame.entry_edge) continue;  // parallel edges have other ids
      if (g.edge(ei).is_loop()) continue;
      if (visited[other]) {
        low[frame.vertex] = std::min(low[frame.vertex], disc[other]);
        continue;
      }
      visited[other] = true;
      disc[other] = low[other] = timer++;
      stack.push_back({other, 0, ei});
    } else {
      const std::size_t v = frame.vertex;
      const std::size_t entry = frame.entry_edge;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.vertex] = std::min(low[parent.vertex], low[v]);
        if (low[v] > disc[parent.vertex]) out.insert(g.edge(entry).id);
      }
    }
  }
  return out;
}

/// Whether s is a bond: removing s disconnects g and removing any proper
/// subset does not.  Equivalently g - s has exactly two components and
/// every edge of s joins the two.
inline bool is_bond(const Multigraph& g, const std::set<EdgeId>& s) {
  if (s.empty()) return false;
  std::vector<bool> removed(g.edge_count(), false);
  for (const EdgeId& id : s) removed[g.edge_index(id)] = true;
  const auto label = g.component_labels_without(removed);
  const std::size_t comps =
      *std::max_element(label.begin(), label.end()) + 1;
  if (comps != 2) return false;
  for (const EdgeId& id : s) {
    const auto& e = g.edge(g.edge_index(id));
    if (label[e.u] == label[e.v]) return false;
  }
  return true;
}

/// The two sides of a bond, as vertex-id sets; nullopt if s is not a bond.
inline std::optional<std::pair<std::set<VertexId>, std::set<VertexId>>>
bond_sides(const Multigraph& g, const std::set<EdgeId>& s) {
  if (!is_bond(g, s)) return std::nullopt;
  std::vector<bool> removed(g.edge_count(), false);
  for (const EdgeId& id : s) removed[g.edge_index(id)] = true;
  const auto label = g.component_labels_without(removed);
  std::pair<std::set<VertexId>, std::set<VertexId>> sides;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    (label[v] == 0 ? sides.first : sides.second).insert(g.vertex_id(v));
  }
  return sides;
}

/// All unordered pairs {e, f} that form a 2-edge bond, by brute-force
/// pair scan.  Pairs are reported with the lesser identifier first.
inline std::set<std::pair<EdgeId, EdgeId>> two_edge_bond_pairs(
    const Multigraph& g) {
  std::set<std::pair<EdgeId, EdgeId>> out;
  const std::size_t m = g.edge_count();
  for (std::size_t i = 0; i < m; ++i) {
    if (g.edge(i).is_loop()) continue;  // removing a loop changes nothing
    for (std::size_t j = i + 1; j < m; ++j) {
      if (g.edge(j).is_loop()) continue;
      if (is_bond(g, {g.edge(i).id, g.edge(j).id}))
        out.emplace(g.edge(i).id, g.edge(j).id);
    }
  }
  return out;
}

/// Deterministic spanning tree: breadth-first search from the least
/// vertex identifier, ties broken by least edge identifier.
inline SpanningTree spanning_tree(const Multigraph& g) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::size_t n = g.vertex_count();
  std::vector<bool> visited(n, false);
  // parent_edge[v] = edge index used to reach v; root has none.
  std::vector<std::size_t> parent_edge(n, none), parent(n, none);
  std::vector<bool> in_tree(g.edge_count(), false);

  std::queue<std::size_t> frontier;
  visited[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    const std::size_t x = frontier.front();
    frontier.pop();
    for (const auto& [ei, other] : g.incidences(x)) {
      if (visited[other]) continue;
      visited[other] = true;
      in_tree[ei] = true;
      parent_edge[other] = ei;
      parent[other] = x;
      frontier.push(other);
    }
  }

  SpanningTree result;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    (in_tree[i] ? result.tree_edges_ : result.nontree_edges_)
        .push_back(g.edge(i).id);
  }

  // Tree path from a vertex up to the root as (edge index, from, to).
  auto climb = [&](std::size_t v) {
    std::vector<std::array<std::size_t, 3>> path;
    while (parent_edge[v] != none) {
      path.push_back({parent_edge[v], v, parent[v]});
      v = parent[v];
    }
    return path;
  };

  for (const EdgeId& id : result.nontree_edges_) {
    const auto& f = g.edge(g.edge_index(id));
    std::vector<TrailStep> steps;
    steps.push_back({id, true});  // traverse u -> v in stored direction
    if (!f.is_loop()) {
      auto from_v = climb(f.v);
      auto from_u = climb(f.u);
      // Trim the common tail above the meeting point of the two climbs.
      std::set<std::size_t> on_v_path;
      for (const auto& step : from_v) on_v_path.insert(step[0]);
      std::set<std::size_t> shared;
      for (const auto& step : from_u)
        if (on_v_path.count(step[0])) shared.insert(step[0]);
      auto direction_of = [&](std::size_t ei, std::size_t from) {
        return g.edge(ei).u == from && !g.edge(ei).is_loop();
      };
      for (const auto& [ei, from, to] : from_v) {
        if (shared.count(ei)) continue;
        steps.push_back({g.edge(ei).id, direction_of(ei, from)});
      }
      std::vector<TrailStep> up;
      for (const auto& [ei, from, to] : from_u) {
        if (shared.count(ei)) continue;
        // reversed below: traversed to -> from on the way down to u
        up.push_back({g.edge(ei).id, direction_of(ei, to)});
      }
      steps.insert(steps.end(), up.rbegin(), up.rend());
    }
    Trail trail = Trail::over(g, std::move(steps));
    result.cycles_.push_back(Cycle::of(trail));
    result.trails_.push_back(std::move(trail));
  }
  return result;
}

/// Every embedded cycle of g, each exactly once in canonical form.  Loops
/// count as cycles of length 1, a pair of parallel edges as a cycle of
/// length 2.  Intended for desk-scale verification; refuses graphs with
/// more than max_edges edges.
inline std::set<Cycle> enumerate_cycles(const Multigraph& g,
                                        std::size_t max_edges = 16) {
  if (g.edge_count() > max_edges) {
    throw PreconditionError(
        "enumerate_cycles: graph has " + std::to_string(g.edge_count()) +
        " edges, guard is " + std::to_string(max_edges));
  }
  std::set<Cycle> out;
  const std::size_t n = g.vertex_count();
  std::vector<bool> used(g.edge_count(), false), visited(n, false);
  std::vector<TrailStep> path;

  // Paths start and end at s and stay on vertices >= s, so every cycle is
  // found from its least vertex; the canonical form dedups directions.
  for (std::size_t s = 0; s < n; ++s) {
    auto extend = [&](auto&& self, std::size_t x) -> void {
      for (const auto& [ei, other] : g.incidences(x)) {
        if (used[ei]) continue;
        const auto& e = g.edge(ei);
        const bool fwd = (e.u == x);
        if (other == s) {
          path.push_back({e.id, fwd});
          out.insert(Cycle::of(g, path));
          path.pop_back();
        } else if (other > s && !visited[other]) {
          used[ei] = true;
          visited[other] = true;
          path.push_back({e.id, fwd});
          self(self, other);
          path.pop_back();
          visited[other] = false;
          used[ei] = false;
        }
      }
    };
    visited[s] = true;
    extend(extend, s);
    visited[s] = false;
  }
  return out;
}

/// Result of contracting an edge set: the contracted graph, the (identity)
/// map from surviving edge ids back to the original ids, and the map from
/// each original vertex to the merged vertex that absorbed it.
struct Contraction {
  Multigraph graph;
  std::map<EdgeId, EdgeId> edge_to_original;
  std::map<VertexId, VertexId> vertex_image;
};

/// Deletes every edge of h and identifies its ends.  Merged vertices take
/// the least original identifier among their members; surviving edges keep
/// their identifiers.
inline Contraction contract(const Multigraph& g, const std::set<EdgeId>& h) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> leader(n);
  for (std::size_t i = 0; i < n; ++i) leader[i] = i;
  auto find = [&](std::size_t x) {
    while (leader[x] != x) {
      leader[x] = leader[leader[x]];
      x = leader[x];
    }
    return x;
  };
  for (const EdgeId& id : h) {
    const auto& e = g.edge(g.edge_index(id));
    const std::size_t a = find(e.u), b = find(e.v);
    if (a != b) leader[std::max(a, b)] = std::min(a, b);  // keep least index
  }

  std::map<VertexId, VertexId> vertex_image;
  std::set<VertexId> new_vertices;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId& rep = g.vertex_id(find(i));
    vertex_image.emplace(g.vertex_id(i), rep);
    new_vertices.insert(rep);
  }

  std::vector<EdgeSpec> new_edges;
  std::map<EdgeId, EdgeId> edge_to_original;
  for (const auto& e : g.edges()) {
    if (h.count(e.id)) continue;
    new_edges.push_back(
        {e.id, g.vertex_id(find(e.u)), g.vertex_id(find(e.v))});
    edge_to_original.emplace(e.id, e.id);
  }

  Multigraph contracted(
      std::vector<VertexId>(new_vertices.begin(), new_vertices.end()),
      std::move(new_edges));
  return {std::move(contracted), std::move(edge_to_original),
          std::move(vertex_image)};
}

namespace detail {

/// Two edge-disjoint paths between distinct vertices via two unit-flow
/// augmentations; `forbidden` excludes one edge from the search.  Returns
/// nullopt when the maximum flow is below two.
inline std::optional<std::pair<Trail, Trail>> two_flow(
    const Multigraph& g, std::size_t src, std::size_t dst,
    std::size_t forbidden) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  const std::size_t m = g.edge_count();
  // flow[e]: +1 carries tail->head, -1 head->tail, 0 unused.
  std::vector<int> flow(m, 0);

  for (int round = 0; round < 2; ++round) {
    std::vector<std::pair<std::size_t, bool>> pred(g.vertex_count(),
                                                   {none, true});
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<std::size_t> frontier;
    seen[src] = true;
    frontier.push(src);
    while (!frontier.empty() && !seen[dst]) {
      const std::size_t x = frontier.front();
      frontier.pop();
      for (const auto& [ei, other] : g.incidences(x)) {
        if (ei == forbidden || g.edge(ei).is_loop() || seen[other]) continue;
        const bool fwd = (g.edge(ei).u == x);
        if (fwd ? flow[ei] > 0 : flow[ei] < 0) continue;  // no residual
        seen[other] = true;
        pred[other] = {ei, fwd};
        frontier.push(other);
      }
    }
    if (!seen[dst]) return std::nullopt;
    std::size_t x = dst;
    while (x != src) {
      const auto [ei, fwd] = pred[x];
      flow[ei] += fwd ? 1 : -1;
      x = fwd ? g.edge(ei).u : g.edge(ei).v;
    }
  }

  // Decompose the value-2 flow into two trails, excising any flow cycles.
  auto walk = [&]() {
    std::vector<TrailStep> steps;
    std::vector<std::size_t> at;  // vertex sequence, for cycle excision
    at.push_back(src);
    std::size_t x = src;
    while (x != dst || steps.empty()) {
      bool advanced = false;
      for (const auto& [ei, other] : g.incidences(x)) {
        const bool fwd = (g.edge(ei).u == x);
        if (g.edge(ei).is_loop()) continue;
        if ((fwd && flow[ei] == 1) || (!fwd && flow[ei] == -1)) {
          flow[ei] = 0;
          steps.push_back({g.edge(ei).id, fwd});
          x = other;
          auto again = std::find(at.begin(), at.end(), x);
          if (again != at.end()) {  // drop the excised flow cycle
            const auto keep =
                static_cast<std::size_t>(again - at.begin());
            steps.resize(keep);
            at.resize(keep + 1);
          } else {
            at.push_back(x);
          }
          advanced = true;
          break;
        }
      }
      if (!advanced)
        throw Error("internal: flow decomposition stalled");
    }
    return Trail::over(g, std::move(steps));
  };
  Trail first = walk();
  Trail second = walk();
  return std::make_pair(std::move(first), std::move(second));
}

}  // namespace detail

/// Two edge-disjoint (u, v)-paths in a bridgeless graph.
inline std::pair<Trail, Trail> edge_disjoint_paths(const Multigraph& g,
                                                   const VertexId& u,
                                                   const VertexId& v) {
  if (u == v)
    throw PreconditionError("edge_disjoint_paths: endpoints must differ");
  const std::size_t su = g.vertex_index(u), sv = g.vertex_index(v);
  const auto cut_edges = bridges(g);
  if (!cut_edges.empty()) {
    throw PreconditionError("edge_disjoint_paths: graph has a cut edge '" +
                            *cut_edges.begin() + "'");
  }
  auto paths =
      detail::two_flow(g, su, sv, static_cast<std::size_t>(-1));
  if (!paths) throw Error("internal: bridgeless graph admitted only one path");
  return *std::move(paths);
}

/// Two cycles through a non-loop c-type edge whose edge sets meet exactly
/// in that edge.  c-typeness (not a cut edge, in no 2-edge bond) is
/// re-checked as a precondition.
inline std::pair<Cycle, Cycle> two_cycles_through(const Multigraph& g,
                                                  const EdgeId& c) {
  const std::size_t ci = g.edge_index(c);
  const auto& ce = g.edge(ci);
  if (ce.is_loop())
    throw PreconditionError("two_cycles_through: '" + c + "' is a loop");
  if (bridges(g).count(c))
    throw PreconditionError("two_cycles_through: '" + c + "' is a cut edge");
  for (const auto& e : g.edges()) {
    if (e.id == c || e.is_loop()) continue;
    if (is_bond(g, {c, e.id})) {
      throw PreconditionError("two_cycles_through: '" + c +
                              "' forms a 2-edge bond with '" + e.id + "'");
    }
  }

  auto paths = detail::two_flow(g, ce.u, ce.v, ci);
  if (!paths)
    throw Error("internal: c-type edge lacks two edge-disjoint detours");

  auto close = [&](const Trail& path) {
    std::vector<TrailStep> steps = path.steps();
    steps.push_back({c, false});  // return v -> u along c
    return Cycle::of(g, std::move(steps));
  };
  return {close(paths->first), close(paths->second)};
}

}  // namespace torelli
