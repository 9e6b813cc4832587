#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "torelli/multigraph.hpp"

namespace torelli {

enum class EdgeType { a, b, c };

/// Partition of the edge set into a-type (cut edges), b-type classes
/// (maximal sets of non-cut edges pairwise forming 2-edge bonds), and
/// c-type edges (non-cut edges in no 2-edge bond).
class EdgeClassification {
 public:
  EdgeClassification(std::set<EdgeId> a_edges,
                     std::vector<std::vector<EdgeId>> b_classes,
                     std::set<EdgeId> c_edges)
      : a_edges_(std::move(a_edges)),
        b_classes_(std::move(b_classes)),
        c_edges_(std::move(c_edges)) {
    for (auto& cls : b_classes_) std::sort(cls.begin(), cls.end());
    std::sort(b_classes_.begin(), b_classes_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    for (std::size_t j = 0; j < b_classes_.size(); ++j)
      for (const EdgeId& id : b_classes_[j]) b_index_.emplace(id, j);
  }

  const std::set<EdgeId>& a_edges() const { return a_edges_; }
  const std::vector<std::vector<EdgeId>>& b_classes() const {
    return b_classes_;
  }
  const std::set<EdgeId>& c_edges() const { return c_edges_; }

  std::size_t p() const { return a_edges_.size(); }
  std::size_t r() const { return b_classes_.size(); }
  std::size_t q(std::size_t j) const { return b_classes_.at(j).size(); }
  std::size_t s() const { return c_edges_.size(); }

  /// Least identifier of the j-th b-class.
  const EdgeId& representative(std::size_t j) const {
    return b_classes_.at(j).front();
  }

  EdgeType type_of(const EdgeId& id) const {
    if (a_edges_.count(id)) return EdgeType::a;
    if (b_index_.count(id)) return EdgeType::b;
    if (c_edges_.count(id)) return EdgeType::c;
    throw GraphError("edge '" + id + "' is not classified");
  }

  std::optional<std::size_t> b_class_of(const EdgeId& id) const {
    auto it = b_index_.find(id);
    if (it == b_index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::set<EdgeId> a_edges_;
  std::vector<std::vector<EdgeId>> b_classes_;
  std::set<EdgeId> c_edges_;
  std::map<EdgeId, std::size_t> b_index_;
};

/// Classifies the edges of g: a = cut edges; b-classes = components of
/// the "forms a 2-edge bond" relation on the remaining edges, kept when
/// of size >= 2; everything else is c.  Loops always land in c.
inline EdgeClassification classify(const Multigraph& g) {
  const std::set<EdgeId> a = bridges(g);
  const auto pairs = two_edge_bond_pairs(g);

  std::map<EdgeId, EdgeId> leader;
  for (const auto& e : g.edges())
    if (!a.count(e.id)) leader.emplace(e.id, e.id);
  auto find = [&](EdgeId x) {
    while (leader[x] != x) {
      leader[x] = leader[leader[x]];
      x = leader[x];
    }
    return x;
  };
  for (const auto& [e, f] : pairs) {
    EdgeId re = find(e), rf = find(f);
    if (re != rf) leader[std::max(re, rf)] = std::min(re, rf);
  }

  std::map<EdgeId, std::vector<EdgeId>> groups;
  for (const auto& [id, unused] : leader) groups[find(id)].push_back(id);

  std::vector<std::vector<EdgeId>> b_classes;
  std::set<EdgeId> c_edges;
  for (auto& [rep, members] : groups) {
    if (members.size() >= 2) {
      b_classes.push_back(std::move(members));
    } else {
      c_edges.insert(members.front());
    }
  }
  return EdgeClassification(a, std::move(b_classes), std::move(c_edges));
}

namespace detail {

/// Connectivity machinery local to verify_classification, deliberately
/// sharing no code with classify's path.
class VerifierGraph {
 public:
  explicit VerifierGraph(const Multigraph& g) : vertex_count_(g.vertex_count()) {
    for (const auto& e : g.edges()) ends_.push_back({e.u, e.v});
  }

  std::size_t component_count(const std::set<std::size_t>& removed) const {
    std::vector<std::size_t> parent(vertex_count_);
    for (std::size_t i = 0; i < vertex_count_; ++i) parent[i] = i;
    auto root = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (std::size_t i = 0; i < ends_.size(); ++i) {
      if (removed.count(i)) continue;
      const auto [u, v] = ends_[i];
      const std::size_t ru = root(u), rv = root(v);
      if (ru != rv) parent[ru] = rv;
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < vertex_count_; ++i) roots.insert(root(i));
    return roots.size();
  }

  bool disconnects(std::size_t edge) const {
    return component_count({edge}) > 1;
  }

  /// 2-edge bond test from first principles: exactly two components and
  /// both removed edges joining them.
  bool pair_is_bond(std::size_t e, std::size_t f) const {
    if (component_count({e, f}) != 2) return false;
    std::vector<std::size_t> parent(vertex_count_);
    for (std::size_t i = 0; i < vertex_count_; ++i) parent[i] = i;
    auto root = [&](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (std::size_t i = 0; i < ends_.size(); ++i) {
      if (i == e || i == f) continue;
      const auto [u, v] = ends_[i];
      const std::size_t ru = root(u), rv = root(v);
      if (ru != rv) parent[ru] = rv;
    }
    return root(ends_[e].first) != root(ends_[e].second) &&
           root(ends_[f].first) != root(ends_[f].second);
  }

 private:
  std::size_t vertex_count_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
};

}  // namespace detail

/// Re-derives every classification invariant from first principles and
/// reports whether cls satisfies them all for g.
inline bool verify_classification(const Multigraph& g,
                                  const EdgeClassification& cls) {
  // Exact partition of E(g).
  std::map<EdgeId, int> seen;
  for (const auto& e : g.edges()) seen[e.id] = 0;
  auto mark = [&](const EdgeId& id) {
    auto it = seen.find(id);
    if (it == seen.end()) return false;  // indexes a non-edge
    ++it->second;
    return true;
  };
  for (const EdgeId& id : cls.a_edges())
    if (!mark(id)) return false;
  for (const auto& group : cls.b_classes())
    for (const EdgeId& id : group)
      if (!mark(id)) return false;
  for (const EdgeId& id : cls.c_edges())
    if (!mark(id)) return false;
  for (const auto& [id, count] : seen)
    if (count != 1) return false;

  const detail::VerifierGraph vg(g);
  auto index_of = [&](const EdgeId& id) { return g.edge_index(id); };

  // a-edges are exactly the edges whose removal disconnects.
  for (const auto& e : g.edges()) {
    const bool cut = vg.disconnects(index_of(e.id));
    const bool labelled_a = cls.a_edges().count(e.id) != 0;
    if (cut != labelled_a) return false;
  }

  // b-classes: size >= 2, pairwise bonds, and maximal.
  for (std::size_t j = 0; j < cls.r(); ++j) {
    const auto& group = cls.b_classes()[j];
    if (group.size() < 2) return false;
    for (std::size_t x = 0; x < group.size(); ++x)
      for (std::size_t y = x + 1; y < group.size(); ++y)
        if (!vg.pair_is_bond(index_of(group[x]), index_of(group[y])))
          return false;
    for (const auto& e : g.edges()) {
      if (cls.a_edges().count(e.id)) continue;
      if (std::find(group.begin(), group.end(), e.id) != group.end()) continue;
      bool bonds_with_all = true;
      for (const EdgeId& member : group) {
        if (!vg.pair_is_bond(index_of(e.id), index_of(member))) {
          bonds_with_all = false;
          break;
        }
      }
      if (bonds_with_all) return false;  // group was not maximal
    }
  }

  // c-edges form a 2-edge bond with no other edge.
  for (const EdgeId& id : cls.c_edges()) {
    for (const auto& e : g.edges()) {
      if (e.id == id) continue;
      if (vg.pair_is_bond(index_of(id), index_of(e.id))) return false;
    }
  }
  return true;
}

}  // namespace torelli
