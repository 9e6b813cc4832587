#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "torelli/edge_classes.hpp"
#include "torelli/multigraph.hpp"
#include "torelli/torelli.hpp"

namespace torelli {

/// A reduction system graph together with the genus of the cut-surface
/// component behind each vertex.  The global genus is always derived,
/// never stored.
class SurfaceModel {
 public:
  SurfaceModel(Multigraph graph, std::map<VertexId, std::size_t> genus_of)
      : graph_(std::move(graph)) {
    genus_.reserve(graph_.vertex_count());
    for (const VertexId& id : graph_.vertex_ids()) {
      auto it = genus_of.find(id);
      if (it == genus_of.end())
        throw PreconditionError("no genus assigned to vertex '" + id + "'");
      genus_.push_back(it->second);
    }
    if (genus_of.size() != graph_.vertex_count())
      throw PreconditionError("genus map mentions unknown vertices");
  }

  const Multigraph& graph() const { return graph_; }

  std::size_t genus_of(const VertexId& id) const {
    return genus_[graph_.vertex_index(id)];
  }
  std::size_t genus_of_index(std::size_t vertex) const {
    return genus_.at(vertex);
  }

  std::size_t total_vertex_genus() const {
    std::size_t total = 0;
    for (std::size_t g : genus_) total += g;
    return total;
  }

  friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
    return a.graph_ == b.graph_ && a.genus_ == b.genus_;
  }

 private:
  Multigraph graph_;
  std::vector<std::size_t> genus_;
};

/// Genus of the closed surface the model describes, from Euler
/// characteristic additivity over the cut pieces.
inline std::size_t genus(const SurfaceModel& s) {
  const std::size_t g =
      s.graph().cycle_rank() + s.total_vertex_genus();
  // Cross-check 2g - 2 against the per-component census.
  long long chi_sum = 0;
  for (std::size_t v = 0; v < s.graph().vertex_count(); ++v) {
    chi_sum += 2 * static_cast<long long>(s.genus_of_index(v)) +
               static_cast<long long>(s.graph().degree(v)) - 2;
  }
  if (chi_sum != 2 * static_cast<long long>(g) - 2)
    throw Error("internal: inconsistent Euler characteristic");
  return g;
}

struct SurfaceViolation {
  enum class Kind {
    disk_component,     ///< genus 0, one boundary curve
    annulus_component,  ///< genus 0, two boundary curves
    genus_bound,        ///< genus below rank(pi_1) + #(degree <= 2 vertices)
  };

  Kind kind;
  VertexId vertex;  ///< offending vertex; empty for genus_bound

  std::string describe() const {
    switch (kind) {
      case Kind::disk_component:
        return "vertex " + vertex +
               ": genus-0 component with one boundary curve (disk)";
      case Kind::annulus_component:
        return "vertex " + vertex +
               ": genus-0 component with two boundary curves (annulus)";
      default:
        return "genus is below rank(pi_1) plus the number of vertices of "
               "degree at most 2";
    }
  }
};

struct SurfaceValidation {
  std::vector<SurfaceViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks that no genus-0 vertex has degree 1 or 2 (the curves behind the
/// edges would be trivial or pairwise isotopic), and the genus lower
/// bound for every graph except a single vertex with no edges or one loop.
inline SurfaceValidation validate(const SurfaceModel& s) {
  SurfaceValidation report;
  const Multigraph& g = s.graph();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (s.genus_of_index(v) != 0) continue;
    const std::size_t d = g.degree(v);
    if (d == 1)
      report.violations.push_back(
          {SurfaceViolation::Kind::disk_component, g.vertex_id(v)});
    else if (d == 2)
      report.violations.push_back(
          {SurfaceViolation::Kind::annulus_component, g.vertex_id(v)});
  }

  const bool exempt =
      g.vertex_count() == 1 &&
      (g.edge_count() == 0 || (g.edge_count() == 1 && g.edge(0).is_loop()));
  if (!exempt) {
    std::size_t low_degree = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) <= 2) ++low_degree;
    const std::size_t genus_value = g.cycle_rank() + s.total_vertex_genus();
    if (genus_value < g.cycle_rank() + low_degree) {
      report.violations.push_back(
          {SurfaceViolation::Kind::genus_bound, VertexId{}});
    }
  }
  return report;
}

/// Number of cut-surface components that are neither a pair of pants
/// (genus 0, three boundary curves) nor a one-holed torus (genus 1, one
/// boundary curve).
inline std::size_t omega(const SurfaceModel& s) {
  std::size_t count = 0;
  for (std::size_t v = 0; v < s.graph().vertex_count(); ++v) {
    const std::size_t gamma = s.genus_of_index(v);
    const std::size_t b = s.graph().degree(v);
    const bool pants = (gamma == 0 && b == 3);
    const bool one_holed_torus = (gamma == 1 && b == 1);
    if (!pants && !one_holed_torus) ++count;
  }
  return count;
}

/// Rank and both rank bounds, with slacks.  The 2g-3 clause only applies
/// when the genus is at least 2.
struct BoundsReport {
  std::size_t rank = 0;
  std::size_t vertex_count = 0;
  std::size_t omega_count = 0;
  std::size_t genus_value = 0;

  bool rank_le_vertices_holds = false;
  long long rank_vertices_slack = 0;  ///< (nu - 1) - rank

  bool genus_clause_applies = false;  ///< genus >= 2
  bool rank_omega_holds = false;      ///< rank + omega <= 2g - 3
  long long rank_omega_slack = 0;     ///< (2g - 3) - (rank + omega)
};

inline BoundsReport check_bounds(const SurfaceModel& s) {
  BoundsReport report;
  report.rank = torelli_rank(classify(s.graph()));
  report.vertex_count = s.graph().vertex_count();
  report.omega_count = omega(s);
  report.genus_value = genus(s);

  const auto rank = static_cast<long long>(report.rank);
  report.rank_vertices_slack =
      static_cast<long long>(report.vertex_count) - 1 - rank;
  report.rank_le_vertices_holds = report.rank_vertices_slack >= 0;

  report.genus_clause_applies = report.genus_value >= 2;
  if (report.genus_clause_applies) {
    report.rank_omega_slack =
        2 * static_cast<long long>(report.genus_value) - 3 - rank -
        static_cast<long long>(report.omega_count);
    report.rank_omega_holds = report.rank_omega_slack >= 0;
  }
  return report;
}

namespace detail {

inline std::string padded_id(const std::string& prefix, std::size_t index,
                             std::size_t width) {
  std::string digits = std::to_string(index);
  if (digits.size() < width)
    digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

inline std::size_t id_width(std::size_t count) {
  std::size_t width = 2;
  for (std::size_t limit = 100; limit < count; limit *= 10) ++width;
  return width;
}

/// Deterministic replacement for the unportable standard distributions.
inline std::uint64_t draw_below(std::mt19937_64& engine, std::uint64_t n) {
  return engine() % n;
}

}  // namespace detail

/// The extremal model of a given genus: a caterpillar tree with g
/// one-holed-torus leaves and g-2 trivalent genus-0 internal vertices,
/// hence 2g-3 edges, all a-type.
inline SurfaceModel gen_extremal(std::size_t g) {
  if (g < 2) throw PreconditionError("gen_extremal: genus must be >= 2");

  std::vector<VertexId> vertices;
  std::vector<EdgeSpec> edges;
  std::map<VertexId, std::size_t> genus_of;

  const std::size_t internal = g - 2;
  const std::size_t edge_width = detail::id_width(2 * g - 3);
  const std::size_t vertex_width = detail::id_width(g);
  std::size_t next_edge = 0;

  std::vector<VertexId> spine;
  for (std::size_t i = 0; i < internal; ++i) {
    VertexId id = detail::padded_id("p", i, vertex_width);
    spine.push_back(id);
    vertices.push_back(id);
    genus_of[id] = 0;
    if (i > 0)
      edges.push_back({detail::padded_id("e", next_edge++, edge_width),
                       spine[i - 1], spine[i]});
  }

  std::size_t next_leaf = 0;
  auto attach_leaves = [&](const VertexId& to, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      VertexId leaf = detail::padded_id("t", next_leaf++, vertex_width);
      vertices.push_back(leaf);
      genus_of[leaf] = 1;
      edges.push_back(
          {detail::padded_id("e", next_edge++, edge_width), to, leaf});
    }
  };

  if (internal == 0) {
    // g = 2: two one-holed tori glued along a single separating curve.
    VertexId left = detail::padded_id("t", next_leaf++, vertex_width);
    VertexId right = detail::padded_id("t", next_leaf++, vertex_width);
    vertices.push_back(left);
    vertices.push_back(right);
    genus_of[left] = genus_of[right] = 1;
    edges.push_back(
        {detail::padded_id("e", next_edge++, edge_width), left, right});
  } else {
    for (std::size_t i = 0; i < internal; ++i) {
      const std::size_t spine_degree =
          internal == 1 ? 0 : (i == 0 || i + 1 == internal ? 1 : 2);
      attach_leaves(spine[i], 3 - spine_degree);
    }
  }

  return SurfaceModel(Multigraph(std::move(vertices), std::move(edges)),
                      std::move(genus_of));
}

/// A seeded random valid model of the requested genus: random connected
/// multigraph (loops and parallel edges allowed), minimal genera where a
/// degree forces genus >= 1, remaining genus sprinkled randomly.  The
/// same (g, seed) always yields the same model.
inline SurfaceModel gen_random(std::size_t g, std::uint64_t seed) {
  if (g < 2) throw PreconditionError("gen_random: genus must be >= 2");
  std::mt19937_64 engine(seed);

  for (;;) {
    const std::size_t max_vertices = std::min<std::size_t>(2 * g, 7);
    const std::size_t nu =
        1 + static_cast<std::size_t>(detail::draw_below(engine, max_vertices));

    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (std::size_t v = 1; v < nu; ++v)
      ends.emplace_back(detail::draw_below(engine, v), v);
    const std::size_t extra =
        static_cast<std::size_t>(detail::draw_below(engine, g + 1));
    for (std::size_t i = 0; i < extra; ++i) {
      const std::size_t a =
          static_cast<std::size_t>(detail::draw_below(engine, nu));
      const std::size_t b =
          static_cast<std::size_t>(detail::draw_below(engine, nu));
      ends.emplace_back(a, b);
    }

    std::vector<std::size_t> degree(nu, 0);
    for (const auto& [a, b] : ends) {
      degree[a] += 1;
      degree[b] += 1;  // loops count twice
    }

    std::vector<std::size_t> gamma(nu, 0);
    std::size_t forced = 0;
    for (std::size_t v = 0; v < nu; ++v) {
      if (degree[v] == 1 || degree[v] == 2) {
        gamma[v] = 1;
        ++forced;
      }
    }
    if (extra + forced > g) continue;  // redraw: drawn graph needs more genus

    for (std::size_t left = g - extra - forced; left > 0; --left)
      gamma[detail::draw_below(engine, nu)] += 1;

    const std::size_t vertex_width = detail::id_width(nu);
    const std::size_t edge_width = detail::id_width(ends.size());
    std::vector<VertexId> vertices;
    std::map<VertexId, std::size_t> genus_of;
    for (std::size_t v = 0; v < nu; ++v) {
      vertices.push_back(detail::padded_id("v", v, vertex_width));
      genus_of[vertices.back()] = gamma[v];
    }
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < ends.size(); ++i) {
      edges.push_back({detail::padded_id("e", i, edge_width),
                       vertices[ends[i].first], vertices[ends[i].second]});
    }

    SurfaceModel model(Multigraph(std::move(vertices), std::move(edges)),
                       std::move(genus_of));
    if (!validate(model).valid() || genus(model) != g)
      throw Error("internal: generated model failed its own contract");
    return model;
  }
}

}  // namespace torelli
