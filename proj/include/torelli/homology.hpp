#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "torelli/edge_classes.hpp"
#include "torelli/intmatrix.hpp"
#include "torelli/multigraph.hpp"
#include "torelli/surface.hpp"
#include "torelli/torelli.hpp"

namespace torelli {

/// The standard integer symplectic lattice of rank 2g: g hyperbolic
/// coordinate pairs (x, y) with <x_i, y_j> = delta_ij and all other basis
/// pairings zero.  Only the pair layout varies between uses.
class SymplecticLattice {
 public:
  /// Interleaved layout a_1, b_1, a_2, b_2, ...; the usual basis order.
  static SymplecticLattice standard(std::size_t g) {
    SymplecticLattice lattice;
    lattice.rank_ = 2 * g;
    for (std::size_t i = 0; i < g; ++i)
      lattice.pairs_.emplace_back(2 * i, 2 * i + 1);
    return lattice;
  }

  /// Layout x_0..x_{k-1}, y_0..y_{k-1}, then one coordinate pair per
  /// handle: the layout the graph model uses.
  static SymplecticLattice blocked(std::size_t cycle_rank,
                                   std::size_t handles) {
    SymplecticLattice lattice;
    lattice.rank_ = 2 * (cycle_rank + handles);
    for (std::size_t j = 0; j < cycle_rank; ++j)
      lattice.pairs_.emplace_back(j, cycle_rank + j);
    for (std::size_t t = 0; t < handles; ++t)
      lattice.pairs_.emplace_back(2 * cycle_rank + 2 * t,
                                  2 * cycle_rank + 2 * t + 1);
    return lattice;
  }

  std::size_t rank() const { return rank_; }
  std::size_t genus() const { return pairs_.size(); }

  const std::vector<std::pair<std::size_t, std::size_t>>& hyperbolic_pairs()
      const {
    return pairs_;
  }

  /// The alternating form <v, w> = v^T J w.
  Int pairing(const IntVector& v, const IntVector& w) const {
    require_vector(v);
    require_vector(w);
    Int out = 0;
    for (const auto& [x, y] : pairs_) out += v[x] * w[y] - v[y] * w[x];
    return out;
  }

  /// Matrix J of the form; J^T = -J and det J = 1.
  IntMatrix form_matrix() const {
    IntMatrix j(rank_, rank_);
    for (const auto& [x, y] : pairs_) {
      j.at(x, y) = 1;
      j.at(y, x) = -1;
    }
    return j;
  }

  /// Row vector v^T J, the functional <v, .> in coordinates.
  IntVector form_functional(const IntVector& v) const {
    require_vector(v);
    IntVector q(rank_);
    for (const auto& [x, y] : pairs_) {
      q[y] = v[x];
      q[x] = -v[y];
    }
    return q;
  }

  void require_vector(const IntVector& v) const {
    if (v.size() != rank_)
      throw PreconditionError("vector does not live in this lattice");
  }

  friend bool operator==(const SymplecticLattice&,
                         const SymplecticLattice&) = default;

 private:
  SymplecticLattice() = default;

  std::size_t rank_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Homology coordinates for a surface model: the class of the curve
/// behind every edge, plus one dual class per independent cycle of the
/// graph.  Curve classes live in the isotropic span of the x coordinates,
/// so they are pairwise orthogonal by construction.
class HomologyModel {
 public:
  const SymplecticLattice& lattice() const { return lattice_; }
  const Multigraph& graph() const { return graph_; }
  std::size_t cycle_rank() const { return nontree_.size(); }

  const IntVector& curve_class(const EdgeId& id) const {
    auto it = curve_class_.find(id);
    if (it == curve_class_.end())
      throw GraphError("no curve class for edge '" + id + "'");
    return it->second;
  }

  /// Class of the dual curve crossing the j-th non-tree edge once.
  const IntVector& dual_class(std::size_t j) const { return duals_.at(j); }

  const std::vector<EdgeId>& nontree_edges() const { return nontree_; }
  const SpanningTree& tree() const { return tree_; }

 private:
  friend HomologyModel build_model(const SurfaceModel&);

  HomologyModel(Multigraph graph, SymplecticLattice lattice, SpanningTree tree)
      : graph_(std::move(graph)),
        lattice_(std::move(lattice)),
        tree_(std::move(tree)) {}

  Multigraph graph_;
  SymplecticLattice lattice_;
  SpanningTree tree_;
  std::map<EdgeId, IntVector> curve_class_;
  std::vector<IntVector> duals_;
  std::vector<EdgeId> nontree_;
};

/// Builds homology coordinates from the deterministic spanning tree: the
/// j-th non-tree edge maps to x_j, a tree edge to its signed fundamental
/// cycle memberships, and the dual of cycle j to y_j.  Vectors within a
/// b-class are sign-normalized to a common value with positive leading
/// coordinate; bridges come out zero.
inline HomologyModel build_model(const SurfaceModel& s) {
  const auto report = validate(s);
  if (!report.valid()) {
    throw PreconditionError("build_model: invalid surface model: " +
                            report.violations.front().describe());
  }

  const Multigraph& g = s.graph();
  SpanningTree tree = spanning_tree(g);
  const std::size_t k = tree.rank();
  SymplecticLattice lattice =
      SymplecticLattice::blocked(k, s.total_vertex_genus());

  HomologyModel model(g, lattice, std::move(tree));
  model.nontree_ = model.tree_.nontree_edges();

  const std::size_t dim = lattice.rank();
  std::map<EdgeId, IntVector> raw;
  for (const auto& e : g.edges()) raw.emplace(e.id, IntVector(dim));
  for (std::size_t j = 0; j < k; ++j) {
    for (const TrailStep& step : model.tree_.fundamental_trail(j).steps())
      raw.at(step.edge)[j] = step.forward ? 1 : -1;
  }

  const EdgeClassification cls = classify(g);
  for (const EdgeId& a : cls.a_edges()) {
    if (!is_zero_vector(raw.at(a)))
      throw Error("internal: cut edge with nonzero curve class");
  }

  auto negated = [](const IntVector& v) {
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
  };

  for (std::size_t j = 0; j < cls.r(); ++j) {
    const auto& group = cls.b_classes()[j];
    IntVector common = raw.at(group.front());
    // Normalize the class vector to a positive leading coordinate, so the
    // unique non-tree member (if any) keeps its +x_j orientation.
    for (const Int& coefficient : common) {
      if (coefficient > 0) break;
      if (coefficient < 0) {
        common = negated(common);
        break;
      }
    }
    if (is_zero_vector(common))
      throw Error("internal: b-type edge with zero curve class");
    const IntVector flipped = negated(common);
    for (const EdgeId& member : group) {
      const IntVector& candidate = raw.at(member);
      if (candidate != common && candidate != flipped) {
        throw Error(
            "internal: b-class vectors disagree beyond an orientation flip");
      }
      raw.at(member) = common;
    }
  }

  model.curve_class_ = std::move(raw);
  for (std::size_t j = 0; j < k; ++j) {
    IntVector dual(dim);
    dual[k + j] = 1;
    model.duals_.push_back(std::move(dual));
  }
  return model;
}

/// Matrix of the multitwist's action on homology:
/// w  |->  w + sum_i e_i <[edge_i], w> [edge_i].
inline IntMatrix twist_action(const HomologyModel& model, const Multitwist& m) {
  if (!(m.graph() == model.graph()))
    throw PreconditionError("twist_action: multitwist is on another graph");
  const std::size_t dim = model.lattice().rank();
  IntMatrix action = IntMatrix::identity(dim);
  for (const auto& e : model.graph().edges()) {
    const Int& exponent = m.exponent(e.id);
    if (exponent == 0) continue;
    const IntVector& u = model.curve_class(e.id);
    if (is_zero_vector(u)) continue;
    const IntVector q = model.lattice().form_functional(u);
    for (std::size_t i = 0; i < dim; ++i) {
      if (u[i] == 0) continue;
      const Int scale = exponent * u[i];
      for (std::size_t j = 0; j < dim; ++j) {
        if (q[j] == 0) continue;
        action.at(i, j) += scale * q[j];
      }
    }
  }
  return action;
}

/// Whether the multitwist acts as the identity on homology.
inline bool is_identity_action(const HomologyModel& model,
                               const Multitwist& m) {
  return twist_action(model, m).is_identity();
}

/// Rank of the integer kernel of the linear map
/// (exponent vector) |-> (twist_action - identity), by exact elimination.
inline std::size_t action_kernel_rank(const HomologyModel& model) {
  const std::size_t dim = model.lattice().rank();
  const std::size_t m = model.graph().edge_count();
  IntMatrix columns(dim * dim, m);
  std::size_t col = 0;
  for (const auto& e : model.graph().edges()) {
    const IntVector& u = model.curve_class(e.id);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        columns.at(i * dim + j, col) = u[i] * u[j];
    ++col;
  }
  return m - columns.rank();
}

/// The transvection power T^m along v: w |-> w + m <v, w> v.
inline IntMatrix transvection(const SymplecticLattice& lattice,
                              const IntVector& v, const Int& exponent) {
  lattice.require_vector(v);
  const std::size_t dim = lattice.rank();
  IntMatrix out = IntMatrix::identity(dim);
  const IntVector q = lattice.form_functional(v);
  for (std::size_t i = 0; i < dim; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j)
      out.at(i, j) += exponent * v[i] * q[j];
  }
  return out;
}

namespace detail {

inline bool is_primitive(const IntVector& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  return g == 1;
}

inline bool proportional(const IntVector& a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] - a[j] * b[i] != 0) return false;
  return true;
}

}  // namespace detail

/// Product T_1^{m_1} T_2^{m_2} ... T_n^{m_n} of transvection powers along
/// primitive, pairwise linearly independent, pairwise symplectically
/// orthogonal vectors.  Violated preconditions are reported per offending
/// vector or pair.
inline IntMatrix multitransvection(
    const SymplecticLattice& lattice,
    const std::vector<std::pair<IntVector, Int>>& factors) {
  std::string complaints;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    lattice.require_vector(factors[i].first);
    if (!detail::is_primitive(factors[i].first))
      complaints += "vector " + std::to_string(i + 1) + " is not primitive; ";
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      if (lattice.pairing(factors[i].first, factors[j].first) != 0) {
        complaints += "vectors " + std::to_string(i + 1) + " and " +
                      std::to_string(j + 1) + " are not orthogonal; ";
      }
      if (detail::proportional(factors[i].first, factors[j].first)) {
        complaints += "vectors " + std::to_string(i + 1) + " and " +
                      std::to_string(j + 1) + " are linearly dependent; ";
      }
    }
  }
  if (!complaints.empty()) {
    complaints.resize(complaints.size() - 2);
    throw PreconditionError("multitransvection: " + complaints);
  }

  IntMatrix product = IntMatrix::identity(lattice.rank());
  for (const auto& [v, m] : factors)
    product = product * transvection(lattice, v, m);
  return product;
}

/// A fixed instance disproving the naive symplectic converse: four
/// distinct primitive pairwise orthogonal vectors whose transvection
/// powers with exponents (1, -3, 3, -1) compose to the identity.
struct ConjectureWitness {
  SymplecticLattice lattice;
  std::vector<std::pair<IntVector, Int>> factors;
  IntMatrix product;
};

inline ConjectureWitness conjecture_counterexample() {
  SymplecticLattice lattice = SymplecticLattice::standard(2);
  // Basis order a_1, b_1, a_2, b_2; vectors v_i = a_1 + i a_2.
  std::vector<std::pair<IntVector, Int>> factors;
  const Int exponents[4] = {1, -3, 3, -1};
  for (std::size_t i = 1; i <= 4; ++i) {
    IntVector v(4);
    v[0] = 1;
    v[2] = static_cast<long>(i);
    factors.emplace_back(std::move(v), exponents[i - 1]);
  }
  IntMatrix product = multitransvection(lattice, factors);
  return {std::move(lattice), std::move(factors), std::move(product)};
}

}  // namespace torelli
