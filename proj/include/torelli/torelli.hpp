#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "torelli/edge_classes.hpp"
#include "torelli/intmatrix.hpp"
#include "torelli/multigraph.hpp"

namespace torelli {

using ExponentMap = std::map<EdgeId, Int>;

namespace detail {

inline void require_full_exponent_map(const Multigraph& g,
                                      const ExponentMap& exponents) {
  if (exponents.size() != g.edge_count())
    throw PreconditionError("exponent map does not match the edge set");
  for (const auto& e : g.edges())
    if (!exponents.count(e.id))
      throw PreconditionError("no exponent for edge '" + e.id + "'");
}

}  // namespace detail

/// A multitwist: one integer twist exponent per edge of a reduction
/// system graph.
class Multitwist {
 public:
  Multitwist(Multigraph graph, ExponentMap exponents)
      : graph_(std::move(graph)), exponents_(std::move(exponents)) {
    detail::require_full_exponent_map(graph_, exponents_);
  }

  const Multigraph& graph() const { return graph_; }
  const ExponentMap& exponents() const { return exponents_; }
  const Int& exponent(const EdgeId& id) const { return exponents_.at(id); }

 private:
  Multigraph graph_;
  ExponentMap exponents_;
};

/// An integer power of a Dehn twist about a separating (a-type) curve.
struct SeparatingTwist {
  EdgeId edge;
  Int exponent;
};

/// An integer power of a bounding-pair map D_plus * D_minus^{-1} about two
/// curves of a common b-class.
struct BoundingPairMap {
  EdgeId edge_plus;
  EdgeId edge_minus;
  Int exponent;
};

using TwistFactor = std::variant<SeparatingTwist, BoundingPairMap>;

/// The first violated membership condition, in the fixed order: c-type
/// edges by identifier, then b-classes by index.
struct TorelliViolation {
  enum class Kind { nonzero_c_exponent, nonzero_b_class_sum };

  Kind kind;
  EdgeId edge;                 ///< offending c-edge (c kind)
  std::size_t b_class = 0;     ///< offending class index (b kind)
  EdgeId representative;       ///< class representative (b kind)
  Int value;                   ///< the nonzero exponent or sum

  std::string describe() const {
    if (kind == Kind::nonzero_c_exponent)
      return "c-type edge " + edge + " has nonzero exponent";
    return "b-class " + std::to_string(b_class) + " (representative " +
           representative + ") has nonzero exponent sum";
  }
};

/// Thrown by decompose on inputs outside the Torelli multitwist group.
class NotInTorelliError : public Error {
 public:
  explicit NotInTorelliError(TorelliViolation violation)
      : Error("not a Torelli multitwist: " + violation.describe()),
        violation_(std::move(violation)) {}

  const TorelliViolation& violation() const { return violation_; }

 private:
  TorelliViolation violation_;
};

/// First violated condition of the membership criterion, or nullopt when
/// every c-exponent is zero and every b-class exponent sum is zero.
inline std::optional<TorelliViolation> torelli_violation(
    const Multigraph& g, const ExponentMap& w, const EdgeClassification& cls) {
  detail::require_full_exponent_map(g, w);
  for (const EdgeId& c : cls.c_edges()) {
    const Int& value = w.at(c);
    if (value != 0) {
      TorelliViolation v;
      v.kind = TorelliViolation::Kind::nonzero_c_exponent;
      v.edge = c;
      v.value = value;
      return v;
    }
  }
  for (std::size_t j = 0; j < cls.r(); ++j) {
    Int sum = 0;
    for (const EdgeId& member : cls.b_classes()[j]) sum += w.at(member);
    if (sum != 0) {
      TorelliViolation v;
      v.kind = TorelliViolation::Kind::nonzero_b_class_sum;
      v.b_class = j;
      v.representative = cls.representative(j);
      v.value = sum;
      return v;
    }
  }
  return std::nullopt;
}

/// Whether the weighting w sums to zero over every cycle of g: true iff
/// every c-type weight is zero and every b-class weight sum is zero.
/// a-type weights are unconstrained.
inline bool zero_on_all_cycles(const Multigraph& g, const ExponentMap& w,
                               const EdgeClassification& cls) {
  return !torelli_violation(g, w, cls).has_value();
}

/// Independent oracle: literally enumerates every cycle and sums w over
/// it.  Subject to the enumerate_cycles size guard.
inline bool zero_on_all_cycles_oracle(const Multigraph& g,
                                      const ExponentMap& w,
                                      std::size_t max_edges = 16) {
  detail::require_full_exponent_map(g, w);
  for (const Cycle& cycle : enumerate_cycles(g, max_edges)) {
    Int sum = 0;
    for (const EdgeId& id : cycle.edges()) sum += w.at(id);
    if (sum != 0) return false;
  }
  return true;
}

inline std::optional<TorelliViolation> torelli_violation(const Multitwist& m) {
  return torelli_violation(m.graph(), m.exponents(), classify(m.graph()));
}

/// Membership of the multitwist in the Torelli group.
inline bool is_torelli(const Multitwist& m) {
  return !torelli_violation(m).has_value();
}

/// Rank of the Torelli multitwist group: p + (q_1 - 1) + ... + (q_r - 1).
inline std::size_t torelli_rank(const EdgeClassification& cls) {
  std::size_t rank = cls.p();
  for (std::size_t j = 0; j < cls.r(); ++j) rank += cls.q(j) - 1;
  return rank;
}

/// An explicit free basis of the accepted exponent vectors: one unit
/// separating twist per a-edge, and per b-class one difference generator
/// (+1 on each non-representative member, -1 on the representative).
inline std::vector<Multitwist> torelli_basis(const Multigraph& g,
                                             const EdgeClassification& cls) {
  std::vector<Multitwist> basis;
  ExponentMap zero;
  for (const auto& e : g.edges()) zero[e.id] = 0;

  for (const EdgeId& a : cls.a_edges()) {
    ExponentMap w = zero;
    w[a] = 1;
    basis.emplace_back(g, std::move(w));
  }
  for (std::size_t j = 0; j < cls.r(); ++j) {
    const auto& group = cls.b_classes()[j];
    for (std::size_t k = 1; k < group.size(); ++k) {
      ExponentMap w = zero;
      w[group[k]] = 1;
      w[group.front()] = -1;
      basis.emplace_back(g, std::move(w));
    }
  }
  return basis;
}

/// Canonical factorization of a Torelli multitwist into separating twists
/// on a-edges and bounding-pair maps within b-classes (each class paired
/// against its representative).  Throws NotInTorelliError otherwise.
inline std::vector<TwistFactor> decompose(const Multitwist& m) {
  const EdgeClassification cls = classify(m.graph());
  if (auto violation = torelli_violation(m.graph(), m.exponents(), cls))
    throw NotInTorelliError(*violation);

  std::vector<TwistFactor> factors;
  for (const EdgeId& a : cls.a_edges()) {
    const Int& alpha = m.exponent(a);
    if (alpha != 0) factors.push_back(SeparatingTwist{a, alpha});
  }
  for (std::size_t j = 0; j < cls.r(); ++j) {
    const auto& group = cls.b_classes()[j];
    for (std::size_t k = 1; k < group.size(); ++k) {
      const Int& beta = m.exponent(group[k]);
      if (beta != 0)
        factors.push_back(BoundingPairMap{group[k], group.front(), beta});
    }
  }
  return factors;
}

/// Exponent vector reproduced by a factor sequence: a separating twist
/// contributes its exponent to its edge; a bounding-pair map power n
/// contributes +n to edge_plus and -n to edge_minus.
inline ExponentMap recompose(const Multigraph& g,
                             const std::vector<TwistFactor>& factors) {
  ExponentMap w;
  for (const auto& e : g.edges()) w[e.id] = 0;
  for (const TwistFactor& factor : factors) {
    if (const auto* sep = std::get_if<SeparatingTwist>(&factor)) {
      w.at(sep->edge) += sep->exponent;
    } else {
      const auto& bp = std::get<BoundingPairMap>(factor);
      w.at(bp.edge_plus) += bp.exponent;
      w.at(bp.edge_minus) -= bp.exponent;
    }
  }
  return w;
}

/// Membership criterion for the level-m group: the same conditions taken
/// mod m.  Requires modulus >= 2.
inline bool is_gamma_m(const Multitwist& m, const Int& modulus) {
  if (modulus < 2)
    throw PreconditionError("is_gamma_m: modulus must be at least 2");
  const EdgeClassification cls = classify(m.graph());
  for (const EdgeId& c : cls.c_edges())
    if (m.exponent(c) % modulus != 0) return false;
  for (std::size_t j = 0; j < cls.r(); ++j) {
    Int sum = 0;
    for (const EdgeId& member : cls.b_classes()[j]) sum += m.exponent(member);
    if (sum % modulus != 0) return false;
  }
  return true;
}

}  // namespace torelli
