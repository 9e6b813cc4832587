#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "support/fixtures.hpp"
#include "support/random_graphs.hpp"
#include "torelli/homology.hpp"

using namespace torelli;

namespace {

SurfaceModel banana_model() {
  return SurfaceModel(fixtures::banana(), {{"u", 1}, {"v", 1}});
}

SurfaceModel star_model() {
  return SurfaceModel(fixtures::star3(),
                      {{"x", 0}, {"l1", 1}, {"l2", 1}, {"l3", 1}});
}

SurfaceModel theta_model() {
  return SurfaceModel(fixtures::theta(), {{"u", 1}, {"v", 1}});
}

SurfaceModel triangle_model() {
  return SurfaceModel(fixtures::triangle(), {{"u", 1}, {"v", 1}, {"w", 1}});
}

ExponentMap exponents(const Multigraph& g, std::vector<long long> values) {
  ExponentMap w;
  std::size_t i = 0;
  for (const auto& e : g.edges()) w[e.id] = values.at(i++);
  return w;
}

IntVector unit(std::size_t dim, std::size_t index, long long value = 1) {
  IntVector v(dim);
  v[index] = value;
  return v;
}

bool symplectic(const SymplecticLattice& lattice, const IntMatrix& m) {
  const IntMatrix j = lattice.form_matrix();
  return m.transposed() * j * m == j;
}

}  // namespace

TEST_CASE("symplectic lattice layouts") {
  const auto standard = SymplecticLattice::standard(2);
  CHECK(standard.rank() == 4);
  CHECK(standard.genus() == 2);
  const IntMatrix j = standard.form_matrix();
  CHECK(j.at(0, 1) == 1);
  CHECK(j.at(1, 0) == -1);
  CHECK(j.at(2, 3) == 1);
  // J^T = -J and pairing of the hyperbolic pair is 1
  const IntMatrix jt = j.transposed();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) CHECK(jt.at(i, k) == -j.at(i, k));
  CHECK(standard.pairing(unit(4, 0), unit(4, 1)) == 1);
  CHECK(standard.pairing(unit(4, 1), unit(4, 0)) == -1);
  CHECK(standard.pairing(unit(4, 0), unit(4, 2)) == 0);

  const auto blocked = SymplecticLattice::blocked(2, 1);
  CHECK(blocked.rank() == 6);
  CHECK(blocked.pairing(unit(6, 0), unit(6, 2)) == 1);  // x_0 against y_0
  CHECK(blocked.pairing(unit(6, 1), unit(6, 3)) == 1);  // x_1 against y_1
  CHECK(blocked.pairing(unit(6, 4), unit(6, 5)) == 1);  // handle pair
}

TEST_CASE("build_model on the banana graph") {
  const HomologyModel model = build_model(banana_model());
  CHECK(model.lattice().rank() == 6);  // 2 * (1 + 2)
  CHECK(model.cycle_rank() == 1);
  // both curves carry the same class, the positively oriented x_0
  const IntVector expected = unit(6, 0);
  CHECK(model.curve_class("b1") == expected);
  CHECK(model.curve_class("b2") == expected);
  CHECK(model.lattice().pairing(model.curve_class("b2"),
                                model.dual_class(0)) == 1);
}

TEST_CASE("build_model on the star: separating curves are null-homologous") {
  const HomologyModel model = build_model(star_model());
  CHECK(model.lattice().rank() == 6);  // 2 * (0 + 3)
  CHECK(model.cycle_rank() == 0);
  for (const auto& e : model.graph().edges())
    CHECK(is_zero_vector(model.curve_class(e.id)));
}

TEST_CASE("build_model on the theta graph") {
  const HomologyModel model = build_model(theta_model());
  CHECK(model.cycle_rank() == 2);
  CHECK(model.lattice().rank() == 8);  // 2 * (2 + 2)
  CHECK(model.nontree_edges() == std::vector<EdgeId>{"c2", "c3"});
  CHECK(model.curve_class("c2") == unit(8, 0));
  CHECK(model.curve_class("c3") == unit(8, 1));
  // The tree edge c1 lies backwards on both fundamental cycles.
  IntVector c1(8);
  c1[0] = -1;
  c1[1] = -1;
  CHECK(model.curve_class("c1") == c1);
}

TEST_CASE("curve classes are isotropic, orthogonal, and dual-normalized") {
  testsupport::Rng rng(424242);
  for (int t = 0; t < 150; ++t) {
    const SurfaceModel s = gen_random(2 + rng.below(5), rng.engine());
    const HomologyModel model = build_model(s);
    const auto& g = model.graph();
    for (const auto& e : g.edges()) {
      for (const auto& f : g.edges()) {
        CHECK(model.lattice().pairing(model.curve_class(e.id),
                                      model.curve_class(f.id)) == 0);
      }
    }
    // bridges are null-homologous
    for (const EdgeId& id : bridges(g))
      CHECK(is_zero_vector(model.curve_class(id)));
    // <[f_j], dual_j> = 1 for every non-tree edge
    for (std::size_t j = 0; j < model.cycle_rank(); ++j) {
      const EdgeId& f = model.nontree_edges()[j];
      CHECK(model.lattice().pairing(model.curve_class(f),
                                    model.dual_class(j)) == 1);
    }
    // dual pairings detect membership in the fundamental cycle
    for (std::size_t j = 0; j < model.cycle_rank(); ++j) {
      const Cycle& cycle = model.tree().fundamental_cycle(j);
      for (const auto& e : g.edges()) {
        const Int pairing =
            model.lattice().pairing(model.curve_class(e.id),
                                    model.dual_class(j));
        if (cycle.contains(e.id)) {
          CHECK((pairing == 1 || pairing == -1));
        } else {
          CHECK(pairing == 0);
        }
      }
    }
    // b-class members share one vector
    const auto cls = classify(g);
    for (std::size_t j = 0; j < cls.r(); ++j) {
      const auto& group = cls.b_classes()[j];
      for (const EdgeId& member : group)
        CHECK(model.curve_class(member) ==
              model.curve_class(group.front()));
    }
  }
}

TEST_CASE("build_model rejects invalid surfaces") {
  const SurfaceModel bad(fixtures::star3(),
                         {{"x", 0}, {"l1", 0}, {"l2", 1}, {"l3", 1}});
  CHECK_THROWS_AS(build_model(bad), PreconditionError);
}

TEST_CASE("twist_action on the named examples") {
  SECTION("all exponents zero give the identity") {
    const HomologyModel model = build_model(theta_model());
    const Multitwist m(model.graph(),
                       exponents(model.graph(), {0, 0, 0}));
    CHECK(twist_action(model, m).is_identity());
    CHECK(is_identity_action(model, m));
  }
  SECTION("banana with cancelling exponents acts trivially") {
    const HomologyModel model = build_model(banana_model());
    const Multitwist m(model.graph(), exponents(model.graph(), {1, -1}));
    CHECK(is_identity_action(model, m));
  }
  SECTION("banana with a single twist is the transvection along x_0") {
    const HomologyModel model = build_model(banana_model());
    const Multitwist m(model.graph(), exponents(model.graph(), {1, 0}));
    const IntMatrix action = twist_action(model, m);
    CHECK_FALSE(action.is_identity());
    CHECK(action ==
          transvection(model.lattice(), model.curve_class("b1"), 1));
  }
  SECTION("triangle Torelli example acts trivially") {
    const HomologyModel model = build_model(triangle_model());
    const Multitwist m(model.graph(), exponents(model.graph(), {1, 2, -3}));
    CHECK(is_identity_action(model, m));
  }
  SECTION("theta counterexample does not act trivially") {
    const HomologyModel model = build_model(theta_model());
    const Multitwist m(model.graph(), exponents(model.graph(), {1, -1, 0}));
    CHECK_FALSE(is_identity_action(model, m));
  }
  SECTION("graph mismatch is rejected") {
    const HomologyModel model = build_model(banana_model());
    const Multigraph other = fixtures::theta();
    CHECK_THROWS_AS(
        twist_action(model, Multitwist(other, exponents(other, {0, 0, 0}))),
        PreconditionError);
  }
}

TEST_CASE("twist actions are symplectic") {
  testsupport::Rng rng(777);
  for (int t = 0; t < 100; ++t) {
    const SurfaceModel s = gen_random(2 + rng.below(4), rng.engine());
    const HomologyModel model = build_model(s);
    const ExponentMap w =
        testsupport::random_exponents(rng, model.graph(), -2, 2);
    const IntMatrix action =
        twist_action(model, Multitwist(model.graph(), w));
    CHECK(symplectic(model.lattice(), action));
  }
}

TEST_CASE("combinatorial membership matches the homology action") {
  testsupport::Rng rng(31337);
  int yes = 0;
  for (int t = 0; t < 1500; ++t) {
    const SurfaceModel s = gen_random(2 + rng.below(5), rng.engine());
    const HomologyModel model = build_model(s);
    const auto cls = classify(model.graph());
    const ExponentMap w =
        (t % 2 == 0)
            ? testsupport::random_exponents(rng, model.graph(), -2, 2)
            : testsupport::random_torelli_exponents(rng, model.graph(), cls,
                                                    -2, 2);
    const Multitwist m(model.graph(), w);
    const bool combinatorial = is_torelli(m);
    CHECK(combinatorial == is_identity_action(model, m));
    if (combinatorial) ++yes;
  }
  CHECK(yes > 300);
}

TEST_CASE("kernel rank of the action map equals the Torelli rank") {
  testsupport::Rng rng(5150);
  for (int t = 0; t < 120; ++t) {
    const SurfaceModel s = gen_random(2 + rng.below(5), rng.engine());
    const HomologyModel model = build_model(s);
    CHECK(action_kernel_rank(model) ==
          torelli_rank(classify(model.graph())));
  }
  CHECK(action_kernel_rank(build_model(star_model())) == 3);
  CHECK(action_kernel_rank(build_model(theta_model())) == 0);
  CHECK(action_kernel_rank(build_model(banana_model())) == 1);
}

TEST_CASE("transvection power law") {
  const auto lattice = SymplecticLattice::standard(2);
  testsupport::Rng rng(2718);
  for (int t = 0; t < 50; ++t) {
    IntVector v(4);
    do {
      for (auto& x : v) x = rng.int_in(-3, 3);
    } while (!detail::is_primitive(v));
    const long long power = rng.int_in(-6, 6);
    IntMatrix expected = IntMatrix::identity(4);
    const IntMatrix step = transvection(lattice, v, power >= 0 ? 1 : -1);
    for (long long i = 0; i < std::abs(power); ++i) expected = expected * step;
    CHECK(transvection(lattice, v, power) == expected);
  }
}

TEST_CASE("multitransvection is order-independent under orthogonality") {
  const auto lattice = SymplecticLattice::standard(3);
  // vectors in the span of a_1, a_2, a_3: isotropic, pairwise orthogonal
  auto vec = [&](long long a1, long long a2, long long a3) {
    IntVector v(6);
    v[0] = a1;
    v[2] = a2;
    v[4] = a3;
    return v;
  };
  std::vector<std::pair<IntVector, Int>> factors = {
      {vec(1, 0, 2), 3},
      {vec(0, 1, 1), -2},
      {vec(1, 1, 0), 5},
      {vec(2, 1, 1), -1},
  };
  const IntMatrix base = multitransvection(lattice, factors);
  std::vector<std::size_t> order = {0, 1, 2, 3};
  std::sort(order.begin(), order.end());
  do {
    std::vector<std::pair<IntVector, Int>> permuted;
    for (std::size_t i : order) permuted.push_back(factors[i]);
    CHECK(multitransvection(lattice, permuted) == base);
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(symplectic(lattice, base));
}

TEST_CASE("multitransvection preconditions") {
  const auto lattice = SymplecticLattice::standard(2);
  SECTION("exponent zero on a single vector gives the identity") {
    CHECK(multitransvection(lattice, {{unit(4, 0), 0}}).is_identity());
  }
  SECTION("non-primitive vector") {
    CHECK_THROWS_AS(multitransvection(lattice, {{unit(4, 0, 2), 1}}),
                    PreconditionError);
  }
  SECTION("zero vector") {
    CHECK_THROWS_AS(multitransvection(lattice, {{IntVector(4), 1}}),
                    PreconditionError);
  }
  SECTION("non-orthogonal pair") {
    CHECK_THROWS_AS(
        multitransvection(lattice, {{unit(4, 0), 1}, {unit(4, 1), 1}}),
        PreconditionError);
  }
  SECTION("linearly dependent pair") {
    IntVector v = unit(4, 0);
    IntVector w = unit(4, 0, -1);
    CHECK_THROWS_AS(multitransvection(lattice, {{v, 1}, {w, 1}}),
                    PreconditionError);
  }
  SECTION("messages name the offending pair") {
    try {
      multitransvection(lattice, {{unit(4, 0), 1}, {unit(4, 1), 1}});
      FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("1 and 2") != std::string::npos);
    }
  }
}

TEST_CASE("the naive symplectic conjecture fails") {
  const ConjectureWitness witness = conjecture_counterexample();
  CHECK(witness.lattice.rank() == 4);
  REQUIRE(witness.factors.size() == 4);

  const std::vector<long long> expected_exponents = {1, -3, 3, -1};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(witness.factors[i].second == expected_exponents[i]);
    CHECK(witness.factors[i].second != 0);
    CHECK(witness.factors[i].first ==
          IntVector{1, 0, static_cast<long long>(i + 1), 0});
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      CHECK(witness.lattice.pairing(witness.factors[i].first,
                                    witness.factors[j].first) == 0);
      CHECK_FALSE(detail::proportional(witness.factors[i].first,
                                       witness.factors[j].first));
    }
  }
  CHECK(witness.product.is_identity());

  // dropping all but the first factor leaves a genuine transvection
  const IntMatrix single = multitransvection(
      witness.lattice, {{witness.factors[0].first, witness.factors[0].second}});
  CHECK_FALSE(single.is_identity());
}

TEST_CASE("matrix rank by fraction-free elimination") {
  IntMatrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(1, 2) = 6;
  m.at(2, 0) = 1;
  m.at(2, 1) = 0;
  m.at(2, 2) = 1;
  CHECK(m.rank() == 2);
  CHECK(IntMatrix::identity(5).rank() == 5);
  CHECK(IntMatrix(4, 4).rank() == 0);
}
