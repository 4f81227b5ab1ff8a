#include <algorithm>
#include <numeric>
#include <random>

#include "cquiver/geometry.hpp"
#include "cquiver/quiver.hpp"
#include "cquiver/verify.hpp"
#include "doctest.h"

using namespace cquiver;

namespace {

// The m = 3 example on three vertices and its image under mutation at the
// third vertex (0-based vertex 2).
ColouredQuiver example_q() {
  ColouredQuiver q(3, 3);
  q.connect(0, 1, 0);
  q.connect(1, 2, 2);
  return q;
}

ColouredQuiver example_q_prime() {
  ColouredQuiver q(3, 3);
  q.connect(0, 1, 0);
  q.connect(1, 2, 1);
  return q;
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(example_q()).ok());
  CHECK(validate(ColouredQuiver(5, 1)).ok());

  ColouredQuiver bad(3, 2);
  bad.set_arrow(0, 1, 0);
  bad.set_arrow(1, 0, 2);
  auto report = validate(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().kind == "colour symmetry");

  ColouredQuiver loop(2, 2);
  loop.set_arrow(1, 1, 0);
  CHECK(validate(loop).violations.front().kind == "loop");

  ColouredQuiver range(2, 2);
  range.connect(0, 1, 3);
  CHECK_FALSE(validate(range).ok());

  ColouredQuiver one_sided(2, 2);
  one_sided.set_arrow(0, 1, 1);
  CHECK(validate(one_sided).violations.front().kind == "colour symmetry");

  ColouredQuiver mult(2, 2);
  mult.connect(0, 1, 1, 2);
  mult.set_arrow(1, 0, 1, 1);
  CHECK_FALSE(validate(mult).ok());
}

TEST_CASE("mutation reproduces the m = 3 worked example") {
  const auto q = example_q();
  const auto q_prime = mutate(q, 2);
  CHECK(q_prime == example_q_prime());
  CHECK(canonical_key(q) != canonical_key(q_prime));
}

TEST_CASE("mutation on A_2 with m = 1 reverses the arrow") {
  ColouredQuiver q(1, 2);
  q.connect(0, 1, 0);
  ColouredQuiver expected(1, 2);
  expected.connect(0, 1, 1);
  CHECK(mutate(q, 1) == expected);
}

TEST_CASE("mutation creates and cancels the composite arrow") {
  // 0 -> 1 -> 2 with colour 0 arrows; the m-coloured arrow 1 -> 0 pairs with 0 -> 1.
  for (int m = 1; m <= 4; ++m) {
    const auto seed = seed_quiver(3, m);
    const auto r = mutate(seed, 1);
    REQUIRE(validate(r).ok());
    // step (1) pairs 2 -> 1 (colour m) with 1 -> 0 (colour m): adds 2 -> 0 of colour m.
    REQUIRE(r.arrow(2, 0));
    CHECK(r.arrow(2, 0)->colour == m);
    CHECK(r.arrow(0, 2)->colour == 0);
    CHECK(r.arrow(0, 1)->colour == m);  // 0 - 1 mod m+1
    CHECK(r.arrow(1, 2)->colour == 1);
  }
}

TEST_CASE("mutate_inverse undoes mutate") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& q : bfs_mutation_class(seed_quiver(4, m)).representatives) {
      for (int j = 0; j < 4; ++j) {
        CHECK(mutate_inverse(mutate(q, j), j) == q);
        CHECK(mutate(mutate_inverse(q, j), j) == q);
      }
    }
  }
}

TEST_CASE("mutation has period m + 1 and preserves validity") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& q : bfs_mutation_class(seed_quiver(4, m)).representatives) {
      for (int j = 0; j < 4; ++j) {
        ColouredQuiver p = q;
        for (int k = 0; k <= m; ++k) {
          p = mutate(p, j);
          CHECK(validate(p).ok());
          if (k < m) CHECK(p != q);
        }
        CHECK(p == q);
      }
    }
  }
}

TEST_CASE("mutate rejects bad input") {
  ColouredQuiver bad(2, 2);
  bad.set_arrow(0, 1, 0);
  CHECK_THROWS_AS(mutate(bad, 0), InvalidQuiverError);
  CHECK_THROWS_AS(mutate(example_q(), 3), std::out_of_range);
}

TEST_CASE("mutation with multiplicities multiplies step-one arrows") {
  // Path 0 -> 1 -> 2 of colour-0 bundles (two and three arrows), m = 1.
  ColouredQuiver q(1, 3);
  q.connect(0, 1, 0, 2);
  q.connect(1, 2, 0, 3);
  const auto r = mutate(q, 1);
  REQUIRE(r.arrow(0, 2));
  CHECK(r.arrow(0, 2)->mult == 6);
  CHECK(r.arrow(0, 2)->colour == 0);
}

TEST_CASE("canonical_key is invariant under relabelling") {
  std::mt19937 rng(20240611);
  for (int m = 1; m <= 3; ++m) {
    for (const auto& q : bfs_mutation_class(seed_quiver(5, m)).representatives) {
      const auto key = canonical_key(q);
      for (int trial = 0; trial < 4; ++trial) {
        CHECK(canonical_key(q.relabel(random_permutation(5, rng))) == key);
      }
      const auto perm = canonical_labelling(q);
      CHECK(canonical_key(q.relabel(perm)) == key);
    }
  }
}

TEST_CASE("canonical_key separates non-isomorphic quivers") {
  // The angulations of P(3, 2) fall into two rotation classes; their quivers
  // must give exactly two keys.
  std::set<CanonicalQuiverKey> keys;
  for (const auto& a : enumerate_angulations(PolygonParams(3, 2))) keys.insert(canonical_key(quiver_of(a)));
  CHECK(keys.size() == 2);

  // Brute force isomorphism check on a small class.
  const auto reps = bfs_mutation_class(seed_quiver(4, 2)).representatives;
  std::vector<int> perm(4);
  for (std::size_t x = 0; x < reps.size(); ++x) {
    for (std::size_t y = x + 1; y < reps.size(); ++y) {
      std::iota(perm.begin(), perm.end(), 0);
      bool iso = false;
      do {
        iso = iso || reps[x].relabel(perm) == reps[y];
      } while (std::next_permutation(perm.begin(), perm.end()));
      CHECK_FALSE(iso);
      CHECK(canonical_key(reps[x]) != canonical_key(reps[y]));
    }
  }
}

TEST_CASE("gabriel_quiver keeps colour-0 arrows") {
  auto g = gabriel_quiver(example_q());
  REQUIRE(g.arrows.size() == 1);
  CHECK(g.arrows[0] == PlainArrow{0, 1, 1});

  ColouredQuiver top(3, 3);
  top.connect(0, 1, 3);
  top.connect(1, 2, 3);
  top.connect(0, 2, 3);
  // every colour-0 arrow runs the other way
  CHECK(gabriel_quiver(top).arrows.size() == 3);
  ColouredQuiver one_way(3, 2);
  one_way.set_arrow(0, 1, 3);
  one_way.set_arrow(1, 0, 0);
  CHECK(gabriel_quiver(one_way).arrows == std::vector<PlainArrow>{{1, 0, 1}});

  for (int m = 1; m <= 3; ++m) {
    auto path = gabriel_quiver(seed_quiver(3, m));
    CHECK(path.arrows == std::vector<PlainArrow>{{0, 1, 1}, {1, 2, 1}});
  }
}

TEST_CASE("gabriel quiver of a mutation matches the mutated angulation") {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& a : enumerate_angulations(PolygonParams(4, m))) {
      const auto q = quiver_of(a);
      for (std::size_t s = 0; s < a.diagonals().size(); ++s) {
        CHECK(gabriel_quiver(mutate(q, static_cast<int>(s))) ==
              gabriel_quiver(quiver_of(mutate_at(a, a.diagonals()[s]))));
      }
    }
  }
}

TEST_CASE("without_vertex and relabel") {
  auto q = seed_quiver(3, 2);
  auto r = q.without_vertex(0);
  CHECK(r == seed_quiver(2, 2));
  CHECK(q.relabel({0, 1, 2}) == q);
  auto rev = q.relabel({2, 1, 0});
  REQUIRE(rev.arrow(2, 1));
  CHECK(rev.arrow(2, 1)->colour == 0);
}
