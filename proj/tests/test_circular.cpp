#include "circramsey/circular.hpp"
#include "circramsey/error.hpp"

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace circramsey;
using namespace testing_support;

namespace {

Rational q(long long p, long long d) { return Rational(p, d); }

SnStructure pair_structure(int n, int k) {
  return SnStructure::from_matrix(n, 2, {-1, k, n - 1 - k, -1});
}

}  // namespace

TEST_CASE("sigma_index") {
  CHECK(sigma_index(q(1, 8), 0, 2) == 0);
  CHECK(sigma_index(0, q(1, 8), 2) == 1);
  CHECK(sigma_index(q(1, 3) + q(1, 24), 0, 3) == 1);
  CHECK_THROWS_AS(sigma_index(q(1, 2), 0, 2), GenericityViolation);
  CHECK_THROWS_AS(sigma_index(q(1, 5), q(1, 5), 3), GenericityViolation);
}

TEST_CASE("realize") {
  const SnStructure one = realize(AngleConfig{3, {q(1, 7)}});
  CHECK(one.size() == 1);
  for (int k = 0; k < 3; ++k) {
    CHECK(one.structure().relation(k).empty());
  }

  const SnStructure cycle = realize(AngleConfig{2, {q(1, 8), q(3, 8), q(6, 8)}});
  CHECK(cycle.structure() == FinStructure(Signature::binary(2), 3,
                                          {{{0, 2}, {1, 0}, {2, 1}}, {{0, 1}, {1, 2}, {2, 0}}}));
  CHECK(are_isomorphic(to_colored_tournament(cycle), three_cycle()));

  const SnStructure four = realize(AngleConfig{4, {q(1, 16), q(3, 16)}});
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      if (x == y) continue;
      int holding = 0;
      for (int k = 0; k < 4; ++k) {
        holding += four.structure().holds(k, std::vector<int>{x, y});
      }
      CHECK(holding == 1);
      CHECK(four.sigma(x, y) == 3 - four.sigma(y, x));
    }
  }

  CHECK_THROWS_AS(realize(AngleConfig{2, {q(1, 8), q(5, 8)}}), GenericityViolation);
  CHECK_THROWS_AS(realize(AngleConfig{2, {q(9, 8)}}), InvalidArgument);
  CHECK_THROWS_AS(realize(AngleConfig{1, {q(1, 8)}}), InvalidArgument);
}

TEST_CASE("angle config literal") {
  const AngleConfig config = parse_angle_config("n=3 angles=1/8,3/8,0");
  CHECK(config.n == 3);
  CHECK(config.angles == std::vector<Rational>{q(1, 8), q(3, 8), 0});
  CHECK(parse_angle_config(to_string(config)).angles == config.angles);
  CHECK_THROWS_AS(parse_angle_config("n=2 angles=1/8,5/8"), GenericityViolation);
  CHECK_THROWS_AS(parse_angle_config("n=2 angles=x"), InvalidArgument);
}

TEST_CASE("cycle_structure") {
  const SnStructure c1 = cycle_structure(2, 1);
  CHECK(c1.size() == 3);
  CHECK(are_isomorphic(to_colored_tournament(c1), three_cycle()));
  CHECK(cycle_structure(2, 2).size() == 5);
  CHECK(automorphism_group_order(cycle_structure(2, 2).structure()) == 5);
  CHECK(automorphism_group_order(cycle_structure(3, 1).structure()) == 4);
  CHECK(automorphism_group_order(cycle_structure(4, 1).structure()) == 5);
  CHECK(automorphism_group_order(cycle_structure(2, 1).structure()) == 3);
}

TEST_CASE("to_colored_tournament") {
  const FinStructure t = to_colored_tournament(s2_three_cycle());
  CHECK(t == three_cycle());

  const FinStructure a = to_colored_tournament(pair_structure(4, 1));
  CHECK(a.signature() == Signature::binary(2));
  CHECK(a.holds(1, std::vector<int>{0, 1}));
  CHECK(a.relation(0).empty());

  const FinStructure b = to_colored_tournament(pair_structure(4, 3));
  CHECK(b.holds(0, std::vector<int>{1, 0}));
  CHECK(b.relation(1).empty());
  CHECK(is_colored_tournament(a));
  CHECK(is_colored_tournament(b));

  CHECK_THROWS_AS(to_colored_tournament(cycle_structure(3, 1)), InvalidArgument);
  CHECK_FALSE(is_colored_tournament(digraph(2, {})));
  CHECK_FALSE(is_colored_tournament(digraph(2, {{0, 1}, {1, 0}})));
}

TEST_CASE("is_realizable") {
  const FinStructure bad(Signature::binary(2), 3, {{{0, 1}, {0, 2}}, {{1, 2}}});
  CHECK_FALSE(is_realizable(bad, 4));
  CHECK(is_realizable(three_cycle(), 2));
  CHECK(is_realizable(transitive_three(), 2));
  CHECK(is_realizable(FinStructure(Signature::binary(2), 1, {{}, {}}), 4));
  // A 4-tournament that is not a local order.
  const FinStructure not_local = digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
  CHECK_FALSE(is_realizable(not_local, 2));
  CHECK_THROWS_AS(is_realizable(three_cycle(), 4), InvalidArgument);
}

TEST_CASE("every single-color 3-tournament is realizable with n = 2") {
  for (const auto& adj : oracle::all_labeled_tournaments(3)) {
    std::vector<std::pair<int, int>> arcs;
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        if (adj[x][y]) arcs.emplace_back(x, y);
      }
    }
    CHECK(is_realizable(digraph(3, arcs), 2));
  }
}

TEST_CASE("enumerate_age counts") {
  CHECK(enumerate_age(2, 1).size() == 1);
  CHECK(enumerate_age(2, 2).size() == 1);
  CHECK(enumerate_age(2, 3).size() == 2);
  CHECK(enumerate_age(2, 4).size() == 2);
  CHECK(enumerate_age(3, 2).size() == 2);
  CHECK(enumerate_age(2, 0).size() == 1);
  CHECK_THROWS_AS(enumerate_age(2, kAgeCap + 1), CapExceeded);
}

TEST_CASE("enumerate_age is sorted, isomorph-free and canonical") {
  for (int n = 2; n <= 3; ++n) {
    for (int size = 1; size <= 4; ++size) {
      const auto age = enumerate_age(n, size);
      std::vector<CanonicalForm> forms;
      for (const SnStructure& a : age) {
        CHECK(a.n() == n);
        CHECK(a.size() == size);
        CHECK(canonical_representative(a.structure()) == a.structure());
        forms.push_back(canonical_form(a.structure()));
      }
      CHECK(std::is_sorted(forms.begin(), forms.end()));
      CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
    }
  }
}

TEST_CASE("enumerate_age is closed under induced substructures") {
  for (int n = 2; n <= 3; ++n) {
    for (int size = 2; size <= 5; ++size) {
      std::set<CanonicalForm> smaller;
      for (const SnStructure& a : enumerate_age(n, size - 1)) {
        smaller.insert(canonical_form(a.structure()));
      }
      for (const SnStructure& a : enumerate_age(n, size)) {
        for (int drop = 0; drop < size; ++drop) {
          std::vector<int> keep;
          for (int v = 0; v < size; ++v) {
            if (v != drop) keep.push_back(v);
          }
          CHECK(smaller.contains(canonical_form(a.induced(keep).structure())));
        }
      }
    }
  }
}

TEST_CASE("S(2) age against an independent tournament census") {
  // Up to three points every tournament appears; from four on only the local orders do.
  for (int size = 1; size <= 5; ++size) {
    const auto census = oracle::tournament_census(size);
    const std::size_t expected = size <= 3 ? census.all_classes : census.local_order_classes;
    CHECK(enumerate_age(2, size).size() == expected);
    CHECK(census.local_order_classes <= census.all_classes);
  }
}

TEST_CASE("symmetry and totality on random configurations") {
  std::mt19937_64 rng(20261019);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const AngleConfig config = random_angle_config(n, 2 + trial % 4, rng);
      const SnStructure a = realize(config);
      bool ok = true;
      for (int x = 0; x < a.size(); ++x) {
        for (int y = 0; y < a.size(); ++y) {
          if (x == y) continue;
          int holding = 0;
          for (int k = 0; k < n; ++k) {
            const bool here = a.structure().holds(k, std::vector<int>{x, y});
            holding += here;
            ok = ok && here == a.structure().holds(n - 1 - k, std::vector<int>{y, x});
          }
          ok = ok && holding == 1;
        }
      }
      REQUIRE(ok);
    }
  }
}

TEST_CASE("geometric samples land in the enumerated age") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 4; ++n) {
    for (int size = 2; size <= 4; ++size) {
      std::set<CanonicalForm> age;
      for (const SnStructure& a : enumerate_age(n, size)) {
        age.insert(canonical_form(a.structure()));
      }
      for (int trial = 0; trial < 50; ++trial) {
        const SnStructure a = realize(random_angle_config(n, size, rng));
        CHECK(age.contains(canonical_form(a.structure())));
      }
    }
  }
}

TEST_CASE("random_angle_config is generic and deterministic") {
  std::mt19937_64 a(5);
  std::mt19937_64 b(5);
  for (int i = 0; i < 20; ++i) {
    const AngleConfig x = random_angle_config(3, 5, a);
    CHECK_NOTHROW(validate(x));
    CHECK(x.angles == random_angle_config(3, 5, b).angles);
  }
}
