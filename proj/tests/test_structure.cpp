#include "circramsey/error.hpp"
#include "circramsey/structure.hpp"

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"

#include <random>

using namespace circramsey;
using namespace testing_support;

TEST_CASE("is_embedding") {
  const FinStructure cycle = three_cycle();
  CHECK(is_embedding(Morphism{{0, 1, 2}}, cycle, cycle));
  CHECK(is_embedding(Morphism{{0, 1}}, arc(), cycle));
  CHECK_FALSE(is_embedding(Morphism{{1, 0}}, arc(), arc()));
  CHECK_FALSE(is_embedding(Morphism{{0, 0}}, arc(), cycle));

  CHECK_THROWS_AS(is_embedding(Morphism{{0}}, arc(), cycle), InvalidArgument);
  const FinStructure other_sig(Signature({2, 2}), 2, {{}, {}});
  CHECK_THROWS_AS(is_embedding(Morphism{{0, 1}}, other_sig, cycle), InvalidArgument);
}

TEST_CASE("is_embedding reflects relations, not just preserves them") {
  // Empty 2-point structure into an arc: preserved trivially, but (0,1) is not reflected.
  CHECK_FALSE(is_embedding(Morphism{{0, 1}}, digraph(2, {}), arc()));
}

TEST_CASE("embeddings") {
  CHECK(embeddings(point(), digraph(2, {})).size() == 2);
  const auto self = embeddings(three_cycle(), three_cycle());
  REQUIRE(self.size() == 3);
  CHECK(std::is_sorted(self.begin(), self.end()));
  CHECK(self.front().map == std::vector<int>{0, 1, 2});
  CHECK(embeddings(three_cycle(), transitive_three()).empty());
  CHECK(embeddings(transitive_three(), three_cycle()).empty());
}

TEST_CASE("automorphism_group_order") {
  CHECK(automorphism_group_order(point()) == 1);
  CHECK(automorphism_group_order(three_cycle()) == 3);
  CHECK(automorphism_group_order(transitive_three()) == 1);
  CHECK(automorphism_group_order(digraph(4, {})) == 24);
}

TEST_CASE("copies") {
  CHECK(copies(point(), three_cycle()).size() == 3);
  const auto pairs = copies(arc(), three_cycle());
  CHECK(pairs == std::vector<std::vector<int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(copies(three_cycle(), three_cycle()).size() == 1);
  CHECK(embeddings(three_cycle(), three_cycle()).size() == 3);
}

TEST_CASE("canonical_form") {
  const FinStructure empty(Signature({2}), 0, {{}});
  CHECK(canonical_form(empty) == canonical_form(FinStructure(Signature({2}), 0, {{}})));
  const FinStructure relabeled = digraph(3, {{0, 2}, {2, 1}, {1, 0}});
  CHECK(canonical_form(three_cycle()) == canonical_form(relabeled));
  CHECK(are_isomorphic(three_cycle(), relabeled));
  CHECK(canonical_form(three_cycle()) != canonical_form(transitive_three()));
  CHECK_FALSE(are_isomorphic(three_cycle(), transitive_three()));

  const FinStructure big(Signature({2}), 9, {{}});
  CHECK_THROWS_AS(canonical_form(big), CapExceeded);
}

TEST_CASE("canonical representative is canonical and isomorphic") {
  const FinStructure g = digraph(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {2, 3}});
  const FinStructure rep = canonical_representative(g);
  CHECK(canonical_form(rep) == canonical_form(g));
  CHECK(find_isomorphism(g, rep).has_value());
}

namespace {

FinStructure random_structure(std::mt19937_64& rng, int size) {
  std::bernoulli_distribution coin(0.4);
  std::vector<std::vector<Tuple>> rels(3);
  for (int x = 0; x < size; ++x) {
    if (coin(rng)) rels[0].push_back({x});
    for (int y = 0; y < size; ++y) {
      if (coin(rng)) rels[1].push_back({x, y});
      for (int z = 0; z < size; ++z) {
        if (coin(rng) && coin(rng)) rels[2].push_back({x, y, z});
      }
    }
  }
  return FinStructure(Signature({1, 2, 3}), size, std::move(rels));
}

}  // namespace

TEST_CASE("canonical_form is invariant under random relabeling") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const int size = 1 + trial % 6;
    const FinStructure a = random_structure(rng, size);
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const FinStructure b = a.relabel(perm);
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(is_embedding(Morphism{perm}, a, b));
  }
}

TEST_CASE("embedding counts agree with the naive oracle; Aut divides and copies quotient") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const FinStructure a = random_structure(rng, 1 + trial % 3);
    const FinStructure b = random_structure(rng, 3 + trial % 3);
    const std::uint64_t emb = count_embeddings(a, b);
    CHECK(emb == oracle::naive_embedding_count(a, b));
    CHECK(embeddings(a, b).size() == emb);
    const std::uint64_t aut = automorphism_group_order(a);
    CHECK(aut >= 1);
    CHECK(emb % aut == 0);
    CHECK(copies(a, b).size() * aut == emb);
  }
  // Small structures with many embeddings.
  for (int size = 1; size <= 4; ++size) {
    const FinStructure empty(Signature({2}), size, {{}});
    CHECK(count_embeddings(empty, FinStructure(Signature({2}), 5, {{}})) ==
          oracle::naive_embedding_count(empty, FinStructure(Signature({2}), 5, {{}})));
  }
}

TEST_CASE("composition of embeddings is an embedding") {
  const FinStructure c5 = digraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3},
                                      {2, 4}, {3, 0}, {4, 1}});
  for (const Morphism& g : embeddings(arc(), three_cycle())) {
    for (const Morphism& f : embeddings(three_cycle(), c5)) {
      CHECK(is_embedding(compose(f, g), arc(), c5));
    }
  }
}

TEST_CASE("structure literal round trip and errors") {
  const FinStructure a(Signature({2, 1}), 3, {{{0, 1}, {2, 1}}, {{2}}});
  const std::string text = to_literal(a);
  CHECK(text == "sig=[2,1] n=3 R1={(0,1),(2,1)} R2={(2)}");
  CHECK(parse_structure(text) == a);
  CHECK(parse_structure("sig=[2] n=2 R1={ (0,1) }") == arc());
  CHECK_THROWS_AS(parse_structure("sig=[2] n=2 R1={(0,2)}"), InvalidArgument);
  CHECK_THROWS_AS(parse_structure("sig=[] n=2"), InvalidArgument);
  CHECK_THROWS_AS(parse_structure("sig=[2] n=2 R1={(0)}"), InvalidArgument);
  CHECK_THROWS_AS(parse_structure("sig=[2] n=2 R1={} extra"), InvalidArgument);
}

TEST_CASE("literal equality is label-sensitive") {
  CHECK(three_cycle() == digraph(3, {{2, 0}, {1, 2}, {0, 1}}));
  CHECK_FALSE(three_cycle() == digraph(3, {{0, 2}, {2, 1}, {1, 0}}));
}
