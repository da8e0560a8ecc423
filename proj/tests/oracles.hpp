#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library routine they are used to check.

#include "circramsey/rational.hpp"
#include "circramsey/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using circramsey::BigInt;
using circramsey::FinStructure;
using circramsey::Rational;
using circramsey::Tuple;

/// tan^(2k-1)(0) from the exact power series tan = sin / cos.
inline BigInt tangent_by_series(int k) {
  const int degree = 2 * k - 1;
  std::vector<Rational> sin(static_cast<std::size_t>(degree) + 1, 0);
  std::vector<Rational> cos(static_cast<std::size_t>(degree) + 1, 0);
  BigInt factorial = 1;
  for (int i = 0; i <= degree; ++i) {
    if (i > 0) {
      factorial *= i;
    }
    const int sign = (i / 2) % 2 == 0 ? 1 : -1;
    (i % 2 == 1 ? sin : cos)[i] = Rational(sign, factorial);
  }
  // tan * cos = sin, solved coefficient by coefficient (cos[0] = 1).
  std::vector<Rational> tan(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i <= degree; ++i) {
    Rational acc = sin[i];
    for (int j = 1; j <= i; ++j) {
      acc -= cos[j] * tan[i - j];
    }
    tan[i] = acc;
  }
  const Rational value = tan[degree] * Rational(factorial);
  return boost::multiprecision::numerator(value);
}

/// Relation-by-relation check with tuple sets: f is injective, maps every
/// tuple of a onto a tuple of b, and every tuple of b inside the image comes
/// from a tuple of a.
inline bool naive_is_embedding(const std::vector<int>& f, const FinStructure& a,
                               const FinStructure& b) {
  if (std::set<int>(f.begin(), f.end()).size() != f.size()) {
    return false;
  }
  std::vector<int> inverse(static_cast<std::size_t>(b.size()), -1);
  for (std::size_t x = 0; x < f.size(); ++x) {
    inverse[f[x]] = static_cast<int>(x);
  }
  for (int r = 0; r < a.signature().relation_count(); ++r) {
    std::set<Tuple> a_tuples(a.relation(r).begin(), a.relation(r).end());
    std::set<Tuple> b_tuples(b.relation(r).begin(), b.relation(r).end());
    for (const Tuple& t : a_tuples) {
      Tuple image;
      for (int x : t) {
        image.push_back(f[x]);
      }
      if (!b_tuples.contains(image)) {
        return false;
      }
    }
    for (const Tuple& t : b_tuples) {
      Tuple pre;
      for (int y : t) {
        if (inverse[y] < 0) {
          break;
        }
        pre.push_back(inverse[y]);
      }
      if (pre.size() == t.size() && !a_tuples.contains(pre)) {
        return false;
      }
    }
  }
  return true;
}

/// Every injection {0..|a|-1} -> {0..|b|-1}, checked with naive_is_embedding.
inline std::uint64_t naive_embedding_count(const FinStructure& a, const FinStructure& b) {
  const int na = a.size();
  const int nb = b.size();
  if (na > nb) {
    return 0;
  }
  std::uint64_t count = 0;
  std::vector<int> pool(static_cast<std::size_t>(nb));
  std::iota(pool.begin(), pool.end(), 0);
  // Iterate all permutations of pool; each distinct prefix of length na is one injection.
  std::set<std::vector<int>> seen;
  do {
    std::vector<int> f(pool.begin(), pool.begin() + na);
    if (seen.insert(f).second && naive_is_embedding(f, a, b)) {
      ++count;
    }
  } while (std::next_permutation(pool.begin(), pool.end()));
  return count;
}

/// Tournament on {0..N-1} as an adjacency matrix: adj[x][y] = 1 iff x -> y.
using Adjacency = std::vector<std::vector<int>>;

inline std::vector<Adjacency> all_labeled_tournaments(int size) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < size; ++x) {
    for (int y = x + 1; y < size; ++y) {
      pairs.emplace_back(x, y);
    }
  }
  std::vector<Adjacency> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    Adjacency adj(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size), 0));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [x, y] = pairs[i];
      if (mask & (1u << i)) {
        adj[x][y] = 1;
      } else {
        adj[y][x] = 1;
      }
    }
    out.push_back(std::move(adj));
  }
  return out;
}

/// Lexicographically smallest adjacency string over all relabelings.
inline std::vector<int> tournament_invariant(const Adjacency& adj) {
  const int size = static_cast<int>(adj.size());
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> code;
    for (int x = 0; x < size; ++x) {
      for (int y = 0; y < size; ++y) {
        code.push_back(adj[perm[x]][perm[y]]);
      }
    }
    if (best.empty() || code < best) {
      best = code;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool has_three_cycle(const Adjacency& adj, const std::vector<int>& vertices) {
  for (int a : vertices) {
    for (int b : vertices) {
      for (int c : vertices) {
        if (adj[a][b] && adj[b][c] && adj[c][a]) {
          return true;
        }
      }
    }
  }
  return false;
}

/// Local order: every out-neighbourhood and every in-neighbourhood is transitive.
inline bool is_local_order(const Adjacency& adj) {
  const int size = static_cast<int>(adj.size());
  for (int v = 0; v < size; ++v) {
    std::vector<int> out;
    std::vector<int> in;
    for (int w = 0; w < size; ++w) {
      if (adj[v][w]) out.push_back(w);
      if (adj[w][v]) in.push_back(w);
    }
    if (has_three_cycle(adj, out) || has_three_cycle(adj, in)) {
      return false;
    }
  }
  return true;
}

struct TournamentCensus {
  std::size_t all_classes = 0;
  std::size_t local_order_classes = 0;
};

inline TournamentCensus tournament_census(int size) {
  std::set<std::vector<int>> all;
  std::set<std::vector<int>> local;
  for (const Adjacency& adj : all_labeled_tournaments(size)) {
    auto code = tournament_invariant(adj);
    if (is_local_order(adj)) {
      local.insert(code);
    }
    all.insert(std::move(code));
  }
  return {all.size(), local.size()};
}

}  // namespace oracle
