#pragma once

#include "circramsey/sn_structure.hpp"
#include "circramsey/structure.hpp"

#include <utility>
#include <vector>

namespace testing_support {

using circramsey::FinStructure;
using circramsey::Signature;
using circramsey::SnStructure;
using circramsey::Tuple;

/// Single binary relation given by its arcs.
inline FinStructure digraph(int size, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<Tuple> rel;
  for (auto [x, y] : arcs) {
    rel.push_back({x, y});
  }
  return FinStructure(Signature({2}), size, {rel});
}

inline FinStructure three_cycle() { return digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline FinStructure transitive_three() { return digraph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline FinStructure arc() { return digraph(2, {{0, 1}}); }
inline FinStructure point() { return digraph(1, {}); }

/// The S(2) structure whose sigma_0 is the given tournament.
inline SnStructure s2_from_tournament(int size, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> matrix(static_cast<std::size_t>(size * size), -1);
  for (auto [x, y] : arcs) {
    matrix[static_cast<std::size_t>(x * size + y)] = 0;
    matrix[static_cast<std::size_t>(y * size + x)] = 1;
  }
  return SnStructure::from_matrix(2, size, std::move(matrix));
}

inline SnStructure s2_three_cycle() { return s2_from_tournament(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline SnStructure s2_transitive() { return s2_from_tournament(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline SnStructure s2_point() { return s2_from_tournament(1, {}); }

}  // namespace testing_support
