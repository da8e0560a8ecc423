#pragma once

#include "circramsey/structure.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace circramsey {

/// A member of Age(S(n)) on {0..N-1}: n binary relations sigma_0..sigma_{n-1},
/// exactly one holding on each ordered pair of distinct points, with
/// sigma_k(x,y) <=> sigma_{n-1-k}(y,x).
///
/// Kept both as a FinStructure (for the generic machinery) and as a dense
/// matrix of sigma indices (for the brute-force loops).
class SnStructure {
 public:
  SnStructure() = default;

  /// matrix[x * size + y] is the k with sigma_k(x, y); the diagonal is ignored.
  /// Throws InvalidArgument when the result is not a valid S(n) structure.
  static SnStructure from_matrix(int n, int size, std::vector<int> matrix);
  static SnStructure from_structure(int n, const FinStructure& structure);

  int n() const { return n_; }
  int size() const { return size_; }
  int sigma(int x, int y) const { return matrix_[static_cast<std::size_t>(x * size_ + y)]; }
  const std::vector<int>& matrix() const { return matrix_; }
  const FinStructure& structure() const { return structure_; }

  SnStructure relabel(std::span<const int> perm) const;
  SnStructure induced(std::span<const int> vertices) const;

  friend bool operator==(const SnStructure& a, const SnStructure& b) {
    return a.n_ == b.n_ && a.size_ == b.size_ && a.matrix_ == b.matrix_;
  }

 private:
  int n_ = 0;
  int size_ = 0;
  std::vector<int> matrix_;
  FinStructure structure_;
};

/// Describes the first totality/symmetry violation of a sigma matrix, if any.
std::optional<std::string> sn_violation(int n, int size, const std::vector<int>& matrix);

}  // namespace circramsey
