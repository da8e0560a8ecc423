#include "circramsey/sn_structure.hpp"

#include "circramsey/error.hpp"

namespace circramsey {

std::optional<std::string> sn_violation(int n, int size, const std::vector<int>& matrix) {
  if (n < 2) {
    return "S(n) needs n >= 2";
  }
  if (matrix.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    return "sigma matrix has wrong dimensions";
  }
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (x == y) {
        continue;
      }
      const int k = matrix[static_cast<std::size_t>(x * size + y)];
      if (k < 0 || k >= n) {
        return "no sigma relation on (" + std::to_string(x) + "," + std::to_string(y) + ")";
      }
      if (matrix[static_cast<std::size_t>(y * size + x)] != n - 1 - k) {
        return "sigma_" + std::to_string(k) + "(" + std::to_string(x) + "," + std::to_string(y) +
               ") without sigma_" + std::to_string(n - 1 - k) + "(" + std::to_string(y) + "," +
               std::to_string(x) + ")";
      }
    }
  }
  return std::nullopt;
}

SnStructure SnStructure::from_matrix(int n, int size, std::vector<int> matrix) {
  if (auto why = sn_violation(n, size, matrix)) {
    throw InvalidArgument("not an S(" + std::to_string(n) + ") structure: " + *why);
  }
  SnStructure s;
  s.n_ = n;
  s.size_ = size;
  std::vector<std::vector<Tuple>> rels(static_cast<std::size_t>(n));
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (x == y) {
        matrix[static_cast<std::size_t>(x * size + y)] = -1;
      } else {
        rels[matrix[static_cast<std::size_t>(x * size + y)]].push_back({x, y});
      }
    }
  }
  s.matrix_ = std::move(matrix);
  s.structure_ = FinStructure(Signature::binary(n), size, std::move(rels));
  return s;
}

SnStructure SnStructure::from_structure(int n, const FinStructure& structure) {
  if (structure.signature() != Signature::binary(n)) {
    throw InvalidArgument("S(" + std::to_string(n) + ") structures need " + std::to_string(n) +
                          " binary relations");
  }
  const int size = structure.size();
  std::vector<int> matrix(static_cast<std::size_t>(size * size), -1);
  for (int k = 0; k < n; ++k) {
    for (const Tuple& t : structure.relation(k)) {
      int& cell = matrix[static_cast<std::size_t>(t[0] * size + t[1])];
      if (t[0] == t[1] || cell != -1) {
        throw InvalidArgument("not an S(n) structure: pair (" + std::to_string(t[0]) + "," +
                              std::to_string(t[1]) + ") carries more than one relation");
      }
      cell = k;
    }
  }
  return from_matrix(n, size, std::move(matrix));
}

SnStructure SnStructure::relabel(std::span<const int> perm) const {
  std::vector<int> out(matrix_.size(), -1);
  for (int x = 0; x < size_; ++x) {
    for (int y = 0; y < size_; ++y) {
      out[static_cast<std::size_t>(perm[x] * size_ + perm[y])] = sigma(x, y);
    }
  }
  return from_matrix(n_, size_, std::move(out));
}

SnStructure SnStructure::induced(std::span<const int> vertices) const {
  const int m = static_cast<int>(vertices.size());
  std::vector<int> out(static_cast<std::size_t>(m * m), -1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out[static_cast<std::size_t>(i * m + j)] = sigma(vertices[i], vertices[j]);
    }
  }
  return from_matrix(n_, m, std::move(out));
}

}  // namespace circramsey
