#pragma once

// Small and big Ramsey degrees of Age(S(n)) members, and the census that
// audits the sum of 1/|Aut| over a size class.

#include "circramsey/rational.hpp"
#include "circramsey/sn_structure.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace circramsey {

inline constexpr int kTangentCap = 12;

/// tan^(2k-1)(0), via the Seidel boustrophedon triangle of zigzag numbers.
BigInt tangent_number(int k);

/// n·|A| / |Aut(A)|. Throws InvariantViolation if the quotient is not exact.
std::uint64_t small_degree(const SnStructure& a);

/// small_degree(A) · tangent_number(|A|).
BigInt big_degree(const SnStructure& a);

/// Upper bound on the degree as the sum of the degrees of the expansions.
std::uint64_t compose_upper_bound(std::span<const std::uint64_t> parts);

struct DegreeReport {
  std::string structure;  // literal of the canonical representative
  std::string canonical;  // hex of the canonical form
  int n = 0;
  int size = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t m_formula = 0;
  std::uint64_t m_oracle = 0;
  std::uint64_t t_small = 0;
  BigInt t_big = 0;
};

/// Throws InvariantViolation when the formula and the brute-force count disagree.
DegreeReport degree_report(const SnStructure& a);

struct CensusReport {
  int n = 0;
  int size = 0;
  std::uint64_t iso_class_count = 0;
  Rational sum_inv_aut = 0;
  Rational stated_lhs = 0;  // size / (n-1)! · sum_inv_aut
  BigInt stated_rhs = 0;    // n^size
  bool stated_equal = false;
  Rational derived_rhs = 0;  // n^(size-1) / size
  bool derived_equal = false;
  std::uint64_t labeled_structure_count = 0;
  BigInt labeled_expansion_total = 0;
  BigInt expected_labeled_total = 0;  // size! · n^size
  bool labeled_equal = false;
};

/// Exhaustive census of the size-N members of Age(S(n)), 1 <= N <= kLabeledCap.
CensusReport verify_identity(int n, int size);

}  // namespace circramsey
