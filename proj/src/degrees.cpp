#include "circramsey/degrees.hpp"

#include "circramsey/circular.hpp"
#include "circramsey/error.hpp"
#include "circramsey/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace circramsey {

BigInt tangent_number(int k) {
  if (k < 1 || k > kTangentCap) {
    throw CapExceeded("tangent_number is defined here for 1 <= k <= " +
                      std::to_string(kTangentCap));
  }
  const int top = 2 * k - 1;
  std::vector<BigInt> row{1};
  for (int r = 1; r <= top; ++r) {
    std::vector<BigInt> next(static_cast<std::size_t>(r) + 1);
    next[0] = 0;
    for (int j = 1; j <= r; ++j) {
      next[j] = next[j - 1] + row[static_cast<std::size_t>(r - j)];
    }
    row = std::move(next);
  }
  return row.back();
}

std::uint64_t small_degree(const SnStructure& a) {
  const std::uint64_t aut = automorphism_group_order(a.structure());
  const std::uint64_t numerator = static_cast<std::uint64_t>(a.n()) * a.size();
  if (numerator % aut != 0) {
    throw InvariantViolation("n·|A| = " + std::to_string(numerator) +
                             " is not divisible by |Aut(A)| = " + std::to_string(aut));
  }
  return numerator / aut;
}

BigInt big_degree(const SnStructure& a) {
  return BigInt(small_degree(a)) * tangent_number(a.size());
}

std::uint64_t compose_upper_bound(std::span<const std::uint64_t> parts) {
  if (parts.empty()) {
    throw InvalidArgument("compose_upper_bound needs at least one part");
  }
  return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

DegreeReport degree_report(const SnStructure& a) {
  const FinStructure rep = canonical_representative(a.structure());
  const ExpansionCount count = expansion_count(a);
  DegreeReport out;
  out.structure = to_literal(rep);
  out.canonical = to_hex(canonical_form(rep));
  out.n = a.n();
  out.size = a.size();
  out.aut_order = count.aut_order;
  out.m_formula = count.m_formula;
  out.m_oracle = count.m_oracle;
  if (out.m_formula != out.m_oracle) {
    throw InvariantViolation("m(A) formula " + std::to_string(out.m_formula) +
                             " disagrees with brute force " + std::to_string(out.m_oracle) +
                             " for " + out.structure);
  }
  out.t_small = small_degree(a);
  out.t_big = BigInt(out.t_small) * tangent_number(a.size());
  return out;
}

CensusReport verify_identity(int n, int size) {
  if (size < 1 || size > kLabeledCap) {
    throw CapExceeded("verify_identity needs 1 <= N <= " + std::to_string(kLabeledCap));
  }
  CensusReport out;
  out.n = n;
  out.size = size;
  const std::vector<SnStructure> classes = enumerate_age(n, size);
  out.iso_class_count = classes.size();

  std::vector<int> perm(static_cast<std::size_t>(size));
  for (const SnStructure& rep : classes) {
    out.sum_inv_aut += Rational(1, automorphism_group_order(rep.structure()));
    // Every labeling of the class on {0..N-1}.
    std::set<std::vector<int>> labelings;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      const SnStructure labeled = rep.relabel(perm);
      if (labelings.insert(labeled.matrix()).second) {
        out.labeled_expansion_total += count_labeled_expansions(labeled);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.labeled_structure_count += labelings.size();
  }

  BigInt n_factorial_minus = 1;  // (n-1)!
  for (int i = 2; i < n; ++i) {
    n_factorial_minus *= i;
  }
  BigInt size_factorial = 1;
  for (int i = 2; i <= size; ++i) {
    size_factorial *= i;
  }
  const BigInt n_power = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(size));

  out.stated_lhs = Rational(size) / Rational(n_factorial_minus) * out.sum_inv_aut;
  out.stated_rhs = n_power;
  out.stated_equal = out.stated_lhs == Rational(out.stated_rhs);
  out.derived_rhs = Rational(n_power / n, size);
  out.derived_equal = out.sum_inv_aut == out.derived_rhs;
  out.expected_labeled_total = size_factorial * n_power;
  out.labeled_equal = out.labeled_expansion_total == out.expected_labeled_total;
  return out;
}

}  // namespace circramsey
