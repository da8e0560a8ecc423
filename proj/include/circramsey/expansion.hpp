#pragma once

// The expansion functor p : Age(Q_n) -> Age(S(n)), its inverse procedure on
// circle configurations, and brute-force expansion counting.

#include "circramsey/circular.hpp"
#include "circramsey/partitioned.hpp"
#include "circramsey/sn_structure.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace circramsey {

/// A linear order and an n-partition on a fixed universe {0..N-1}.
/// order[pos] is the element at position pos along <; labels[e] in 1..n.
struct LabeledExpansion {
  int n = 2;
  std::vector<int> order;
  std::vector<int> labels;

  friend auto operator<=>(const LabeledExpansion&, const LabeledExpansion&) = default;
};

void validate(const LabeledExpansion& x);

/// `order=2,0,1 labels=1,1,2`
LabeledExpansion parse_labeled_expansion(std::string_view text, int n);
std::string to_string(const LabeledExpansion& x);

/// The label word read along the order.
QnStructure word_of(const LabeledExpansion& x);

/// Sigma matrix of p(X) on positions of X. For positions s, l with
/// label(s) <= label(l) and d = label(l) - label(s):
///   s before l  =>  sigma_{n-1-d}(s, l)
///   l before s  =>  sigma_{(n-d) mod n}(s, l)
/// The result is checked against the S(n) invariants; a violation throws
/// InvariantViolation.
std::vector<int> p_matrix(int n, const std::vector<int>& word);

/// p(X) on the positions 0..N-1 of X.
SnStructure p_functor(const QnStructure& x);

/// p applied to a labeled expansion, on its own universe.
SnStructure p_functor(const LabeledExpansion& x);

/// Rotation offset of the quadrant boundaries, in [0, 1/n).
struct QuadrantCut {
  Rational theta;
};

/// Throws InvalidArgument if theta is outside [0, 1/n), GenericityViolation
/// if a point sits on a boundary.
void validate(const AngleConfig& config, const QuadrantCut& cut);

/// Point i gets label k when its angle lies in sector k' = k + rotation - 1
/// (cyclically) of the cut; points are ordered by their angle rotated back
/// into the first sector.
LabeledExpansion reversal(const AngleConfig& config, const QuadrantCut& cut, int rotation);

/// Sorted {angle mod 1/n}: the cut values where the quadrant labels change.
std::vector<Rational> critical_cuts(const AngleConfig& config);

/// Midpoints between cyclically consecutive critical cuts, sorted; one cut per
/// cell of the arrangement.
std::vector<QuadrantCut> representative_cuts(const AngleConfig& config);

/// Distinct label vectors (rotation 1) over representative_cuts, sorted.
std::vector<std::vector<int>> quadrant_partitions(const AngleConfig& config);

/// Every reversal(config, cut, r) over representative cuts and r = 1..n, deduplicated and sorted.
std::vector<LabeledExpansion> reversal_expansions(const AngleConfig& config);

/// Brute-force cap on |A| for the N!·n^N searches.
inline constexpr int kLabeledCap = 6;

/// All labeled expansions X of A's universe with p(X) literally equal to A.
/// Exhaustive over N!·n^N candidates; sorted.
std::vector<LabeledExpansion> labeled_expansions(const SnStructure& a);

std::uint64_t count_labeled_expansions(const SnStructure& a);

struct ExpansionCount {
  std::uint64_t labeled = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t m_oracle = 0;   // labeled / aut_order
  std::uint64_t m_formula = 0;  // n·|A| / aut_order
};

/// Throws InvariantViolation when either quotient is not exact.
ExpansionCount expansion_count(const SnStructure& a);

/// Expansions counted up to automorphism of A, from the brute-force oracle.
std::uint64_t expansion_count_m(const SnStructure& a);

/// Words w with p(w) isomorphic to A, sorted: one per expansion up to automorphism.
std::vector<QnStructure> expansion_words(const SnStructure& a);

struct ExpansionColoring {
  std::vector<std::vector<int>> copies;  // copies of A in C, sorted vertex sets
  std::vector<int> colors;               // colors[i] indexes palette
  std::vector<QnStructure> palette;      // expansion_words(A)
};

/// Colors each copy of A in C by the expansion that Cstar induces on it.
/// Throws InvalidArgument when p(Cstar) != C.
ExpansionColoring expansion_coloring(const SnStructure& c, const LabeledExpansion& cstar,
                                     const SnStructure& a);

}  // namespace circramsey
