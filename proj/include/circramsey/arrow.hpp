#pragma once

// Exhaustive checks of C -> (B)^A_{k,t}: every k-coloring of the copies of A
// in C leaves some copy of B whose copies of A see at most t colors.

#include "circramsey/expansion.hpp"
#include "circramsey/sn_structure.hpp"
#include "circramsey/structure.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace circramsey {

inline constexpr std::size_t kArrowCopyCap = 20;

struct ArrowInstance {
  FinStructure c;
  FinStructure b;
  FinStructure a;
  int k = 2;
  int t = 1;
};

enum class Verdict { holds, fails, budget_exceeded };

std::string to_string(Verdict v);

struct AuditSample {
  std::vector<int> prefix;     // colors of the first prefix.size() copies of A
  std::vector<int> good_copy;  // a copy of B seeing <= t colors under any completion
};

struct ArrowCertificate {
  Verdict verdict = Verdict::budget_exceeded;
  std::string instance_hash;
  std::vector<std::vector<int>> a_copies;  // sorted; indexes the coloring
  std::vector<int> bad_coloring;           // set when verdict == fails
  std::uint64_t search_space = 0;          // colorings up to color permutation
  std::uint64_t nodes_examined = 0;
  std::vector<AuditSample> audit;          // first few pruned branches when verdict == holds
  std::string reason;                      // set when verdict == budget_exceeded
};

/// Hash of the literals of C, B, A and of k, t.
std::string instance_hash(const ArrowInstance& inst);

/// Colorings of the copies of A are enumerated as restricted growth strings
/// (first copy pinned to color 0, colors introduced in order), so each class
/// under color permutation is visited once. A partial coloring is abandoned
/// as soon as some fully colored copy of B sees <= t colors.
ArrowCertificate holds_arrow(const ArrowInstance& inst, std::uint64_t budget);

/// Independent recheck: true iff every copy of B in C sees more than t colors.
bool is_bad_coloring(const ArrowInstance& inst, const std::vector<int>& coloring);

/// Minimum over copies B' of B in C of the number of expansion colors seen by
/// the copies of A inside B'. Throws InvalidArgument when B does not embed in C.
std::uint64_t verify_lower_bound(const SnStructure& c, const LabeledExpansion& cstar,
                                 const SnStructure& a, const SnStructure& b);

/// Every expansion of A embeds into every expansion of B.
bool satisfies_homogeneous_condition(const SnStructure& a, const SnStructure& b);

struct LowerBoundRow {
  int m = 0;
  bool homogeneous = false;
  std::uint64_t colors = 0;
};

/// For m = 1..max_m, takes B = C = cycle_structure(n, m), a reversal expansion
/// of C as Cstar, and records verify_lower_bound(C, Cstar, A, B).
std::vector<LowerBoundRow> scan_cycle_lower_bounds(const SnStructure& a, int max_m);

/// The linear order 0 < 1 < ... < size-1 as a structure with one binary relation.
FinStructure chain(int size);

}  // namespace circramsey
