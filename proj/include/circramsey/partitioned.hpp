#pragma once

// Finite n-partitioned linear orders. A finite partitioned order is rigid, so
// its isomorphism class is the word of partition labels (1..n) read along the
// order; no labeled carrier is stored.

#include "circramsey/structure.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circramsey {

/// enumerate_qn refuses to list more than this many words.
inline constexpr std::size_t kWordBudget = std::size_t{1} << 22;

struct QnStructure {
  int n = 2;
  std::vector<int> word;

  int size() const { return static_cast<int>(word.size()); }

  friend auto operator<=>(const QnStructure&, const QnStructure&) = default;
};

/// Throws InvalidArgument on n < 1 or a label outside 1..n.
void validate(const QnStructure& x);

/// `n=2 word=1,2,1`
QnStructure parse_qn(std::string_view text);
std::string to_string(const QnStructure& x);

/// Whether x.word is a (not necessarily contiguous) subsequence of y.word.
bool qn_embeds(const QnStructure& x, const QnStructure& y);

/// The leftmost embedding, as positions of y.
std::optional<Morphism> qn_embedding(const QnStructure& x, const QnStructure& y);

/// f is strictly increasing and keeps every label.
bool is_qn_embedding(const Morphism& f, const QnStructure& x, const QnStructure& y);

/// All n^N words of length N in lexicographic order.
std::vector<QnStructure> enumerate_qn(int n, int size);

/// The j-th explicit expansion of C_m: positions x = 1..nm+1 (1-based), the
/// label k in 1..n with x ≡ k + j (mod n).
QnStructure homogeneous_target(int n, int m, int j);

/// Sends the a-th element of x (in class b) to the a-th member of class b of
/// homogeneous_target(n, m, j). Empty when |x| exceeds the smallest class (m).
std::optional<Morphism> universal_embedding(const QnStructure& x, int n, int m, int j);

}  // namespace circramsey
