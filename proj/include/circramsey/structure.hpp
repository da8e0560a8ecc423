#pragma once

// Finite relational structures over the universe {0..N-1}: embeddings,
// automorphisms, copies and canonical forms.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace circramsey {

using Tuple = std::vector<int>;

/// Canonical forms are computed by exhaustive relabeling; larger inputs are rejected.
inline constexpr int kCanonicalCap = 8;

/// Upper bound on the universe for embedding search.
inline constexpr int kEmbeddingCap = 24;

class Signature {
 public:
  Signature() = default;
  /// Throws InvalidArgument if empty or if any arity is < 1.
  explicit Signature(std::vector<int> arities);

  /// n binary relations; the signature of S(n) and of colored tournaments.
  static Signature binary(int count);

  const std::vector<int>& arities() const { return arities_; }
  int relation_count() const { return static_cast<int>(arities_.size()); }
  int arity(int relation) const { return arities_.at(relation); }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<int> arities_;
};

class FinStructure {
 public:
  FinStructure() = default;

  /// Validates tuple lengths and ranges; duplicate tuples are merged.
  FinStructure(Signature signature, int size, std::vector<std::vector<Tuple>> relations);

  const Signature& signature() const { return signature_; }
  int size() const { return size_; }

  /// Sorted, duplicate-free tuples of relation r.
  const std::vector<Tuple>& relation(int r) const { return relations_.at(r); }

  bool holds(int r, std::span<const int> tuple) const;

  /// The structure B with B.holds(r, (perm[t0], perm[t1], ...)) iff holds(r, t).
  FinStructure relabel(std::span<const int> perm) const;

  /// Substructure induced on `vertices`; vertex vertices[i] becomes i.
  FinStructure induced(std::span<const int> vertices) const;

  /// Literal (label-sensitive) equality.
  friend bool operator==(const FinStructure& a, const FinStructure& b) {
    return a.signature_ == b.signature_ && a.size_ == b.size_ && a.relations_ == b.relations_;
  }

 private:
  std::size_t table_index(int r, std::span<const int> tuple) const;

  Signature signature_;
  int size_ = 0;
  std::vector<std::vector<Tuple>> relations_;
  // Dense membership table per relation, indexed by the tuple read in base `size_`.
  std::vector<std::vector<std::uint8_t>> tables_;
};

struct Morphism {
  std::vector<int> map;

  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

/// (f ∘ g)(x) = f(g(x)).
Morphism compose(const Morphism& f, const Morphism& g);

struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// relabel(perm) of the input is the canonical representative.
  std::vector<int> perm;
};

bool is_embedding(const Morphism& f, const FinStructure& a, const FinStructure& b);

/// All embeddings a -> b in lexicographic order of the map.
std::vector<Morphism> embeddings(const FinStructure& a, const FinStructure& b);

/// First embedding in lexicographic order, if any.
std::optional<Morphism> find_embedding(const FinStructure& a, const FinStructure& b);

/// Number of embeddings, without materializing them.
std::uint64_t count_embeddings(const FinStructure& a, const FinStructure& b);

std::uint64_t automorphism_group_order(const FinStructure& a);

/// Images of the embeddings a -> b, each a sorted vertex set; sorted lexicographically.
std::vector<std::vector<int>> copies(const FinStructure& a, const FinStructure& b);

CanonicalForm canonical_form(const FinStructure& a);
CanonicalLabeling canonical_labeling(const FinStructure& a);

/// Representative of the isomorphism class: a relabeled by its canonical labeling.
FinStructure canonical_representative(const FinStructure& a);

/// Canonical-form comparison; subject to kCanonicalCap.
bool are_isomorphic(const FinStructure& a, const FinStructure& b);

/// Backtracking isomorphism search with no canonical cap.
std::optional<Morphism> find_isomorphism(const FinStructure& a, const FinStructure& b);

/// `sig=[2,2] n=3 R1={(0,1),(1,2)} R2={}`
std::string to_literal(const FinStructure& a);
FinStructure parse_structure(std::string_view text);

std::string to_hex(const CanonicalForm& form);

}  // namespace circramsey
