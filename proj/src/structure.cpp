#include "circramsey/structure.hpp"

#include "circramsey/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace circramsey {

namespace {

constexpr std::size_t kTableCap = std::size_t{1} << 22;

std::size_t checked_power(int base, int exponent) {
  std::size_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    result *= static_cast<std::size_t>(base);
    if (result > kTableCap) {
      throw CapExceeded("relation table exceeds " + std::to_string(kTableCap) +
                        " entries (size^arity cap)");
    }
  }
  return result;
}

void require_same_signature(const FinStructure& a, const FinStructure& b) {
  if (a.signature() != b.signature()) {
    throw InvalidArgument("signature mismatch");
  }
}

// Calls visit(t) for every tuple of the given arity over {0..top} that contains `top`.
template <typename Visit>
bool for_each_tuple_containing(int arity, int top, Tuple& t, Visit&& visit) {
  std::fill(t.begin(), t.end(), 0);
  while (true) {
    if (std::find(t.begin(), t.end(), top) != t.end()) {
      if (!visit(t)) {
        return false;
      }
    }
    int pos = arity - 1;
    while (pos >= 0 && t[pos] == top) {
      t[pos] = 0;
      --pos;
    }
    if (pos < 0) {
      return true;
    }
    ++t[pos];
  }
}

// Backtracking over injections a -> b, lexicographic in the map. Relations are
// checked as soon as every entry of a tuple is assigned. `found` returns false to stop.
template <typename Found>
void search_embeddings(const FinStructure& a, const FinStructure& b, Found&& found) {
  require_same_signature(a, b);
  if (a.size() > kEmbeddingCap || b.size() > kEmbeddingCap) {
    throw CapExceeded("embedding search is capped at " + std::to_string(kEmbeddingCap) +
                      " points");
  }
  const int na = a.size();
  const int nb = b.size();
  if (na > nb) {
    return;
  }
  std::vector<int> map(static_cast<std::size_t>(na), -1);
  std::vector<bool> used(static_cast<std::size_t>(nb), false);
  const Signature& sig = a.signature();
  std::vector<Tuple> scratch;
  std::vector<Tuple> image;
  for (int r = 0; r < sig.relation_count(); ++r) {
    scratch.emplace_back(static_cast<std::size_t>(sig.arity(r)));
    image.emplace_back(static_cast<std::size_t>(sig.arity(r)));
  }

  auto consistent = [&](int i) {
    for (int r = 0; r < sig.relation_count(); ++r) {
      Tuple& img = image[r];
      const bool ok = for_each_tuple_containing(sig.arity(r), i, scratch[r], [&](const Tuple& t) {
        for (std::size_t k = 0; k < t.size(); ++k) {
          img[k] = map[t[k]];
        }
        return a.holds(r, t) == b.holds(r, img);
      });
      if (!ok) {
        return false;
      }
    }
    return true;
  };

  bool stop = false;
  auto recurse = [&](auto&& self, int i) -> void {
    if (i == na) {
      if (!found(Morphism{map})) {
        stop = true;
      }
      return;
    }
    for (int v = 0; v < nb && !stop; ++v) {
      if (used[v]) {
        continue;
      }
      map[i] = v;
      if (consistent(i)) {
        used[v] = true;
        self(self, i + 1);
        used[v] = false;
      }
    }
    map[i] = -1;
  };
  recurse(recurse, 0);
}

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

void expect(std::string_view text, std::size_t& pos, std::string_view token) {
  skip_space(text, pos);
  if (text.substr(pos, token.size()) != token) {
    throw InvalidArgument("structure literal: expected '" + std::string(token) + "' at offset " +
                          std::to_string(pos));
  }
  pos += token.size();
}

int parse_int(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
  if (start == pos || pos - start > 9) {
    throw InvalidArgument("structure literal: expected integer at offset " + std::to_string(start));
  }
  return std::stoi(std::string(text.substr(start, pos - start)));
}

bool peek(std::string_view text, std::size_t& pos, char c) {
  skip_space(text, pos);
  return pos < text.size() && text[pos] == c;
}

}  // namespace

Signature::Signature(std::vector<int> arities) : arities_(std::move(arities)) {
  if (arities_.empty()) {
    throw InvalidArgument("signature must have at least one relation symbol");
  }
  for (int a : arities_) {
    if (a < 1) {
      throw InvalidArgument("relation arity must be >= 1");
    }
  }
}

Signature Signature::binary(int count) {
  return Signature(std::vector<int>(static_cast<std::size_t>(count), 2));
}

FinStructure::FinStructure(Signature signature, int size, std::vector<std::vector<Tuple>> relations)
    : signature_(std::move(signature)), size_(size), relations_(std::move(relations)) {
  if (size_ < 0) {
    throw InvalidArgument("structure size must be non-negative");
  }
  if (static_cast<int>(relations_.size()) != signature_.relation_count()) {
    throw InvalidArgument("relation count " + std::to_string(relations_.size()) +
                          " does not match signature (" +
                          std::to_string(signature_.relation_count()) + ")");
  }
  tables_.resize(relations_.size());
  for (int r = 0; r < signature_.relation_count(); ++r) {
    auto& tuples = relations_[r];
    const int arity = signature_.arity(r);
    for (const Tuple& t : tuples) {
      if (static_cast<int>(t.size()) != arity) {
        throw InvalidArgument("tuple length does not match arity of R" + std::to_string(r + 1));
      }
      for (int x : t) {
        if (x < 0 || x >= size_) {
          throw InvalidArgument("tuple entry " + std::to_string(x) + " outside universe of size " +
                                std::to_string(size_));
        }
      }
    }
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    tables_[r].assign(checked_power(size_, arity), 0);
    for (const Tuple& t : tuples) {
      tables_[r][table_index(r, t)] = 1;
    }
  }
}

std::size_t FinStructure::table_index(int, std::span<const int> tuple) const {
  std::size_t index = 0;
  for (int x : tuple) {
    index = index * static_cast<std::size_t>(size_) + static_cast<std::size_t>(x);
  }
  return index;
}

bool FinStructure::holds(int r, std::span<const int> tuple) const {
  return tables_[r][table_index(r, tuple)] != 0;
}

FinStructure FinStructure::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != size_) {
    throw InvalidArgument("relabeling has wrong length");
  }
  std::vector<std::vector<Tuple>> rels(relations_.size());
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    rels[r].reserve(relations_[r].size());
    for (const Tuple& t : relations_[r]) {
      Tuple image(t.size());
      std::transform(t.begin(), t.end(), image.begin(), [&](int x) { return perm[x]; });
      rels[r].push_back(std::move(image));
    }
  }
  return FinStructure(signature_, size_, std::move(rels));
}

FinStructure FinStructure::induced(std::span<const int> vertices) const {
  std::vector<int> position(static_cast<std::size_t>(size_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= size_ || position[vertices[i]] != -1) {
      throw InvalidArgument("induced: vertex list must be distinct points of the universe");
    }
    position[vertices[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<Tuple>> rels(relations_.size());
  for (std::size_t r = 0; r < relations_.size(); ++r) {
    for (const Tuple& t : relations_[r]) {
      Tuple image(t.size());
      bool inside = true;
      for (std::size_t k = 0; k < t.size() && inside; ++k) {
        image[k] = position[t[k]];
        inside = image[k] >= 0;
      }
      if (inside) {
        rels[r].push_back(std::move(image));
      }
    }
  }
  return FinStructure(signature_, static_cast<int>(vertices.size()), std::move(rels));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  Morphism out;
  out.map.reserve(g.map.size());
  for (int x : g.map) {
    if (x < 0 || x >= static_cast<int>(f.map.size())) {
      throw InvalidArgument("compose: maps are not composable");
    }
    out.map.push_back(f.map[x]);
  }
  return out;
}

bool is_embedding(const Morphism& f, const FinStructure& a, const FinStructure& b) {
  require_same_signature(a, b);
  if (static_cast<int>(f.map.size()) != a.size()) {
    throw InvalidArgument("morphism length " + std::to_string(f.map.size()) +
                          " does not match source size " + std::to_string(a.size()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(b.size()), false);
  for (int y : f.map) {
    if (y < 0 || y >= b.size() || seen[y]) {
      return false;
    }
    seen[y] = true;
  }
  const Signature& sig = a.signature();
  for (int r = 0; r < sig.relation_count(); ++r) {
    const int arity = sig.arity(r);
    Tuple t(static_cast<std::size_t>(arity), 0);
    Tuple image(static_cast<std::size_t>(arity));
    if (a.size() == 0) {
      continue;
    }
    while (true) {
      for (int k = 0; k < arity; ++k) {
        image[k] = f.map[t[k]];
      }
      if (a.holds(r, t) != b.holds(r, image)) {
        return false;
      }
      int pos = arity - 1;
      while (pos >= 0 && t[pos] == a.size() - 1) {
        t[pos] = 0;
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++t[pos];
    }
  }
  return true;
}

std::vector<Morphism> embeddings(const FinStructure& a, const FinStructure& b) {
  std::vector<Morphism> out;
  search_embeddings(a, b, [&](Morphism f) {
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

std::optional<Morphism> find_embedding(const FinStructure& a, const FinStructure& b) {
  std::optional<Morphism> out;
  search_embeddings(a, b, [&](Morphism f) {
    out = std::move(f);
    return false;
  });
  return out;
}

std::uint64_t count_embeddings(const FinStructure& a, const FinStructure& b) {
  std::uint64_t count = 0;
  search_embeddings(a, b, [&](const Morphism&) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t automorphism_group_order(const FinStructure& a) { return count_embeddings(a, a); }

std::vector<std::vector<int>> copies(const FinStructure& a, const FinStructure& b) {
  std::set<std::vector<int>> images;
  search_embeddings(a, b, [&](Morphism f) {
    std::sort(f.map.begin(), f.map.end());
    images.insert(std::move(f.map));
    return true;
  });
  return {images.begin(), images.end()};
}

CanonicalLabeling canonical_labeling(const FinStructure& a) {
  const int n = a.size();
  if (n > kCanonicalCap) {
    throw CapExceeded("canonical form is capped at " + std::to_string(kCanonicalCap) +
                      " points (got " + std::to_string(n) + ")");
  }
  const Signature& sig = a.signature();
  std::vector<std::uint8_t> header;
  header.push_back(static_cast<std::uint8_t>(n));
  header.push_back(static_cast<std::uint8_t>(sig.relation_count()));
  for (int arity : sig.arities()) {
    header.push_back(static_cast<std::uint8_t>(arity));
  }

  // For a candidate sigma the encoding lists, per relation and over all tuples t
  // in lexicographic order, the bit a.holds(r, sigma(t)). The minimum over all
  // sigma is the characteristic vector of the relabeled representative.
  std::vector<std::uint8_t> best;
  std::vector<int> best_sigma;
  std::vector<std::uint8_t> current;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    current.clear();
    int cmp = best.empty() ? -1 : 0;  // <0: already smaller, 0: equal so far
    bool abandoned = false;
    for (int r = 0; r < sig.relation_count() && !abandoned; ++r) {
      const int arity = sig.arity(r);
      if (n == 0) {
        break;
      }
      Tuple t(static_cast<std::size_t>(arity), 0);
      Tuple image(static_cast<std::size_t>(arity));
      while (true) {
        for (int k = 0; k < arity; ++k) {
          image[k] = sigma[t[k]];
        }
        const std::uint8_t bit = a.holds(r, image) ? 1 : 0;
        if (cmp == 0) {
          const std::uint8_t other = best[current.size()];
          if (bit > other) {
            abandoned = true;
            break;
          }
          if (bit < other) {
            cmp = -1;
          }
        }
        current.push_back(bit);
        int pos = arity - 1;
        while (pos >= 0 && t[pos] == n - 1) {
          t[pos] = 0;
          --pos;
        }
        if (pos < 0) {
          break;
        }
        ++t[pos];
      }
    }
    if (!abandoned && cmp < 0) {
      best = current;
      best_sigma = sigma;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  CanonicalLabeling out;
  out.form.bytes = header;
  out.form.bytes.insert(out.form.bytes.end(), best.begin(), best.end());
  // Representative vertex x is original vertex sigma[x]; relabel wants old -> new.
  out.perm.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    out.perm[best_sigma[x]] = x;
  }
  return out;
}

CanonicalForm canonical_form(const FinStructure& a) { return canonical_labeling(a).form; }

FinStructure canonical_representative(const FinStructure& a) {
  return a.relabel(canonical_labeling(a).perm);
}

bool are_isomorphic(const FinStructure& a, const FinStructure& b) {
  require_same_signature(a, b);
  return canonical_form(a) == canonical_form(b);
}

std::optional<Morphism> find_isomorphism(const FinStructure& a, const FinStructure& b) {
  require_same_signature(a, b);
  if (a.size() != b.size()) {
    return std::nullopt;
  }
  for (int r = 0; r < a.signature().relation_count(); ++r) {
    if (a.relation(r).size() != b.relation(r).size()) {
      return std::nullopt;
    }
  }
  return find_embedding(a, b);
}

std::string to_literal(const FinStructure& a) {
  std::ostringstream out;
  out << "sig=[";
  const auto& arities = a.signature().arities();
  for (std::size_t i = 0; i < arities.size(); ++i) {
    out << (i ? "," : "") << arities[i];
  }
  out << "] n=" << a.size();
  for (int r = 0; r < a.signature().relation_count(); ++r) {
    out << " R" << (r + 1) << "={";
    const auto& tuples = a.relation(r);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      out << (i ? "," : "") << "(";
      for (std::size_t k = 0; k < tuples[i].size(); ++k) {
        out << (k ? "," : "") << tuples[i][k];
      }
      out << ")";
    }
    out << "}";
  }
  return out.str();
}

FinStructure parse_structure(std::string_view text) {
  std::size_t pos = 0;
  expect(text, pos, "sig=[");
  std::vector<int> arities;
  if (!peek(text, pos, ']')) {
    arities.push_back(parse_int(text, pos));
    while (peek(text, pos, ',')) {
      ++pos;
      arities.push_back(parse_int(text, pos));
    }
  }
  expect(text, pos, "]");
  Signature sig(std::move(arities));
  expect(text, pos, "n=");
  const int size = parse_int(text, pos);
  std::vector<std::vector<Tuple>> rels;
  for (int r = 0; r < sig.relation_count(); ++r) {
    expect(text, pos, "R" + std::to_string(r + 1) + "={");
    std::vector<Tuple> tuples;
    while (!peek(text, pos, '}')) {
      if (!tuples.empty()) {
        expect(text, pos, ",");
      }
      expect(text, pos, "(");
      Tuple t{parse_int(text, pos)};
      while (peek(text, pos, ',')) {
        ++pos;
        t.push_back(parse_int(text, pos));
      }
      expect(text, pos, ")");
      tuples.push_back(std::move(t));
    }
    expect(text, pos, "}");
    rels.push_back(std::move(tuples));
  }
  skip_space(text, pos);
  if (pos != text.size()) {
    throw InvalidArgument("structure literal: trailing input at offset " + std::to_string(pos));
  }
  return FinStructure(std::move(sig), size, std::move(rels));
}

std::string to_hex(const CanonicalForm& form) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(form.bytes.size() * 2);
  for (std::uint8_t b : form.bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

}  // namespace circramsey
