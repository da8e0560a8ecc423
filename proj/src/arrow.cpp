#include "circramsey/arrow.hpp"

#include "circramsey/circular.hpp"
#include "circramsey/error.hpp"
#include "circramsey/hash.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace circramsey {

namespace {

constexpr std::size_t kAuditSamples = 8;

// Number of restricted growth strings of length q using at most k symbols,
// i.e. sum of Stirling numbers S(q, j) for j <= k. Saturates at uint64 max.
std::uint64_t coloring_classes(std::size_t q, int k) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (std::size_t i = 1; i <= q; ++i) {
    for (int j = std::min<int>(k, static_cast<int>(i)); j >= 1; --j) {
      const std::uint64_t a = row[j] > kMax / static_cast<std::uint64_t>(j) ? kMax : row[j] * j;
      const std::uint64_t b = row[j - 1];
      row[j] = a > kMax - b ? kMax : a + b;
    }
    row[0] = 0;
  }
  std::uint64_t total = 0;
  for (std::uint64_t v : row) {
    total = total > kMax - v ? kMax : total + v;
  }
  return total;
}

bool contains_all(const std::vector<int>& outer, const std::vector<int>& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::fails:
      return "fails";
    case Verdict::budget_exceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

std::string instance_hash(const ArrowInstance& inst) {
  const std::string key = to_literal(inst.c) + "|" + to_literal(inst.b) + "|" + to_literal(inst.a) +
                          "|k=" + std::to_string(inst.k) + "|t=" + std::to_string(inst.t);
  return hex64(fnv1a(key));
}

ArrowCertificate holds_arrow(const ArrowInstance& inst, std::uint64_t budget) {
  if (inst.a.signature() != inst.b.signature() || inst.b.signature() != inst.c.signature()) {
    throw InvalidArgument("arrow instance: signature mismatch");
  }
  if (inst.a.size() > inst.b.size() || inst.b.size() > inst.c.size()) {
    throw InvalidArgument("arrow instance needs |A| <= |B| <= |C|");
  }
  if (inst.k < 1 || inst.t < 1) {
    throw InvalidArgument("arrow instance needs k >= 1 and t >= 1");
  }

  ArrowCertificate cert;
  cert.instance_hash = instance_hash(inst);
  cert.a_copies = copies(inst.a, inst.c);
  const std::size_t q = cert.a_copies.size();
  if (q > kArrowCopyCap) {
    cert.reason = std::to_string(q) + " copies of A exceed the cap of " +
                  std::to_string(kArrowCopyCap);
    return cert;
  }
  cert.search_space = coloring_classes(q, inst.k);
  if (cert.search_space > budget) {
    cert.reason = std::to_string(cert.search_space) + " colorings exceed the budget of " +
                  std::to_string(budget);
    return cert;
  }

  // For each copy of B: the copies of A inside it, and the last of them in
  // coloring order (the point at which the copy becomes fully colored).
  const std::vector<std::vector<int>> b_copies = copies(inst.b, inst.c);
  std::vector<std::vector<std::size_t>> completed_at(q);
  std::vector<std::vector<std::size_t>> members(b_copies.size());
  for (std::size_t bi = 0; bi < b_copies.size(); ++bi) {
    for (std::size_t ai = 0; ai < q; ++ai) {
      if (contains_all(b_copies[bi], cert.a_copies[ai])) {
        members[bi].push_back(ai);
      }
    }
    if (members[bi].empty()) {
      // Sees no colors at all under any coloring.
      cert.verdict = Verdict::holds;
      cert.audit.push_back({{}, b_copies[bi]});
      return cert;
    }
    completed_at[members[bi].back()].push_back(bi);
  }

  std::vector<int> coloring(q, -1);
  std::vector<char> seen(static_cast<std::size_t>(inst.k));
  bool found_bad = false;

  auto good_copy_completed = [&](std::size_t ai) -> std::optional<std::size_t> {
    for (std::size_t bi : completed_at[ai]) {
      std::fill(seen.begin(), seen.end(), 0);
      int distinct = 0;
      for (std::size_t m : members[bi]) {
        if (!seen[coloring[m]]) {
          seen[coloring[m]] = 1;
          ++distinct;
        }
      }
      if (distinct <= inst.t) {
        return bi;
      }
    }
    return std::nullopt;
  };

  auto recurse = [&](auto&& self, std::size_t ai, int used) -> void {
    if (found_bad) {
      return;
    }
    if (ai == q) {
      found_bad = true;
      return;
    }
    const int limit = std::min(inst.k - 1, used);  // colors 0..used (used = max color + 1)
    for (int color = 0; color <= limit && !found_bad; ++color) {
      coloring[ai] = color;
      ++cert.nodes_examined;
      if (auto good = good_copy_completed(ai)) {
        if (cert.audit.size() < kAuditSamples) {
          cert.audit.push_back({std::vector<int>(coloring.begin(), coloring.begin() + ai + 1),
                                b_copies[*good]});
        }
        continue;
      }
      self(self, ai + 1, std::max(used, color + 1));
    }
    if (!found_bad) {
      coloring[ai] = -1;
    }
  };
  recurse(recurse, 0, 0);

  if (found_bad) {
    cert.verdict = Verdict::fails;
    cert.bad_coloring = coloring;
    cert.audit.clear();
  } else {
    cert.verdict = Verdict::holds;
  }
  return cert;
}

bool is_bad_coloring(const ArrowInstance& inst, const std::vector<int>& coloring) {
  const std::vector<std::vector<int>> a_copies = copies(inst.a, inst.c);
  if (coloring.size() != a_copies.size()) {
    throw InvalidArgument("coloring length does not match the number of copies of A");
  }
  for (int color : coloring) {
    if (color < 0 || color >= inst.k) {
      return false;
    }
  }
  for (const std::vector<int>& b_copy : copies(inst.b, inst.c)) {
    std::set<int> colors;
    for (std::size_t i = 0; i < a_copies.size(); ++i) {
      if (contains_all(b_copy, a_copies[i])) {
        colors.insert(coloring[i]);
      }
    }
    if (static_cast<int>(colors.size()) <= inst.t) {
      return false;
    }
  }
  return true;
}

std::uint64_t verify_lower_bound(const SnStructure& c, const LabeledExpansion& cstar,
                                 const SnStructure& a, const SnStructure& b) {
  const ExpansionColoring coloring = expansion_coloring(c, cstar, a);
  const std::vector<std::vector<int>> b_copies = copies(b.structure(), c.structure());
  if (b_copies.empty()) {
    throw InvalidArgument("verify_lower_bound: B does not embed in C (C too small)");
  }
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const std::vector<int>& b_copy : b_copies) {
    std::set<int> colors;
    for (std::size_t i = 0; i < coloring.copies.size(); ++i) {
      if (contains_all(b_copy, coloring.copies[i])) {
        colors.insert(coloring.colors[i]);
      }
    }
    best = std::min<std::uint64_t>(best, colors.size());
  }
  return best;
}

bool satisfies_homogeneous_condition(const SnStructure& a, const SnStructure& b) {
  const std::vector<QnStructure> a_words = expansion_words(a);
  for (const QnStructure& target : expansion_words(b)) {
    for (const QnStructure& source : a_words) {
      if (!qn_embeds(source, target)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<LowerBoundRow> scan_cycle_lower_bounds(const SnStructure& a, int max_m) {
  std::vector<LowerBoundRow> rows;
  for (int m = 1; m <= max_m; ++m) {
    const AngleConfig config = cycle_config(a.n(), m);
    const SnStructure c = realize(config);
    if (c.size() < a.size()) {
      continue;
    }
    const LabeledExpansion cstar = reversal(config, representative_cuts(config).front(), 1);
    LowerBoundRow row;
    row.m = m;
    row.homogeneous = satisfies_homogeneous_condition(a, c);
    row.colors = verify_lower_bound(c, cstar, a, c);
    rows.push_back(row);
  }
  return rows;
}

FinStructure chain(int size) {
  std::vector<Tuple> less;
  for (int x = 0; x < size; ++x) {
    for (int y = x + 1; y < size; ++y) {
      less.push_back({x, y});
    }
  }
  return FinStructure(Signature({2}), size, {std::move(less)});
}

}  // namespace circramsey
