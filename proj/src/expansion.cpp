#include "circramsey/expansion.hpp"

#include "circramsey/error.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace circramsey {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream list(text);
  std::string item;
  while (std::getline(list, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidArgument("bad integer '" + item + "'");
    }
  }
  return out;
}

void require_labeled_cap(const SnStructure& a) {
  if (a.size() > kLabeledCap) {
    throw CapExceeded("labeled expansion search is capped at " + std::to_string(kLabeledCap) +
                      " points");
  }
}

}  // namespace

void validate(const LabeledExpansion& x) {
  const std::size_t size = x.labels.size();
  if (x.n < 1) {
    throw InvalidArgument("labeled expansion needs n >= 1");
  }
  if (x.order.size() != size) {
    throw InvalidArgument("order and labels have different lengths");
  }
  std::vector<bool> seen(size, false);
  for (int e : x.order) {
    if (e < 0 || static_cast<std::size_t>(e) >= size || seen[e]) {
      throw InvalidArgument("order is not a permutation");
    }
    seen[e] = true;
  }
  for (int label : x.labels) {
    if (label < 1 || label > x.n) {
      throw InvalidArgument("label outside 1..n");
    }
  }
}

LabeledExpansion parse_labeled_expansion(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  std::string order_part;
  std::string labels_part;
  std::string extra;
  in >> order_part >> labels_part;
  if (order_part.rfind("order=", 0) != 0 || labels_part.rfind("labels=", 0) != 0 ||
      (in >> extra)) {
    throw InvalidArgument("expansion literal must look like 'order=2,0,1 labels=1,1,2'");
  }
  LabeledExpansion x{n, parse_int_list(order_part.substr(6)), parse_int_list(labels_part.substr(7))};
  validate(x);
  return x;
}

std::string to_string(const LabeledExpansion& x) {
  std::string out = "order=";
  for (std::size_t i = 0; i < x.order.size(); ++i) {
    out += (i ? "," : "") + std::to_string(x.order[i]);
  }
  out += " labels=";
  for (std::size_t i = 0; i < x.labels.size(); ++i) {
    out += (i ? "," : "") + std::to_string(x.labels[i]);
  }
  return out;
}

QnStructure word_of(const LabeledExpansion& x) {
  QnStructure out{x.n, {}};
  out.word.reserve(x.order.size());
  for (int e : x.order) {
    out.word.push_back(x.labels[e]);
  }
  return out;
}

std::vector<int> p_matrix(int n, const std::vector<int>& word) {
  const int size = static_cast<int>(word.size());
  std::vector<int> matrix(static_cast<std::size_t>(size * size), -1);
  for (int x = 0; x < size; ++x) {
    for (int y = x + 1; y < size; ++y) {
      const int i = word[x];
      const int j = word[y];
      int forward;  // sigma index of (x, y), x before y
      if (i <= j) {
        forward = n - 1 - (j - i);
      } else {
        // y carries the smaller label and comes second.
        const int backward = (n - (i - j)) % n;
        forward = n - 1 - backward;
      }
      matrix[static_cast<std::size_t>(x * size + y)] = forward;
      matrix[static_cast<std::size_t>(y * size + x)] = n - 1 - forward;
    }
  }
  if (auto why = sn_violation(n, size, matrix)) {
    throw InvariantViolation("p produced an invalid S(n) structure: " + *why);
  }
  return matrix;
}

SnStructure p_functor(const QnStructure& x) {
  validate(x);
  if (x.n < 2) {
    throw InvalidArgument("p needs n >= 2");
  }
  return SnStructure::from_matrix(x.n, x.size(), p_matrix(x.n, x.word));
}

SnStructure p_functor(const LabeledExpansion& x) {
  validate(x);
  // Positions -> elements: position pos is element order[pos].
  return p_functor(word_of(x)).relabel(x.order);
}

void validate(const AngleConfig& config, const QuadrantCut& cut) {
  validate(config);
  const Rational step(1, config.n);
  if (cut.theta < 0 || cut.theta >= step) {
    throw InvalidArgument("cut offset " + to_string(cut.theta) + " outside [0, 1/" +
                          std::to_string(config.n) + ")");
  }
  for (const Rational& a : config.angles) {
    if (boost::multiprecision::denominator(Rational((a - cut.theta) * config.n)) == 1) {
      throw GenericityViolation("point " + to_string(a) + " lies on a boundary of cut " +
                                to_string(cut.theta));
    }
  }
}

LabeledExpansion reversal(const AngleConfig& config, const QuadrantCut& cut, int rotation) {
  validate(config, cut);
  const int n = config.n;
  if (rotation < 1 || rotation > n) {
    throw InvalidArgument("rotation must be in 1..n");
  }
  const std::size_t size = config.angles.size();
  LabeledExpansion out{n, std::vector<int>(size), std::vector<int>(size)};
  std::vector<Rational> rotated(size);
  for (std::size_t i = 0; i < size; ++i) {
    const Rational offset = frac(config.angles[i] - cut.theta);
    const int sector = static_cast<int>(floor(offset * n));  // 0-based k' - 1
    out.labels[i] = ((sector - (rotation - 1)) % n + n) % n + 1;
    rotated[i] = offset - Rational(sector, n);
  }
  std::iota(out.order.begin(), out.order.end(), 0);
  std::sort(out.order.begin(), out.order.end(),
            [&](int a, int b) { return rotated[a] < rotated[b]; });
  return out;
}

std::vector<Rational> critical_cuts(const AngleConfig& config) {
  validate(config);
  const Rational step(1, config.n);
  std::vector<Rational> out;
  out.reserve(config.angles.size());
  for (const Rational& a : config.angles) {
    out.push_back(mod(a, step));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuadrantCut> representative_cuts(const AngleConfig& config) {
  const std::vector<Rational> crit = critical_cuts(config);
  const Rational step(1, config.n);
  if (crit.empty()) {
    return {QuadrantCut{Rational(0)}};
  }
  std::vector<QuadrantCut> out;
  for (std::size_t i = 0; i + 1 < crit.size(); ++i) {
    out.push_back({(crit[i] + crit[i + 1]) / 2});
  }
  out.push_back({mod((crit.back() + crit.front() + step) / 2, step)});
  std::sort(out.begin(), out.end(),
            [](const QuadrantCut& a, const QuadrantCut& b) { return a.theta < b.theta; });
  return out;
}

std::vector<std::vector<int>> quadrant_partitions(const AngleConfig& config) {
  std::set<std::vector<int>> seen;
  for (const QuadrantCut& cut : representative_cuts(config)) {
    seen.insert(reversal(config, cut, 1).labels);
  }
  return {seen.begin(), seen.end()};
}

std::vector<LabeledExpansion> reversal_expansions(const AngleConfig& config) {
  std::set<LabeledExpansion> seen;
  for (const QuadrantCut& cut : representative_cuts(config)) {
    for (int r = 1; r <= config.n; ++r) {
      seen.insert(reversal(config, cut, r));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<LabeledExpansion> labeled_expansions(const SnStructure& a) {
  require_labeled_cap(a);
  const int n = a.n();
  const int size = a.size();
  std::vector<LabeledExpansion> out;
  std::vector<int> order(static_cast<std::size_t>(size));
  for (const QnStructure& word : enumerate_qn(n, size)) {
    const std::vector<int> image = p_matrix(n, word.word);
    std::iota(order.begin(), order.end(), 0);
    do {
      bool equal = true;
      for (int x = 0; x < size && equal; ++x) {
        for (int y = 0; y < size; ++y) {
          if (x != y && a.sigma(order[x], order[y]) != image[static_cast<std::size_t>(x * size + y)]) {
            equal = false;
            break;
          }
        }
      }
      if (equal) {
        LabeledExpansion x{n, order, std::vector<int>(static_cast<std::size_t>(size))};
        for (int pos = 0; pos < size; ++pos) {
          x.labels[order[pos]] = word.word[pos];
        }
        out.push_back(std::move(x));
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_labeled_expansions(const SnStructure& a) {
  return labeled_expansions(a).size();
}

ExpansionCount expansion_count(const SnStructure& a) {
  ExpansionCount out;
  out.labeled = count_labeled_expansions(a);
  out.aut_order = automorphism_group_order(a.structure());
  if (out.labeled % out.aut_order != 0) {
    throw InvariantViolation("labeled expansion count " + std::to_string(out.labeled) +
                             " is not divisible by |Aut| = " + std::to_string(out.aut_order));
  }
  out.m_oracle = out.labeled / out.aut_order;
  const std::uint64_t numerator = static_cast<std::uint64_t>(a.n()) * a.size();
  if (numerator % out.aut_order != 0) {
    throw InvariantViolation("n·|A| = " + std::to_string(numerator) +
                             " is not divisible by |Aut| = " + std::to_string(out.aut_order));
  }
  out.m_formula = numerator / out.aut_order;
  return out;
}

std::uint64_t expansion_count_m(const SnStructure& a) { return expansion_count(a).m_oracle; }

std::vector<QnStructure> expansion_words(const SnStructure& a) {
  std::vector<QnStructure> out;
  for (const QnStructure& word : enumerate_qn(a.n(), a.size())) {
    if (find_isomorphism(p_functor(word).structure(), a.structure())) {
      out.push_back(word);
    }
  }
  return out;
}

ExpansionColoring expansion_coloring(const SnStructure& c, const LabeledExpansion& cstar,
                                     const SnStructure& a) {
  if (cstar.n != c.n() || a.n() != c.n()) {
    throw InvalidArgument("expansion_coloring: mismatched n");
  }
  if (static_cast<int>(cstar.labels.size()) != c.size() || !(p_functor(cstar) == c)) {
    throw InvalidArgument("expansion_coloring: Cstar is not an expansion of C");
  }
  ExpansionColoring out;
  out.palette = expansion_words(a);
  out.copies = copies(a.structure(), c.structure());
  std::vector<int> position(static_cast<std::size_t>(c.size()));
  for (int pos = 0; pos < c.size(); ++pos) {
    position[cstar.order[pos]] = pos;
  }
  for (std::vector<int> vertices : out.copies) {
    std::sort(vertices.begin(), vertices.end(),
              [&](int x, int y) { return position[x] < position[y]; });
    QnStructure induced{c.n(), {}};
    for (int v : vertices) {
      induced.word.push_back(cstar.labels[v]);
    }
    const auto it = std::lower_bound(out.palette.begin(), out.palette.end(), induced);
    if (it == out.palette.end() || *it != induced) {
      throw InvariantViolation("copy of A supports " + to_string(induced) +
                               ", which is not an expansion of A");
    }
    out.colors.push_back(static_cast<int>(it - out.palette.begin()));
  }
  return out;
}

}  // namespace circramsey
