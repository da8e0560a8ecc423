#include "circramsey/partitioned.hpp"

#include "circramsey/error.hpp"

#include <algorithm>
#include <sstream>

namespace circramsey {

void validate(const QnStructure& x) {
  if (x.n < 1) {
    throw InvalidArgument("partitioned order needs n >= 1");
  }
  for (int label : x.word) {
    if (label < 1 || label > x.n) {
      throw InvalidArgument("label " + std::to_string(label) + " outside 1.." +
                            std::to_string(x.n));
    }
  }
}

QnStructure parse_qn(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string n_part;
  std::string word_part;
  in >> n_part >> word_part;
  std::string extra;
  if (n_part.rfind("n=", 0) != 0 || word_part.rfind("word=", 0) != 0 || (in >> extra)) {
    throw InvalidArgument("word literal must look like 'n=2 word=1,2,1'");
  }
  QnStructure x;
  try {
    x.n = std::stoi(n_part.substr(2));
    std::stringstream list(word_part.substr(5));
    std::string item;
    while (std::getline(list, item, ',')) {
      x.word.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw InvalidArgument("word literal: bad integer");
  }
  validate(x);
  return x;
}

std::string to_string(const QnStructure& x) {
  std::string out = "n=" + std::to_string(x.n) + " word=";
  for (std::size_t i = 0; i < x.word.size(); ++i) {
    out += (i ? "," : "") + std::to_string(x.word[i]);
  }
  return out;
}

std::optional<Morphism> qn_embedding(const QnStructure& x, const QnStructure& y) {
  if (x.n != y.n) {
    throw InvalidArgument("partitioned orders with different n");
  }
  Morphism f;
  std::size_t next = 0;
  for (int label : x.word) {
    while (next < y.word.size() && y.word[next] != label) {
      ++next;
    }
    if (next == y.word.size()) {
      return std::nullopt;
    }
    f.map.push_back(static_cast<int>(next++));
  }
  return f;
}

bool qn_embeds(const QnStructure& x, const QnStructure& y) {
  return qn_embedding(x, y).has_value();
}

bool is_qn_embedding(const Morphism& f, const QnStructure& x, const QnStructure& y) {
  if (x.n != y.n) {
    throw InvalidArgument("partitioned orders with different n");
  }
  if (f.map.size() != x.word.size()) {
    throw InvalidArgument("morphism length does not match source size");
  }
  for (std::size_t i = 0; i < f.map.size(); ++i) {
    const int image = f.map[i];
    if (image < 0 || image >= y.size() || y.word[image] != x.word[i]) {
      return false;
    }
    if (i > 0 && f.map[i - 1] >= image) {
      return false;
    }
  }
  return true;
}

std::vector<QnStructure> enumerate_qn(int n, int size) {
  if (n < 1 || size < 0) {
    throw InvalidArgument("enumerate_qn needs n >= 1 and size >= 0");
  }
  std::size_t total = 1;
  for (int i = 0; i < size; ++i) {
    total *= static_cast<std::size_t>(n);
    if (total > kWordBudget) {
      throw CapExceeded("n^N exceeds the word budget of " + std::to_string(kWordBudget));
    }
  }
  std::vector<QnStructure> out;
  out.reserve(total);
  QnStructure x{n, std::vector<int>(static_cast<std::size_t>(size), 1)};
  while (true) {
    out.push_back(x);
    int pos = size - 1;
    while (pos >= 0 && x.word[pos] == n) {
      x.word[pos] = 1;
      --pos;
    }
    if (pos < 0) {
      return out;
    }
    ++x.word[pos];
  }
}

QnStructure homogeneous_target(int n, int m, int j) {
  if (n < 1 || m < 1 || j < 1 || j > n) {
    throw InvalidArgument("homogeneous_target needs n >= 1, m >= 1, 1 <= j <= n");
  }
  QnStructure target{n, {}};
  // 1-based positions and classes: x ≡ k + j (mod n), k in 1..n.
  for (int x = 1; x <= n * m + 1; ++x) {
    const int residue = ((x - j) % n + n) % n;  // k mod n
    target.word.push_back(residue == 0 ? n : residue);
  }
  return target;
}

std::optional<Morphism> universal_embedding(const QnStructure& x, int n, int m, int j) {
  if (x.n != n) {
    throw InvalidArgument("partitioned orders with different n");
  }
  validate(x);
  const QnStructure target = homogeneous_target(n, m, j);
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n) + 1);
  for (int pos = 0; pos < target.size(); ++pos) {
    members[target.word[pos]].push_back(pos);
  }
  std::size_t smallest = members[1].size();
  for (int k = 2; k <= n; ++k) {
    smallest = std::min(smallest, members[k].size());
  }
  if (static_cast<std::size_t>(x.size()) > smallest) {
    return std::nullopt;
  }
  Morphism f;
  for (int a = 0; a < x.size(); ++a) {
    f.map.push_back(members[x.word[a]][a]);
  }
  return f;
}

}  // namespace circramsey
