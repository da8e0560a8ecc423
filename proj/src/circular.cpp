#include "circramsey/circular.hpp"

#include "circramsey/error.hpp"
#include "circramsey/expansion.hpp"
#include "circramsey/partitioned.hpp"

#include <map>
#include <sstream>

namespace circramsey {

namespace {

bool is_multiple_of_step(const Rational& difference, int n) {
  return boost::multiprecision::denominator(Rational(difference * n)) == 1;
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

}  // namespace

void validate(const AngleConfig& config) {
  if (config.n < 2) {
    throw InvalidArgument("angle configuration needs n >= 2");
  }
  for (const Rational& a : config.angles) {
    if (a < 0 || a >= 1) {
      throw InvalidArgument("angle " + to_string(a) + " is outside [0, 1)");
    }
  }
  for (std::size_t i = 0; i < config.angles.size(); ++i) {
    for (std::size_t j = i + 1; j < config.angles.size(); ++j) {
      if (is_multiple_of_step(config.angles[i] - config.angles[j], config.n)) {
        throw GenericityViolation("angles " + to_string(config.angles[i]) + " and " +
                                  to_string(config.angles[j]) + " differ by a multiple of 1/" +
                                  std::to_string(config.n));
      }
    }
  }
}

AngleConfig parse_angle_config(std::string_view text) {
  const std::string body = trim(text);
  if (body.rfind("n=", 0) != 0) {
    throw InvalidArgument("angle config must start with 'n='");
  }
  const auto space = body.find(' ');
  if (space == std::string::npos) {
    throw InvalidArgument("angle config is missing 'angles='");
  }
  AngleConfig config;
  try {
    config.n = std::stoi(body.substr(2, space - 2));
  } catch (const std::exception&) {
    throw InvalidArgument("angle config: bad value for n");
  }
  const std::string rest = trim(std::string_view(body).substr(space));
  if (rest.rfind("angles=", 0) != 0) {
    throw InvalidArgument("angle config is missing 'angles='");
  }
  std::stringstream list(rest.substr(7));
  std::string item;
  while (std::getline(list, item, ',')) {
    config.angles.push_back(parse_rational(trim(item)));
  }
  validate(config);
  return config;
}

std::string to_string(const AngleConfig& config) {
  std::string out = "n=" + std::to_string(config.n) + " angles=";
  for (std::size_t i = 0; i < config.angles.size(); ++i) {
    out += (i ? "," : "") + to_string(config.angles[i]);
  }
  return out;
}

int sigma_index(const Rational& a, const Rational& b, int n) {
  if (n < 2) {
    throw InvalidArgument("sigma_index needs n >= 2");
  }
  const Rational scaled = frac(a - b) * n;
  if (boost::multiprecision::denominator(scaled) == 1) {
    throw GenericityViolation("angles " + to_string(a) + " and " + to_string(b) +
                              " differ by a multiple of 1/" + std::to_string(n));
  }
  return static_cast<int>(floor(scaled));
}

SnStructure realize(const AngleConfig& config) {
  validate(config);
  const int size = static_cast<int>(config.angles.size());
  std::vector<int> matrix(static_cast<std::size_t>(size * size), -1);
  for (int x = 0; x < size; ++x) {
    for (int y = 0; y < size; ++y) {
      if (x != y) {
        matrix[static_cast<std::size_t>(x * size + y)] =
            sigma_index(config.angles[x], config.angles[y], config.n);
      }
    }
  }
  return SnStructure::from_matrix(config.n, size, std::move(matrix));
}

AngleConfig cycle_config(int n, int m) {
  if (n < 2 || m < 1) {
    throw InvalidArgument("cycle_structure needs n >= 2 and m >= 1");
  }
  AngleConfig config;
  config.n = n;
  const int points = n * m + 1;
  for (int k = 0; k < points; ++k) {
    config.angles.emplace_back(k, points);
  }
  return config;
}

SnStructure cycle_structure(int n, int m) { return realize(cycle_config(n, m)); }

FinStructure to_colored_tournament(const SnStructure& a) {
  if (a.n() % 2 != 0) {
    throw InvalidArgument("colored tournaments need even n (got " + std::to_string(a.n()) + ")");
  }
  const int colors = a.n() / 2;
  std::vector<std::vector<Tuple>> arcs(static_cast<std::size_t>(colors));
  for (int x = 0; x < a.size(); ++x) {
    for (int y = 0; y < a.size(); ++y) {
      if (x != y && a.sigma(x, y) < colors) {
        arcs[a.sigma(x, y)].push_back({x, y});
      }
    }
  }
  return FinStructure(Signature::binary(colors), a.size(), std::move(arcs));
}

bool is_colored_tournament(const FinStructure& t) {
  const auto& arities = t.signature().arities();
  for (int arity : arities) {
    if (arity != 2) {
      return false;
    }
  }
  const int size = t.size();
  std::vector<int> arcs_on_pair(static_cast<std::size_t>(size * size), 0);
  for (int c = 0; c < t.signature().relation_count(); ++c) {
    for (const Tuple& arc : t.relation(c)) {
      if (arc[0] == arc[1]) {
        return false;
      }
      const int lo = std::min(arc[0], arc[1]);
      const int hi = std::max(arc[0], arc[1]);
      ++arcs_on_pair[static_cast<std::size_t>(lo * size + hi)];
    }
  }
  for (int x = 0; x < size; ++x) {
    for (int y = x + 1; y < size; ++y) {
      if (arcs_on_pair[static_cast<std::size_t>(x * size + y)] != 1) {
        return false;
      }
    }
  }
  return true;
}

bool is_realizable(const FinStructure& t, int n) {
  if (n < 2 || n % 2 != 0) {
    throw InvalidArgument("is_realizable needs even n >= 2");
  }
  if (t.signature().relation_count() != n / 2 || !is_colored_tournament(t)) {
    throw InvalidArgument("expected a colored tournament with " + std::to_string(n / 2) +
                          " colors");
  }
  if (t.size() > kAgeCap) {
    throw CapExceeded("is_realizable is capped at " + std::to_string(kAgeCap) + " points");
  }
  const CanonicalForm target = canonical_form(t);
  for (const QnStructure& word : enumerate_qn(n, t.size())) {
    if (canonical_form(to_colored_tournament(p_functor(word))) == target) {
      return true;
    }
  }
  return false;
}

std::vector<SnStructure> enumerate_age(int n, int size) {
  if (n < 2) {
    throw InvalidArgument("enumerate_age needs n >= 2");
  }
  if (size < 0 || size > kAgeCap) {
    throw CapExceeded("enumerate_age is capped at " + std::to_string(kAgeCap) + " points");
  }
  std::map<CanonicalForm, SnStructure> classes;
  for (const QnStructure& word : enumerate_qn(n, size)) {
    const SnStructure image = p_functor(word);
    CanonicalLabeling labeling = canonical_labeling(image.structure());
    if (!classes.contains(labeling.form)) {
      classes.emplace(std::move(labeling.form), image.relabel(labeling.perm));
    }
  }
  std::vector<SnStructure> out;
  out.reserve(classes.size());
  for (auto& [form, rep] : classes) {
    out.push_back(std::move(rep));
  }
  return out;
}

AngleConfig random_angle_config(int n, int size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> denominator(1, 1000);
  AngleConfig config;
  config.n = n;
  while (static_cast<int>(config.angles.size()) < size) {
    const int q = denominator(rng);
    const int p = std::uniform_int_distribution<int>(0, q - 1)(rng);
    const Rational candidate(p, q);
    bool generic = true;
    for (const Rational& a : config.angles) {
      if (is_multiple_of_step(candidate - a, n)) {
        generic = false;
        break;
      }
    }
    if (generic) {
      config.angles.push_back(candidate);
    }
  }
  return config;
}

}  // namespace circramsey
