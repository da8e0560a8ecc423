#pragma once

// Finite members of Age(S(n)) realized by exact rational points on the circle.
// An angle a in [0, 1) stands for the point e^{2 pi i a}.

#include "circramsey/rational.hpp"
#include "circramsey/sn_structure.hpp"

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace circramsey {

/// Enumeration and realizability searches scan n^N words; N is capped here.
inline constexpr int kAgeCap = 6;

struct AngleConfig {
  int n = 2;
  std::vector<Rational> angles;
};

/// Throws InvalidArgument (n < 2, angle outside [0,1)) or GenericityViolation
/// (two angles differing by a multiple of 1/n).
void validate(const AngleConfig& config);

/// `n=N angles=p1/q1,p2/q2,...`
AngleConfig parse_angle_config(std::string_view text);
std::string to_string(const AngleConfig& config);

/// The k in [0, n) with (a - b) mod 1 in (k/n, (k+1)/n).
/// Throws GenericityViolation when (a - b) is a multiple of 1/n.
int sigma_index(const Rational& a, const Rational& b, int n);

SnStructure realize(const AngleConfig& config);

/// Angles k/(nm+1), k = 0..nm.
AngleConfig cycle_config(int n, int m);

/// The structure C_m induced by the (nm+1)-th roots of unity.
SnStructure cycle_structure(int n, int m);

/// For even n: x ->_j y iff sigma_j(x, y), j < n/2. The result has n/2 binary relations.
FinStructure to_colored_tournament(const SnStructure& a);

/// Every unordered pair carries exactly one arc in one direction and one color.
bool is_colored_tournament(const FinStructure& t);

/// Whether some member of Age(S(n)) maps onto `t` (up to isomorphism) under
/// to_colored_tournament. Exhaustive over all partition words of length |t|.
bool is_realizable(const FinStructure& t, int n);

/// Isomorph-free list of the size-N members of Age(S(n)), each given as its
/// canonical representative, sorted by canonical form.
std::vector<SnStructure> enumerate_age(int n, int size);

/// Random generic configuration: denominators up to 1000, points rejected
/// until genericity holds.
AngleConfig random_angle_config(int n, int size, std::mt19937_64& rng);

}  // namespace circramsey
