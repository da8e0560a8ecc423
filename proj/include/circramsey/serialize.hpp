#pragma once

// JSON objects and CSV projections for reports and certificates. Object keys
// are emitted in sorted order, so output is byte-stable.

#include "circramsey/arrow.hpp"
#include "circramsey/degrees.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace circramsey {

/// A number when it fits in 64 bits, otherwise its decimal string.
nlohmann::json big_to_json(const BigInt& value);

nlohmann::json to_json(const DegreeReport& report);
nlohmann::json to_json(const CensusReport& report);
nlohmann::json to_json(const ArrowCertificate& cert);

std::string degree_csv(const std::vector<DegreeReport>& reports);
std::string census_csv(const std::vector<CensusReport>& reports);

}  // namespace circramsey
