#include "circramsey/serialize.hpp"

#include <limits>
#include <sstream>

namespace circramsey {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) {
    return text;
  }
  std::string out = "\"";
  for (char c : text) {
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return out + "\"";
}

}  // namespace

nlohmann::json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
    return value.convert_to<std::uint64_t>();
  }
  return value.str();
}

nlohmann::json to_json(const DegreeReport& r) {
  return {{"structure", r.structure}, {"canonical", r.canonical}, {"n", r.n},
          {"size", r.size},           {"aut_order", r.aut_order}, {"m_formula", r.m_formula},
          {"m_oracle", r.m_oracle},   {"t_small", r.t_small},     {"t_big", big_to_json(r.t_big)}};
}

nlohmann::json to_json(const CensusReport& r) {
  return {{"n", r.n},
          {"size", r.size},
          {"iso_class_count", r.iso_class_count},
          {"sum_inv_aut", to_string(r.sum_inv_aut)},
          {"stated_lhs", to_string(r.stated_lhs)},
          {"stated_rhs", big_to_json(r.stated_rhs)},
          {"stated_equal", r.stated_equal},
          {"derived_rhs", to_string(r.derived_rhs)},
          {"derived_equal", r.derived_equal},
          {"labeled_structure_count", r.labeled_structure_count},
          {"labeled_expansion_total", big_to_json(r.labeled_expansion_total)},
          {"expected_labeled_total", big_to_json(r.expected_labeled_total)},
          {"labeled_equal", r.labeled_equal}};
}

nlohmann::json to_json(const ArrowCertificate& cert) {
  nlohmann::json out{{"verdict", to_string(cert.verdict)},
                     {"instance_hash", cert.instance_hash},
                     {"a_copies", cert.a_copies},
                     {"search_space", cert.search_space},
                     {"nodes_examined", cert.nodes_examined}};
  if (cert.verdict == Verdict::fails) {
    out["witness"] = cert.bad_coloring;
  } else {
    out["witness"] = nullptr;
  }
  nlohmann::json audit = nlohmann::json::array();
  for (const AuditSample& s : cert.audit) {
    audit.push_back({{"prefix", s.prefix}, {"good_copy", s.good_copy}});
  }
  out["audit"] = std::move(audit);
  if (!cert.reason.empty()) {
    out["reason"] = cert.reason;
  }
  return out;
}

std::string degree_csv(const std::vector<DegreeReport>& reports) {
  std::ostringstream out;
  out << "canonical,structure,n,size,aut_order,m_formula,m_oracle,t_small,t_big\n";
  for (const DegreeReport& r : reports) {
    out << r.canonical << ',' << csv_field(r.structure) << ',' << r.n << ',' << r.size << ','
        << r.aut_order << ',' << r.m_formula << ',' << r.m_oracle << ',' << r.t_small << ','
        << r.t_big.str() << '\n';
  }
  return out.str();
}

std::string census_csv(const std::vector<CensusReport>& reports) {
  std::ostringstream out;
  out << "n,size,iso_class_count,sum_inv_aut,stated_lhs,stated_rhs,stated_equal,derived_rhs,"
         "derived_equal,labeled_structure_count,labeled_expansion_total,expected_labeled_total,"
         "labeled_equal\n";
  for (const CensusReport& r : reports) {
    out << r.n << ',' << r.size << ',' << r.iso_class_count << ',' << to_string(r.sum_inv_aut)
        << ',' << to_string(r.stated_lhs) << ',' << r.stated_rhs.str() << ','
        << (r.stated_equal ? "true" : "false") << ',' << to_string(r.derived_rhs) << ','
        << (r.derived_equal ? "true" : "false") << ',' << r.labeled_structure_count << ','
        << r.labeled_expansion_total.str() << ',' << r.expected_labeled_total.str() << ','
        << (r.labeled_equal ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace circramsey
