#include "circramsey/cli.hpp"

#include "circramsey/arrow.hpp"
#include "circramsey/cache.hpp"
#include "circramsey/circular.hpp"
#include "circramsey/degrees.hpp"
#include "circramsey/error.hpp"
#include "circramsey/expansion.hpp"
#include "circramsey/serialize.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <sstream>

namespace circramsey::cli {

namespace {

using nlohmann::json;

constexpr int kMaxN = 16;
constexpr int kMaxArrowColors = 3;

struct Rendered {
  std::string text;
  int exit_code = kSuccess;
};

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw InvalidArgument(message);
  }
}

void check_caps(const RunConfig& c) {
  const std::string& cmd = c.command;
  require(c.format == "json" || c.format == "csv", "--format must be json or csv");
  if (cmd == "tangent") {
    require(c.k >= 1 && c.k <= kTangentCap,
            "tangent needs 1 <= k <= " + std::to_string(kTangentCap));
    return;
  }
  require(c.n >= 2 && c.n <= kMaxN, "n must be in 2.." + std::to_string(kMaxN));
  if (cmd == "enumerate") {
    require(c.size >= 0 && c.size <= kAgeCap, "size must be in 0.." + std::to_string(kAgeCap));
  } else if (cmd == "degrees") {
    require(c.size >= 1 && c.size <= kLabeledCap,
            "size must be in 1.." + std::to_string(kLabeledCap));
  } else if (cmd == "expansions") {
    if (c.angles.empty()) {
      require(c.size >= 1 && c.size <= kLabeledCap,
              "size must be in 1.." + std::to_string(kLabeledCap));
    }
  } else if (cmd == "verify-identity") {
    require(c.max_size >= 1 && c.max_size <= kLabeledCap,
            "max-size must be in 1.." + std::to_string(kLabeledCap));
  } else if (cmd == "realizable") {
    require(c.n % 2 == 0, "realizable needs even n");
    require(!c.tournament.empty(), "realizable needs --tournament");
  } else if (cmd == "arrow") {
    require(c.k >= 1 && c.k <= kMaxArrowColors,
            "arrow needs 1 <= k <= " + std::to_string(kMaxArrowColors));
    require(c.t >= 1, "arrow needs t >= 1");
    require(!c.a_literal.empty() && !c.b_literal.empty(), "arrow needs --A and --B");
    require(!c.c_literal.empty() || c.m >= 1, "arrow needs --C or --m");
  } else {
    throw InvalidArgument("unknown command '" + cmd + "'");
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

Rendered run_enumerate(const RunConfig& c) {
  const auto classes = enumerate_age(c.n, c.size);
  if (c.format == "csv") {
    std::ostringstream out;
    out << "canonical,structure,aut_order\n";
    for (const SnStructure& a : classes) {
      out << to_hex(canonical_form(a.structure())) << ",\"" << to_literal(a.structure()) << "\","
          << automorphism_group_order(a.structure()) << '\n';
    }
    return {out.str()};
  }
  json rows = json::array();
  for (const SnStructure& a : classes) {
    rows.push_back({{"canonical", to_hex(canonical_form(a.structure()))},
                    {"structure", to_literal(a.structure())},
                    {"aut_order", automorphism_group_order(a.structure())}});
  }
  return {dump(rows)};
}

Rendered run_degrees(const RunConfig& c) {
  std::vector<DegreeReport> reports;
  for (const SnStructure& a : enumerate_age(c.n, c.size)) {
    reports.push_back(degree_report(a));
  }
  if (c.format == "csv") {
    return {degree_csv(reports)};
  }
  json rows = json::array();
  for (const DegreeReport& r : reports) {
    rows.push_back(to_json(r));
  }
  return {dump(rows)};
}

Rendered run_expansions(const RunConfig& c) {
  if (!c.angles.empty()) {
    const AngleConfig config = parse_angle_config(c.angles);
    const SnStructure a = realize(config);
    json doc{{"config", to_string(config)},
             {"structure", to_literal(a.structure())},
             {"canonical", a.size() <= kCanonicalCap ? to_hex(canonical_form(a.structure()))
                                                     : std::string()}};
    json cuts = json::array();
    for (const Rational& cut : critical_cuts(config)) {
      cuts.push_back(to_string(cut));
    }
    doc["critical_cuts"] = cuts;
    doc["partitions"] = quadrant_partitions(config);
    json expansions = json::array();
    for (const LabeledExpansion& x : reversal_expansions(config)) {
      expansions.push_back(to_string(x));
    }
    doc["expansions"] = expansions;
    doc["aut_order"] = automorphism_group_order(a.structure());
    if (c.format == "csv") {
      std::ostringstream out;
      out << "expansion\n";
      for (const auto& e : expansions) {
        out << e.get<std::string>() << '\n';
      }
      return {out.str()};
    }
    return {dump(doc)};
  }

  json rows = json::array();
  std::ostringstream csv;
  csv << "canonical,structure,labeled,aut_order,m_oracle,m_formula,words\n";
  for (const SnStructure& a : enumerate_age(c.n, c.size)) {
    const ExpansionCount count = expansion_count(a);
    json words = json::array();
    std::string word_list;
    for (const QnStructure& w : expansion_words(a)) {
      words.push_back(to_string(w));
      word_list += (word_list.empty() ? "" : ";") + to_string(w);
    }
    const std::string canonical = to_hex(canonical_form(a.structure()));
    rows.push_back({{"canonical", canonical},
                    {"structure", to_literal(a.structure())},
                    {"labeled", count.labeled},
                    {"aut_order", count.aut_order},
                    {"m_oracle", count.m_oracle},
                    {"m_formula", count.m_formula},
                    {"words", words}});
    csv << canonical << ",\"" << to_literal(a.structure()) << "\"," << count.labeled << ','
        << count.aut_order << ',' << count.m_oracle << ',' << count.m_formula << ",\""
        << word_list << "\"\n";
    if (count.m_oracle != count.m_formula) {
      throw InvariantViolation("m(A) formula disagrees with brute force for " +
                               to_literal(a.structure()));
    }
  }
  return {c.format == "csv" ? csv.str() : dump(rows)};
}

Rendered run_verify_identity(const RunConfig& c) {
  std::vector<CensusReport> reports;
  for (int size = 1; size <= c.max_size; ++size) {
    reports.push_back(verify_identity(c.n, size));
  }
  if (c.format == "csv") {
    return {census_csv(reports)};
  }
  json rows = json::array();
  for (const CensusReport& r : reports) {
    rows.push_back(to_json(r));
  }
  return {dump(rows)};
}

Rendered run_realizable(const RunConfig& c) {
  const FinStructure t = parse_structure(c.tournament);
  const bool realizable = is_realizable(t, c.n);
  if (c.format == "csv") {
    return {"n,tournament,realizable\n" + std::to_string(c.n) + ",\"" + to_literal(t) + "\"," +
            (realizable ? "true" : "false") + "\n"};
  }
  return {dump({{"n", c.n}, {"tournament", to_literal(t)}, {"realizable", realizable}})};
}

Rendered run_arrow(const RunConfig& c) {
  ArrowInstance inst;
  inst.c = c.c_literal.empty() ? cycle_structure(c.n, c.m).structure()
                               : parse_structure(c.c_literal);
  inst.b = parse_structure(c.b_literal);
  inst.a = parse_structure(c.a_literal);
  inst.k = c.k;
  inst.t = c.t;
  const ArrowCertificate cert = holds_arrow(inst, c.budget);
  const int code = cert.verdict == Verdict::budget_exceeded ? kBudgetExceeded : kSuccess;
  if (c.format == "csv") {
    std::string witness;
    for (std::size_t i = 0; i < cert.bad_coloring.size(); ++i) {
      witness += (i ? ";" : "") + std::to_string(cert.bad_coloring[i]);
    }
    return {"verdict,instance_hash,witness\n" + to_string(cert.verdict) + "," +
                cert.instance_hash + "," + witness + "\n",
            code};
  }
  return {dump(to_json(cert)), code};
}

Rendered run_tangent(const RunConfig& c) {
  const BigInt value = tangent_number(c.k);
  if (c.format == "csv") {
    return {"k,tangent_number\n" + std::to_string(c.k) + "," + value.str() + "\n"};
  }
  return {value.str() + "\n"};
}

Rendered dispatch(const RunConfig& c) {
  if (c.command == "enumerate") return run_enumerate(c);
  if (c.command == "degrees") return run_degrees(c);
  if (c.command == "expansions") return run_expansions(c);
  if (c.command == "verify-identity") return run_verify_identity(c);
  if (c.command == "realizable") return run_realizable(c);
  if (c.command == "arrow") return run_arrow(c);
  if (c.command == "tangent") return run_tangent(c);
  throw InvalidArgument("unknown command '" + c.command + "'");
}

std::string error_json(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}}.dump() + "\n";
}

}  // namespace

std::string cache_key(const RunConfig& c) {
  std::ostringstream key;
  key << "circramsey/" << c.tool_version << '/' << c.command << "?format=" << c.format;
  if (c.command == "tangent") {
    key << "&k=" << c.k;
  } else {
    key << "&n=" << c.n;
  }
  if (c.command == "enumerate" || c.command == "degrees" ||
      (c.command == "expansions" && c.angles.empty())) {
    key << "&size=" << c.size;
  }
  if (c.command == "expansions" && !c.angles.empty()) {
    key << "&angles=" << c.angles;
  }
  if (c.command == "verify-identity") {
    key << "&max_size=" << c.max_size;
  }
  if (c.command == "realizable") {
    key << "&tournament=" << c.tournament;
  }
  if (c.command == "arrow") {
    key << "&k=" << c.k << "&t=" << c.t << "&m=" << c.m << "&budget=" << c.budget
        << "&C=" << c.c_literal << "&B=" << c.b_literal << "&A=" << c.a_literal;
  }
  return key.str();
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    check_caps(config);
    const std::string key = cache_key(config);
    std::optional<ResultCache> cache;
    if (config.cache_dir) {
      cache.emplace(*config.cache_dir);
      if (auto hit = cache->get(key, config.tool_version, result.warnings)) {
        result.output = std::move(*hit);
        result.from_cache = true;
        return result;
      }
    }
    Rendered rendered = dispatch(config);
    result.output = std::move(rendered.text);
    result.exit_code = rendered.exit_code;
    if (cache && result.exit_code == kSuccess) {
      cache->put({key, result.output, config.tool_version}, result.warnings);
    }
  } catch (const BudgetExceeded& e) {
    result = {kBudgetExceeded, error_json("budget_exceeded", e.what()), false, result.warnings};
  } catch (const InvariantViolation& e) {
    result = {kInvariantViolation, error_json("invariant_violation", e.what()), false,
              result.warnings};
  } catch (const CapExceeded& e) {
    result = {kInvalidConfig, error_json("cap_exceeded", e.what()), false, result.warnings};
  } catch (const GenericityViolation& e) {
    result = {kInvalidConfig, error_json("genericity_violation", e.what()), false,
              result.warnings};
  } catch (const InvalidArgument& e) {
    result = {kInvalidConfig, error_json("invalid_config", e.what()), false, result.warnings};
  } catch (const std::exception& e) {
    result = {kInvariantViolation, error_json("internal_error", e.what()), false,
              result.warnings};
  }
  return result;
}

std::optional<std::filesystem::path> default_cache_dir() {
  if (const char* dir = std::getenv(kCacheEnvVar); dir && *dir) {
    return std::filesystem::path(dir);
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "circramsey";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "circramsey";
  }
  return std::nullopt;
}

ParseOutcome parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Finite Ramsey machinery for the circular structures S(n)", "circramsey"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig config;
  std::string cache_dir;
  bool no_cache = false;

  app.add_option("--format", config.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", config.output, "write the artifact to this file");
  app.add_option("--cache-dir", cache_dir,
                 std::string("cache directory (default: $") + kCacheEnvVar + ")");
  app.add_flag("--no-cache", no_cache, "do not read or write the cache");

  auto* enumerate = app.add_subcommand("enumerate", "isomorph-free list of Age(S(n)) members");
  enumerate->add_option("--n", config.n)->required();
  enumerate->add_option("--size", config.size)->required();

  auto* degrees = app.add_subcommand("degrees", "small and big Ramsey degrees per iso class");
  degrees->add_option("--n", config.n)->required();
  degrees->add_option("--size", config.size)->required();

  auto* expansions =
      app.add_subcommand("expansions", "expansion counts and words, or reversal of a config");
  expansions->add_option("--n", config.n);
  expansions->add_option("--size", config.size);
  expansions->add_option("--angles", config.angles, "AngleConfig literal");

  auto* census = app.add_subcommand("verify-identity", "census of 1/|Aut| and labeled expansions");
  census->add_option("--n", config.n)->required();
  census->add_option("--max-size", config.max_size)->required();

  auto* realizable =
      app.add_subcommand("realizable", "is a colored tournament the image of Age(S(n))?");
  realizable->add_option("--n", config.n)->required();
  realizable->add_option("--tournament", config.tournament, "structure literal")->required();

  auto* arrow = app.add_subcommand("arrow", "exhaustive check of C -> (B)^A_{k,t}");
  arrow->add_option("--n", config.n);
  arrow->add_option("--m", config.m, "use C = cycle_structure(n, m)");
  arrow->add_option("--C", config.c_literal, "structure literal for C");
  arrow->add_option("--B", config.b_literal, "structure literal for B")->required();
  arrow->add_option("--A", config.a_literal, "structure literal for A")->required();
  arrow->add_option("--k", config.k);
  arrow->add_option("--t", config.t);
  arrow->add_option("--budget", config.budget);

  auto* tangent = app.add_subcommand("tangent", "tan^(2k-1)(0)");
  tangent->add_option("--k", config.k)->required();

  ParseOutcome outcome;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = app.exit(e, out, err);
    outcome.exit_code = code == 0 ? kSuccess : kInvalidConfig;
    outcome.message = code == 0 ? out.str() : error_json("invalid_config", e.what());
    return outcome;
  }
  config.command = app.get_subcommands().front()->get_name();
  if (!no_cache) {
    config.cache_dir = cache_dir.empty() ? default_cache_dir()
                                         : std::optional<std::filesystem::path>(cache_dir);
  }
  outcome.config = std::move(config);
  return outcome;
}

}  // namespace circramsey::cli
