#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "evpos/classify.hpp"
#include "evpos/covering.hpp"
#include "evpos/saddle.hpp"
#include "evpos/strongpos.hpp"

namespace evpos::cli {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { kText, kJson, kCsv };

struct RunConfig {
  std::string command;  // classify|covering|strongpos|power|threshold|saddle|partitions
  std::string input_poly;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> n;
  std::uint64_t m_min = 1;
  std::optional<std::uint64_t> m_max;
  OutputFormat format = OutputFormat::kText;
  unsigned depth = 24;
  std::uint64_t budget = 100000;
  std::uint64_t seed = 1;
  bool sign_profile = false;
  bool empirical = false;
  std::optional<std::string> out_path;
};

/// Parses argv; throws CLI::ParseError subclasses (including help/version
/// requests, which CLI11 reports as successful exits).
RunConfig parse_arguments(int argc, const char* const* argv);

/// Exit 0 on definite results, 2 on Inconclusive or exhausted budgets, 1 on
/// input errors. Reports go to `out` unless config.out_path is set; errors
/// go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point (parsing plus run).
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

nlohmann::json to_json(const CoveringReport& report);
nlohmann::json to_json(const StrongPositivityVerdict& verdict);
nlohmann::json to_json(const StrongPositivityWitness& witness);
nlohmann::json to_json(const ClassificationVerdict& verdict);
nlohmann::json to_json(const SaddleEstimate& estimate);

}  // namespace evpos::cli
