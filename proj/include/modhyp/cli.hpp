#pragma once

// Command-line front end. `parse_args` builds a RunConfig, `run` executes it and
// writes newline-delimited JSON, CSV or text records to `out`; diagnostics go to `err`.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "modhyp/search.hpp"

namespace modhyp::cli {

enum class Format { json, csv, text };

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kBadArguments = 2,
  kVerificationFailure = 3,
};

struct RunConfig {
  std::string command;
  std::optional<std::uint64_t> p;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string c = "1";             ///< integer, "all" or "sample:N"
  std::string h_set = "all";
  std::string k_set = "all";
  std::optional<std::uint64_t> h_max;
  std::optional<std::uint64_t> k_max;
  std::string bound = "none";      ///< none | smooth | squarefree | dense
  std::uint64_t L = 0;
  std::string eps = "0";
  std::string alpha;
  std::string beta;
  unsigned k = 1;
  std::string rule = "chang";      ///< karatsuba | chang
  std::string task;                ///< minimal | theorem1 | np
  std::vector<std::int64_t> poly;
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  std::vector<std::uint64_t> set;  ///< doublesum S
  std::vector<std::uint64_t> A, Z0, Z1;
  std::string spec = "all";        ///< sets
  std::optional<std::uint64_t> density;
  Format format = Format::json;
  int workers = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

/// Parses command-line arguments. On --help or a parse failure, writes to out/err and
/// returns std::nullopt with `exit_code` set.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                    int& exit_code);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace modhyp::cli
