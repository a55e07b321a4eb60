#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "report.hpp"

namespace gincs::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitNotCs = 10,
  kExitInconclusive = 20,
  kExitNotBrad = 30,
};

struct RunConfig {
  // instance
  std::string graph_file;
  std::string hypergraph_file;
  std::string gens_file;
  int all_graphs = 0;  // > 0: every labeled graph on this many vertices
  // ring
  int rows = 0;
  int cols = 0;
  std::vector<int> blocks;
  std::uint32_t prime = kDefaultPrime;
  std::optional<std::uint32_t> cross_check_prime;
  std::string order = "degrevlex";
  std::string grading = "columns";
  // sampling
  int samples = 3;
  std::uint64_t seed = 1;
  // harness
  double timeout_s = 300;
  bool timings = false;
  std::string output;
  // command switches
  bool verify = false;
  bool inverse = false;
  std::string t_ideal;
  std::string s_ideal;

  /// Throws std::invalid_argument on inconsistent flags.
  void validate() const;
  Json to_json() const;
};

struct Outcome {
  Json result;
  int exit_code = kExitOk;
  std::string summary;  // one line for standard error
};

Outcome cmd_gin(const RunConfig& config);
Outcome cmd_check_cs(const RunConfig& config);
Outcome cmd_predict(const RunConfig& config);
Outcome cmd_classify(const RunConfig& config);
Outcome cmd_kpoly(const RunConfig& config);
Outcome cmd_psi(const RunConfig& config);

/// Reads one polynomial per line; '#' starts a comment and an optional
/// "blocks m_1 ... m_n" line fixes the ring. Without ring information the
/// smallest ring containing every variable is used.
Ideal read_gens_file(const std::string& path, const RunConfig& config);

}  // namespace gincs::cli
