// Conjecture sweeps, JSON/CSV reporting, and the advisory result cache.
#pragma once

#include <optional>
#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include <json.hpp>

#include "logsheaf/arrangement.hpp"
#include "logsheaf/logmod.hpp"

namespace logsheaf {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, skipped };
const char* verdict_name(Verdict v);

struct CellReport {
  char family = 'A';
  int m = 2, j = 0, k = 0, n = 0;
  Json betti;
  Json charpoly;
  bool free_arrangement = false;
  std::vector<int> exponents;
  std::vector<std::vector<std::string>> unstable;  // dual coords as strings
  Verdict shift_betti = Verdict::skipped;
  Verdict dual_betti = Verdict::skipped;
  Verdict pdim = Verdict::skipped;
  Verdict linear = Verdict::skipped;
  Verdict riemann_hypothesis = Verdict::skipped;
};

struct SweepOptions {
  int scan_bound = 2;
  int random_lines = 50;
  uint64_t seed = 20240101;
  long matrix_budget = 20000000;  // entries of the largest degree matrix
  std::string cache_dir;          // empty = no disk cache
};

struct SweepReport {
  std::vector<CellReport> cells;
  bool all_pass = true;
};

SweepReport conjecture_sweep(char family, int m, std::pair<int, int> j_range,
                             std::pair<int, int> k_range, const SweepOptions& opt = {});

Json sweep_to_json(const SweepReport& r);
std::string sweep_to_csv(const SweepReport& r);

struct ReportOptions {
  bool with_unstable = false;
  int scan_bound = 2;
  int random_lines = 50;
  uint64_t seed = 20240101;
  int cutoff = -1;
  std::string cache_dir;
};

// Bundled exact report for one arrangement: char poly, Betti, freeness,
// splitting samples, unstable set and catalog comparison.
Json report(const Arrangement& A, const ReportOptions& opt = {});

// JSON helpers shared with the CLI.
Json arrangement_to_json(const Arrangement& A);
Json betti_to_json(const BettiTable& b);
Json charpoly_to_json(const Arrangement& A, const Int& twist);

// Advisory file cache: returns the stored value when key matches exactly.
std::optional<Json> cache_get(const std::string& dir, const std::string& key);
void cache_put(const std::string& dir, const std::string& key, const Json& value);

}  // namespace logsheaf
