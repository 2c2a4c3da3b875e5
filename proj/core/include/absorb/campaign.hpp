#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absorb/ring.hpp"
#include "absorb/search.hpp"

namespace absorb {

inline constexpr const char* kToolVersion = "0.1.0";

/// Check names accepted in a campaign config, in report order.
const std::vector<std::string>& campaign_checks();

enum class Status { Pass, Fail, Counterexample, CapExceeded, Skipped, Error };

/// "pass", "fail", "counterexample-found", "cap-exceeded", "skipped", "error".
std::string status_name(Status s);

struct CampaignBounds {
  unsigned max_deg = 1;
  unsigned cap = kDefaultOmegaCap;
  unsigned vars = 1;
  std::uint64_t height = 5;
  std::uint64_t sample = 10'000;
  std::uint64_t order_cap = kDefaultOrderCap;
  std::uint64_t budget = kDefaultBudget;
};

struct OutputSpec {
  std::string format = "json";  // json | csv | text
  std::string path;             // empty: standard output
};

struct CampaignConfig {
  std::vector<std::string> rings;
  std::vector<std::string> checks;
  CampaignBounds bounds;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  OutputSpec output;
  bool timing = false;  // off keeps reports byte-identical between runs
};

/// Parses and validates a JSON config document. Errors carry the line and
/// column of the offending token or key.
CampaignConfig parse_campaign_config(std::string_view text);
/// Throws std::invalid_argument naming the first problem.
void validate_config(const CampaignConfig& config);

struct Record {
  std::string ring;
  std::string ideal;  // "-" for ring-level checks
  std::string check;
  std::string mode;   // exhaustive | sampled:N
  Status status = Status::Pass;
  std::string detail;
  std::vector<std::string> witness;
  std::vector<std::pair<std::string, std::string>> data;
  std::int64_t millis = 0;
  std::size_t ideal_rank = 0;  // 1 + canonical lattice position; 0 for ring-level
};

struct Summary {
  std::uint64_t pass = 0, fail = 0, counterexample = 0, cap_exceeded = 0, skipped = 0,
                error = 0;
};

struct CampaignReport {
  CampaignConfig config;
  std::vector<Record> records;
  Summary summary;
  std::vector<std::size_t> flagged;  // record positions needing attention
};

/// Inputs for one check on one ring. With `ideal` set, per-ideal checks
/// run on that ideal only; otherwise on every proper ideal.
struct CheckRequest {
  std::string check;
  std::string ring_spec;
  std::optional<std::string> ideal;
  CampaignBounds bounds;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool timing = false;
  std::vector<std::string> polys;  // explicit polynomials for bezout/certify
};

/// Runs one check; operational failures become Error records.
std::vector<Record> run_check(const CheckRequest& request);

/// Records sorted by (ring spec, ideal rank, check name).
CampaignReport run_campaign(const CampaignConfig& config);
CampaignReport make_report(const CampaignConfig& config, std::vector<Record> records);

std::string render_json(const CampaignReport& report);
std::string render_csv(const CampaignReport& report);
std::string render_text(const CampaignReport& report);
std::string render(const CampaignReport& report, const std::string& format);

/// 2 when any record is a counterexample or a failed check, 1 when any
/// record errored, 0 otherwise.
int exit_status(const CampaignReport& report);

/// Writes through a temporary file and a rename.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace absorb
