#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/domination.hpp"
#include "zagreb/enumeration.hpp"
#include "zagreb/exact.hpp"
#include "zagreb/scan.hpp"

namespace zagreb {

enum class ClaimStatus { pass, fail, discrepancy_documented };
std::string_view to_string(ClaimStatus status);

struct Observation {
  std::string name;
  std::string value;
};

/// A tree (or parameter point) on which a claim failed. `tree` is in the
/// tree text format so the case can be re-checked independently.
struct Counterexample {
  std::string code;  // canonical code, hex; empty for non-tree claims
  std::string tree;
  std::vector<Observation> observed;
};

struct ClaimReport {
  std::string id;
  std::string range;
  ClaimStatus status = ClaimStatus::pass;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<Counterexample> counterexamples;  // first few, in scan order
  std::vector<std::string> notes;
};

/// Extremal values of one (n, k, gamma_k) cell next to the reference family
/// that is supposed to attain them.
struct ExtremalReport {
  int n = 0;
  int k = 0;
  int gamma = 0;
  std::size_t class_count = 0;
  ExactNat min_pi1;
  std::vector<std::string> min_pi1_codes;  // hex, ascending
  ExactNat max_pi2;
  std::vector<std::string> max_pi2_codes;
  std::string reference;  // "star", "t_a_nk2" or "t_nks"
  ExactNat bound_pi1;
  ExactNat bound_pi2;
  std::optional<ExactNat> printed_pi1;  // gamma = 1 only: the n^2 / n^n variant
  std::optional<ExactNat> printed_pi2;
  std::vector<std::string> expected_codes;
  bool bound_pi1_match = false;
  bool bound_pi2_match = false;
  bool achievers_pi1_match = false;
  bool achievers_pi2_match = false;
};

struct ScanParams {
  int n_max = 10;
  int k_min = 1;
  int k_max = 3;
  int jobs = 1;
  int shards = 16;
  int enumeration_cap = kEnumerationCap;
  int oracle_cap = kBruteForceCap;
  std::size_t max_counterexamples = 10;
};

/// Every claim id understood by Verifier::verify_claim, in report order.
const std::vector<std::string>& claim_ids();

/// Runs claim checks and extremal scans over enumerated trees, caching the
/// per-order evaluation so several claims share one pass.
class Verifier {
 public:
  explicit Verifier(ScanParams params);

  const ScanParams& params() const { return params_; }

  /// Throws std::invalid_argument for an unknown id.
  ClaimReport verify_claim(std::string_view id);

  /// One report per gamma_k value present among trees of order n.
  std::vector<ExtremalReport> extremal_scan(int n, int k);

  const TreeStream& stream(int n);
  const EvaluatedTrees& evaluated(int n, int k_max);

 private:
  ScanParams params_;
  std::map<int, TreeStream> streams_;
  std::map<int, EvaluatedTrees> evaluated_;
};

struct VerificationReport {
  ScanParams params;
  std::vector<ClaimReport> claims;
  std::vector<ExtremalReport> extremal;

  bool any_failure() const;
};

/// Checks the listed claims and collects extremal cells for n = 2..n_max,
/// k = k_min..k_max.
VerificationReport run_verification(const std::vector<std::string>& ids, const ScanParams& params);

std::vector<ExtremalReport> extremal_scan(int n, int k, ScanParams params = {});
ClaimReport verify_claim(std::string_view id, const ScanParams& params);

}  // namespace zagreb
