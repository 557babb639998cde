#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbitcalc/classical.hpp"

namespace orbitcalc {

/// Sweep identities. The first nine are the named checks of the CLI; the
/// rest back the structural property suite.
enum class Identity {
  kLemma41,
  kProp42,
  kThm56Equiv,
  kThm19Sufficient,
  kProp58,
  kCollapseOracle,
  kExpansionOracle,
  kAchar,
  kSpecialCharacterization,
  kEtaRoutes,
  kEtaSpecial,
  kEtaOrderReversing,
  kBoundaryOps,
  kInducedSum,
  kDimSanity,
};

std::string identity_name(Identity id);
/// Throws kParse for unknown names.
Identity parse_identity(const std::string& name);
std::vector<Identity> all_identities();

/// Rank sweeps run over enumerated Arthur parameters or type partitions of
/// each rank; size sweeps run over all partitions of each size.
bool is_size_sweep(Identity id);

struct SweepConfig {
  Identity identity = Identity::kLemma41;
  /// Empty means every applicable family.
  std::optional<Family> family;
  int min = 0;
  /// Largest rank (rank sweeps) or partition size (size sweeps).
  int max = 0;
  /// 0 picks the hardware concurrency.
  int jobs = 0;
  /// Cap on stored witnesses; counts stay exact.
  std::size_t max_witnesses = 200;
};

struct VerificationReport {
  std::string identity;
  std::string family;  // "B", "C", "D" or "all"
  std::string range_kind;  // "rank" or "size"
  int min = 0;
  int max = 0;
  long long total = 0;
  long long passes = 0;
  long long failures = 0;
  /// False when the identity is only reported (e.g. the D case of prop58).
  bool asserted = true;
  std::vector<nlohmann::json> witnesses;
  /// Named side counts (e.g. strict vs equal dominance), sorted by key.
  std::map<std::string, long long> tallies;
  double duration_seconds = 0;

  bool ok() const { return !asserted || failures == 0; }
};

VerificationReport run_sweep(const SweepConfig& config);

/// Report as JSON. The duration is left out unless asked for, so two runs
/// on the same input produce identical bytes.
nlohmann::json report_json(const VerificationReport& report,
                           bool with_duration = true);

/// Every parameter of `family` with rank <= max_n whose expansion-form
/// equality fails, with both sides and the strictness of the dominance.
nlohmann::json search_counterexamples(Family family, int max_n, int jobs = 0);

}  // namespace orbitcalc
