#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowuplab/groebner.hpp"
#include "blowuplab/io.hpp"

namespace blowuplab {

enum class CheckKind {
  fiber_type,
  rees_methods_agree,
  fiber_equals_ot,
  colon_all_indices,
  deletion_restriction,
  deletion_colon_equiv,
  restricted_ot_in_colon,
  content_saturation,
  primary_decomposition,
  g_condition,
  generic_jacobian_dual,
  hilbert_prediction,
  reduction_number,
  analytic_spread,
  boolean_bigraded,
  universal_gb_sample,
  kplus1_radical,
  stretched_rees,
  sylvester_forms,
  cramer_inclusion,
  symmetric_codimension,
  rees_membership,
  reduction_number_components,
};

const std::vector<CheckKind>& all_check_kinds();
std::string check_name(CheckKind kind);
std::optional<CheckKind> parse_check_kind(const std::string& name);

enum class CheckStatus { pass, fail, skipped, inconclusive };
std::string status_name(CheckStatus s);

struct CheckReport {
  std::string arrangement;
  std::string check;
  CheckStatus status = CheckStatus::pass;
  std::string witness;  // empty if none
  std::int64_t millis = 0;
};

struct CheckOptions {
  Budget budget;
  std::uint64_t seed = 0;
  std::size_t sampled_orders = 24;
  bool timings = false;
};

class CheckContext;

/// Shared per-instance cache of the expensive ideals; safe to use from
/// several threads.
class CheckSession {
 public:
  explicit CheckSession(Instance instance);
  ~CheckSession();
  CheckSession(const CheckSession&) = delete;
  CheckSession& operator=(const CheckSession&) = delete;

  const Instance& instance() const;
  CheckReport run(CheckKind kind, const CheckOptions& options);

 private:
  std::unique_ptr<CheckContext> context_;
};

/// Convenience wrapper: fresh session, one check.
CheckReport run_check(const Instance& instance, CheckKind kind, const CheckOptions& options = {});

/// Runs every check on every instance with up to `jobs` threads; reports are
/// sorted by (arrangement, check).
std::vector<CheckReport> run_battery(const std::vector<Instance>& instances, const std::vector<CheckKind>& kinds,
                                     const CheckOptions& options, unsigned jobs);

/// 0 if every report passed or was skipped, 1 on any failure, otherwise 3.
int exit_code_for(const std::vector<CheckReport>& reports);

nlohmann::ordered_json to_json(const CheckReport& r);
std::string to_text(const CheckReport& r);

/// Built-in arrangements used by the corpus command.
std::vector<Instance> builtin_corpus();

}  // namespace blowuplab
