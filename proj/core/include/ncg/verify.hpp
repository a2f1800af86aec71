#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/census.hpp"
#include "ncg/ncgraph.hpp"

namespace ncg {

enum class Status { Pass, Fail, NotApplicable, NotComputed };
std::string_view to_string(Status s);

struct CheckResult {
  std::string check;
  Status status = Status::NotComputed;
  std::string detail;
  /// Concrete data exhibiting a failure; null unless status is Fail.
  nlohmann::json witness;
  double seconds = 0.0;
};

struct VerifyConfig {
  Guards guards;
  std::uint64_t seed = 0;
  /// Random subsets per algebra for the domination criterion.
  std::size_t trials = 64;
  /// Random scaled and translated representative pairs per graph.
  std::size_t adjacency_samples = 1000;
  /// Record wall-clock time per check (off by default so reports are reproducible).
  bool timing = false;
};

struct TheoremReport {
  std::string algebra;
  std::string fingerprint;
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const;
  bool failed() const { return count(Status::Fail) > 0; }
};

/// Identifiers of the per-algebra checks, in execution order.
const std::vector<std::string>& check_ids();

/// Runs one check against a built graph. The graph may have been altered
/// after construction; the checks compare it against the algebra.
CheckResult run_check(const NCGraph& g, std::string_view id, const VerifyConfig& config = {});
TheoremReport verify_all(const NCGraph& g, const VerifyConfig& config = {});
/// Builds the graph first; throws InputError for abelian or invalid algebras.
TheoremReport verify_all(const LieAlgebra& algebra, const VerifyConfig& config = {});

/// For graph-isomorphic algebras over one field: equal quotient dimensions
/// and |L1| = |L2| iff |Z1| = |Z2|.
CheckResult check_iso_size(const LieAlgebra& a, const LieAlgebra& b, const VerifyConfig& config = {});

/// True when re-examining the witness of a failed check against `g`
/// reproduces the failure.
bool revalidate(const NCGraph& g, const CheckResult& failure, const VerifyConfig& config = {});

struct CensusVerification {
  Census census;
  std::vector<TheoremReport> reports;   // one per census record
  std::vector<CheckResult> pair_checks;  // iso_size against each class representative

  std::size_t count(Status s) const;
  bool failed() const { return count(Status::Fail) > 0; }
};

CensusVerification verify_census(std::size_t dim, const FieldSpec& spec, const VerifyConfig& config = {},
                                 unsigned jobs = 1);

nlohmann::json to_json(const CheckResult& result, const TheoremReport* owner = nullptr);
/// One JSON object per check.
std::string report_jsonl(const TheoremReport& report);
std::string report_text(const TheoremReport& report);
/// Reports of every record, the pair checks, then a summary line.
std::string census_report_jsonl(const CensusVerification& v);

/// Graph isomorphism together with the structural data that separates
/// the algebras when the graphs agree.
struct AlgebraComparison {
  std::optional<bool> graphs_isomorphic;  // nullopt: beyond the isomorphism guard
  std::size_t order_a = 0;
  std::size_t order_b = 0;
  std::optional<std::size_t> class_a;  // nilpotency class, nullopt if not nilpotent
  std::optional<std::size_t> class_b;
  bool solvable_a = false;
  bool solvable_b = false;
  std::size_t center_a = 0;
  std::size_t center_b = 0;

  /// Isomorphic graphs from algebras that differ in nilpotency, solvability
  /// or center dimension, hence non-isomorphic algebras.
  bool distinct_algebras_same_graph() const;
  std::string verdict() const;
  nlohmann::json to_json() const;
};

AlgebraComparison compare_algebras(const LieAlgebra& a, const LieAlgebra& b, const Guards& guards = {});

}  // namespace ncg
