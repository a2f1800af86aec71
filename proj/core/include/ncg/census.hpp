#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/catalog.hpp"
#include "ncg/ncgraph.hpp"

namespace ncg {

struct CensusRecord {
  std::uint64_t code = 0;  // candidate code from enumerate_brackets
  std::string fingerprint;
  LieAlgebra algebra;
  std::size_t center_dim = 0;
  std::optional<std::size_t> nilpotency_class;
  bool solvable = false;
  std::optional<bool> ct;
  std::optional<bool> ac;
  std::optional<Bounded> abelian_cover;
  InvariantReport invariants;
  std::size_t graph_class = 0;
};

/// Records sharing an isomorphism class of non-commuting graphs.
struct GraphClass {
  std::size_t id = 0;
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<std::size_t> members;  // indices into Census::records
  std::size_t nilpotent = 0;
  std::size_t solvable = 0;
  std::vector<std::size_t> center_dims;  // distinct, ascending

  /// Graph-isomorphic algebras that differ in nilpotency.
  bool mixed_nilpotency() const { return nilpotent != 0 && nilpotent != members.size(); }
};

struct Census {
  std::size_t dim = 0;
  FieldSpec field;
  EnumerationStats stats;
  std::vector<CensusRecord> records;  // candidate-code order
  std::vector<GraphClass> classes;    // ordered by first member
};

CensusRecord make_record(std::uint64_t code, const LieAlgebra& algebra, const Guards& guards = {});

/// All valid non-abelian tensors with their graphs and class assignment.
/// The candidate range is split across `jobs` threads; the result does not
/// depend on `jobs`. Throws GuardExceeded when enumeration or a graph
/// isomorphism test exceeds its budget.
Census run_census(std::size_t dim, const FieldSpec& spec, const Guards& guards = {}, unsigned jobs = 1);

nlohmann::json to_json(const CensusRecord& record);
nlohmann::json to_json(const GraphClass& cls, const Census& census);
/// JSON lines: one per record, one per class, then a summary line.
std::string census_jsonl(const Census& census);
/// Table of graph classes.
std::string census_summary(const Census& census);

}  // namespace ncg
