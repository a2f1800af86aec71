#include "ncg/census.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <sstream>
#include <thread>

#include "ncg/error.hpp"

namespace ncg {

CensusRecord make_record(std::uint64_t code, const LieAlgebra& algebra, const Guards& guards) {
  const NCGraph g = build_graph(algebra);
  const SeriesData ser = series(algebra);
  return CensusRecord{code,
                      fingerprint(algebra),
                      algebra,
                      g.s(),
                      ser.nilpotency_class,
                      ser.solvable,
                      is_ct(algebra, guards.elements),
                      is_ac(algebra, guards.elements),
                      min_abelian_cover(algebra, guards),
                      compute_invariants(g.graph, guards),
                      0};
}

namespace {

std::vector<CensusRecord> collect(std::size_t dim, const FieldSpec& spec, const Guards& guards, std::uint64_t begin,
                                  std::uint64_t end, EnumerationStats& stats) {
  std::vector<CensusRecord> out;
  stats = enumerate_brackets(
      dim, spec, true, [&](std::uint64_t code, const LieAlgebra& a) { out.push_back(make_record(code, a, guards)); },
      begin, end);
  return out;
}

}  // namespace

Census run_census(std::size_t dim, const FieldSpec& spec, const Guards& guards, unsigned jobs) {
  const std::uint64_t total = candidate_count(dim, spec);
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));

  std::vector<std::vector<CensusRecord>> shards(jobs);
  std::vector<EnumerationStats> shard_stats(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t begin = total * w / jobs;
      const std::uint64_t end = total * (w + 1) / jobs;
      shards[w] = collect(dim, spec, guards, begin, end, shard_stats[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Census census;
  census.dim = dim;
  census.field = Field(spec).spec();
  for (unsigned w = 0; w < jobs; ++w) {
    census.stats.candidates += shard_stats[w].candidates;
    census.stats.valid += shard_stats[w].valid;
    census.stats.non_abelian += shard_stats[w].non_abelian;
    for (auto& r : shards[w]) census.records.push_back(std::move(r));
  }

  // Graph classes: prefilter on cheap invariants, then an exact test against
  // each candidate class representative.
  std::vector<Graph> reps;
  for (std::size_t i = 0; i < census.records.size(); ++i) {
    auto& rec = census.records[i];
    const Graph g = build_graph(rec.algebra).graph;
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < census.classes.size() && !found; ++c) {
      const auto& rep = census.records[census.classes[c].members.front()].invariants;
      if (rep.order != rec.invariants.order || rep.size != rec.invariants.size) continue;
      const auto iso = is_isomorphic(reps[c], g, guards.isomorphism, guards.search_nodes);
      if (!iso) throw GuardExceeded("graph isomorphism test exceeded its budget in the census");
      if (*iso) found = c;
    }
    if (!found) {
      GraphClass cls;
      cls.id = census.classes.size();
      cls.order = rec.invariants.order;
      cls.size = rec.invariants.size;
      census.classes.push_back(cls);
      reps.push_back(g);
      found = cls.id;
    }
    GraphClass& cls = census.classes[*found];
    rec.graph_class = cls.id;
    cls.members.push_back(i);
    if (rec.nilpotency_class) ++cls.nilpotent;
    if (rec.solvable) ++cls.solvable;
    if (std::find(cls.center_dims.begin(), cls.center_dims.end(), rec.center_dim) == cls.center_dims.end()) {
      cls.center_dims.push_back(rec.center_dim);
      std::sort(cls.center_dims.begin(), cls.center_dims.end());
    }
  }
  return census;
}

namespace {

nlohmann::json optional_bool(const std::optional<bool>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

nlohmann::json to_json(const CensusRecord& r) {
  nlohmann::json j;
  j["kind"] = "record";
  j["code"] = r.code;
  j["fingerprint"] = r.fingerprint;
  j["algebra"] = algebra_to_json(r.algebra);
  j["center_dim"] = r.center_dim;
  j["nilpotency_class"] = r.nilpotency_class ? nlohmann::json(*r.nilpotency_class) : nlohmann::json(nullptr);
  j["solvable"] = r.solvable;
  j["ct"] = optional_bool(r.ct);
  j["ac"] = optional_bool(r.ac);
  j["abelian_cover"] = r.abelian_cover
                           ? nlohmann::json{{"value", r.abelian_cover->value}, {"exact", r.abelian_cover->exact}}
                           : nlohmann::json(nullptr);
  j["invariants"] = to_json(r.invariants);
  j["graph_class"] = r.graph_class;
  return j;
}

nlohmann::json to_json(const GraphClass& cls, const Census& census) {
  nlohmann::json j;
  j["kind"] = "class";
  j["id"] = cls.id;
  j["order"] = cls.order;
  j["size"] = cls.size;
  j["members"] = cls.members.size();
  j["representative"] = census.records[cls.members.front()].fingerprint;
  j["nilpotent"] = cls.nilpotent;
  j["solvable"] = cls.solvable;
  j["center_dims"] = cls.center_dims;
  j["mixed_nilpotency"] = cls.mixed_nilpotency();
  return j;
}

std::string census_jsonl(const Census& census) {
  std::string out;
  for (const auto& r : census.records) out += to_json(r).dump() + "\n";
  for (const auto& c : census.classes) out += to_json(c, census).dump() + "\n";
  nlohmann::json summary{{"kind", "summary"},
                         {"dim", census.dim},
                         {"field", {{"p", census.field.p}, {"m", census.field.m}, {"modulus", census.field.modulus}}},
                         {"candidates", census.stats.candidates},
                         {"valid", census.stats.valid},
                         {"non_abelian", census.stats.non_abelian},
                         {"graph_classes", census.classes.size()}};
  out += summary.dump() + "\n";
  return out;
}

std::string census_summary(const Census& census) {
  std::ostringstream out;
  out << "candidates " << census.stats.candidates << ", valid " << census.stats.valid << ", non-abelian "
      << census.stats.non_abelian << ", graph classes " << census.classes.size() << "\n";
  out << "class  order  edges  members  nilpotent  solvable  center dims\n";
  for (const auto& c : census.classes) {
    std::ostringstream dims;
    for (std::size_t i = 0; i < c.center_dims.size(); ++i) dims << (i ? "," : "") << c.center_dims[i];
    char line[128];
    std::snprintf(line, sizeof line, "%5zu  %5zu  %5zu  %7zu  %9zu  %8zu  %s%s\n", c.id, c.order, c.size,
                  c.members.size(), c.nilpotent, c.solvable, dims.str().c_str(),
                  c.mixed_nilpotency() ? "  (mixed nilpotency)" : "");
    out << line;
  }
  return out.str();
}

}  // namespace ncg
