#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncg/lie_algebra.hpp"

namespace ncg {

/// [e0, e1] = e2.
LieAlgebra heisenberg(const FieldSpec& spec);
/// [e0, e1] = e0.
LieAlgebra affine2(const FieldSpec& spec);
/// Basis h, x, y with [h, x] = 2x, [h, y] = -2y, [x, y] = h.
LieAlgebra sl2(const FieldSpec& spec);
/// Basis E11, E12, E21, E22 of 2x2 matrices under the commutator.
LieAlgebra gl2(const FieldSpec& spec);
/// Heisenberg over F_2, basis x, y, z with [x, y] = z.
LieAlgebra paper_L1();
/// Over F_2, basis a, b, c with [a, b] = a.
LieAlgebra paper_L2();

const std::vector<std::string>& builtin_names();
/// Throws InputError for unknown names, and for paper_L1/paper_L2 over any
/// field other than F_2.
LieAlgebra builtin(std::string_view name, const FieldSpec& spec);

/// Parses the algebra file format. Throws InputError naming the line or the
/// offending field, or the violated axiom with its basis witness.
LieAlgebra algebra_from_json(const nlohmann::json& doc);
LieAlgebra algebra_from_text(std::string_view text);
nlohmann::json algebra_to_json(const LieAlgebra& algebra);

/// Hex digest of field, dimension and structure tensor.
std::string fingerprint(const LieAlgebra& algebra);

/// Number of candidate tensors (one value vector per pair i < j).
/// Throws GuardExceeded above kMaxCandidates.
std::uint64_t candidate_count(std::size_t dim, const FieldSpec& spec);
inline constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 24;

struct EnumerationStats {
  std::uint64_t candidates = 0;
  std::uint64_t valid = 0;
  std::uint64_t non_abelian = 0;

  friend bool operator==(const EnumerationStats&, const EnumerationStats&) = default;
};

/// Streams every antisymmetric tensor of the given dimension that satisfies
/// the Jacobi identity, in candidate-code order. Candidate codes in
/// [begin, end) are visited; fn receives the code and the algebra.
EnumerationStats enumerate_brackets(std::size_t dim, const FieldSpec& spec, bool non_abelian_only,
                                    const std::function<void(std::uint64_t, const LieAlgebra&)>& fn,
                                    std::uint64_t begin = 0, std::uint64_t end = UINT64_MAX);

}  // namespace ncg
