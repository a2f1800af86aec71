#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncg/lie_algebra.hpp"

namespace ncg {

/// A point of P(L/Z(L)): quotient coordinates scaled so the first nonzero
/// coordinate is 1, plus its position in the canonical enumeration.
struct ProjPoint {
  Vector rep;
  std::size_t index = 0;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.rep == b.rep; }
};

/// Canonical representatives of the points of P(F_q^d), ordered by the dense
/// vector code (coordinate 0 least significant). For d = 2 this lists
/// (1,0), (0,1), (1,1), (1,2), ...
std::vector<Vector> projective_representatives(const Field& field, std::size_t d);

/// (q^d - 1) / (q - 1).
std::uint64_t projective_point_count(std::uint64_t q, std::size_t d);

/// Coordinates on L/Z(L) and the enumerated projective space over it.
///
/// The quotient is identified with the coordinates outside the pivot columns
/// of the center's RREF basis. Projection removes the center component and
/// keeps those coordinates, so it is linear with kernel Z(L).
class CentralQuotient {
 public:
  static constexpr std::uint64_t kMaxCodes = std::uint64_t{1} << 22;

  /// Throws InputError for abelian or invalid algebras and GuardExceeded
  /// when q^d exceeds kMaxCodes.
  explicit CentralQuotient(LieAlgebra algebra);

  const LieAlgebra& algebra() const { return algebra_; }
  const Subspace& center() const { return center_; }
  const std::vector<std::size_t>& complement_cols() const { return complement_cols_; }
  std::size_t n() const { return algebra_.dim(); }
  std::size_t s() const { return center_.dim(); }
  std::size_t d() const { return complement_cols_.size(); }
  int q() const { return algebra_.field().q(); }

  const std::vector<ProjPoint>& points() const { return points_; }

  /// Quotient coordinates of v (length d).
  Vector project(std::span<const Scalar> v) const;
  /// The point [v], or nullopt when v is central.
  std::optional<ProjPoint> normalize(std::span<const Scalar> v) const;
  /// Index of [v] in points(), or nullopt when v is central.
  std::optional<std::size_t> locate(std::span<const Scalar> v) const;
  /// Preimage supported on the complement columns.
  Vector lift(const ProjPoint& point) const;
  Vector lift(std::size_t index) const { return lift(points_.at(index)); }

 private:
  LieAlgebra algebra_;
  Subspace center_;
  std::vector<std::size_t> complement_cols_;
  std::vector<ProjPoint> points_;
  std::vector<std::int32_t> index_of_code_;  // -1 for non-canonical codes
};

}  // namespace ncg
