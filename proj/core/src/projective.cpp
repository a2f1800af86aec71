#include "ncg/projective.hpp"

#include "ncg/error.hpp"

namespace ncg {

std::uint64_t projective_point_count(std::uint64_t q, std::size_t d) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += term;
    term *= q;
  }
  return total;
}

std::vector<Vector> projective_representatives(const Field& field, std::size_t d) {
  std::vector<Vector> out;
  for_each_line(field, d, [&](const Vector& v) { out.push_back(v); });
  return out;
}

CentralQuotient::CentralQuotient(LieAlgebra algebra)
    : algebra_(std::move(algebra)), center_(ncg::center(algebra_)) {
  if (!algebra_.valid()) throw InputError("not a Lie algebra: " + algebra_.violation()->describe());
  if (algebra_.is_abelian()) throw InputError("graph undefined for abelian algebras");
  complement_cols_ = center_.complement_pivots();
  const std::uint64_t codes = saturating_pow(static_cast<std::uint64_t>(q()), d());
  if (codes > kMaxCodes) {
    throw GuardExceeded("projective space too large: q^d = " + std::to_string(codes) + " exceeds " +
                        std::to_string(kMaxCodes));
  }
  index_of_code_.assign(static_cast<std::size_t>(codes), -1);
  for (auto& rep : projective_representatives(algebra_.field(), d())) {
    const std::size_t idx = points_.size();
    index_of_code_[static_cast<std::size_t>(vector_code(algebra_.field(), rep))] = static_cast<std::int32_t>(idx);
    points_.push_back(ProjPoint{std::move(rep), idx});
  }
}

Vector CentralQuotient::project(std::span<const Scalar> v) const {
  const Vector reduced = center_.reduce(v);
  Vector out(complement_cols_.size());
  for (std::size_t i = 0; i < complement_cols_.size(); ++i) out[i] = reduced[complement_cols_[i]];
  return out;
}

std::optional<std::size_t> CentralQuotient::locate(std::span<const Scalar> v) const {
  Vector coords = project(v);
  std::size_t lead = 0;
  while (lead < coords.size() && coords[lead] == Field::zero()) ++lead;
  if (lead == coords.size()) return std::nullopt;
  const Field& f = algebra_.field();
  coords = scale(f, f.inv(coords[lead]), coords);
  return static_cast<std::size_t>(index_of_code_[static_cast<std::size_t>(vector_code(f, coords))]);
}

std::optional<ProjPoint> CentralQuotient::normalize(std::span<const Scalar> v) const {
  const auto idx = locate(v);
  if (!idx) return std::nullopt;
  return points_[*idx];
}

Vector CentralQuotient::lift(const ProjPoint& point) const {
  Vector v(n(), Field::zero());
  for (std::size_t i = 0; i < complement_cols_.size(); ++i) v[complement_cols_[i]] = point.rep[i];
  return v;
}

}  // namespace ncg
