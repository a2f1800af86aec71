#include "ncg/linalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ncg {

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RrefResult rref(const Field& field, Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t r = lead;
    while (r < rows && m.at(r, c) == Field::zero()) ++r;
    if (r == rows) continue;
    if (r != lead) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m.at(r, k), m.at(lead, k));
    }
    const Scalar inv = field.inv(m.at(lead, c));
    for (std::size_t k = c; k < cols; ++k) m.at(lead, k) = field.mul(inv, m.at(lead, k));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead) continue;
      const Scalar f = m.at(i, c);
      if (f == Field::zero()) continue;
      for (std::size_t k = c; k < cols; ++k) {
        m.at(i, k) = field.sub(m.at(i, k), field.mul(f, m.at(lead, k)));
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.reduced = Matrix(0, cols);
  for (std::size_t i = 0; i < lead; ++i) out.reduced.append_row(m.row(i));
  return out;
}

Vector scale(const Field& field, Scalar factor, std::span<const Scalar> v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = field.mul(factor, v[i]);
  return out;
}

Vector add(const Field& field, std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
  return out;
}

bool is_zero(std::span<const Scalar> v) {
  for (Scalar s : v) {
    if (s != Field::zero()) return false;
  }
  return true;
}

std::uint64_t vector_code(const Field& field, std::span<const Scalar> v) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * static_cast<std::uint64_t>(field.q()) + v[i].code;
  return code;
}

Vector vector_from_code(const Field& field, std::size_t len, std::uint64_t code) {
  Vector v(len);
  const auto q = static_cast<std::uint64_t>(field.q());
  for (auto& s : v) {
    s = Scalar{static_cast<std::uint16_t>(code % q)};
    code /= q;
  }
  return v;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r *= base;
  }
  return r;
}

Subspace::Subspace(std::shared_ptr<const Field> field, std::size_t ambient_dim)
    : field_(std::move(field)), ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::zero(std::shared_ptr<const Field> field, std::size_t ambient_dim) {
  return Subspace(std::move(field), ambient_dim);
}

Subspace Subspace::full(std::shared_ptr<const Field> field, std::size_t ambient_dim) {
  Matrix id(ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) id.at(i, i) = Field::one();
  return row_space(std::move(field), id);
}

Subspace Subspace::span(std::shared_ptr<const Field> field, std::size_t ambient_dim,
                        const std::vector<Vector>& vectors) {
  return row_space(std::move(field), Matrix::from_rows(ambient_dim, vectors));
}

Subspace Subspace::row_space(std::shared_ptr<const Field> field, const Matrix& m) {
  Subspace s(field, m.cols());
  auto r = rref(*field, m);
  s.basis_ = std::move(r.reduced);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    auto r = basis_.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar f = out[pivots_[i]];
    if (f == Field::zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k) {
      out[k] = field_->sub(out[k], field_->mul(f, basis_.at(i, k)));
    }
  }
  return out;
}

bool Subspace::member(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

void Subspace::check_compatible(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("subspaces live in different ambient spaces");
  if (!(*field_ == *other.field_)) throw std::invalid_argument("subspaces are over different fields");
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!member(other.basis_.row(i))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  check_compatible(other);
  Matrix stacked = basis_;
  for (std::size_t i = 0; i < other.dim(); ++i) stacked.append_row(other.basis_.row(i));
  return row_space(field_, stacked);
}

Subspace Subspace::annihilator() const { return kernel(field_, basis_); }

Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible(other);
  // The standard dot product is non-degenerate, so ann(ann(S)) = S and
  // S ∩ T = ann(ann(S) + ann(T)).
  return annihilator().sum(other.annihilator()).annihilator();
}

std::vector<std::size_t> Subspace::complement_pivots() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::uint64_t Subspace::cardinality() const { return saturating_pow(static_cast<std::uint64_t>(field_->q()), dim()); }

void Subspace::for_each_element(const std::function<void(const Vector&)>& fn) const {
  const std::size_t k = dim();
  const std::uint64_t total = cardinality();
  Vector coeffs(k);
  Vector v(ambient_);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      coeffs[i] = Scalar{static_cast<std::uint16_t>(c % static_cast<std::uint64_t>(field_->q()))};
      c /= static_cast<std::uint64_t>(field_->q());
    }
    std::fill(v.begin(), v.end(), Field::zero());
    for (std::size_t i = 0; i < k; ++i) {
      if (coeffs[i] == Field::zero()) continue;
      for (std::size_t j = 0; j < ambient_; ++j) {
        v[j] = field_->add(v[j], field_->mul(coeffs[i], basis_.at(i, j)));
      }
    }
    fn(v);
  }
}

Subspace kernel(std::shared_ptr<const Field> field, const Matrix& m) {
  const std::size_t cols = m.cols();
  const auto r = rref(*field, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Field::zero());
    v[f] = Field::one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = field->neg(r.reduced.at(i, f));
    gens.push_back(std::move(v));
  }
  return Subspace::span(field, cols, gens);
}

}  // namespace ncg
