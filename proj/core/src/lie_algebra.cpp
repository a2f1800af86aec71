#include "ncg/lie_algebra.hpp"

#include <stdexcept>

#include "ncg/error.hpp"

namespace ncg {

std::string Violation::describe() const {
  switch (kind) {
    case Kind::Alternating:
      return "[e" + std::to_string(i) + ", e" + std::to_string(i) + "] != 0";
    case Kind::Antisymmetry:
      return "[e" + std::to_string(i) + ", e" + std::to_string(j) + "] != -[e" + std::to_string(j) + ", e" +
             std::to_string(i) + "]";
    case Kind::Jacobi:
      return "Jacobi identity fails on (e" + std::to_string(i) + ", e" + std::to_string(j) + ", e" +
             std::to_string(k) + ")";
  }
  return {};
}

LieAlgebra::LieAlgebra(std::shared_ptr<const Field> field, std::size_t dim, std::vector<Scalar> tensor,
                       std::string name)
    : field_(std::move(field)), dim_(dim), tensor_(std::move(tensor)), name_(std::move(name)) {
  if (!field_) throw std::invalid_argument("algebra needs a field");
  if (tensor_.size() != dim_ * dim_ * dim_) throw std::invalid_argument("structure tensor must have n^3 entries");
  for (Scalar s : tensor_) {
    if (s.code >= field_->q()) throw std::invalid_argument("structure constant outside the field");
  }
  violation_ = validate(*this);
}

LieAlgebra LieAlgebra::from_brackets(std::shared_ptr<const Field> field, std::size_t dim,
                                     const std::vector<BracketEntry>& entries, std::string name) {
  std::vector<Scalar> tensor(dim * dim * dim, Field::zero());
  std::vector<bool> seen(dim * dim, false);
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim) {
      throw InputError("bracket index out of range: (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    }
    if (e.value.size() != dim) {
      throw InputError("bracket value for (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ") must have " +
                       std::to_string(dim) + " entries");
    }
    if (e.i == e.j) {
      if (!is_zero(e.value)) throw InputError("[e" + std::to_string(e.i) + ", e" + std::to_string(e.i) + "] must be zero");
      continue;
    }
    const std::size_t lo = std::min(e.i, e.j);
    const std::size_t hi = std::max(e.i, e.j);
    if (seen[lo * dim + hi]) {
      throw InputError("duplicate bracket entry for (" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
    }
    seen[lo * dim + hi] = true;
    for (std::size_t k = 0; k < dim; ++k) {
      tensor[(e.i * dim + e.j) * dim + k] = e.value[k];
      tensor[(e.j * dim + e.i) * dim + k] = field->neg(e.value[k]);
    }
  }
  return LieAlgebra(std::move(field), dim, std::move(tensor), std::move(name));
}

Vector LieAlgebra::bracket(std::span<const Scalar> u, std::span<const Scalar> v) const {
  if (u.size() != dim_ || v.size() != dim_) throw std::invalid_argument("bracket operands must have length dim");
  const Field& f = *field_;
  Vector out(dim_, Field::zero());
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i] == Field::zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j] == Field::zero()) continue;
      const Scalar c = f.mul(u[i], v[j]);
      const auto s = structure(i, j);
      for (std::size_t k = 0; k < dim_; ++k) {
        if (s[k] != Field::zero()) out[k] = f.add(out[k], f.mul(c, s[k]));
      }
    }
  }
  return out;
}

Matrix LieAlgebra::right_multiplication(std::span<const Scalar> x) const {
  if (x.size() != dim_) throw std::invalid_argument("element must have length dim");
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vector col = bracket(basis_vector(j), x);
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool LieAlgebra::is_abelian() const { return is_zero(tensor_); }

std::uint64_t LieAlgebra::cardinality() const { return saturating_pow(static_cast<std::uint64_t>(field_->q()), dim_); }

Vector LieAlgebra::basis_vector(std::size_t i) const {
  Vector v(dim_, Field::zero());
  v[i] = Field::one();
  return v;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::optional<Violation> validate(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  const Field& f = algebra.field();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(algebra.structure(i, i))) return Violation{Violation::Kind::Alternating, i, i, 0};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!is_zero(add(f, algebra.structure(i, j), algebra.structure(j, i)))) {
        return Violation{Violation::Kind::Antisymmetry, i, j, 0};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto eij = algebra.structure(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const auto ejk = algebra.structure(j, k);
        const auto eki = algebra.structure(k, i);
        const Vector ek = algebra.basis_vector(k);
        const Vector ei = algebra.basis_vector(i);
        const Vector ej = algebra.basis_vector(j);
        Vector sum = algebra.bracket(eij, ek);
        sum = add(f, sum, algebra.bracket(ejk, ei));
        sum = add(f, sum, algebra.bracket(eki, ej));
        if (!is_zero(sum)) return Violation{Violation::Kind::Jacobi, i, j, k};
      }
    }
  }
  return std::nullopt;
}

namespace {

Matrix stacked_right_multiplication(const LieAlgebra& algebra, const std::vector<Vector>& elements) {
  const std::size_t n = algebra.dim();
  Matrix stacked(0, n);
  for (const auto& x : elements) {
    const Matrix m = algebra.right_multiplication(x);
    for (std::size_t r = 0; r < n; ++r) stacked.append_row(m.row(r));
  }
  return stacked;
}

}  // namespace

Subspace center(const LieAlgebra& algebra) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < algebra.dim(); ++i) basis.push_back(algebra.basis_vector(i));
  return centralizer_of_set(algebra, basis);
}

Subspace centralizer(const LieAlgebra& algebra, std::span<const Scalar> x) {
  return kernel(algebra.field_ptr(), algebra.right_multiplication(x));
}

Subspace centralizer_of_set(const LieAlgebra& algebra, const std::vector<Vector>& elements) {
  if (elements.empty()) return Subspace::full(algebra.field_ptr(), algebra.dim());
  return kernel(algebra.field_ptr(), stacked_right_multiplication(algebra, elements));
}

Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b) {
  std::vector<Vector> gens;
  const auto av = a.basis_vectors();
  const auto bv = b.basis_vectors();
  for (const auto& x : av) {
    for (const auto& y : bv) gens.push_back(algebra.bracket(x, y));
  }
  return Subspace::span(algebra.field_ptr(), algebra.dim(), gens);
}

bool is_abelian_subspace(const LieAlgebra& algebra, const Subspace& s) {
  const auto basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!is_zero(algebra.bracket(basis[i], basis[j]))) return false;
    }
  }
  return true;
}

SeriesData series(const LieAlgebra& algebra) {
  SeriesData out;
  const Subspace full = Subspace::full(algebra.field_ptr(), algebra.dim());

  out.lower_central.push_back(full);
  while (out.lower_central.back().dim() > 0) {
    Subspace next = bracket_span(algebra, full, out.lower_central.back());
    if (next == out.lower_central.back()) break;
    out.lower_central.push_back(std::move(next));
  }
  if (out.lower_central.back().dim() == 0) out.nilpotency_class = out.lower_central.size() - 1;

  out.derived.push_back(full);
  while (out.derived.back().dim() > 0) {
    Subspace next = bracket_span(algebra, out.derived.back(), out.derived.back());
    if (next == out.derived.back()) break;
    out.derived.push_back(std::move(next));
  }
  out.solvable = out.derived.back().dim() == 0;
  return out;
}

void for_each_line(const Field& field, std::size_t dim, const std::function<void(const Vector&)>& fn) {
  const std::uint64_t total = saturating_pow(static_cast<std::uint64_t>(field.q()), dim);
  for (std::uint64_t code = 1; code < total; ++code) {
    const Vector v = vector_from_code(field, dim, code);
    std::size_t lead = 0;
    while (v[lead] == Field::zero()) ++lead;
    if (v[lead] == Field::one()) fn(v);
  }
}

namespace {

bool within(const LieAlgebra& algebra, std::uint64_t max_elements) { return algebra.cardinality() <= max_elements; }

}  // namespace

std::optional<bool> is_ct(const LieAlgebra& algebra, std::uint64_t max_elements) {
  if (!within(algebra, max_elements)) return std::nullopt;
  bool ok = true;
  for_each_line(algebra.field(), algebra.dim(), [&](const Vector& x) {
    if (ok && !is_abelian_subspace(algebra, centralizer(algebra, x))) ok = false;
  });
  return ok;
}

std::optional<bool> ac_by_transitivity(const LieAlgebra& algebra, std::uint64_t max_elements) {
  if (!within(algebra, max_elements)) return std::nullopt;
  const Subspace z = center(algebra);
  std::vector<Vector> noncentral;
  const std::uint64_t total = algebra.cardinality();
  for (std::uint64_t code = 0; code < total; ++code) {
    Vector v = vector_from_code(algebra.field(), algebra.dim(), code);
    if (!z.member(v)) noncentral.push_back(std::move(v));
  }
  const std::size_t m = noncentral.size();
  std::vector<char> commute(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) commute[a * m + b] = is_zero(algebra.bracket(noncentral[a], noncentral[b]));
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (!commute[x * m + y]) continue;
      for (std::size_t w = 0; w < m; ++w) {
        if (commute[y * m + w] && !commute[x * m + w]) return false;
      }
    }
  }
  return true;
}

std::optional<bool> is_ac(const LieAlgebra& algebra, std::uint64_t max_elements) {
  if (!within(algebra, max_elements)) return std::nullopt;
  const Subspace z = center(algebra);
  bool ok = true;
  for_each_line(algebra.field(), algebra.dim(), [&](const Vector& x) {
    if (!ok || z.member(x)) return;
    if (!is_abelian_subspace(algebra, centralizer(algebra, x))) ok = false;
  });
  if (const auto cross = ac_by_transitivity(algebra, std::min<std::uint64_t>(max_elements, 64))) {
    if (*cross != ok) throw std::logic_error("AC centralizer test disagrees with commuting transitivity");
  }
  return ok;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("direct sum needs algebras over the same field");
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  const std::size_t n = na + nb;
  std::vector<Scalar> tensor(n * n * n, Field::zero());
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const auto s = a.structure(i, j);
      for (std::size_t k = 0; k < na; ++k) tensor[(i * n + j) * n + k] = s[k];
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const auto s = b.structure(i, j);
      for (std::size_t k = 0; k < nb; ++k) tensor[((na + i) * n + (na + j)) * n + (na + k)] = s[k];
    }
  }
  std::string name;
  if (!a.name().empty() || !b.name().empty()) name = a.name() + "+" + b.name();
  return LieAlgebra(a.field_ptr(), n, std::move(tensor), std::move(name));
}

}  // namespace ncg
