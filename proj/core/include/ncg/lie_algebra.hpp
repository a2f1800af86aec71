#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ncg/field.hpp"
#include "ncg/guards.hpp"
#include "ncg/linalg.hpp"

namespace ncg {

/// First failure of the Lie axioms on basis elements.
struct Violation {
  enum class Kind { Alternating, Antisymmetry, Jacobi };
  Kind kind = Kind::Jacobi;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;  // Jacobi only

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// One structure constant block: [e_i, e_j] = value.
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Vector value;
};

/// Finite-dimensional algebra over F_q given by structure constants.
///
/// The tensor is stored flat: entry (i * n + j) * n + k is the coefficient of
/// e_k in [e_i, e_j]. Tensors that break the Lie axioms can be constructed
/// (so candidates can be streamed through validation) but carry their first
/// violation, see violation().
class LieAlgebra {
 public:
  LieAlgebra(std::shared_ptr<const Field> field, std::size_t dim, std::vector<Scalar> tensor,
             std::string name = {});

  /// Builds the tensor from entries with i != j, filling in [e_j, e_i] = -[e_i, e_j].
  /// Throws InputError on out-of-range indices, i == j with a nonzero value,
  /// or two entries for the same unordered pair.
  static LieAlgebra from_brackets(std::shared_ptr<const Field> field, std::size_t dim,
                                  const std::vector<BracketEntry>& entries, std::string name = {});

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<Scalar>& tensor() const { return tensor_; }
  std::span<const Scalar> structure(std::size_t i, std::size_t j) const {
    return {tensor_.data() + (i * dim_ + j) * dim_, dim_};
  }

  bool valid() const { return !violation_.has_value(); }
  const std::optional<Violation>& violation() const { return violation_; }

  /// Bilinear extension of the structure constants.
  /// Throws std::invalid_argument on length mismatch.
  Vector bracket(std::span<const Scalar> u, std::span<const Scalar> v) const;
  /// Matrix of y -> [y, x] acting on coordinate columns.
  Matrix right_multiplication(std::span<const Scalar> x) const;

  bool is_abelian() const;
  /// |L| = q^n, saturating.
  std::uint64_t cardinality() const;
  Vector basis_vector(std::size_t i) const;

  LieAlgebra renamed(std::string name) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && *a.field_ == *b.field_ && a.tensor_ == b.tensor_;
  }

 private:
  std::shared_ptr<const Field> field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> tensor_;
  std::string name_;
  std::optional<Violation> violation_;
};

/// Checks alternation, antisymmetry and the Jacobi identity on all basis triples.
std::optional<Violation> validate(const LieAlgebra& algebra);

Subspace center(const LieAlgebra& algebra);
/// C_L(x) = {y : [y, x] = 0}.
Subspace centralizer(const LieAlgebra& algebra, std::span<const Scalar> x);
/// Intersection of the centralizers of the given elements; the whole algebra for an empty set.
Subspace centralizer_of_set(const LieAlgebra& algebra, const std::vector<Vector>& elements);
/// Span of [a, b] for a in the first and b in the second subspace.
Subspace bracket_span(const LieAlgebra& algebra, const Subspace& a, const Subspace& b);
bool is_abelian_subspace(const LieAlgebra& algebra, const Subspace& s);

struct SeriesData {
  std::vector<Subspace> lower_central;  // L, [L, L], [L, [L, L]], ... until stable
  std::vector<Subspace> derived;        // L, [L, L], [[L, L], [L, L]], ... until stable
  std::optional<std::size_t> nilpotency_class;
  bool solvable = false;

  bool nilpotent() const { return nilpotency_class.has_value(); }
};

SeriesData series(const LieAlgebra& algebra);

/// Every nonzero element has an abelian centralizer. Exhaustive over the
/// algebra; nullopt when q^n exceeds `max_elements`.
std::optional<bool> is_ct(const LieAlgebra& algebra, std::uint64_t max_elements = 4096);
/// Every non-central element has an abelian centralizer. For q^n <= 64 the
/// answer is also cross-checked against commuting transitivity on triples.
std::optional<bool> is_ac(const LieAlgebra& algebra, std::uint64_t max_elements = 4096);
/// Commuting is transitive on non-central elements (the defining condition of
/// AC), by brute force over all triples. nullopt above `max_elements`.
std::optional<bool> ac_by_transitivity(const LieAlgebra& algebra, std::uint64_t max_elements = 64);

/// Maximal abelian subalgebras (C_L(A) = A), found by extending from the
/// center. nullopt when q^n exceeds `max_elements`.
std::optional<std::vector<Subspace>> maximal_abelian_subalgebras(const LieAlgebra& algebra,
                                                                 std::uint64_t max_elements = 512);

/// Smallest number of abelian subalgebras whose union is L. Exact by set
/// cover over all maximal abelian subalgebras when q^n <= guards.cover;
/// otherwise an upper bound from centralizer-generated abelian subalgebras
/// (exact = false) when q^n <= guards.elements; nullopt beyond that.
std::optional<Bounded> min_abelian_cover(const LieAlgebra& algebra, const Guards& guards = {});

/// Block-diagonal sum; throws std::invalid_argument if the fields differ.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Calls fn on each nonzero element whose first nonzero coordinate is 1
/// (one representative per line through the origin).
void for_each_line(const Field& field, std::size_t dim, const std::function<void(const Vector&)>& fn);

}  // namespace ncg
