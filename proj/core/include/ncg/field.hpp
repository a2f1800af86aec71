#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ncg {

/// Parameters of F_q, q = p^m, realised as F_p[t]/(modulus).
///
/// `modulus` lists coefficients from the constant term upward and must be
/// monic of degree m (so it has m + 1 entries). It is ignored for m = 1 and
/// may be left empty for q in {4, 8, 9}, in which case a built-in default is
/// used: t^2+t+1, t^3+t+1 and t^2+1 respectively.
struct FieldSpec {
  int p = 2;
  int m = 1;
  std::vector<int> modulus;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Element of a finite field. `code` packs the coefficient vector of the
/// residue polynomial as base-p digits, constant term least significant, so
/// 0 and 1 are codes 0 and 1 and the generator t has code p.
struct Scalar {
  std::uint16_t code = 0;

  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

/// Finite field with full addition and multiplication tables.
///
/// Only small fields are supported (q <= 256). The object is immutable after
/// construction and safe to share between threads.
class Field {
 public:
  static constexpr int kMaxOrder = 256;

  /// Validates and normalises `spec` (fills in default moduli, clears the
  /// modulus of prime fields). Throws InputError on a composite p, a
  /// malformed or reducible modulus, or q > kMaxOrder.
  explicit Field(FieldSpec spec);

  /// Prime field or one of the built-in defaults for q in {4, 8, 9}.
  static Field of_order(int q);

  const FieldSpec& spec() const { return spec_; }
  int p() const { return spec_.p; }
  int m() const { return spec_.m; }
  int q() const { return q_; }

  static constexpr Scalar zero() { return Scalar{0}; }
  static constexpr Scalar one() { return Scalar{1}; }

  Scalar add(Scalar a, Scalar b) const { return add_[index(a, b)]; }
  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const { return mul_[index(a, b)]; }
  Scalar neg(Scalar a) const { return neg_[a.code]; }
  /// Throws std::domain_error for zero.
  Scalar inv(Scalar a) const;

  /// Image of an integer in the prime subfield.
  Scalar from_int(long long value) const;
  /// Coefficient vector (length m) of the residue polynomial.
  std::vector<int> coeffs(Scalar a) const;
  /// Inverse of coeffs(); throws InputError on out-of-range input.
  Scalar from_coeffs(std::span<const int> coeffs) const;

  /// All q elements in code order; element 0 is zero and element 1 is one.
  std::vector<Scalar> elements() const;

  /// Decimal for prime fields, a polynomial in `a` otherwise ("a^2+a+1").
  std::string format(Scalar a) const;

  friend bool operator==(const Field& lhs, const Field& rhs) { return lhs.spec_ == rhs.spec_; }

 private:
  std::size_t index(Scalar a, Scalar b) const {
    return static_cast<std::size_t>(a.code) * static_cast<std::size_t>(q_) + b.code;
  }

  FieldSpec spec_;
  int q_ = 0;
  std::vector<Scalar> add_;
  std::vector<Scalar> mul_;
  std::vector<Scalar> neg_;
  std::vector<Scalar> inv_;
};

/// FieldSpec for F_q using the built-in defaults; throws InputError if q is
/// not a prime or one of {4, 8, 9}.
FieldSpec default_field_spec(int q);

/// Every element of the field described by `spec`, zero first and one second.
std::vector<Scalar> field_enumerate(const FieldSpec& spec);

bool is_prime(int n);

/// Irreducibility of a monic polynomial over F_p (coefficients low to high).
bool is_irreducible(int p, std::span<const int> poly);

}  // namespace ncg
