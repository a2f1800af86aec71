#include "ncg/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncg/error.hpp"

namespace ncg {

namespace {

int ipow(int base, int exp) {
  int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Polynomials over F_p, coefficients low to high, trailing zeros trimmed.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(int p, std::span<const int> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const int deg = static_cast<int>(f.size()) - 1;
  // Try every monic divisor of degree 1..deg/2.
  for (int dd = 1; dd <= deg / 2; ++dd) {
    const int count = ipow(p, dd);
    for (int code = 0; code < count; ++code) {
      Poly g(static_cast<std::size_t>(dd) + 1, 0);
      int c = code;
      for (int i = 0; i < dd; ++i) {
        g[static_cast<std::size_t>(i)] = c % p;
        c /= p;
      }
      g[static_cast<std::size_t>(dd)] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec default_field_spec(int q) {
  if (is_prime(q)) return FieldSpec{q, 1, {}};
  switch (q) {
    case 4: return FieldSpec{2, 2, {1, 1, 1}};
    case 8: return FieldSpec{2, 3, {1, 1, 0, 1}};
    case 9: return FieldSpec{3, 2, {1, 0, 1}};
    default: break;
  }
  throw InputError("no built-in field of order " + std::to_string(q) +
                   " (use a prime, 4, 8 or 9, or give p, m and a modulus)");
}

Field Field::of_order(int q) { return Field(default_field_spec(q)); }

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw InputError("field characteristic " + std::to_string(spec_.p) + " is not prime");
  if (spec_.m < 1) throw InputError("field degree must be positive");
  long long order = 1;
  for (int i = 0; i < spec_.m; ++i) {
    order *= spec_.p;
    if (order > kMaxOrder) throw InputError("field order exceeds " + std::to_string(kMaxOrder));
  }
  q_ = static_cast<int>(order);

  if (spec_.m == 1) {
    spec_.modulus.clear();
  } else {
    if (spec_.modulus.empty()) {
      const FieldSpec def = default_field_spec(q_);
      if (def.p != spec_.p || def.m != spec_.m) throw InputError("inconsistent default field");
      spec_.modulus = def.modulus;
    }
    if (spec_.modulus.size() != static_cast<std::size_t>(spec_.m) + 1) {
      throw InputError("modulus must have m + 1 = " + std::to_string(spec_.m + 1) + " coefficients");
    }
    for (int c : spec_.modulus) {
      if (c < 0 || c >= spec_.p) throw InputError("modulus coefficient out of range [0, p)");
    }
    if (spec_.modulus.back() != 1) throw InputError("modulus must be monic");
    if (!is_irreducible(spec_.p, spec_.modulus)) throw InputError("modulus is reducible over F_p");
  }

  const int p = spec_.p;
  const int m = spec_.m;
  const auto qs = static_cast<std::size_t>(q_);
  add_.resize(qs * qs);
  mul_.resize(qs * qs);
  neg_.resize(qs);
  inv_.assign(qs, Scalar{0});

  std::vector<std::vector<int>> digits(qs);
  for (int a = 0; a < q_; ++a) {
    digits[static_cast<std::size_t>(a)] = coeffs(Scalar{static_cast<std::uint16_t>(a)});
  }
  auto encode = [&](const std::vector<int>& c) {
    int code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * p + c[static_cast<std::size_t>(i)];
    return Scalar{static_cast<std::uint16_t>(code)};
  };

  for (int a = 0; a < q_; ++a) {
    const auto& da = digits[static_cast<std::size_t>(a)];
    std::vector<int> dn(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) dn[static_cast<std::size_t>(i)] = (p - da[static_cast<std::size_t>(i)]) % p;
    neg_[static_cast<std::size_t>(a)] = encode(dn);
    for (int b = 0; b < q_; ++b) {
      const auto& db = digits[static_cast<std::size_t>(b)];
      std::vector<int> sum(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) {
        sum[static_cast<std::size_t>(i)] = (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p;
      }
      add_[static_cast<std::size_t>(a) * qs + static_cast<std::size_t>(b)] = encode(sum);

      // Schoolbook product followed by reduction modulo the modulus.
      Poly prod(static_cast<std::size_t>(2 * m - 1), 0);
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          auto& slot = prod[static_cast<std::size_t>(i + j)];
          slot = (slot + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p;
        }
      }
      Poly red = m == 1 ? prod : poly_mod(prod, spec_.modulus, p);
      red.resize(static_cast<std::size_t>(m), 0);
      mul_[static_cast<std::size_t>(a) * qs + static_cast<std::size_t>(b)] = encode(red);
    }
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_[static_cast<std::size_t>(a) * qs + static_cast<std::size_t>(b)] == one()) {
        inv_[static_cast<std::size_t>(a)] = Scalar{static_cast<std::uint16_t>(b)};
        break;
      }
    }
  }
}

Scalar Field::inv(Scalar a) const {
  if (a == zero()) throw std::domain_error("inverse of zero");
  return inv_[a.code];
}

Scalar Field::from_int(long long value) const {
  const long long r = ((value % spec_.p) + spec_.p) % spec_.p;
  return Scalar{static_cast<std::uint16_t>(r)};
}

std::vector<int> Field::coeffs(Scalar a) const {
  std::vector<int> out(static_cast<std::size_t>(spec_.m));
  int c = a.code;
  for (auto& d : out) {
    d = c % spec_.p;
    c /= spec_.p;
  }
  return out;
}

Scalar Field::from_coeffs(std::span<const int> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(spec_.m)) {
    throw InputError("scalar needs " + std::to_string(spec_.m) + " coefficients");
  }
  int code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] < 0 || coeffs[i] >= spec_.p) throw InputError("scalar coefficient out of range [0, p)");
    code = code * spec_.p + coeffs[i];
  }
  return Scalar{static_cast<std::uint16_t>(code)};
}

std::vector<Scalar> Field::elements() const {
  std::vector<Scalar> out(static_cast<std::size_t>(q_));
  for (int i = 0; i < q_; ++i) out[static_cast<std::size_t>(i)] = Scalar{static_cast<std::uint16_t>(i)};
  return out;
}

std::string Field::format(Scalar a) const {
  if (spec_.m == 1) return std::to_string(a.code);
  if (a == zero()) return "0";
  const auto c = coeffs(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += 'a';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

std::vector<Scalar> field_enumerate(const FieldSpec& spec) { return Field(spec).elements(); }

}  // namespace ncg
