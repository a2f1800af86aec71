#include "ncg/catalog.hpp"

#include <algorithm>
#include <cstdio>

#include "ncg/error.hpp"

namespace ncg {

namespace {

std::shared_ptr<const Field> make_field(const FieldSpec& spec) { return std::make_shared<const Field>(spec); }

Vector unit(const Field& f, std::size_t dim, std::size_t i, long long c = 1) {
  Vector v(dim, Field::zero());
  v[i] = f.from_int(c);
  return v;
}

}  // namespace

LieAlgebra heisenberg(const FieldSpec& spec) {
  auto f = make_field(spec);
  return LieAlgebra::from_brackets(f, 3, {{0, 1, unit(*f, 3, 2)}}, "heisenberg");
}

LieAlgebra affine2(const FieldSpec& spec) {
  auto f = make_field(spec);
  return LieAlgebra::from_brackets(f, 2, {{0, 1, unit(*f, 2, 0)}}, "affine2");
}

LieAlgebra sl2(const FieldSpec& spec) {
  auto f = make_field(spec);
  return LieAlgebra::from_brackets(f, 3, {{0, 1, unit(*f, 3, 1, 2)}, {0, 2, unit(*f, 3, 2, -2)}, {1, 2, unit(*f, 3, 0)}},
                                   "sl2");
}

LieAlgebra gl2(const FieldSpec& spec) {
  auto f = make_field(spec);
  // E_ab has index 2a + b; [E_ab, E_cd] = [b = c] E_ad - [d = a] E_cb.
  std::vector<Scalar> tensor(64, Field::zero());
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t d = 0; d < 2; ++d) {
          const std::size_t base = ((2 * a + b) * 4 + (2 * c + d)) * 4;
          if (b == c) tensor[base + 2 * a + d] = f->add(tensor[base + 2 * a + d], Field::one());
          if (d == a) tensor[base + 2 * c + b] = f->sub(tensor[base + 2 * c + b], Field::one());
        }
      }
    }
  }
  return LieAlgebra(f, 4, std::move(tensor), "gl2");
}

LieAlgebra paper_L1() { return heisenberg(default_field_spec(2)).renamed("paper_L1"); }

LieAlgebra paper_L2() {
  auto f = make_field(default_field_spec(2));
  return LieAlgebra::from_brackets(f, 3, {{0, 1, unit(*f, 3, 0)}}, "paper_L2");
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"heisenberg", "affine2", "sl2", "gl2", "paper_L1", "paper_L2"};
  return names;
}

LieAlgebra builtin(std::string_view name, const FieldSpec& spec) {
  if (name == "heisenberg") return heisenberg(spec);
  if (name == "affine2") return affine2(spec);
  if (name == "sl2") return sl2(spec);
  if (name == "gl2") return gl2(spec);
  if (name == "paper_L1" || name == "paper_L2") {
    if (spec.p != 2 || spec.m != 1) throw InputError(std::string(name) + " is defined over F_2 only");
    return name == "paper_L1" ? paper_L1() : paper_L2();
  }
  throw InputError("unknown builtin algebra '" + std::string(name) + "'");
}

namespace {

const nlohmann::json& require(const nlohmann::json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

long long require_int(const nlohmann::json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer");
  return v.get<long long>();
}

std::size_t require_index(const nlohmann::json& v, const std::string& where) {
  const long long x = require_int(v, where);
  if (x < 0) throw InputError(where + ": expected a non-negative integer");
  return static_cast<std::size_t>(x);
}

Scalar parse_scalar(const Field& f, const nlohmann::json& v, const std::string& where) {
  if (f.m() == 1) return f.from_int(require_int(v, where));
  if (!v.is_array()) throw InputError(where + ": expected a coefficient list over F_" + std::to_string(f.q()));
  std::vector<int> coeffs;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const long long c = require_int(v[i], where + "[" + std::to_string(i) + "]");
    coeffs.push_back(static_cast<int>(((c % f.p()) + f.p()) % f.p()));
  }
  if (coeffs.size() > static_cast<std::size_t>(f.m())) {
    throw InputError(where + ": at most " + std::to_string(f.m()) + " coefficients allowed");
  }
  coeffs.resize(static_cast<std::size_t>(f.m()), 0);
  return f.from_coeffs(coeffs);
}

}  // namespace

LieAlgebra algebra_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("algebra file: expected a JSON object");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("name: expected a string");
    name = doc["name"].get<std::string>();
  }

  const auto& fj = require(doc, "field", "algebra");
  FieldSpec spec;
  spec.p = static_cast<int>(require_int(require(fj, "p", "field"), "field.p"));
  spec.m = fj.contains("m") ? static_cast<int>(require_int(fj["m"], "field.m")) : 1;
  if (fj.contains("modulus") && !fj["modulus"].is_null()) {
    if (!fj["modulus"].is_array()) throw InputError("field.modulus: expected a coefficient list");
    for (std::size_t i = 0; i < fj["modulus"].size(); ++i) {
      spec.modulus.push_back(static_cast<int>(require_int(fj["modulus"][i], "field.modulus[" + std::to_string(i) + "]")));
    }
  }
  auto field = make_field(spec);

  const std::size_t dim = require_index(require(doc, "dim", "algebra"), "dim");
  if (dim == 0 || dim > 16) throw InputError("dim: must be between 1 and 16");

  std::vector<BracketEntry> entries;
  if (doc.contains("brackets")) {
    const auto& br = doc["brackets"];
    if (!br.is_array()) throw InputError("brackets: expected a list");
    for (std::size_t e = 0; e < br.size(); ++e) {
      const std::string where = "brackets[" + std::to_string(e) + "]";
      BracketEntry entry;
      entry.i = require_index(require(br[e], "i", where), where + ".i");
      entry.j = require_index(require(br[e], "j", where), where + ".j");
      const auto& value = require(br[e], "value", where);
      if (!value.is_array() || value.size() != dim) {
        throw InputError(where + ".value: expected " + std::to_string(dim) + " scalars");
      }
      for (std::size_t k = 0; k < dim; ++k) {
        entry.value.push_back(parse_scalar(*field, value[k], where + ".value[" + std::to_string(k) + "]"));
      }
      entries.push_back(std::move(entry));
    }
  }

  LieAlgebra algebra = LieAlgebra::from_brackets(field, dim, entries, name);
  if (!algebra.valid()) throw InputError("not a Lie algebra: " + algebra.violation()->describe());
  return algebra;
}

LieAlgebra algebra_from_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw InputError("line " + std::to_string(line) + ": malformed JSON");
  }
  return algebra_from_json(doc);
}

nlohmann::json algebra_to_json(const LieAlgebra& algebra) {
  const Field& f = algebra.field();
  nlohmann::json doc;
  doc["name"] = algebra.name();
  doc["field"] = {{"p", f.p()}, {"m", f.m()}};
  if (f.m() > 1) doc["field"]["modulus"] = f.spec().modulus;
  doc["dim"] = algebra.dim();
  doc["brackets"] = nlohmann::json::array();
  for (std::size_t i = 0; i < algebra.dim(); ++i) {
    for (std::size_t j = i + 1; j < algebra.dim(); ++j) {
      const auto s = algebra.structure(i, j);
      if (std::all_of(s.begin(), s.end(), [](Scalar c) { return c == Field::zero(); })) continue;
      nlohmann::json value = nlohmann::json::array();
      for (Scalar c : s) {
        if (f.m() == 1) {
          value.push_back(c.code);
        } else {
          value.push_back(f.coeffs(c));
        }
      }
      doc["brackets"].push_back({{"i", i}, {"j", j}, {"value", value}});
    }
  }
  return doc;
}

std::string fingerprint(const LieAlgebra& algebra) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  const auto& spec = algebra.field().spec();
  mix(static_cast<std::uint64_t>(spec.p));
  mix(static_cast<std::uint64_t>(spec.m));
  for (int c : spec.modulus) mix(static_cast<std::uint64_t>(c));
  mix(algebra.dim());
  for (Scalar s : algebra.tensor()) mix(s.code);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t candidate_count(std::size_t dim, const FieldSpec& spec) {
  const Field f(spec);
  const std::size_t positions = dim * (dim - 1) / 2 * dim;
  const std::uint64_t count = saturating_pow(static_cast<std::uint64_t>(f.q()), positions);
  if (count > kMaxCandidates) {
    throw GuardExceeded("enumeration of dim " + std::to_string(dim) + " over F_" + std::to_string(f.q()) + " needs " +
                        (count == UINT64_MAX ? std::string("too many") : std::to_string(count)) +
                        " candidates, above the bound of " + std::to_string(kMaxCandidates));
  }
  return count;
}

namespace {

// Jacobi on distinct basis triples; the repeated-index cases follow from
// antisymmetry, which the candidate encoding enforces.
bool jacobi_holds(const Field& f, std::size_t n, const std::vector<Scalar>& t) {
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) { return t[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t out = 0; out < n; ++out) {
          Scalar sum = Field::zero();
          for (std::size_t m = 0; m < n; ++m) {
            sum = f.add(sum, f.mul(c(i, j, m), c(m, k, out)));
            sum = f.add(sum, f.mul(c(j, k, m), c(m, i, out)));
            sum = f.add(sum, f.mul(c(k, i, m), c(m, j, out)));
          }
          if (sum != Field::zero()) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

EnumerationStats enumerate_brackets(std::size_t dim, const FieldSpec& spec, bool non_abelian_only,
                                    const std::function<void(std::uint64_t, const LieAlgebra&)>& fn,
                                    std::uint64_t begin, std::uint64_t end) {
  const std::uint64_t total = candidate_count(dim, spec);
  auto field = make_field(spec);
  const auto q = static_cast<std::uint64_t>(field->q());
  end = std::min(end, total);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) pairs.emplace_back(i, j);
  }

  EnumerationStats stats;
  std::vector<Scalar> tensor(dim * dim * dim);
  for (std::uint64_t code = begin; code < end; ++code) {
    ++stats.candidates;
    std::fill(tensor.begin(), tensor.end(), Field::zero());
    std::uint64_t rest = code;
    bool abelian = true;
    for (auto [i, j] : pairs) {
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar c{static_cast<std::uint16_t>(rest % q)};
        rest /= q;
        if (c == Field::zero()) continue;
        abelian = false;
        tensor[(i * dim + j) * dim + k] = c;
        tensor[(j * dim + i) * dim + k] = field->neg(c);
      }
    }
    if (!jacobi_holds(*field, dim, tensor)) continue;
    ++stats.valid;
    if (!abelian) ++stats.non_abelian;
    if (abelian && non_abelian_only) continue;
    fn(code, LieAlgebra(field, dim, tensor, "census-" + std::to_string(code)));
  }
  return stats;
}

}  // namespace ncg
