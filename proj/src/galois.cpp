#include "srd/galois.hpp"

#include <map>

#include "srd/error.hpp"

namespace srd::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

// Conway polynomials, constant term first.
const std::map<std::uint32_t, std::pair<std::uint32_t, Poly>>& builtin_table() {
  static const std::map<std::uint32_t, std::pair<std::uint32_t, Poly>> table = {
      {2, {2, {0, 1}}},
      {3, {3, {0, 1}}},
      {4, {2, {1, 1, 1}}},
      {5, {5, {0, 1}}},
      {7, {7, {0, 1}}},
      {8, {2, {1, 1, 0, 1}}},
      {9, {3, {2, 2, 1}}},
      {11, {11, {0, 1}}},
      {13, {13, {0, 1}}},
      {16, {2, {1, 1, 0, 0, 1}}},
      {25, {5, {2, 4, 1}}},
      {27, {3, {1, 2, 0, 1}}},
      {32, {2, {1, 0, 1, 0, 0, 1}}},
      {49, {7, {3, 6, 1}}},
      {64, {2, {1, 1, 0, 1, 1, 0, 1}}},
  };
  return table;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t result = 1;
  for (std::uint32_t e = p - 2, base = a % p; e; e >>= 1) {
    if (e & 1U) result = static_cast<std::uint32_t>(std::uint64_t{result} * base % p);
    base = static_cast<std::uint32_t>(std::uint64_t{base} * base % p);
  }
  return result;
}

// Remainder of a modulo a nonzero polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inverse_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint32_t factor =
        static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + std::uint64_t{p - factor} * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

void require_same_field(const FieldSpec& spec, const FieldElement& a) {
  if (a.coeffs.size() != spec.n) {
    throw Error(ErrorKind::InvalidArgument, "element does not belong to field");
  }
  for (auto c : a.coeffs) {
    if (c >= spec.p) {
      throw Error(ErrorKind::InvalidArgument, "coefficient not reduced mod p");
    }
  }
}

}  // namespace

std::uint32_t FieldSpec::order() const {
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  return q;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // Try every monic polynomial of degree 1..degree/2 as a divisor.
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t x = code;
      for (std::size_t i = 0; i < d; ++i, x /= p) g[i] = static_cast<std::uint32_t>(x % p);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec field(std::uint32_t q) {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  for (std::uint32_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) throw Error(ErrorKind::NotPrimePower, std::to_string(q));
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1) throw Error(ErrorKind::NotPrimePower, std::to_string(q));
  auto it = builtin_table().find(q);
  if (it == builtin_table().end()) {
    throw Error(ErrorKind::UnsupportedField,
                "no built-in modulus for q = " + std::to_string(q) +
                    "; supply one explicitly");
  }
  return field(p, n, it->second.second);
}

FieldSpec field(std::uint32_t p, std::uint32_t n,
                std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrimePower, "p = " + std::to_string(p));
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "degree must be >= 1");
  if (modulus.size() != n + 1 || modulus.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree n");
  }
  for (auto c : modulus) {
    if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient >= p");
  }
  if (!is_irreducible(p, modulus)) {
    throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over GF(" +
                                                 std::to_string(p) + ")");
  }
  return FieldSpec{p, n, std::move(modulus)};
}

FieldElement zero(const FieldSpec& spec) {
  return FieldElement{std::vector<std::uint32_t>(spec.n, 0)};
}

FieldElement one(const FieldSpec& spec) {
  FieldElement e = zero(spec);
  // In GF(p)[x]/(x) the constant 1 is still the unit.
  e.coeffs[0] = 1 % spec.p;
  return e;
}

FieldElement add(const FieldSpec& spec, const FieldElement& a,
                 const FieldElement& b) {
  require_same_field(spec, a);
  require_same_field(spec, b);
  FieldElement out = zero(spec);
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % spec.p;
  }
  return out;
}

FieldElement neg(const FieldSpec& spec, const FieldElement& a) {
  require_same_field(spec, a);
  FieldElement out = zero(spec);
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    out.coeffs[i] = (spec.p - a.coeffs[i]) % spec.p;
  }
  return out;
}

FieldElement mul(const FieldSpec& spec, const FieldElement& a,
                 const FieldElement& b) {
  require_same_field(spec, a);
  require_same_field(spec, b);
  Poly product(2 * spec.n - 1, 0);
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    for (std::uint32_t j = 0; j < spec.n; ++j) {
      product[i + j] = static_cast<std::uint32_t>(
          (product[i + j] + std::uint64_t{a.coeffs[i]} * b.coeffs[j]) % spec.p);
    }
  }
  // For n = 1 the product is already a constant; reducing by x would discard it.
  if (spec.n > 1) product = poly_mod(std::move(product), spec.modulus, spec.p);
  FieldElement out = zero(spec);
  for (std::size_t i = 0; i < product.size() && i < spec.n; ++i) {
    out.coeffs[i] = product[i];
  }
  return out;
}

FieldElement pow(const FieldSpec& spec, const FieldElement& a,
                 std::uint64_t exponent) {
  FieldElement result = one(spec);
  FieldElement base = a;
  for (; exponent; exponent >>= 1) {
    if (exponent & 1U) result = mul(spec, result, base);
    base = mul(spec, base, base);
  }
  return result;
}

FieldElement inv(const FieldSpec& spec, const FieldElement& a) {
  if (a == zero(spec)) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
  return pow(spec, a, spec.order() - 2);
}

std::uint32_t rank(const FieldSpec& spec, const FieldElement& a) {
  require_same_field(spec, a);
  std::uint32_t r = 0;
  for (std::uint32_t i = spec.n; i-- > 0;) r = r * spec.p + a.coeffs[i];
  return r;
}

FieldElement element(const FieldSpec& spec, std::uint32_t r) {
  if (r >= spec.order()) {
    throw Error(ErrorKind::InvalidArgument, "rank " + std::to_string(r) +
                                                " outside field of order " +
                                                std::to_string(spec.order()));
  }
  FieldElement e = zero(spec);
  for (std::uint32_t i = 0; i < spec.n; ++i, r /= spec.p) e.coeffs[i] = r % spec.p;
  return e;
}

std::vector<FieldElement> enumerate(const FieldSpec& spec) {
  std::vector<FieldElement> out;
  out.reserve(spec.order());
  for (std::uint32_t r = 0; r < spec.order(); ++r) out.push_back(element(spec, r));
  return out;
}

FieldTables::FieldTables(const FieldSpec& spec)
    : q_(spec.order()), add_(q_ * q_), mul_(q_ * q_) {
  const auto all = enumerate(spec);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = rank(spec, gf::add(spec, all[a], all[b]));
      mul_[a * q_ + b] = rank(spec, gf::mul(spec, all[a], all[b]));
    }
  }
}

}  // namespace srd::gf
