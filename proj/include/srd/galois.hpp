#pragma once

#include <cstdint>
#include <vector>

namespace srd::gf {

// GF(p^n) as GF(p)[x] / (modulus). The modulus is monic of degree n, stored
// constant term first (n + 1 coefficients).
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> modulus;

  std::uint32_t order() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// Residue polynomial of degree < n, constant term first, exactly n
// coefficients each reduced mod p.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// Built-in table for q in {2,3,4,5,7,8,9,11,13,16,25,27,32,49,64}: Conway
// polynomials for n > 1, the modulus x for prime fields. Throws NotPrimePower
// or UnsupportedField.
FieldSpec field(std::uint32_t q);

// Caller-supplied modulus; throws ReducibleModulus if it is not irreducible.
FieldSpec field(std::uint32_t p, std::uint32_t n,
                std::vector<std::uint32_t> modulus);

bool is_prime(std::uint32_t n);

// Exhaustive search for monic factors of degree 1..deg/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

FieldElement zero(const FieldSpec& spec);
FieldElement one(const FieldSpec& spec);

FieldElement add(const FieldSpec& spec, const FieldElement& a,
                 const FieldElement& b);
FieldElement neg(const FieldSpec& spec, const FieldElement& a);
FieldElement mul(const FieldSpec& spec, const FieldElement& a,
                 const FieldElement& b);
// Throws DivisionByZero for a = 0.
FieldElement inv(const FieldSpec& spec, const FieldElement& a);
FieldElement pow(const FieldSpec& spec, const FieldElement& a,
                 std::uint64_t exponent);

// Rank in enumerate order: sum of coeffs[i] * p^i.
std::uint32_t rank(const FieldSpec& spec, const FieldElement& a);
FieldElement element(const FieldSpec& spec, std::uint32_t rank);

// All q elements, coefficient vectors in lexicographic order with the
// constant term varying fastest. Element i has rank i.
std::vector<FieldElement> enumerate(const FieldSpec& spec);

// Rank-indexed addition and multiplication tables.
class FieldTables {
 public:
  explicit FieldTables(const FieldSpec& spec);

  std::uint32_t order() const noexcept { return q_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_[a * q_ + b];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * q_ + b];
  }

 private:
  std::uint32_t q_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
};

}  // namespace srd::gf
