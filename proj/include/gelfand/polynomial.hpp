#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gelfand/field.hpp"

namespace gelfand {

// Univariate polynomial in t over a finite field, coefficients low degree first.
// The coefficient vector is kept trimmed so the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Field field, std::vector<Code> coeffs);

  static Polynomial zero(const Field& field) { return Polynomial(field, {}); }
  static Polynomial one(const Field& field) { return Polynomial(field, {1}); }
  static Polynomial constant(const FieldElement& c) { return Polynomial(c.field(), {c.code()}); }
  // c * t^k
  static Polynomial monomial(const Field& field, Code c, std::size_t k);
  // Coefficients are reduced into the prime subfield.
  static Polynomial from_ints(const Field& field, std::initializer_list<long long> coeffs);

  const Field& field() const noexcept { return field_; }
  const std::vector<Code>& coeffs() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Code coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Code leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(Code c) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  Code evaluate(Code x) const;

  bool operator==(const Polynomial& o) const;
  // Canonical order: by degree, then by coefficient codes from the leading term down.
  std::strong_ordering operator<=>(const Polynomial& o) const;

  std::string to_string() const;

 private:
  void trim();
  void check_same(const Polynomial& o) const;

  Field field_;
  std::vector<Code> coeffs_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
// Returns (g, s, u) with s*a + u*b = g monic.
struct ExtendedGcd {
  Polynomial g, s, t;
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);
// a^e mod m
Polynomial powmod(const Polynomial& a, std::uint64_t e, const Polynomial& m);

bool is_squarefree(const Polynomial& f);
bool is_irreducible(const Polynomial& f);
std::vector<Polynomial> factor_squarefree(const Polynomial& f);

// Monic polynomials of the given degree in canonical order.
class MonicRange {
 public:
  MonicRange(Field field, int degree);
  std::uint64_t count() const noexcept { return count_; }
  Polynomial at(std::uint64_t index) const;

 private:
  Field field_;
  int degree_;
  std::uint64_t count_;
};

// The first monic irreducible of the given degree in canonical order.
Polynomial lowest_irreducible(const Field& field, int degree);

}  // namespace gelfand
