#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gelfand/error.hpp"

namespace gelfand {

// Elements of a finite field are identified by a dense integer code.
//
// For the prime field F_p the code of k is k itself. For an extension
// E = B[t]/(P) of degree d over a base field B with |B| = b, the element
// c_0 + c_1 t + ... + c_{d-1} t^{d-1} (c_i in B) has code sum c_i * b^i.
// The prime subfield therefore always occupies codes 0..p-1, and the
// numeric order of codes is the canonical element order.
using Code = std::uint32_t;

class Polynomial;
class FieldElement;

namespace detail {
struct FieldData;
}

class Field {
 public:
  Field() = default;

  static Field prime(std::uint32_t p);

  bool valid() const noexcept { return static_cast<bool>(data_); }
  std::uint32_t characteristic() const;
  // Degree over the immediate base field (1 for a prime field).
  std::uint32_t degree() const;
  // Degree over the prime subfield.
  std::uint32_t absolute_degree() const;
  std::uint64_t size() const;
  bool is_prime_field() const;
  // The field this one extends. A prime field is its own base.
  Field base() const;
  // Coefficients of the defining modulus over base(), low degree first, monic.
  const std::vector<Code>& modulus_codes() const;
  Polynomial modulus() const;

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const;
  Code pow(Code a, std::uint64_t e) const;
  Code frobenius(Code a) const { return pow(a, characteristic()); }

  // Image of an integer in the prime subfield.
  Code from_int(long long k) const;
  // Digits over base(), low degree first; length degree().
  std::vector<Code> coefficients(Code a) const;
  Code from_coefficients(std::span<const Code> coeffs) const;
  // Digits over the prime subfield, low degree first; length absolute_degree().
  std::vector<std::uint32_t> prime_coefficients(Code a) const;

  FieldElement element(Code a) const;
  FieldElement operator()(long long k) const;

  std::string format(Code a) const;
  std::string describe() const;

  bool operator==(const Field& other) const;

  const detail::FieldData* data() const noexcept { return data_.get(); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  friend Field make_extension(const Field& base, const Polynomial& modulus);
  friend Field make_field(std::uint32_t p, const std::optional<std::vector<std::uint32_t>>& modulus);

  std::shared_ptr<const detail::FieldData> data_;
};

// F_p when modulus is empty, otherwise F_p[t]/(modulus) with modulus given as
// integer coefficients low degree first.
Field make_field(std::uint32_t p, const std::optional<std::vector<std::uint32_t>>& modulus = std::nullopt);
// base[t]/(modulus) for a monic irreducible modulus over base.
Field make_extension(const Field& base, const Polynomial& modulus);
// F_q for a prime power q, with the lowest monic irreducible modulus over F_p.
Field field_of_order(std::uint64_t q);

bool is_prime(std::uint64_t n);
// Returns (p, d) with q = p^d, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Field field, Code code);

  const Field& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const;

  bool operator==(const FieldElement& o) const;
  std::strong_ordering operator<=>(const FieldElement& o) const;

  std::string to_string() const { return field_.format(code_); }

 private:
  void check_same(const FieldElement& o) const;

  Field field_;
  Code code_ = 0;
};

// A square root of a, the one with the smaller code when two exist.
std::optional<FieldElement> square_root(const FieldElement& a);

// All elements of the field in code order.
std::vector<FieldElement> elements(const Field& field);

}  // namespace gelfand
