#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gelfand/matrix.hpp"

namespace gelfand {

// Square matrices of a fixed small size over a field with at most 256
// elements, held as byte digits. The integer encoding is base q, row-major,
// first entry most significant, so numeric order is lexicographic order on
// entries.
class PackedSpace {
 public:
  static constexpr std::size_t kMaxEntries = 64;
  using Digits = std::array<std::uint8_t, kMaxEntries>;

  PackedSpace(Field field, std::size_t dim);

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  // q^(dim^2): the number of codes.
  std::uint64_t space_size() const noexcept { return space_size_; }

  std::uint64_t encode(const Digits& a) const noexcept;
  void decode(std::uint64_t code, Digits& out) const noexcept;

  void multiply(const Digits& a, const Digits& b, Digits& out) const noexcept;
  // False when a is singular.
  bool invert(const Digits& a, Digits& out) const noexcept;
  void transpose(const Digits& a, Digits& out) const noexcept;

  Digits pack(const Matrix& m) const;
  Matrix unpack(const Digits& d) const;

 private:
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept { return add_[a * q_ + b]; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept { return mul_[a * q_ + b]; }

  Field field_;
  std::size_t dim_;
  std::size_t q_;
  std::uint64_t space_size_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

}  // namespace gelfand
