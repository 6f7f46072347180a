#include "gelfand/packed.hpp"

namespace gelfand {

PackedSpace::PackedSpace(Field field, std::size_t dim) : field_(std::move(field)), dim_(dim), q_(field_.size()) {
  if (q_ > 256) fail(ErrorCode::TooLarge, "packed matrices need a field of at most 256 elements");
  if (dim_ * dim_ > kMaxEntries) fail(ErrorCode::TooLarge, "packed matrices are limited to 8x8");
  long double bound = 1;
  for (std::size_t i = 0; i < dim_ * dim_; ++i) bound *= static_cast<long double>(q_);
  if (bound >= 18446744073709551615.0L) fail(ErrorCode::TooLarge, "matrix encoding does not fit 64 bits");
  space_size_ = checked_pow(q_, dim_ * dim_);

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_);
  for (std::size_t a = 0; a < q_; ++a) {
    neg_[a] = static_cast<std::uint8_t>(field_.neg(static_cast<Code>(a)));
    inv_[a] = a == 0 ? 0 : static_cast<std::uint8_t>(field_.inv(static_cast<Code>(a)));
    for (std::size_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint8_t>(field_.add(static_cast<Code>(a), static_cast<Code>(b)));
      mul_[a * q_ + b] = static_cast<std::uint8_t>(field_.mul(static_cast<Code>(a), static_cast<Code>(b)));
    }
  }
}

std::uint64_t PackedSpace::encode(const Digits& a) const noexcept {
  std::uint64_t code = 0;
  const std::size_t n = dim_ * dim_;
  for (std::size_t k = 0; k < n; ++k) code = code * q_ + a[k];
  return code;
}

void PackedSpace::decode(std::uint64_t code, Digits& out) const noexcept {
  const std::size_t n = dim_ * dim_;
  for (std::size_t k = n; k-- > 0;) {
    out[k] = static_cast<std::uint8_t>(code % q_);
    code /= q_;
  }
}

void PackedSpace::multiply(const Digits& a, const Digits& b, Digits& out) const noexcept {
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint8_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s = add(s, mul(a[i * n + k], b[k * n + j]));
      out[i * n + j] = s;
    }
  }
}

bool PackedSpace::invert(const Digits& a, Digits& out) const noexcept {
  const std::size_t n = dim_;
  Digits m = a;
  out.fill(0);
  for (std::size_t i = 0; i < n; ++i) out[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p * n + col] == 0) ++p;
    if (p == n) return false;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m[p * n + j], m[col * n + j]);
        std::swap(out[p * n + j], out[col * n + j]);
      }
    }
    const std::uint8_t iv = inv_[m[col * n + col]];
    for (std::size_t j = 0; j < n; ++j) {
      m[col * n + j] = mul(m[col * n + j], iv);
      out[col * n + j] = mul(out[col * n + j], iv);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r * n + col] == 0) continue;
      const std::uint8_t f = neg_[m[r * n + col]];
      for (std::size_t j = 0; j < n; ++j) {
        m[r * n + j] = add(m[r * n + j], mul(f, m[col * n + j]));
        out[r * n + j] = add(out[r * n + j], mul(f, out[col * n + j]));
      }
    }
  }
  return true;
}

void PackedSpace::transpose(const Digits& a, Digits& out) const noexcept {
  const std::size_t n = dim_;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = a[i * n + j];
}

PackedSpace::Digits PackedSpace::pack(const Matrix& m) const {
  if (!(m.field() == field_) || m.rows() != dim_ || m.cols() != dim_) {
    fail(ErrorCode::DimensionMismatch, "matrix does not belong to this packed space");
  }
  Digits d{};
  for (std::size_t k = 0; k < dim_ * dim_; ++k) d[k] = static_cast<std::uint8_t>(m.entries()[k]);
  return d;
}

Matrix PackedSpace::unpack(const Digits& d) const {
  std::vector<Code> e(dim_ * dim_);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = d[k];
  return Matrix(field_, dim_, dim_, std::move(e));
}

}  // namespace gelfand
