#include "gelfand/symplectic.hpp"

#include <algorithm>

namespace gelfand {

namespace {

constexpr std::uint64_t kEnumerationCap = 10'000'000;

void check_shape(const SymplecticContext& ctx, const Matrix& g) {
  if (!(g.field() == ctx.field())) fail(ErrorCode::FieldMismatch, "matrix is not over the context field");
  if (g.rows() != ctx.dim() || g.cols() != ctx.dim()) {
    fail(ErrorCode::DimensionMismatch, "expected a " + std::to_string(ctx.dim()) + "x" + std::to_string(ctx.dim()) +
                                           " matrix");
  }
}

}  // namespace

Matrix standard_form(const Field& field, std::size_t half_dim) {
  Matrix j(field, 2 * half_dim, 2 * half_dim);
  for (std::size_t i = 0; i < half_dim; ++i) {
    j(i, half_dim + i) = 1;
    j(half_dim + i, i) = field.neg(1);
  }
  return j;
}

SymplecticContext::SymplecticContext(Field field, std::size_t half_dim)
    : SymplecticContext(field, half_dim, standard_form(field, half_dim)) {}

SymplecticContext::SymplecticContext(Field field, std::size_t half_dim, Matrix form)
    : field_(std::move(field)), half_dim_(half_dim), form_(std::move(form)) {
  if (half_dim_ < 1) fail(ErrorCode::InvalidInput, "half dimension must be at least 1");
  if (!(form_.field() == field_) || form_.rows() != dim() || form_.cols() != dim()) {
    fail(ErrorCode::DimensionMismatch, "form has the wrong shape or field");
  }
  if (!(form_.transpose() == -form_)) fail(ErrorCode::InvalidInput, "form is not skew-symmetric");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (form_(i, i) != 0) fail(ErrorCode::InvalidInput, "form is not alternating");
  }
  if (!is_invertible(form_)) fail(ErrorCode::SingularInput, "form is degenerate");
  form_inverse_ = inverse(form_);
  if (!is_in_sp(*this, form_)) fail(ErrorCode::InvariantViolation, "J is not in its own symplectic group");
}

Code SymplecticContext::omega(const Matrix& u, const Matrix& v) const { return (u.transpose() * form_ * v)(0, 0); }

Matrix theta(const SymplecticContext& ctx, const Matrix& g) {
  check_shape(ctx, g);
  return ctx.form_inverse() * inverse(g.transpose()) * ctx.form();
}

Matrix sigma(const SymplecticContext& ctx, const Matrix& g) {
  check_shape(ctx, g);
  return ctx.form_inverse() * g.transpose() * ctx.form();
}

Matrix symmetrize(const SymplecticContext& ctx, const Matrix& g) { return g * sigma(ctx, g); }

bool is_in_sp(const SymplecticContext& ctx, const Matrix& g) {
  check_shape(ctx, g);
  return g.transpose() * ctx.form() * g == ctx.form();
}

std::uint64_t sp_order(std::uint64_t q, std::uint64_t n) {
  if (!prime_power(q)) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  std::uint64_t order = checked_pow(q, n * n);
  for (std::uint64_t i = 1; i <= n; ++i) order = checked_mul(order, checked_pow(q, 2 * i) - 1);
  return order;
}

std::uint64_t gl_order(std::uint64_t q, std::uint64_t m) {
  if (!prime_power(q)) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  const std::uint64_t qm = checked_pow(q, m);
  std::uint64_t order = 1;
  for (std::uint64_t i = 0; i < m; ++i) order = checked_mul(order, qm - checked_pow(q, i));
  return order;
}

std::vector<Matrix> enumerate_sp(const SymplecticContext& ctx, const ResourceLimits& limits) {
  const Field& f = ctx.field();
  const std::size_t dim = ctx.dim();
  const std::uint64_t predicted = sp_order(f.size(), ctx.half_dim());
  if (predicted > std::min(kEnumerationCap, limits.max_group_size)) {
    fail(ErrorCode::TooLarge, "Sp order " + std::to_string(predicted) + " exceeds the enumeration bound");
  }
  const std::uint64_t nvec = checked_pow(f.size(), dim);

  // Candidate columns and their images under J.
  std::vector<std::vector<Code>> vecs(nvec), jvecs(nvec);
  for (std::uint64_t idx = 0; idx < nvec; ++idx) {
    std::vector<Code> v(dim);
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < dim; ++i) {
      v[i] = static_cast<Code>(x % f.size());
      x /= f.size();
    }
    std::vector<Code> jv(dim, 0);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) jv[r] = f.add(jv[r], f.mul(ctx.form()(r, c), v[c]));
    vecs[idx] = std::move(v);
    jvecs[idx] = std::move(jv);
  }
  auto pairing = [&](std::uint64_t a, std::uint64_t b) {
    Code s = 0;
    for (std::size_t i = 0; i < dim; ++i) s = f.add(s, f.mul(vecs[a][i], jvecs[b][i]));
    return s;
  };

  // Columns c_0..c_{2n-1} of g must satisfy c_j^t J c_i = J_ji.
  std::vector<Matrix> out;
  out.reserve(predicted);
  std::vector<std::uint64_t> chosen(dim);
  auto extend = [&](auto&& self, std::size_t col) -> void {
    if (col == dim) {
      Matrix g(f, dim, dim);
      for (std::size_t c = 0; c < dim; ++c)
        for (std::size_t r = 0; r < dim; ++r) g(r, c) = vecs[chosen[c]][r];
      out.push_back(std::move(g));
      return;
    }
    for (std::uint64_t cand = 1; cand < nvec; ++cand) {
      bool ok = true;
      for (std::size_t j = 0; j < col && ok; ++j) ok = pairing(chosen[j], cand) == ctx.form()(j, col);
      if (!ok) continue;
      chosen[col] = cand;
      self(self, col + 1);
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gelfand
