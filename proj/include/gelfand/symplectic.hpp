#pragma once

#include <cstdint>
#include <vector>

#include "gelfand/error.hpp"
#include "gelfand/matrix.hpp"

namespace gelfand {

// [[0, I_n], [-I_n, 0]]
Matrix standard_form(const Field& field, std::size_t half_dim);

// The pair (GL_2n, Sp_2n) over a finite field, fixed by a nondegenerate
// alternating form J. H = Sp is the fixed group of theta(g) = J^-1 (g^t)^-1 J.
class SymplecticContext {
 public:
  SymplecticContext(Field field, std::size_t half_dim);
  // Non-standard forms must be skew (J^t = -J), alternating and invertible.
  SymplecticContext(Field field, std::size_t half_dim, Matrix form);

  const Field& field() const noexcept { return field_; }
  std::size_t half_dim() const noexcept { return half_dim_; }
  std::size_t dim() const noexcept { return 2 * half_dim_; }
  const Matrix& form() const noexcept { return form_; }
  const Matrix& form_inverse() const noexcept { return form_inverse_; }

  // omega(u, v) = u^t J v for column vectors.
  Code omega(const Matrix& u, const Matrix& v) const;

 private:
  Field field_;
  std::size_t half_dim_;
  Matrix form_;
  Matrix form_inverse_;
};

Matrix theta(const SymplecticContext& ctx, const Matrix& g);
// sigma(g) = J^-1 g^t J = theta(g^-1)
Matrix sigma(const SymplecticContext& ctx, const Matrix& g);
// s(g) = g J^-1 g^t J = g sigma(g)
Matrix symmetrize(const SymplecticContext& ctx, const Matrix& g);
bool is_in_sp(const SymplecticContext& ctx, const Matrix& g);

// |Sp_2n(F_q)| = q^(n^2) prod_{i=1..n} (q^(2i) - 1)
std::uint64_t sp_order(std::uint64_t q, std::uint64_t n);
// |GL_m(F_q)| = prod_{i=0..m-1} (q^m - q^i)
std::uint64_t gl_order(std::uint64_t q, std::uint64_t m);

// Every element of Sp in lexicographic row-major order. Refuses (TooLarge)
// when the group order exceeds 10^7 or the resource limit.
std::vector<Matrix> enumerate_sp(const SymplecticContext& ctx, const ResourceLimits& limits = {});

}  // namespace gelfand
