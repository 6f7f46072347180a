#pragma once

// Brute-force reference computations. Slow on purpose and written without the
// library's algorithms (no echelon forms, invariant factors or orbit trees),
// so they can stand in judgement over them on small cases.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gelfand/matrix.hpp"
#include "gelfand/polynomial.hpp"
#include "gelfand/symplectic.hpp"

namespace oracle {

using gelfand::Code;
using gelfand::Field;
using gelfand::FieldElement;
using gelfand::Matrix;
using gelfand::Polynomial;

inline std::uint64_t key(const Matrix& m) {
  std::uint64_t k = 0;
  for (Code c : m.entries()) k = k * m.field().size() + c;
  return k;
}

// Every n x n matrix over the field, in code order.
inline void for_each_matrix(const Field& f, std::size_t rows, std::size_t cols,
                            const std::function<void(const Matrix&)>& visit) {
  const std::size_t count = rows * cols;
  std::vector<Code> e(count, 0);
  const Code q = static_cast<Code>(f.size());
  while (true) {
    visit(Matrix(f, rows, cols, e));
    std::size_t k = count;
    while (k > 0 && ++e[k - 1] == q) e[--k] = 0;
    if (k == 0) return;
  }
}

// Leibniz expansion.
inline Code leibniz_determinant(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Code total = 0;
  do {
    Code term = 1;
    for (std::size_t i = 0; i < n; ++i) term = f.mul(term, m(i, perm[i]));
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total = inversions % 2 ? f.sub(total, term) : f.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<Matrix> general_linear(const Field& f, std::size_t n) {
  std::vector<Matrix> out;
  for_each_matrix(f, n, n, [&](const Matrix& m) {
    if (leibniz_determinant(m) != 0) out.push_back(m);
  });
  return out;
}

// Inverse by search, for matrices known to come from a small group.
inline Matrix inverse_in(const std::vector<Matrix>& group, const Matrix& g) {
  for (const auto& h : group)
    if ((g * h).is_identity()) return h;
  throw std::logic_error("no inverse in group");
}

inline std::optional<Matrix> conjugator(const std::vector<Matrix>& gl, const Matrix& x, const Matrix& y) {
  for (const auto& k : gl)
    if (k * x == y * k) return k;
  return std::nullopt;
}

inline std::vector<FieldElement> square_roots(const FieldElement& a) {
  std::vector<FieldElement> out;
  for (Code c = 0; c < a.field().size(); ++c) {
    FieldElement r(a.field(), c);
    if (r * r == a) out.push_back(r);
  }
  return out;
}

// No monic factor of degree 1..deg/2, found by dividing by every candidate.
inline bool irreducible(const Polynomial& f) {
  const Field& fld = f.field();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    bool found = false;
    for_each_matrix(fld, 1, static_cast<std::size_t>(d), [&](const Matrix& low) {
      if (found) return;
      std::vector<Code> c = low.entries();
      c.push_back(1);
      if ((f % Polynomial(fld, c)).is_zero()) found = true;
    });
    if (found) return false;
  }
  return f.degree() >= 1;
}

// Sizes of the conjugacy classes of the group, by orbit growth.
inline std::vector<std::uint64_t> class_sizes(const std::vector<Matrix>& gl) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> sizes;
  for (const auto& x : gl) {
    if (seen.count(key(x))) continue;
    std::unordered_set<std::uint64_t> orbit;
    for (const auto& k : gl) {
      // k x k^-1 = y  <=>  k x = y k; compute y directly.
      const Matrix y = k * x * inverse_in(gl, k);
      orbit.insert(key(y));
    }
    seen.insert(orbit.begin(), orbit.end());
    sizes.push_back(orbit.size());
  }
  return sizes;
}

inline std::vector<Matrix> symplectic(const gelfand::SymplecticContext& ctx) {
  std::vector<Matrix> out;
  const Matrix& j = ctx.form();
  for_each_matrix(ctx.field(), ctx.dim(), ctx.dim(), [&](const Matrix& g) {
    if (g.transpose() * j * g == j) out.push_back(g);
  });
  return out;
}

// Double coset partition of GL under Sp x Sp acting by (h, h') g = h g h'.
// Returns the coset sizes and each element's coset id.
struct CosetPartition {
  std::vector<std::uint64_t> sizes;
  std::unordered_map<std::uint64_t, std::size_t> id;
};
inline CosetPartition double_cosets(const std::vector<Matrix>& gl, const std::vector<Matrix>& sp) {
  CosetPartition out;
  for (const auto& g : gl) {
    if (out.id.count(key(g))) continue;
    const std::size_t id = out.sizes.size();
    std::uint64_t size = 0;
    for (const auto& h : sp) {
      const Matrix hg = h * g;
      for (const auto& h2 : sp) {
        if (out.id.emplace(key(hg * h2), id).second) ++size;
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

}  // namespace oracle
