#include "gelfand/canonical_form.hpp"

namespace gelfand {

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Smith normal form of tI - m over F[t]. Only the left transformation is
// tracked, as its inverse: afterwards tI - m = left_inverse * diag * (unimodular).
struct SmithForm {
  std::vector<Polynomial> diagonal;
  PolyMatrix left_inverse;
};

SmithForm smith_form(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  PolyMatrix a(n, std::vector<Polynomial>(n, Polynomial::zero(f)));
  PolyMatrix w(n, std::vector<Polynomial>(n, Polynomial::zero(f)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Polynomial(f, {f.neg(m(i, j))});
    a[i][i] = a[i][i] + Polynomial::monomial(f, 1, 1);
    w[i][i] = Polynomial::one(f);
  }

  // row_i += c * row_src, mirrored on w as column_src -= c * column_i.
  auto add_row = [&](std::size_t i, std::size_t src, const Polynomial& c) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = a[i][j] + c * a[src][j];
    for (std::size_t r = 0; r < n; ++r) w[r][src] = w[r][src] - c * w[r][i];
  };
  auto add_col = [&](std::size_t j, std::size_t src, const Polynomial& c) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = a[i][j] + c * a[i][src];
  };
  auto swap_rows = [&](std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap(a[i], a[k]);
    for (std::size_t r = 0; r < n; ++r) std::swap(w[r][i], w[r][k]);
  };
  auto swap_cols = [&](std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < n; ++i) std::swap(a[i][j], a[i][k]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (a[i][j].is_zero()) continue;
          if (pi == n || a[i][j].degree() < a[pi][pj].degree()) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == n) break;
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        auto [q, r] = divmod(a[i][k], a[k][k]);
        add_row(i, k, -q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        auto [q, r] = divmod(a[k][j], a[k][k]);
        add_col(j, k, -q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!(a[i][j] % a[k][k]).is_zero()) {
            add_row(k, i, Polynomial::one(f));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }

  SmithForm out;
  for (std::size_t k = 0; k < n; ++k) {
    const Code lead = a[k][k].leading();
    if (lead == 0) fail(ErrorCode::InvariantViolation, "zero on the Smith diagonal of tI - M");
    // Scaling row k by 1/lead scales column k of w by lead.
    for (std::size_t r = 0; r < n; ++r) w[r][k] = w[r][k].scaled(lead);
    out.diagonal.push_back(a[k][k].monic());
  }
  out.left_inverse = std::move(w);
  return out;
}

}  // namespace

std::size_t ConjugacyInvariant::dimension() const {
  std::size_t d = 0;
  for (const auto& p : factors) d += static_cast<std::size_t>(p.degree());
  return d;
}

std::string ConjugacyInvariant::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ", ";
    out += factors[i].to_string();
  }
  return out + "]";
}

ConjugacyInvariant invariant_factors(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "invariant factors of a non-square matrix");
  ConjugacyInvariant inv{m.field(), {}};
  for (auto& d : smith_form(m).diagonal) {
    if (d.degree() >= 1) inv.factors.push_back(std::move(d));
  }
  return inv;
}

RationalCanonicalForm rational_canonical_form(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::DimensionMismatch, "canonical form of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  SmithForm snf = smith_form(m);

  RationalCanonicalForm out{ConjugacyInvariant{f, {}}, Matrix(), Matrix()};
  std::vector<Matrix> columns;
  Matrix form;
  for (std::size_t k = 0; k < n; ++k) {
    const Polynomial& d = snf.diagonal[k];
    if (d.degree() < 1) continue;
    // Cyclic generator: image of the k-th column of the left inverse under
    // sum_j p_j(t) e_j -> sum_j p_j(m) e_j.
    Matrix g(f, n, 1);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Code> e(n, 0);
      e[j] = 1;
      g = g + evaluate_on(snf.left_inverse[j][k], m, Matrix::column(f, std::move(e)));
    }
    for (int i = 0; i < d.degree(); ++i) {
      columns.push_back(g);
      g = m * g;
    }
    Matrix block = Matrix::companion(d);
    form = form.rows() == 0 ? block : Matrix::block_diagonal(form, block);
    out.invariant.factors.push_back(d);
  }
  out.basis = hstack(columns);
  out.form = std::move(form);
  if (!(m * out.basis == out.basis * out.form) || !is_invertible(out.basis)) {
    fail(ErrorCode::InvariantViolation, "rational canonical basis failed verification");
  }
  return out;
}

std::optional<Matrix> find_conjugator(const Matrix& x, const Matrix& y) {
  if (!(x.field() == y.field())) fail(ErrorCode::FieldMismatch, "find_conjugator: fields differ");
  if (!x.is_square() || x.rows() != y.rows() || !y.is_square()) {
    fail(ErrorCode::DimensionMismatch, "find_conjugator: shapes differ");
  }
  RationalCanonicalForm rx = rational_canonical_form(x);
  RationalCanonicalForm ry = rational_canonical_form(y);
  if (!(rx.invariant == ry.invariant)) return std::nullopt;
  // x = Px C Px^-1 and y = Py C Py^-1, so k = Py Px^-1.
  Matrix k = ry.basis * inverse(rx.basis);
  if (!(k * x == y * k)) fail(ErrorCode::InvariantViolation, "conjugator failed verification");
  return k;
}

}  // namespace gelfand
