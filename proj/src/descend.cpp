#include "gelfand/descend.hpp"

namespace gelfand {

namespace {

Matrix stack_columns(const std::vector<Matrix>& cols, const Field& f, std::size_t rows) {
  if (cols.empty()) return Matrix(f, rows, 0);
  return hstack(cols);
}

bool in_span(const std::vector<Matrix>& span, const Matrix& v) {
  if (span.empty()) return v.is_zero();
  return solve(hstack(span), v).has_value();
}

// F-basis x^j b_a of V_i, a-major, matching the E-basis coordinates.
std::vector<Matrix> power_basis(const Matrix& x, const std::vector<Matrix>& e_basis, int degree) {
  std::vector<Matrix> out;
  for (const auto& b : e_basis) {
    Matrix w = b;
    for (int j = 0; j < degree; ++j) {
      out.push_back(w);
      w = x * w;
    }
  }
  return out;
}

// Tr(t^(j+l)) over F as a d x d Gram matrix of the trace form.
Matrix trace_gram(const PrimaryComponent& comp, const Field& base) {
  const auto d = static_cast<std::size_t>(comp.factor.degree());
  const Field& e = comp.ext_field;
  Matrix gram(base, d, d);
  if (d == 1) {
    gram(0, 0) = 1;
    return gram;
  }
  const Code t = static_cast<Code>(base.size());
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l) gram(j, l) = trace_down(e, base, e.pow(t, j + l)).code();
  return gram;
}

std::string field_name(const Field& f) { return "F_" + std::to_string(f.size()); }

}  // namespace

SigmaSymmetricElement make_sigma_symmetric(const SymplecticContext& ctx, const Matrix& m) {
  if (!(m.field() == ctx.field()) || m.rows() != ctx.dim() || m.cols() != ctx.dim()) {
    fail(ErrorCode::DimensionMismatch, "element must be a " + std::to_string(ctx.dim()) + "x" +
                                           std::to_string(ctx.dim()) + " matrix over " + ctx.field().describe());
  }
  if (!is_invertible(m)) fail(ErrorCode::SingularInput, "element is not invertible");
  if (!(sigma(ctx, m) == m)) fail(ErrorCode::NotSigmaSymmetric, "sigma(x) != x for x = " + m.to_string());
  Polynomial minpoly = minimal_polynomial(m);
  if (!is_squarefree(minpoly)) {
    fail(ErrorCode::NotSemisimple, "minimal polynomial " + minpoly.to_string() + " has a repeated factor");
  }
  return SigmaSymmetricElement(ctx, m, std::move(minpoly));
}

SigmaSymmetricElement symmetrize_to_element(const SymplecticContext& ctx, const Matrix& g) {
  if (!is_invertible(g)) fail(ErrorCode::SingularInput, "g is not invertible");
  return make_sigma_symmetric(ctx, symmetrize(ctx, g));
}

std::string PrimaryComponent::pair_name() const {
  return "X_" + std::to_string(e_dim / 2) + "(" + field_name(ext_field) + ")";
}

FieldElement trace_down(const Field& ext, const Field& base, Code a) {
  if (ext == base) return FieldElement(base, a);
  if (!(ext.base() == base)) fail(ErrorCode::FieldMismatch, "trace needs an extension of the given base");
  // Trace of multiplication by a in the basis 1, t, ..., t^(d-1).
  const Code t = static_cast<Code>(base.size());
  Code power = 1;
  Code acc = 0;
  for (std::uint32_t l = 0; l < ext.degree(); ++l) {
    acc = base.add(acc, ext.coefficients(ext.mul(a, power))[l]);
    power = ext.mul(power, t);
  }
  return FieldElement(base, acc);
}

Matrix act(const SigmaSymmetricElement& x, const PrimaryComponent& comp, Code e, const Matrix& v) {
  if (comp.factor.degree() == 1) return v.scaled(e);
  const Field& f = x.context().field();
  return evaluate_on(Polynomial(f, comp.ext_field.coefficients(e)), x.matrix(), v);
}

std::vector<PrimaryComponent> primary_decomposition(const SigmaSymmetricElement& x) {
  const SymplecticContext& ctx = x.context();
  const Field& f = ctx.field();
  const Matrix& m = x.matrix();
  std::vector<PrimaryComponent> comps;
  std::size_t total = 0;
  std::vector<Matrix> all_vectors;
  for (const auto& p : factor_squarefree(x.minimal_polynomial())) {
    PrimaryComponent comp;
    comp.factor = p;
    comp.ext_field = make_extension(f, p);
    comp.f_basis = kernel(evaluate(p, m));
    const int d = p.degree();

    std::vector<Matrix> span;
    for (const auto& v : comp.f_basis) {
      if (span.size() == comp.f_basis.size()) break;
      if (in_span(span, v)) continue;
      comp.e_basis.push_back(v);
      Matrix w = v;
      for (int j = 0; j < d; ++j) {
        span.push_back(w);
        w = m * w;
      }
    }
    comp.e_dim = comp.e_basis.size();
    if (comp.e_dim * static_cast<std::size_t>(d) != comp.f_dim() || rank(hstack(span)) != comp.f_dim()) {
      fail(ErrorCode::InvariantViolation, "V_i is not free over E_i for factor " + p.to_string());
    }
    for (const auto& v : comp.f_basis) {
      if (!in_span(comp.f_basis, m * v)) fail(ErrorCode::InvariantViolation, "x does not preserve V_i");
    }
    total += comp.f_dim();
    all_vectors.insert(all_vectors.end(), comp.f_basis.begin(), comp.f_basis.end());
    comps.push_back(std::move(comp));
  }
  if (total != ctx.dim() || rank(stack_columns(all_vectors, f, ctx.dim())) != ctx.dim()) {
    fail(ErrorCode::InvariantViolation, "the kernels of the factors do not give a direct sum decomposition");
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      for (const auto& v : comps[i].f_basis) {
        for (const auto& u : comps[j].f_basis) {
          if (ctx.omega(v, u) != 0) {
            fail(ErrorCode::InvariantViolation, "V_i not orthogonal: omega(" + v.transpose().to_string() + ", " +
                                                    u.transpose().to_string() + ") != 0");
          }
        }
      }
    }
  }
  return comps;
}

Matrix restrict_form(const SigmaSymmetricElement& x, const PrimaryComponent& comp) {
  const SymplecticContext& ctx = x.context();
  const Field& f = ctx.field();
  const Field& e = comp.ext_field;
  const Matrix& m = x.matrix();
  const int d = comp.factor.degree();

  for (const auto& u : comp.f_basis) {
    for (const auto& v : comp.f_basis) {
      if (ctx.omega(m * u, v) != ctx.omega(u, m * v)) {
        fail(ErrorCode::InvariantViolation, "omega(xu, v) != omega(u, xv)");
      }
    }
  }

  const Matrix gram = trace_gram(comp, f);
  const std::size_t k = comp.e_dim;
  Matrix omega(e, k, k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      // Solve Tr(t^j c) = omega(x^j b_a, b_b) for c in E.
      Matrix rhs(f, static_cast<std::size_t>(d), 1);
      Matrix w = comp.e_basis[a];
      for (int j = 0; j < d; ++j) {
        rhs(j, 0) = ctx.omega(w, comp.e_basis[b]);
        w = m * w;
      }
      auto c = solve(gram, rhs);
      if (!c) fail(ErrorCode::InvariantViolation, "trace form is degenerate");
      omega(a, b) = d == 1 ? (*c)(0, 0) : e.from_coefficients(c->entries());
    }
  }

  for (std::size_t a = 0; a < k; ++a) {
    if (omega(a, a) != 0) fail(ErrorCode::DegenerateForm, "Omega is not alternating on " + comp.pair_name());
    for (std::size_t b = 0; b < k; ++b) {
      if (omega(a, b) != e.neg(omega(b, a))) {
        fail(ErrorCode::DegenerateForm, "Omega is not skew-symmetric on " + comp.pair_name());
      }
    }
  }
  if (determinant(omega) == 0) {
    fail(ErrorCode::DegenerateForm, "Omega is degenerate on " + comp.pair_name() + ": " + omega.to_string());
  }
  return omega;
}

std::vector<FieldElement> e_coordinates(const SigmaSymmetricElement& x, const PrimaryComponent& comp,
                                        const Matrix& v) {
  const int d = comp.factor.degree();
  auto c = solve(hstack(power_basis(x.matrix(), comp.e_basis, d)), v);
  if (!c) fail(ErrorCode::InvalidInput, "vector does not lie in V_i");
  std::vector<FieldElement> out;
  for (std::size_t a = 0; a < comp.e_dim; ++a) {
    std::vector<Code> digits(c->entries().begin() + static_cast<long>(a * d),
                             c->entries().begin() + static_cast<long>((a + 1) * d));
    const Code code = d == 1 ? digits[0] : comp.ext_field.from_coefficients(digits);
    out.emplace_back(comp.ext_field, code);
  }
  return out;
}

FieldElement omega_e(const SigmaSymmetricElement& x, const PrimaryComponent& comp, const Matrix& u, const Matrix& v) {
  if (!comp.restricted_form) fail(ErrorCode::InvalidInput, "component has no restricted form");
  const auto cu = e_coordinates(x, comp, u);
  const auto cv = e_coordinates(x, comp, v);
  const Field& e = comp.ext_field;
  FieldElement acc(e, 0);
  for (std::size_t a = 0; a < cu.size(); ++a)
    for (std::size_t b = 0; b < cv.size(); ++b) acc = acc + cu[a] * comp.restricted_form->at(a, b) * cv[b];
  return acc;
}

std::string DescendantReport::pair_name() const {
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " x ";
    out += c.pair_name();
  }
  return out;
}

std::uint64_t centralizer_order_brute_force(const SymplecticContext& ctx, const Matrix& x,
                                            const std::vector<Matrix>& sp_elements) {
  if (!(x.field() == ctx.field()) || x.rows() != ctx.dim()) fail(ErrorCode::DimensionMismatch, "x has wrong shape");
  std::uint64_t count = 0;
  for (const auto& h : sp_elements) {
    if (h * x == x * h) ++count;
  }
  return count;
}

DescendantReport descendant(const SigmaSymmetricElement& x, const DescendantOptions& options) {
  const SymplecticContext& ctx = x.context();
  DescendantReport report;
  report.components = primary_decomposition(x);
  report.predicted_centralizer_order = 1;
  for (auto& comp : report.components) {
    if (comp.e_dim % 2 != 0) {
      fail(ErrorCode::OddEDimension, "component " + comp.factor.to_string() + " has odd dimension " +
                                         std::to_string(comp.e_dim) + " over " + field_name(comp.ext_field));
    }
    comp.restricted_form = restrict_form(x, comp);
    report.predicted_centralizer_order =
        checked_mul(report.predicted_centralizer_order, sp_order(comp.ext_field.size(), comp.e_dim / 2));
  }

  if (options.brute_force) {
    const std::uint64_t order = sp_order(ctx.field().size(), ctx.half_dim());
    if (options.sp_elements) {
      report.brute_force_centralizer_order = centralizer_order_brute_force(ctx, x.matrix(), *options.sp_elements);
    } else if (order <= options.brute_force_bound && order <= options.limits.max_group_size) {
      const auto sp = enumerate_sp(ctx, options.limits);
      report.brute_force_centralizer_order = centralizer_order_brute_force(ctx, x.matrix(), sp);
    }
  }
  report.verified = report.brute_force_centralizer_order == report.predicted_centralizer_order;
  return report;
}

std::optional<FieldElement> solve_scalar_symmetrization(const SymplecticContext& ctx, const FieldElement& z) {
  if (!(z.field() == ctx.field())) fail(ErrorCode::FieldMismatch, "z is not in the context field");
  if (z.is_zero()) fail(ErrorCode::ZeroInput, "z I is not invertible");
  // A scalar alpha = r I is sigma-fixed, so alpha sigma(alpha) = r^2 I.
  return square_root(z);
}

}  // namespace gelfand
