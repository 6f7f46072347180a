#include <doctest.h>

#include "gelfand/descend.hpp"
#include "gelfand/orbits.hpp"
#include "gelfand/random.hpp"
#include "oracles.hpp"

using namespace gelfand;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidInput;
}

// Element of GL_4(F_2) with minimal polynomial t^2+t+1: diag(C, C^t).
Matrix f4_element() {
  const Field f2 = Field::prime(2);
  const Matrix c = Matrix::companion(Polynomial::from_ints(f2, {1, 1, 1}));
  return Matrix::block_diagonal(c, c.transpose());
}

// Every structural property a descendant report must satisfy.
void check_report(const SigmaSymmetricElement& x, const DescendantReport& r) {
  const SymplecticContext& ctx = x.context();
  const Field& f = ctx.field();
  std::size_t dim = 0;
  std::uint64_t predicted = 1;
  for (const auto& comp : r.components) {
    const int d = comp.factor.degree();
    CHECK(comp.f_dim() == static_cast<std::size_t>(d) * comp.e_dim);
    CHECK(comp.e_dim % 2 == 0);
    CHECK(comp.ext_field.size() == checked_pow(f.size(), static_cast<std::uint64_t>(d)));
    dim += comp.f_dim();
    predicted *= sp_order(comp.ext_field.size(), comp.e_dim / 2);

    // E-stability and P_i(x) = 0 on V_i.
    for (const auto& v : comp.f_basis) {
      CHECK(evaluate_on(comp.factor, x.matrix(), v).is_zero());
      CHECK(solve(hstack(comp.f_basis), x.matrix() * v).has_value());
    }
    REQUIRE(comp.restricted_form);
    const Matrix& om = *comp.restricted_form;
    CHECK(determinant(om) != 0);
    for (std::size_t a = 0; a < comp.e_dim; ++a) {
      CHECK(om(a, a) == 0);
      for (std::size_t b = 0; b < comp.e_dim; ++b) CHECK(om(a, b) == comp.ext_field.neg(om(b, a)));
    }
    // Trace lift: Tr(e Omega(u, v)) = omega(e u, v) for all e in E and F-basis pairs.
    for (const auto& u : comp.f_basis) {
      for (const auto& v : comp.f_basis) {
        CHECK(ctx.omega(x.matrix() * u, v) == ctx.omega(u, x.matrix() * v));
        const Code w = omega_e(x, comp, u, v).code();
        for (Code e = 0; e < comp.ext_field.size(); ++e) {
          CHECK(trace_down(comp.ext_field, f, comp.ext_field.mul(e, w)).code() ==
                ctx.omega(act(x, comp, e, u), v));
        }
      }
    }
  }
  CHECK(dim == ctx.dim());
  CHECK(r.predicted_centralizer_order == predicted);
  // Orthogonality of distinct components.
  for (std::size_t i = 0; i < r.components.size(); ++i)
    for (std::size_t j = i + 1; j < r.components.size(); ++j)
      for (const auto& v : r.components[i].f_basis)
        for (const auto& u : r.components[j].f_basis) CHECK(ctx.omega(v, u) == 0);
}

std::uint64_t oracle_centralizer(const std::vector<Matrix>& sp, const Matrix& x) {
  std::uint64_t count = 0;
  for (const auto& h : sp) count += (h * x == x * h);
  return count;
}

}  // namespace

TEST_CASE("make_sigma_symmetric validation") {
  const Field f3 = Field::prime(3);
  const SymplecticContext ctx(f3, 2);
  CHECK_NOTHROW(make_sigma_symmetric(ctx, Matrix::identity(f3, 4)));
  CHECK_NOTHROW(make_sigma_symmetric(ctx, Matrix::diagonal(f3, {1, 2, 1, 2})));
  const Matrix jordan = Matrix::from_ints(f3, {{1, 1}, {0, 1}});
  CHECK(code_of([&] { make_sigma_symmetric(ctx, Matrix::block_diagonal(jordan, jordan.transpose())); }) ==
        ErrorCode::NotSemisimple);
  CHECK(code_of([&] { make_sigma_symmetric(ctx, Matrix::diagonal(f3, {2, 1, 1, 1})); }) ==
        ErrorCode::NotSigmaSymmetric);
  CHECK(code_of([&] { make_sigma_symmetric(ctx, Matrix::zero(f3, 4)); }) == ErrorCode::SingularInput);
  CHECK(code_of([&] { make_sigma_symmetric(ctx, Matrix::identity(f3, 2)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("symmetrize_to_element") {
  const Field f3 = Field::prime(3);
  const SymplecticContext ctx(f3, 2);
  const auto sp = enumerate_sp(ctx);
  CHECK(symmetrize_to_element(ctx, sp[1234]).matrix().is_identity());
  const Matrix x0 = Matrix::from_ints(f3, {{0, 1}, {1, 0}});
  const auto x = symmetrize_to_element(ctx, embed_d(x0));
  CHECK(x.matrix() == Matrix::block_diagonal(x0, x0.transpose()));
  CHECK(x.minimal_polynomial() == Polynomial::from_ints(f3, {-1, 0, 1}));

  // A unipotent g over F_2 whose s(g) is not semisimple.
  const Field f2 = Field::prime(2);
  const SymplecticContext c2(f2, 2);
  const Matrix u = Matrix::from_ints(f2, {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_FALSE(is_semisimple(symmetrize(c2, u)));
  CHECK(code_of([&] { symmetrize_to_element(c2, u); }) == ErrorCode::NotSemisimple);
}

TEST_CASE("primary decomposition examples") {
  const Field f3 = Field::prime(3);
  const SymplecticContext ctx(f3, 2);
  const auto id = primary_decomposition(make_sigma_symmetric(ctx, Matrix::identity(f3, 4)));
  REQUIRE(id.size() == 1);
  CHECK(id[0].factor == Polynomial::from_ints(f3, {-1, 1}));
  CHECK(id[0].ext_field == f3);
  CHECK(id[0].f_dim() == 4);

  const auto two = primary_decomposition(make_sigma_symmetric(ctx, Matrix::diagonal(f3, {1, 2, 1, 2})));
  REQUIRE(two.size() == 2);
  // t + 1 = t - 2 precedes t + 2 = t - 1 in canonical order.
  CHECK(two[0].factor == Polynomial::from_ints(f3, {1, 1}));
  CHECK(two[0].f_basis == std::vector{Matrix::column(f3, {0, 1, 0, 0}), Matrix::column(f3, {0, 0, 0, 1})});
  CHECK(two[1].factor == Polynomial::from_ints(f3, {-1, 1}));
  CHECK(two[1].f_basis == std::vector{Matrix::column(f3, {1, 0, 0, 0}), Matrix::column(f3, {0, 0, 1, 0})});

  const SymplecticContext c2(Field::prime(2), 2);
  const auto f4 = primary_decomposition(make_sigma_symmetric(c2, f4_element()));
  REQUIRE(f4.size() == 1);
  CHECK(f4[0].ext_field.size() == 4);
  CHECK(f4[0].f_dim() == 4);
  CHECK(f4[0].e_dim == 2);
}

TEST_CASE("restricted forms") {
  const Field f3 = Field::prime(3);
  const SymplecticContext ctx(f3, 2);
  const auto x = make_sigma_symmetric(ctx, Matrix::identity(f3, 4));
  const auto comps = primary_decomposition(x);
  CHECK(restrict_form(x, comps[0]) == ctx.form());

  const auto y = make_sigma_symmetric(ctx, Matrix::diagonal(f3, {1, 2, 1, 2}));
  const auto cy = primary_decomposition(y);
  CHECK(restrict_form(y, cy[0]) == Matrix::from_ints(f3, {{0, 1}, {-1, 0}}));

  const SymplecticContext c2(Field::prime(2), 2);
  const auto z = make_sigma_symmetric(c2, f4_element());
  const auto cz = primary_decomposition(z);
  const Matrix om = restrict_form(z, cz[0]);
  CHECK(om.rows() == 2);
  CHECK(om.field().size() == 4);
  CHECK(determinant(om) != 0);
  CHECK(om(0, 0) == 0);
  CHECK(om(0, 1) == om(1, 0));  // characteristic 2
}

TEST_CASE("descendant anchors") {
  const Field f2 = Field::prime(2), f3 = Field::prime(3);
  const SymplecticContext c2(f2, 2), c3(f3, 2);

  const auto r1 = descendant(make_sigma_symmetric(c2, Matrix::identity(f2, 4)));
  CHECK(r1.pair_name() == "X_2(F_2)");
  CHECK(r1.predicted_centralizer_order == 720);
  CHECK(r1.brute_force_centralizer_order == 720u);
  CHECK(r1.verified);

  const auto x2 = make_sigma_symmetric(c3, Matrix::diagonal(f3, {1, 2, 1, 2}));
  const auto r2 = descendant(x2);
  CHECK(r2.pair_name() == "X_1(F_3) x X_1(F_3)");
  CHECK(r2.predicted_centralizer_order == 576);
  CHECK(r2.brute_force_centralizer_order == 576u);
  CHECK(r2.verified);
  check_report(x2, r2);

  const auto x3 = make_sigma_symmetric(c2, f4_element());
  const auto r3 = descendant(x3);
  CHECK(r3.pair_name() == "X_1(F_4)");
  CHECK(r3.predicted_centralizer_order == 60);
  CHECK(r3.verified);
  check_report(x3, r3);

  // Brute force is skipped above the bound.
  DescendantOptions opts;
  opts.brute_force_bound = 100;
  const auto skipped = descendant(x2, opts);
  CHECK_FALSE(skipped.brute_force_centralizer_order);
  CHECK_FALSE(skipped.verified);
}

TEST_CASE("centralizer identity for every sigma-symmetric semisimple x in GL_4(F_2)") {
  const SymplecticContext ctx(Field::prime(2), 2);
  const auto sp = oracle::symplectic(ctx);
  DescendantOptions opts;
  opts.sp_elements = &sp;
  std::size_t count = 0, with_f4 = 0;
  for (const auto& g : oracle::general_linear(ctx.field(), 4)) {
    if (!(sigma(ctx, g) == g) || !is_semisimple(g)) continue;
    ++count;
    const auto x = make_sigma_symmetric(ctx, g);
    const auto r = descendant(x, opts);
    CHECK(r.verified);
    CHECK(r.predicted_centralizer_order == oracle_centralizer(sp, g));
    check_report(x, r);
    if (x.minimal_polynomial() == Polynomial::from_ints(ctx.field(), {1, 1, 1})) {
      ++with_f4;
      CHECK(r.predicted_centralizer_order == 60);
    }
  }
  MESSAGE(count << " elements, " << with_f4 << " with minimal polynomial t^2+t+1");
  CHECK(count > 0);
  CHECK(with_f4 > 0);
}

TEST_CASE("centralizer identity on sampled x in GL_4(F_3) and GL_4(F_4)") {
  for (auto [q, samples] : std::vector<std::pair<std::uint64_t, int>>{{3, 25}, {4, 6}}) {
    const SymplecticContext ctx(field_of_order(q), 2);
    const auto sp = enumerate_sp(ctx);
    DescendantOptions opts;
    opts.sp_elements = &sp;
    Rng rng(41);
    int done = 0;
    while (done < samples) {
      const Matrix x = symmetrize(ctx, random_invertible(ctx.field(), 4, rng));
      if (!is_semisimple(x)) continue;
      const auto el = make_sigma_symmetric(ctx, x);
      const auto r = descendant(el, opts);
      CHECK(r.verified);
      check_report(el, r);
      ++done;
    }
  }
}

TEST_CASE("symmetrization consistency on GL_4(F_2) coset representatives") {
  const SymplecticContext ctx(Field::prime(2), 2);
  const auto table = enumerate_double_cosets(ctx);
  const auto stab = verify_stabilizers(table);
  for (std::size_t c = 0; c < table.cosets().size(); ++c) {
    const Matrix& g = table.cosets()[c].representative;
    if (!is_semisimple(symmetrize(ctx, g))) continue;
    const auto r = descendant(symmetrize_to_element(ctx, g));
    CHECK(r.verified);
    CHECK(*r.brute_force_centralizer_order == stab[c].stabilizer_order);
  }
}

TEST_CASE("scalar symmetrization") {
  const SymplecticContext c3(Field::prime(3), 1);
  CHECK(solve_scalar_symmetrization(c3, c3.field()(1))->code() == 1);
  CHECK_FALSE(solve_scalar_symmetrization(c3, c3.field()(2)).has_value());
  CHECK(code_of([&] { solve_scalar_symmetrization(c3, c3.field()(0)); }) == ErrorCode::ZeroInput);
  const SymplecticContext c7(Field::prime(7), 1);
  const auto r = solve_scalar_symmetrization(c7, c7.field()(2));
  REQUIRE(r);
  CHECK((r->code() == 3 || r->code() == 4));

  for (std::uint64_t q : {3, 5, 7, 9}) {
    const SymplecticContext ctx(field_of_order(q), 1);
    std::uint64_t solvable = 0;
    for (const auto& z : elements(ctx.field())) {
      if (z.is_zero()) continue;
      const auto root = solve_scalar_symmetrization(ctx, z);
      CHECK(root.has_value() == !oracle::square_roots(z).empty());
      if (!root) continue;
      ++solvable;
      CHECK((*root * *root) == z);
      // Any g with s(g) = z I gives r^-1 g in Sp.
      const Matrix zi = Matrix::scalar(z, 2);
      for (const auto& g : oracle::general_linear(ctx.field(), 2)) {
        if (symmetrize(ctx, g) == zi) CHECK(is_in_sp(ctx, g.scaled(root->inv().code())));
      }
    }
    CHECK(solvable == (q - 1) / 2);
  }
}
