#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gelfand/symplectic.hpp"

namespace gelfand {

// A semisimple x in GL_2n with sigma(x) = x, equivalently
// omega(x u, v) = omega(u, x v) for all u, v.
class SigmaSymmetricElement {
 public:
  const SymplecticContext& context() const noexcept { return ctx_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  const Polynomial& minimal_polynomial() const noexcept { return minpoly_; }

 private:
  friend SigmaSymmetricElement make_sigma_symmetric(const SymplecticContext&, const Matrix&);
  SigmaSymmetricElement(SymplecticContext ctx, Matrix m, Polynomial minpoly)
      : ctx_(std::move(ctx)), matrix_(std::move(m)), minpoly_(std::move(minpoly)) {}

  SymplecticContext ctx_;
  Matrix matrix_;
  Polynomial minpoly_;
};

// Errors: SingularInput, NotSigmaSymmetric, NotSemisimple.
SigmaSymmetricElement make_sigma_symmetric(const SymplecticContext& ctx, const Matrix& m);
// x = s(g). NotSemisimple when s(g) has a repeated factor in its minimal polynomial.
SigmaSymmetricElement symmetrize_to_element(const SymplecticContext& ctx, const Matrix& g);

// V_i = ker P_i(x) viewed as a vector space over E_i = F[t]/(P_i), with t
// acting through x.
struct PrimaryComponent {
  Polynomial factor;
  Field ext_field;
  std::vector<Matrix> f_basis;  // canonical kernel basis of P_i(x), column vectors over F
  std::vector<Matrix> e_basis;  // greedy E_i-basis drawn from f_basis
  std::size_t e_dim = 0;
  // Omega_i(e_a, e_b) over E_i with Tr(e * Omega_i(u, v)) = omega(e u, v).
  std::optional<Matrix> restricted_form;

  std::size_t f_dim() const noexcept { return f_basis.size(); }
  // "X_m(F_s)" for the symmetric pair (GL_2m(E_i), Sp_2m(E_i)).
  std::string pair_name() const;
};

// Components in factor order; verifies the direct sum, x-stability and
// pairwise omega-orthogonality of the V_i (InvariantViolation otherwise).
std::vector<PrimaryComponent> primary_decomposition(const SigmaSymmetricElement& x);

// The E-valued form on a component, checked skew, alternating and
// non-degenerate (DegenerateForm otherwise).
Matrix restrict_form(const SigmaSymmetricElement& x, const PrimaryComponent& comp);

// E-coordinates of an F-vector of V_i in the component's E-basis.
std::vector<FieldElement> e_coordinates(const SigmaSymmetricElement& x, const PrimaryComponent& comp,
                                        const Matrix& v);
// Omega_i(u, v) for arbitrary u, v in V_i, by E-bilinear extension.
FieldElement omega_e(const SigmaSymmetricElement& x, const PrimaryComponent& comp, const Matrix& u, const Matrix& v);
// Tr_{E/F}
FieldElement trace_down(const Field& ext, const Field& base, Code a);
// The action e . v of e in E_i on v in V_i: e(x) v.
Matrix act(const SigmaSymmetricElement& x, const PrimaryComponent& comp, Code e, const Matrix& v);

struct DescendantOptions {
  // Precomputed Sp elements for the brute-force count; enumerated on demand when
  // null and |Sp| is at most the brute-force bound.
  const std::vector<Matrix>* sp_elements = nullptr;
  bool brute_force = true;
  std::uint64_t brute_force_bound = 1'000'000;
  ResourceLimits limits;
};

struct DescendantReport {
  std::vector<PrimaryComponent> components;
  std::uint64_t predicted_centralizer_order = 0;  // prod sp_order(|E_i|, e_dim_i / 2)
  std::optional<std::uint64_t> brute_force_centralizer_order;
  bool verified = false;  // brute force ran and matched the prediction

  std::string pair_name() const;
};

// Errors: OddEDimension, DegenerateForm, InvariantViolation.
DescendantReport descendant(const SigmaSymmetricElement& x, const DescendantOptions& options = {});

// |{h in Sp : h x = x h}| by enumeration.
std::uint64_t centralizer_order_brute_force(const SymplecticContext& ctx, const Matrix& x,
                                            const std::vector<Matrix>& sp_elements);

// Scalar alpha = r I with alpha sigma(alpha) = z I, i.e. r^2 = z.
// Errors: ZeroInput, FieldMismatch.
std::optional<FieldElement> solve_scalar_symmetrization(const SymplecticContext& ctx, const FieldElement& z);

}  // namespace gelfand
