#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gelfand/matrix.hpp"
#include "gelfand/polynomial.hpp"

namespace gelfand {

// Invariant-factor chain f_1 | f_2 | ... | f_k of the F[t]-module defined by a
// matrix. Only nonconstant factors are kept, so the degrees sum to the size.
// Two matrices are GL-conjugate exactly when their invariants compare equal.
struct ConjugacyInvariant {
  Field field;
  std::vector<Polynomial> factors;

  std::size_t dimension() const;
  bool operator==(const ConjugacyInvariant& o) const { return field == o.field && factors == o.factors; }
  std::strong_ordering operator<=>(const ConjugacyInvariant& o) const { return factors <=> o.factors; }
  std::string to_string() const;
};

ConjugacyInvariant invariant_factors(const Matrix& m);

// Change of basis to rational canonical form: m * basis = basis * form, with
// form the block diagonal of companion matrices of the invariant factors.
struct RationalCanonicalForm {
  ConjugacyInvariant invariant;
  Matrix basis;
  Matrix form;
};
RationalCanonicalForm rational_canonical_form(const Matrix& m);

// Invertible k with k x k^-1 = y when x and y are conjugate.
std::optional<Matrix> find_conjugator(const Matrix& x, const Matrix& y);

}  // namespace gelfand
