#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gelfand/canonical_form.hpp"
#include "gelfand/packed.hpp"
#include "gelfand/symplectic.hpp"

namespace gelfand {

// diag(x, I_n)
Matrix embed_d(const Matrix& x);

struct ConjugacyClass {
  Matrix representative;  // lexicographically least member
  ConjugacyInvariant invariant;
  std::uint64_t size = 0;
};

// Conjugacy classes of GL_n(F_q), ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const Field& field, std::size_t n, const ResourceLimits& limits = {});

struct DoubleCoset {
  Matrix representative;  // lexicographically least member
  std::uint64_t size = 0;
  // Invariant of the x whose d(x) seeded this coset. Empty only for a coset
  // containing no d(x), which would contradict the class bijection.
  std::optional<ConjugacyInvariant> class_tag;
  std::optional<Matrix> seed;
};

// The partition of GL_2n(F_q) into Sp x Sp double cosets, computed by orbit
// expansion from each d(x). Every element of the group is indexed, and the
// expansion tree is kept so any g can be written as h d(x) h' explicitly.
class DoubleCosetTable {
 public:
  const SymplecticContext& context() const noexcept { return ctx_; }
  const std::vector<DoubleCoset>& cosets() const noexcept { return cosets_; }
  std::uint64_t total() const noexcept { return total_; }
  const std::vector<Matrix>& sp_elements() const noexcept { return sp_; }
  const std::vector<Matrix>& generators() const noexcept { return generators_; }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  const PackedSpace& space() const noexcept { return space_; }
  // Classes whose d(x) fell into a coset already seeded by an earlier class.
  const std::vector<std::size_t>& merged_classes() const noexcept { return merged_classes_; }

  std::size_t index_of(const Matrix& g) const;
  const DoubleCoset& coset_of(const Matrix& g) const { return cosets_[index_of(g)]; }
  std::size_t index_of_code(std::uint64_t code) const;

  struct Decomposition {
    std::size_t coset;
    Matrix left;
    Matrix right;  // g = left * d(seed) * right, both in Sp
  };
  Decomposition decompose(const Matrix& g) const;

  // Calls visit(code, coset index) for every group element in code order.
  template <class Visit>
  void for_each_element(Visit&& visit) const {
    for (std::uint64_t code = 0; code < labels_.size(); ++code) {
      if (labels_[code] != kUnset) visit(code, static_cast<std::size_t>(labels_[code]));
    }
  }

 private:
  friend DoubleCosetTable enumerate_double_cosets(const SymplecticContext&, const ResourceLimits&);
  DoubleCosetTable(SymplecticContext ctx, PackedSpace space) : ctx_(std::move(ctx)), space_(std::move(space)) {}

  static constexpr std::uint16_t kUnset = 0xFFFF;

  SymplecticContext ctx_;
  PackedSpace space_;
  std::vector<DoubleCoset> cosets_;
  std::uint64_t total_ = 0;
  std::vector<Matrix> sp_;
  std::vector<Matrix> generators_;
  std::vector<PackedSpace::Digits> packed_generators_;
  std::vector<PackedSpace::Digits> packed_generator_inverses_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> merged_classes_;
  std::vector<std::uint16_t> labels_;
  // 0 for a seed; otherwise 1 + 2 * generator + side (0 = left, 1 = right).
  std::vector<std::uint8_t> parent_op_;
};

DoubleCosetTable enumerate_double_cosets(const SymplecticContext& ctx, const ResourceLimits& limits = {});

// A small generating set of Sp, chosen deterministically from the enumeration.
std::vector<Matrix> sp_generators(const SymplecticContext& ctx, const std::vector<Matrix>& sp_elements);

struct TransposeWitness {
  Matrix k;  // k x k^-1 = x^t
  Matrix h;  // diag(k, (k^t)^-1), in Sp, with h d(x) h^-1 = d(x^t)
};
TransposeWitness transpose_witness(const SymplecticContext& ctx, const Matrix& x);

struct CosetStability {
  std::size_t coset = 0;
  Matrix representative;
  bool transpose_in_coset = false;
  bool sigma_in_coset = false;
  // left * g * right = g^t and sigma_left * g * sigma_right = sigma(g), all in Sp.
  std::optional<Matrix> left, right, sigma_left, sigma_right;
  bool witness_verified = false;
};

struct GoodnessReport {
  std::vector<CosetStability> cosets;
  bool all_stable = true;
  std::vector<std::string> counterexamples;
};

// Transpose and sigma stability of every coset, with explicit Sp x Sp witnesses
// built from d(x) decompositions and transpose_witness.
GoodnessReport verify_good(const DoubleCosetTable& table);

struct StabilityScan {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<Matrix> first_violation;
};
// sigma(g) and g^t against coset_of(g) for every element of the group.
StabilityScan scan_sigma_stability(const DoubleCosetTable& table);
// The same on uniformly random invertible g.
StabilityScan sample_sigma_stability(const DoubleCosetTable& table, std::uint64_t samples, std::uint64_t seed);

// Structure constants c[i][j][k] = #{a in D_i : a^-1 g_k in D_j}.
struct HeckeTable {
  std::size_t count = 0;
  std::vector<std::uint64_t> constants;
  bool commutative = false;

  std::uint64_t at(std::size_t i, std::size_t j, std::size_t k) const { return constants[(i * count + j) * count + k]; }
};
HeckeTable hecke_commutativity(const DoubleCosetTable& table);

struct StabilizerCheck {
  std::size_t coset = 0;
  std::uint64_t coset_size = 0;
  std::uint64_t stabilizer_order = 0;   // |{(h, h') : h g h' = g}|
  std::uint64_t centralizer_order = 0;  // |{h in Sp : h s(g) = s(g) h}|
  bool orbit_stabilizer = false;        // coset_size * stabilizer_order == |Sp|^2
  bool matches_centralizer = false;
};
std::vector<StabilizerCheck> verify_stabilizers(const DoubleCosetTable& table);

}  // namespace gelfand
