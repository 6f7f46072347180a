#include "gelfand/orbits.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "gelfand/random.hpp"

namespace gelfand {

namespace {

using Digits = PackedSpace::Digits;

constexpr std::uint64_t kDenseLimit = 1ull << 28;
constexpr std::uint64_t kClassEnumerationCap = 10'000'000;
constexpr std::uint64_t kGeneratorSeed = 0x5eed'0f'5e7;

bool packed_in_sp(const PackedSpace& space, const Digits& m, const Digits& form, std::uint64_t form_code) {
  Digits mt{}, tmp{}, out{};
  space.transpose(m, mt);
  space.multiply(mt, form, tmp);
  space.multiply(tmp, m, out);
  return space.encode(out) == form_code;
}

}  // namespace

Matrix embed_d(const Matrix& x) {
  if (!x.is_square()) fail(ErrorCode::DimensionMismatch, "d(x) needs a square matrix");
  if (!is_invertible(x)) fail(ErrorCode::SingularInput, "d(x) needs an invertible x");
  return Matrix::block_diagonal(x, Matrix::identity(x.field(), x.rows()));
}

std::vector<ConjugacyClass> conjugacy_classes(const Field& field, std::size_t n, const ResourceLimits& limits) {
  const std::uint64_t order = gl_order(field.size(), n);
  if (order > std::min(kClassEnumerationCap, limits.max_group_size)) {
    fail(ErrorCode::TooLarge, "GL_" + std::to_string(n) + " order " + std::to_string(order) + " exceeds the bound");
  }
  const std::uint64_t all = checked_pow(field.size(), n * n);
  std::map<ConjugacyInvariant, std::size_t> index;
  std::vector<ConjugacyClass> classes;
  std::vector<Code> entries(n * n);
  for (std::uint64_t code = 0; code < all; ++code) {
    std::uint64_t v = code;
    for (std::size_t k = n * n; k-- > 0;) {
      entries[k] = static_cast<Code>(v % field.size());
      v /= field.size();
    }
    Matrix m(field, n, n, entries);
    if (!is_invertible(m)) continue;
    ConjugacyInvariant inv = invariant_factors(m);
    auto it = index.find(inv);
    if (it == index.end()) {
      index.emplace(inv, classes.size());
      classes.push_back({std::move(m), std::move(inv), 1});
    } else {
      ++classes[it->second].size;
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const ConjugacyClass& a, const ConjugacyClass& b) { return a.representative < b.representative; });
  return classes;
}

std::vector<Matrix> sp_generators(const SymplecticContext& ctx, const std::vector<Matrix>& sp_elements) {
  const PackedSpace space(ctx.field(), ctx.dim());
  Rng rng(kGeneratorSeed);
  std::vector<Matrix> gens;
  std::vector<Digits> packed;
  std::unordered_set<std::uint64_t> closure;
  const Digits id = space.pack(Matrix::identity(ctx.field(), ctx.dim()));
  closure.insert(space.encode(id));
  while (closure.size() < sp_elements.size()) {
    const Matrix* pick = nullptr;
    while (!pick) {
      const Matrix& cand = sp_elements[rng.below(sp_elements.size())];
      if (!closure.count(space.encode(space.pack(cand)))) pick = &cand;
    }
    gens.push_back(*pick);
    packed.push_back(space.pack(*pick));
    closure.clear();
    std::vector<Digits> queue{id};
    closure.insert(space.encode(id));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Digits cur = queue[head];
      for (const auto& g : packed) {
        Digits next{};
        space.multiply(cur, g, next);
        if (closure.insert(space.encode(next)).second) queue.push_back(next);
      }
    }
  }
  return gens;
}

DoubleCosetTable enumerate_double_cosets(const SymplecticContext& ctx, const ResourceLimits& limits) {
  const Field& f = ctx.field();
  const std::size_t n = ctx.half_dim();
  const std::uint64_t group_order = gl_order(f.size(), ctx.dim());
  if (group_order > limits.max_group_size) {
    fail(ErrorCode::TooLarge, "|GL_" + std::to_string(ctx.dim()) + "| = " + std::to_string(group_order) +
                                  " exceeds the group size bound " + std::to_string(limits.max_group_size));
  }
  PackedSpace space(f, ctx.dim());
  if (space.space_size() > kDenseLimit) fail(ErrorCode::TooLarge, "matrix space too large to index");

  DoubleCosetTable table(ctx, space);
  table.sp_ = enumerate_sp(ctx, limits);
  table.generators_ = sp_generators(ctx, table.sp_);
  for (const auto& g : table.generators_) {
    table.packed_generators_.push_back(space.pack(g));
    table.packed_generator_inverses_.push_back(space.pack(inverse(g)));
  }
  if (2 * table.generators_.size() + 1 > 0xFF) fail(ErrorCode::TooLarge, "too many generators");
  table.classes_ = conjugacy_classes(f, n, limits);

  table.labels_.assign(space.space_size(), DoubleCosetTable::kUnset);
  table.parent_op_.assign(space.space_size(), 0);

  auto expand = [&](const Digits& root, std::optional<ConjugacyInvariant> tag, std::optional<Matrix> seed) {
    const auto id = static_cast<std::uint16_t>(table.cosets_.size());
    if (id == DoubleCosetTable::kUnset) fail(ErrorCode::TooLarge, "too many double cosets");
    const std::uint64_t root_code = space.encode(root);
    std::vector<std::uint64_t> queue{root_code};
    table.labels_[root_code] = id;
    table.parent_op_[root_code] = 0;
    std::uint64_t least = root_code;
    Digits cur{}, next{};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      space.decode(queue[head], cur);
      for (std::size_t gi = 0; gi < table.packed_generators_.size(); ++gi) {
        const Digits& g = table.packed_generators_[gi];
        for (int side = 0; side < 2; ++side) {
          if (side == 0) {
            space.multiply(g, cur, next);
          } else {
            space.multiply(cur, g, next);
          }
          const std::uint64_t code = space.encode(next);
          if (table.labels_[code] != DoubleCosetTable::kUnset) continue;
          table.labels_[code] = id;
          table.parent_op_[code] = static_cast<std::uint8_t>(1 + 2 * gi + side);
          least = std::min(least, code);
          queue.push_back(code);
        }
      }
    }
    Digits rep{};
    space.decode(least, rep);
    DoubleCoset coset;
    coset.representative = space.unpack(rep);
    coset.size = queue.size();
    coset.class_tag = std::move(tag);
    coset.seed = std::move(seed);
    table.cosets_.push_back(std::move(coset));
    table.total_ += queue.size();
  };

  for (std::size_t ci = 0; ci < table.classes_.size(); ++ci) {
    const ConjugacyClass& cls = table.classes_[ci];
    const Digits root = space.pack(embed_d(cls.representative));
    if (table.labels_[space.encode(root)] != DoubleCosetTable::kUnset) {
      table.merged_classes_.push_back(ci);
      continue;
    }
    expand(root, cls.invariant, cls.representative);
  }
  // Any element left over lies in a coset containing no d(x).
  if (table.total_ < group_order) {
    Digits cur{};
    for (std::uint64_t code = 0; code < space.space_size() && table.total_ < group_order; ++code) {
      if (table.labels_[code] != DoubleCosetTable::kUnset) continue;
      space.decode(code, cur);
      Digits inv{};
      if (!space.invert(cur, inv)) continue;
      expand(cur, std::nullopt, std::nullopt);
    }
  }
  return table;
}

std::size_t DoubleCosetTable::index_of_code(std::uint64_t code) const {
  if (code >= labels_.size() || labels_[code] == kUnset) fail(ErrorCode::SingularInput, "matrix is not invertible");
  return labels_[code];
}

std::size_t DoubleCosetTable::index_of(const Matrix& g) const { return index_of_code(space_.encode(space_.pack(g))); }

DoubleCosetTable::Decomposition DoubleCosetTable::decompose(const Matrix& g) const {
  std::uint64_t code = space_.encode(space_.pack(g));
  const std::size_t coset = index_of_code(code);
  const Field& f = ctx_.field();
  Matrix left = Matrix::identity(f, ctx_.dim());
  Matrix right = Matrix::identity(f, ctx_.dim());
  Digits cur{}, prev{};
  space_.decode(code, cur);
  while (parent_op_[code] != 0) {
    const std::size_t op = parent_op_[code] - 1u;
    const std::size_t gi = op / 2;
    if (op % 2 == 0) {
      space_.multiply(packed_generator_inverses_[gi], cur, prev);
      left = left * generators_[gi];
    } else {
      space_.multiply(cur, packed_generator_inverses_[gi], prev);
      right = generators_[gi] * right;
    }
    cur = prev;
    code = space_.encode(cur);
  }
  const Matrix root = space_.unpack(cur);
  if (cosets_[coset].seed && !(root == embed_d(*cosets_[coset].seed))) {
    fail(ErrorCode::InvariantViolation, "orbit tree does not end at d(x)");
  }
  if (!(left * root * right == g)) fail(ErrorCode::InvariantViolation, "orbit tree decomposition failed");
  return {coset, std::move(left), std::move(right)};
}

TransposeWitness transpose_witness(const SymplecticContext& ctx, const Matrix& x) {
  if (x.rows() != ctx.half_dim() || !x.is_square()) fail(ErrorCode::DimensionMismatch, "x must be n x n");
  if (!is_invertible(x)) fail(ErrorCode::SingularInput, "x must be invertible");
  const Matrix xt = x.transpose();
  auto k = find_conjugator(x, xt);
  if (!k) fail(ErrorCode::InvariantViolation, "x is not conjugate to its transpose: " + x.to_string());
  Matrix h = Matrix::block_diagonal(*k, inverse(k->transpose()));
  if (!is_in_sp(ctx, h)) fail(ErrorCode::InvariantViolation, "diag(k, k^-t) is not symplectic");
  if (!(h * embed_d(x) * inverse(h) == embed_d(xt))) fail(ErrorCode::InvariantViolation, "h d(x) h^-1 != d(x^t)");
  return {std::move(*k), std::move(h)};
}

GoodnessReport verify_good(const DoubleCosetTable& table) {
  const SymplecticContext& ctx = table.context();
  GoodnessReport report;
  for (std::size_t c = 0; c < table.cosets().size(); ++c) {
    const DoubleCoset& coset = table.cosets()[c];
    const Matrix& g = coset.representative;
    CosetStability st;
    st.coset = c;
    st.representative = g;
    const Matrix gt = g.transpose();
    const Matrix sg = sigma(ctx, g);
    st.transpose_in_coset = table.index_of(gt) == c;
    st.sigma_in_coset = table.index_of(sg) == c;
    if (coset.seed) {
      // g = A d(x) B and h d(x) h^-1 = d(x^t) give g^t = (B^t h A^-1) g (B^-1 h^-1 A^t).
      auto dec = table.decompose(g);
      const TransposeWitness tw = transpose_witness(ctx, *coset.seed);
      Matrix left = dec.right.transpose() * tw.h * inverse(dec.left);
      Matrix right = inverse(dec.right) * inverse(tw.h) * dec.left.transpose();
      Matrix sleft = ctx.form_inverse() * left;
      Matrix sright = right * ctx.form();
      st.witness_verified = is_in_sp(ctx, left) && is_in_sp(ctx, right) && left * g * right == gt &&
                            is_in_sp(ctx, sleft) && is_in_sp(ctx, sright) && sleft * g * sright == sg;
      st.left = std::move(left);
      st.right = std::move(right);
      st.sigma_left = std::move(sleft);
      st.sigma_right = std::move(sright);
    }
    if (!(st.transpose_in_coset && st.sigma_in_coset && st.witness_verified)) {
      report.all_stable = false;
      report.counterexamples.push_back("coset " + std::to_string(c) + " representative " + g.to_string() +
                                       (coset.seed ? "" : " (no d(x) in coset)"));
    }
    report.cosets.push_back(std::move(st));
  }
  return report;
}

namespace {

struct SigmaKernel {
  const PackedSpace& space;
  Digits form, form_inverse;

  explicit SigmaKernel(const DoubleCosetTable& table)
      : space(table.space()),
        form(space.pack(table.context().form())),
        form_inverse(space.pack(table.context().form_inverse())) {}

  // True when g^t and sigma(g) both share the coset of g.
  bool stable(const DoubleCosetTable& table, const Digits& g, std::size_t coset) const {
    Digits gt{}, tmp{}, sg{};
    space.transpose(g, gt);
    if (table.index_of_code(space.encode(gt)) != coset) return false;
    space.multiply(form_inverse, gt, tmp);
    space.multiply(tmp, form, sg);
    return table.index_of_code(space.encode(sg)) == coset;
  }
};

}  // namespace

StabilityScan scan_sigma_stability(const DoubleCosetTable& table) {
  const SigmaKernel kernel(table);
  StabilityScan scan;
  Digits g{};
  table.for_each_element([&](std::uint64_t code, std::size_t coset) {
    table.space().decode(code, g);
    ++scan.checked;
    if (!kernel.stable(table, g, coset)) {
      if (!scan.first_violation) scan.first_violation = table.space().unpack(g);
      ++scan.violations;
    }
  });
  return scan;
}

StabilityScan sample_sigma_stability(const DoubleCosetTable& table, std::uint64_t samples, std::uint64_t seed) {
  const SigmaKernel kernel(table);
  Rng rng(seed);
  StabilityScan scan;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Matrix m = random_invertible(table.context().field(), table.context().dim(), rng);
    const Digits g = table.space().pack(m);
    ++scan.checked;
    if (!kernel.stable(table, g, table.index_of(m))) {
      if (!scan.first_violation) scan.first_violation = m;
      ++scan.violations;
    }
  }
  return scan;
}

HeckeTable hecke_commutativity(const DoubleCosetTable& table) {
  const PackedSpace& space = table.space();
  HeckeTable out;
  out.count = table.cosets().size();
  const std::size_t N = out.count;
  out.constants.assign(N * N * N, 0);
  std::vector<Digits> reps;
  for (const auto& c : table.cosets()) reps.push_back(space.pack(c.representative));
  Digits a{}, ainv{}, prod{};
  table.for_each_element([&](std::uint64_t code, std::size_t i) {
    space.decode(code, a);
    space.invert(a, ainv);
    for (std::size_t k = 0; k < N; ++k) {
      space.multiply(ainv, reps[k], prod);
      const std::size_t j = table.index_of_code(space.encode(prod));
      ++out.constants[(i * N + j) * N + k];
    }
  });
  out.commutative = true;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        if (out.at(i, j, k) != out.at(j, i, k)) out.commutative = false;
  return out;
}

std::vector<StabilizerCheck> verify_stabilizers(const DoubleCosetTable& table) {
  const SymplecticContext& ctx = table.context();
  const PackedSpace& space = table.space();
  const Digits form = space.pack(ctx.form());
  const std::uint64_t form_code = space.encode(form);
  std::vector<Digits> sp;
  sp.reserve(table.sp_elements().size());
  for (const auto& h : table.sp_elements()) sp.push_back(space.pack(h));
  const std::uint64_t sp_sq = checked_mul(sp.size(), sp.size());

  std::vector<StabilizerCheck> out;
  for (std::size_t c = 0; c < table.cosets().size(); ++c) {
    const Matrix& g = table.cosets()[c].representative;
    const Digits pg = space.pack(g);
    const Digits pginv = space.pack(inverse(g));
    const Digits ps = space.pack(symmetrize(ctx, g));
    StabilizerCheck chk;
    chk.coset = c;
    chk.coset_size = table.cosets()[c].size;
    Digits tmp{}, conj{}, lhs{}, rhs{};
    for (const auto& h : sp) {
      // (h, g^-1 h^-1 g) stabilizes g exactly when g^-1 h g lies in Sp.
      space.multiply(pginv, h, tmp);
      space.multiply(tmp, pg, conj);
      if (packed_in_sp(space, conj, form, form_code)) ++chk.stabilizer_order;
      space.multiply(h, ps, lhs);
      space.multiply(ps, h, rhs);
      if (space.encode(lhs) == space.encode(rhs)) ++chk.centralizer_order;
    }
    chk.orbit_stabilizer = checked_mul(chk.coset_size, chk.stabilizer_order) == sp_sq;
    chk.matches_centralizer = chk.stabilizer_order == chk.centralizer_order;
    out.push_back(chk);
  }
  return out;
}

}  // namespace gelfand
