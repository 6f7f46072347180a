#include <doctest.h>

#include <map>

#include "gelfand/orbits.hpp"
#include "gelfand/random.hpp"
#include "oracles.hpp"

using namespace gelfand;

namespace {

struct Case {
  std::uint64_t q;
  std::size_t n;
};

const std::vector<Case> kSmall{{2, 1}, {3, 1}, {2, 2}};

}  // namespace

TEST_CASE("embed_d") {
  const Field f2 = Field::prime(2);
  CHECK(embed_d(Matrix::identity(f2, 2)).is_identity());
  const Matrix x = Matrix::from_ints(f2, {{0, 1}, {1, 0}});
  CHECK(embed_d(x) == Matrix::block_diagonal(x, Matrix::identity(f2, 2)));
  CHECK_THROWS_AS(embed_d(Matrix::zero(f2, 2)), Error);
}

TEST_CASE("conjugacy classes against exhaustive partition") {
  for (auto [q, n] : std::vector<Case>{{3, 1}, {2, 2}, {3, 2}, {4, 2}}) {
    CAPTURE(q);
    CAPTURE(n);
    const Field f = field_of_order(q);
    const auto classes = conjugacy_classes(f, n);
    auto sizes = oracle::class_sizes(oracle::general_linear(f, n));
    std::vector<std::uint64_t> got;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      got.push_back(classes[i].size);
      total += classes[i].size;
      CHECK(invariant_factors(classes[i].representative) == classes[i].invariant);
      if (i > 0) CHECK(classes[i - 1].representative < classes[i].representative);
    }
    std::sort(sizes.begin(), sizes.end());
    std::sort(got.begin(), got.end());
    CHECK(got == sizes);
    CHECK(total == gl_order(q, n));
  }
  CHECK(conjugacy_classes(Field::prime(2), 2).size() == 3);
  CHECK(conjugacy_classes(Field::prime(3), 2).size() == 8);
}

TEST_CASE("double coset tables against brute-force orbit growth") {
  const std::map<std::pair<std::uint64_t, std::size_t>, std::size_t> expected_count{
      {{2, 1}, 1}, {{3, 1}, 2}, {{2, 2}, 3}};
  for (auto [q, n] : kSmall) {
    CAPTURE(q);
    CAPTURE(n);
    const SymplecticContext ctx(field_of_order(q), n);
    const auto table = enumerate_double_cosets(ctx);
    const auto gl = oracle::general_linear(ctx.field(), ctx.dim());
    const auto sp = oracle::symplectic(ctx);
    const auto part = oracle::double_cosets(gl, sp);

    CHECK(table.cosets().size() == expected_count.at({q, n}));
    CHECK(table.cosets().size() == conjugacy_classes(ctx.field(), n).size());
    CHECK(table.total() == gl_order(q, 2 * n));
    CHECK(table.merged_classes().empty());

    auto want = part.sizes;
    std::vector<std::uint64_t> got;
    for (const auto& c : table.cosets()) got.push_back(c.size);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CHECK(got == want);

    // Same partition: the oracle's coset id is a function of the table's and
    // vice versa, and each representative is the least member.
    std::map<std::size_t, std::size_t> forward, backward;
    std::map<std::size_t, std::uint64_t> least;
    for (const auto& g : gl) {
      const std::size_t a = table.index_of(g);
      const std::size_t b = part.id.at(oracle::key(g));
      CHECK(forward.emplace(a, b).first->second == b);
      CHECK(backward.emplace(b, a).first->second == a);
      auto it = least.emplace(a, oracle::key(g)).first;
      it->second = std::min(it->second, oracle::key(g));
    }
    for (std::size_t c = 0; c < table.cosets().size(); ++c) {
      CHECK(oracle::key(table.cosets()[c].representative) == least.at(c));
    }
  }
  CHECK(enumerate_double_cosets(SymplecticContext(Field::prime(2), 1)).cosets().front().size == 6);
}

TEST_CASE("coset tags follow invariant factors of d(x)") {
  const SymplecticContext ctx(Field::prime(3), 1);
  const auto table = enumerate_double_cosets(ctx);
  CHECK(table.coset_of(Matrix::identity(ctx.field(), 2)).class_tag == invariant_factors(Matrix::identity(ctx.field(), 1)));
  for (const auto& x : oracle::general_linear(ctx.field(), 1)) {
    CHECK(table.coset_of(embed_d(x)).class_tag == invariant_factors(x));
  }
  // Two d(x) share a coset exactly when the x are conjugate (GL_2(F_2) for n = 2).
  const SymplecticContext ctx2(Field::prime(2), 2);
  const auto t2 = enumerate_double_cosets(ctx2);
  const auto gl2 = oracle::general_linear(ctx2.field(), 2);
  for (const auto& x : gl2)
    for (const auto& y : gl2)
      CHECK((t2.index_of(embed_d(x)) == t2.index_of(embed_d(y))) == oracle::conjugator(gl2, x, y).has_value());
  CHECK_THROWS_AS(t2.index_of(Matrix::zero(ctx2.field(), 4)), Error);
}

TEST_CASE("decompose writes g as h d(x) h'") {
  const SymplecticContext ctx(Field::prime(2), 2);
  const auto table = enumerate_double_cosets(ctx);
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const Matrix g = random_invertible(ctx.field(), 4, rng);
    const auto dec = table.decompose(g);
    CHECK(is_in_sp(ctx, dec.left));
    CHECK(is_in_sp(ctx, dec.right));
    CHECK(dec.left * embed_d(*table.cosets()[dec.coset].seed) * dec.right == g);
  }
}

TEST_CASE("transpose witnesses") {
  const Field f3 = Field::prime(3);
  const SymplecticContext c31(f3, 1);
  const auto w = transpose_witness(c31, Matrix::identity(f3, 1));
  CHECK(w.h.is_identity());

  const SymplecticContext c32(f3, 2);
  const Matrix x = Matrix::from_ints(f3, {{1, 1}, {0, 1}});
  const auto w2 = transpose_witness(c32, x);
  CHECK(is_in_sp(c32, w2.h));
  CHECK(w2.h * embed_d(x) * inverse(w2.h) == embed_d(x.transpose()));
  CHECK(w2.k * x * inverse(w2.k) == x.transpose());

  const SymplecticContext c22(Field::prime(2), 2);
  for (const auto& y : oracle::general_linear(Field::prime(2), 2)) {
    const auto wy = transpose_witness(c22, y);
    CHECK(is_in_sp(c22, wy.h));
    CHECK(wy.h * embed_d(y) * inverse(wy.h) == embed_d(y.transpose()));
  }
  CHECK_THROWS_AS(transpose_witness(c22, Matrix::zero(Field::prime(2), 2)), Error);
}

TEST_CASE("goodness: every coset is transpose and sigma stable") {
  for (auto [q, n] : kSmall) {
    const SymplecticContext ctx(field_of_order(q), n);
    const auto table = enumerate_double_cosets(ctx);
    const auto report = verify_good(table);
    CHECK(report.all_stable);
    CHECK(report.counterexamples.empty());
    for (const auto& c : report.cosets) {
      CHECK(c.witness_verified);
      REQUIRE(c.left);
      CHECK(*c.left * c.representative * *c.right == c.representative.transpose());
      CHECK(*c.sigma_left * c.representative * *c.sigma_right == sigma(ctx, c.representative));
    }
    const auto scan = scan_sigma_stability(table);
    CHECK(scan.checked == gl_order(q, 2 * n));
    CHECK(scan.violations == 0);

    // Independent check with the brute-force partition.
    const auto part = oracle::double_cosets(oracle::general_linear(ctx.field(), ctx.dim()), oracle::symplectic(ctx));
    std::size_t bad = 0;
    for (const auto& g : oracle::general_linear(ctx.field(), ctx.dim())) {
      const std::size_t id = part.id.at(oracle::key(g));
      bad += part.id.at(oracle::key(g.transpose())) != id || part.id.at(oracle::key(sigma(ctx, g))) != id;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("Hecke structure constants") {
  for (auto [q, n] : kSmall) {
    CAPTURE(q);
    CAPTURE(n);
    const SymplecticContext ctx(field_of_order(q), n);
    const auto table = enumerate_double_cosets(ctx);
    const auto hecke = hecke_commutativity(table);
    CHECK(hecke.commutative);
    CHECK(hecke.count == table.cosets().size());

    // Direct count for k: #{a in D_i : a^-1 g_k in D_j}.
    const auto gl = oracle::general_linear(ctx.field(), ctx.dim());
    const std::size_t N = hecke.count;
    for (std::size_t k = 0; k < N; ++k) {
      std::vector<std::uint64_t> c(N * N, 0);
      for (const auto& a : gl) {
        ++c[table.index_of(a) * N + table.index_of(inverse(a) * table.cosets()[k].representative)];
      }
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
          CHECK(hecke.at(i, j, k) == c[i * N + j]);
          CHECK(hecke.at(i, j, k) == hecke.at(j, i, k));
        }
    }
  }
}

TEST_CASE("stabilizers match centralizers of s(g)") {
  for (auto [q, n] : kSmall) {
    const SymplecticContext ctx(field_of_order(q), n);
    const auto table = enumerate_double_cosets(ctx);
    for (const auto& s : verify_stabilizers(table)) {
      CHECK(s.orbit_stabilizer);
      CHECK(s.matches_centralizer);
    }
  }
}

TEST_CASE("resource gating") {
  const SymplecticContext ctx(Field::prime(2), 2);
  CHECK_THROWS_AS(enumerate_double_cosets(ctx, ResourceLimits{1000}), Error);
  CHECK_THROWS_AS(enumerate_double_cosets(SymplecticContext(Field::prime(5), 2)), Error);
}
