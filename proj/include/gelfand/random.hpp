#pragma once

#include <cstdint>
#include <random>

#include "gelfand/matrix.hpp"

namespace gelfand {

// Seeded engine for property checks and sampling. Draws are reduced by
// modulo so that sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(const Field& field, std::size_t n, Rng& rng);

}  // namespace gelfand
