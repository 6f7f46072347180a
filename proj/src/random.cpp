#include "gelfand/random.hpp"

namespace gelfand {

Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<Code>(rng.below(field.size()));
  return m;
}

Matrix random_invertible(const Field& field, std::size_t n, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(field, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

}  // namespace gelfand
