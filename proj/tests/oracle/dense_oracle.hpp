#pragma once

#include <vector>

#include <gmpxx.h>

namespace oracle {

// Dense structure tensor: c[(i*dim + j)*dim + k] = C_ij^k.
struct Tensor {
  int dim = 0;
  std::vector<mpq_class> c;

  explicit Tensor(int d) : dim(d), c(static_cast<std::size_t>(d) * d * d) {}
  mpq_class& at(int i, int j, int k) { return c[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
  const mpq_class& at(int i, int j, int k) const {
    return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
};

// Rank by textbook Gaussian elimination over mpq: columns left to right,
// pivot is the first row with a nonzero entry.
int rank(std::vector<std::vector<mpq_class>> m);

struct Dims {
  int z2 = 0;
  int b2 = 0;
  int h2 = 0;
};

Dims second_cohomology(const Tensor& t);

}  // namespace oracle
