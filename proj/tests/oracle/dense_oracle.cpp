#include "dense_oracle.hpp"

#include <utility>

namespace oracle {

int rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t q = r + 1; q < rows; ++q) {
      if (m[q][c] == 0) continue;
      const mpq_class f = m[q][c] / m[r][c];
      for (std::size_t x = c; x < cols; ++x) m[q][x] -= f * m[r][x];
    }
    ++r;
  }
  return static_cast<int>(r);
}

Dims second_cohomology(const Tensor& t) {
  const int d = t.dim;
  std::vector<std::vector<int>> col(d, std::vector<int>(d, -1));
  int npairs = 0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) col[i][j] = npairs++;

  // xi(X_k, X_l) as +/- the variable of the ordered pair.
  auto add = [&](std::vector<mpq_class>& row, int k, int l, const mpq_class& v) {
    if (k == l || v == 0) return;
    if (k < l)
      row[col[k][l]] += v;
    else
      row[col[l][k]] -= v;
  };

  std::vector<std::vector<mpq_class>> z;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int l = j + 1; l < d; ++l) {
        std::vector<mpq_class> row(npairs);
        for (int k = 0; k < d; ++k) {
          add(row, k, l, t.at(i, j, k));
          add(row, k, i, t.at(j, l, k));
          add(row, k, j, t.at(l, i, k));
        }
        z.push_back(std::move(row));
      }

  std::vector<std::vector<mpq_class>> delta;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      std::vector<mpq_class> row(d);
      for (int k = 0; k < d; ++k) row[k] = t.at(i, j, k);
      delta.push_back(std::move(row));
    }

  Dims out;
  out.z2 = npairs - rank(std::move(z));
  out.b2 = rank(std::move(delta));
  out.h2 = out.z2 - out.b2;
  return out;
}

}  // namespace oracle
