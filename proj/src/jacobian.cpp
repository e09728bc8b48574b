#include "vrg/jacobian.hpp"

#include "vrg/errors.hpp"

namespace vrg {

namespace {

// Laplace expansion along the first row over the column subset `cols`.
Poly minor_det(const std::vector<std::vector<Poly>>& m, std::size_t row,
               std::vector<std::size_t>& cols) {
  const Ring& ring = m[0][0].ring();
  if (cols.size() == 1) return m[row][cols[0]];
  Poly det(ring);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Poly& entry = m[row][cols[k]];
    if (entry.is_zero()) continue;
    std::size_t col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    Poly sub = minor_det(m, row + 1, cols);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (k % 2 == 0) {
      det += entry * sub;
    } else {
      det -= entry * sub;
    }
  }
  return det;
}

}  // namespace

Poly determinant(const std::vector<std::vector<Poly>>& m) {
  if (m.empty()) throw Error("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error("determinant of a non-square matrix");
  std::vector<std::size_t> cols(m.size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return minor_det(m, 0, cols);
}

Poly jacobian(std::span<const Poly> f) {
  if (f.empty()) throw Error("jacobian of an empty sequence");
  const std::size_t n = f.front().num_vars();
  if (f.size() != n) throw Error("jacobian needs exactly as many polynomials as variables");
  std::vector<std::vector<Poly>> m;
  m.reserve(n);
  for (const Poly& fi : f) {
    if (!same_ring(fi.ring(), f.front().ring())) throw Error("polynomials over different rings");
    std::vector<Poly> row;
    row.reserve(n);
    for (std::size_t j = 0; j < n; ++j) row.push_back(partial_derivative(fi, j));
    m.push_back(std::move(row));
  }
  return determinant(m);
}

}  // namespace vrg
