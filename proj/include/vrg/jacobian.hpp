#pragma once

#include <span>

#include "vrg/poly.hpp"

namespace vrg {

/// det(d f_i / d X_j) for n polynomials over an n-variable ring.
Poly jacobian(std::span<const Poly> f);

/// Determinant of a square matrix of polynomials by cofactor expansion.
Poly determinant(const std::vector<std::vector<Poly>>& m);

}  // namespace vrg
