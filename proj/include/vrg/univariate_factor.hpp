#pragma once

#include <vector>

#include "vrg/upoly.hpp"

namespace vrg {

/// Irreducible factors over Q of a square-free univariate polynomial of
/// positive degree, as primitive integer polynomials with positive leading
/// coefficient. Zassenhaus: factor modulo a word-size prime, Hensel-lift,
/// recombine by trial division.
std::vector<UPoly> factor_squarefree_univariate(const UPoly& f);

/// Integer coefficients, content 1, positive leading coefficient.
UPoly primitive_integer_part(const UPoly& f);

}  // namespace vrg
