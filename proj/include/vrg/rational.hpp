#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vrg {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "a", "-a", "a/b" or a finite decimal such as "-0.25".
Rat parse_rational(std::string_view text);

std::string to_string(const Rat& r);
std::string to_string(const Int& z);

inline Rat make_rat(const Int& num, const Int& den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace vrg
