#include "vrg/rational.hpp"

#include <cctype>

#include "vrg/errors.hpp"

namespace vrg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rat value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw ParseError("bad rational literal", 0);
    Int d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
    value = make_rat(Int(std::string(num), 10), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw ParseError("bad decimal literal", 0);
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Int digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = make_rat(digits, scale);
  } else {
    if (!all_digits(s)) throw ParseError("bad integer literal", 0);
    value = Rat(Int(std::string(s), 10));
  }
  return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace vrg
