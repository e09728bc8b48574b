#pragma once

#include <string>

#include "vrg/extension_spec.hpp"
#include "vrg/parse.hpp"
#include "vrg/report_io.hpp"

namespace testing {

inline vrg::Ring ring_xy(int wx = 1, int wy = 1) { return vrg::make_ring({"X", "Y"}, {wx, wy}); }

inline vrg::ExtensionSpec corpus(const std::string& name) {
  return vrg::load_spec(std::string(VRG_DATA_DIR) + "/specs/" + name + ".json");
}

inline vrg::ExtensionSpec spec1() { return vrg::make_spec({"X", "Y"}, {3, 2}, {"X^2 + Y^3", "X^2*Y^3"}); }
inline vrg::ExtensionSpec spec2() { return vrg::make_spec({"X", "Y"}, {1, 2}, {"X^2*Y", "X^2 + Y"}); }
inline vrg::ExtensionSpec spec3() { return vrg::make_spec({"X", "Y"}, {1, 1}, {"X + Y", "X*Y"}); }

}  // namespace testing
