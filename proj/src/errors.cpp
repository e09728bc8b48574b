#include "vrg/errors.hpp"

namespace vrg {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error("syntax error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

DegreeCapExceeded::DegreeCapExceeded(int cap)
    : Error("intermediate Groebner degree exceeds cap " + std::to_string(cap) +
            " (VRG_MAX_DEGREE)") {}

}  // namespace vrg
