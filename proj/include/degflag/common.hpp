#pragma once

#include <stdexcept>
#include <string>

namespace degflag {

// Hard cap on the symmetric-group degree 2n.  Everything in this library is
// desk-scale exhaustive computation; the cap keeps permutations word-sized.
inline constexpr int kMaxDegree = 64;

// Thrown when a request exceeds one of the documented exhaustive-enumeration
// caps.  Deliberately distinct from std::invalid_argument: the arguments are
// well-formed, the computation is just out of bounds.
class bound_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace degflag
