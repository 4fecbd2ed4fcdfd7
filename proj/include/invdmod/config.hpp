#pragma once

#include <cstdlib>

namespace invdmod {

/// Cap on symbolic polynomial / Laurent exponent growth.
/// Read once from INVDMOD_MAX_DEGREE (default 64); values < 1 fall back to the
/// default. Operations that would exceed the cap raise ResourceLimit instead
/// of allocating without bound.
inline int max_symbolic_degree() {
  static const int cap = [] {
    const char* s = std::getenv("INVDMOD_MAX_DEGREE");
    if (s == nullptr) return 64;
    int v = std::atoi(s);
    return v >= 1 ? v : 64;
  }();
  return cap;
}

}  // namespace invdmod
