#include "gspan/groupoid/limits.hpp"

#include <cstdlib>
#include <string>

#include "gspan/errors.hpp"

namespace gspan {

const SizeLimits& defaultLimits() {
  static const SizeLimits limits = [] {
    SizeLimits l;
    if (const char* env = std::getenv("GSPAN_SIZE_GUARD")) {
      try {
        auto v = std::stoull(env);
        if (v > 0) l.maxElements = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
      }
    }
    return l;
  }();
  return limits;
}

void enforceLimit(const char* what, std::size_t requested, const SizeLimits& limits) {
  if (requested > limits.maxElements) throw SizeLimitError(what, requested, limits.maxElements);
}

}  // namespace gspan
