#pragma once

#include <cstddef>

namespace gspan {

// Caps how many objects (or, for materialization, morphisms) a construction
// may allocate.
struct SizeLimits {
  std::size_t maxElements = 20000;
};

// 20000 unless the GSPAN_SIZE_GUARD environment variable overrides it.
const SizeLimits& defaultLimits();

void enforceLimit(const char* what, std::size_t requested, const SizeLimits& limits);

}  // namespace gspan
