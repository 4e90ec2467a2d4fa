#pragma once

#include <cstddef>
#include <functional>

namespace qzeta::parallel {

/// Runtime switch between the OpenMP kernels and their serial reference
/// paths. Defaults to on when built with OpenMP; QZETA_SERIAL=1 in the
/// environment forces the reference implementation.
bool enabled();
void set_enabled(bool on);
int worker_count();

/// Applies fn(i) for i in [0, n). Results must be written to disjoint
/// slots; iteration order is unspecified when parallel.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qzeta::parallel
