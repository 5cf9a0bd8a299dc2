#pragma once

#include <omp.h>

namespace vpfair {

/// Thread count for an OpenMP team: `requested` when positive, otherwise the OpenMP default.
inline int resolve_threads(int requested) { return requested > 0 ? requested : omp_get_max_threads(); }

}  // namespace vpfair
