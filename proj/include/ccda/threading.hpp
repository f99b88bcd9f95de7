#pragma once

namespace ccda {

// Global cap on the worker threads used by the parallel corpus kernels.
// 0 means "use the OpenMP default". Parallel kernels write each result into
// a preallocated slot indexed by input position, so output is bit-identical
// to the serial reference for any thread count.
void set_max_threads(int n);
int max_threads();

// Number of threads a parallel region will actually use right now.
int effective_threads();

}  // namespace ccda
