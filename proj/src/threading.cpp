#include "ccda/threading.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccda {

namespace {
int g_max_threads = 0;
}

void set_max_threads(int n) { g_max_threads = n < 0 ? 0 : n; }

int max_threads() { return g_max_threads; }

int effective_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
    if (g_max_threads > 0 && g_max_threads < n) n = g_max_threads;
    return n;
#else
    return 1;
#endif
}

}  // namespace ccda
