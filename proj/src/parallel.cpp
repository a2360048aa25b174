#include "fankit/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

namespace fankit::par {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int n) { g_threads = std::max(1, n); }

int threads() {
    int n = g_threads.load();
    return n > 0 ? n : std::max(1, omp_get_max_threads());
}

} // namespace fankit::par
