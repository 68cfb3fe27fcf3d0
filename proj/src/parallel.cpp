#include "plurigreen/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace plurigreen::parallel {

namespace {

int env_threads() {
    const char* s = std::getenv(kThreadsEnv);
    if (!s) return 0;
    try {
        const int n = std::stoi(s);
        return n > 0 ? n : 0;
    } catch (...) {
        return 0;
    }
}

int g_threads = 0;

}  // namespace

void set_num_threads(int n) { g_threads = n > 0 ? n : 0; }

int num_threads() {
    if (g_threads > 0) return g_threads;
    if (const int e = env_threads(); e > 0) return e;
    return omp_get_max_threads();
}

}  // namespace plurigreen::parallel
