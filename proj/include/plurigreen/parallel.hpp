#pragma once

namespace plurigreen::parallel {

/// Environment variable overriding the default worker count.
inline constexpr const char* kThreadsEnv = "PLURIGREEN_THREADS";

/// Worker count for parallel kernels; 0 restores the default
/// (PLURIGREEN_THREADS if set, otherwise the OpenMP default).
void set_num_threads(int n);
int num_threads();

}  // namespace plurigreen::parallel
