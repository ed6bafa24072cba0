#include "verma/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace verma {

namespace {
std::atomic<ExecMode> g_mode{
#ifdef _OPENMP
    ExecMode::OpenMP
#else
    ExecMode::Serial
#endif
};
}

ExecMode exec_mode() { return g_mode.load(std::memory_order_relaxed); }

void set_exec_mode(ExecMode m) {
#ifndef _OPENMP
  m = ExecMode::Serial;
#endif
  g_mode.store(m, std::memory_order_relaxed);
}

int worker_count() {
#ifdef _OPENMP
  return exec_mode() == ExecMode::OpenMP ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

ScopedExecMode::ScopedExecMode(ExecMode m) : saved_(exec_mode()) {
  set_exec_mode(m);
}

ScopedExecMode::~ScopedExecMode() { set_exec_mode(saved_); }

} // namespace verma
