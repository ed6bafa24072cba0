#ifndef VERMA_PARALLEL_HPP
#define VERMA_PARALLEL_HPP

#include <cstddef>

namespace verma {

// Process-wide execution mode for the OpenMP kernels (orbit evaluation,
// oracle degree sweeps, elimination row updates, power-expansion loops).
// Serial keeps the reference code paths; results are identical either way
// since all reductions are exact and assembled in a fixed order.
enum class ExecMode { Serial, OpenMP };

ExecMode exec_mode();
void set_exec_mode(ExecMode m);
int worker_count();

// RAII guard for tests and benchmarks.
class ScopedExecMode {
public:
  explicit ScopedExecMode(ExecMode m);
  ~ScopedExecMode();

private:
  ExecMode saved_;
};

} // namespace verma

#endif
