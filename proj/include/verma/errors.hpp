#ifndef VERMA_ERRORS_HPP
#define VERMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace verma {

// Thrown when an enumeration would exceed a configured size cap
// (orbit of S_n, oracle weight-space dimension, sweep width).
class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace verma

#endif
