#ifndef VERMA_CROSSCHECK_HPP
#define VERMA_CROSSCHECK_HPP

#include <string>
#include <vector>

#include "verma/oracle.hpp"
#include "verma/weyl.hpp"

namespace verma {

// Degree-by-degree comparison of the two independent routes: polynomial
// orbit vectors mapped into the module versus exact kernels of the
// raising maps.  Spans are compared up to scalar via canonical echelon
// forms.

enum class MatchStatus { Match, Missing, Extra, Mismatch };

struct DegreeComparison {
  RootDegree degree;
  std::size_t oracle_dim = 0;
  std::size_t weyl_count = 0;
  MatchStatus status = MatchStatus::Match;
};

struct CrossCheckReport {
  std::vector<DegreeComparison> rows; // degrees where either side is nonzero
  std::vector<DegreeHit> oracle_hits; // the kernel bases found by the sweep
  bool full_match = true;
};

CrossCheckReport cross_check(const Weight& lam, int max_total,
                             const TruncationPolicy& pol = {},
                             const OracleOptions& opts = {});

std::string to_text(const CrossCheckReport& r);
const char* to_cstring(MatchStatus s);

} // namespace verma

#endif
