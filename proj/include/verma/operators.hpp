#ifndef VERMA_OPERATORS_HPP
#define VERMA_OPERATORS_HPP

#include <vector>

#include "verma/series.hpp"

namespace verma {

// The sl(n) generators realized as differential operators on the series
// space, acting through the basis correspondence with the Verma module:
//
//   eta_i  = x_{i+1,i} + sum_{j<i} x_{i+1,j} d_{i,j}          (lowering)
//   d_i    = (lambda_i - sum_{j>i} x_{j,i} d_{j,i}
//             + sum_{j>=i+2} x_{j,i+1} d_{j,i+1}) d_{i+1,i}
//            + sum_{j<i} x_{i,j} d_{i+1,j}
//            - sum_{j>=i+2} x_{j,i+1} d_{j,i}                 (raising)
//   zeta_i = diagonal; multiplies a monomial by its i-th weight
//
// plus rational powers eta_i^a through the expansion
//   eta_i^a = sum_p (<a>_p / p!) x_{i+1,i}^{a-p} (sum_j x_{i+1,j} d_{i,j})^p
// with <a>_p the falling factorial.  Nonterminating expansions are cut at
// a configured depth and tracked by the series frontier.

struct TruncationPolicy {
  // Number of expansion indices retained when a power expansion does not
  // terminate on its own.
  int depth = 24;
};

int cartan_entry(int l, int i);
std::vector<std::vector<int>> cartan_matrix(int n);

TruncatedSeries apply_eta(int i, const TruncatedSeries& f);
TruncatedSeries apply_d(int i, const Weight& lam, const TruncatedSeries& f);
TruncatedSeries apply_zeta(int i, const Weight& lam, const TruncatedSeries& f);

TruncatedSeries apply_eta_power(int i, const Rational& a,
                                const TruncatedSeries& f,
                                const TruncationPolicy& pol = {});
// Reference kernel; apply_eta_power dispatches on the execution mode.
TruncatedSeries apply_eta_power_serial(int i, const Rational& a,
                                       const TruncatedSeries& f,
                                       const TruncationPolicy& pol = {});

// Nested-commutator raising operator [d_i,[d_{i+1},...[d_{n-2},d_{n-1}]...]]
// for 2 <= i <= n-1; i = n-1 is d_{n-1} itself.
TruncatedSeries apply_raising_composite(int i, const Weight& lam,
                                        const TruncatedSeries& f);

struct EtaStep {
  int gen;
  Rational exponent;
};

// Right-to-left composition: the last step is applied first.
TruncatedSeries apply_eta_chain(const std::vector<EtaStep>& steps,
                                const TruncatedSeries& f,
                                const TruncationPolicy& pol = {});

// Residuals d_i(z), i = 1..n-1; z is singular iff all vanish.
std::vector<TruncatedSeries> check_pde(const Weight& lam,
                                       const TruncatedSeries& z);
// Exact zero when z is exact, zero above the frontier otherwise.
bool pde_residuals_vanish(const Weight& lam, const TruncatedSeries& z);

} // namespace verma

#endif
