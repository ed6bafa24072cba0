#ifndef VERMA_ORACLE_HPP
#define VERMA_ORACLE_HPP

#include <map>
#include <vector>

#include "verma/series.hpp"

namespace verma {

// Brute-force model of the Verma module over the ordered PBW basis
// E^alpha v, alpha running over exponent vectors of the negative root
// vectors E_{2,1}, E_{3,1}, E_{3,2}, E_{4,1}, ...  Raising and lowering
// act by the closed-form recursions on exponents; singular vectors are
// found as exact kernels of the stacked raising maps on a weight-space
// slice.  Entirely independent of the differential-operator route, which
// it cross-checks.

// Exponents in PBW variable order (same order as all_vars(rank)).
using GammaExponent = std::vector<int>;
// Simple-root content (k_1, ..., k_{n-1}).
using RootDegree = std::vector<int>;

// Position of E_{i,j} in the PBW order.
std::size_t pbw_index(int rank, int row, int col);
RootDegree content_of_alpha(int rank, const GammaExponent& alpha);

class VermaVector {
public:
  explicit VermaVector(int rank) : rank_(rank) {}
  static VermaVector highest_weight(int rank); // v itself, alpha = 0
  static VermaVector basis_vector(int rank, GammaExponent alpha,
                                  Rational coeff = Rational(1));

  int rank() const { return rank_; }
  const std::map<GammaExponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void accumulate(const GammaExponent& alpha, const Rational& c);

  friend bool operator==(const VermaVector&, const VermaVector&) = default;

private:
  int rank_;
  std::map<GammaExponent, Rational> terms_; // no zero coefficients
};

VermaVector add(const VermaVector& a, const VermaVector& b);
VermaVector scale(const Rational& c, const VermaVector& v);

// All alpha with content k, ascending lexicographic order; finite
// (Kostant-partition enumeration).  Empty when k has a negative entry.
std::vector<GammaExponent> enumerate_basis(int rank, const RootDegree& k);

// E_{i+1,i}: alpha -> alpha + e_{i+1,i}
//                    + sum_{j<i} alpha_{i,j} (alpha + e_{i+1,j} - e_{i,j})
VermaVector lower(int i, const VermaVector& v);

// E_{i,i+1}: the three-part action; output content = input content - e_i.
VermaVector raise(int i, const Weight& lam, const VermaVector& v);

// Eigenvalue of h_i on E^alpha v.
Rational h_action(int i, const Weight& lam, const GammaExponent& alpha);

struct OracleOptions {
  std::size_t dimension_cap = 2000; // weight-space size budget
};

// Exact basis of the joint kernel of all raising operators on the weight
// space of degree k.  Throws BudgetExceeded past the dimension cap.
std::vector<VermaVector> singular_in_degree(const Weight& lam,
                                            const RootDegree& k,
                                            const OracleOptions& opts = {});

struct DegreeHit {
  RootDegree degree;
  std::vector<VermaVector> basis;
};

// Sweep over all k != 0 with sum(k) <= max_total; nonzero results only,
// ordered by (total degree, lex).
std::vector<DegreeHit> search_singular(const Weight& lam, int max_total,
                                       const OracleOptions& opts = {});

// Basis correspondence E^alpha v <-> x^alpha, coefficient-preserving.
TruncatedSeries tau(const VermaVector& v);
VermaVector tau_inverse(const TruncatedSeries& f);

std::string to_text(const VermaVector& v);

} // namespace verma

#endif
