#ifndef VERMA_SERIES_HPP
#define VERMA_SERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "verma/errors.hpp"
#include "verma/rational.hpp"

namespace verma {

// Exact sparse arithmetic for truncated-up formal power series over the
// variables x_{i,j}, 1 <= j < i <= n.  The diagonal variables x_{r+1,r}
// may carry arbitrary rational exponents; the interior variables
// (j <= i-2) form an ordinary polynomial ring, exponents in N.  A series
// may represent an infinite descending tail only up to a per-diagonal
// lower bound, the truncation frontier: every term of the true value
// whose diagonal exponents all lie strictly above the frontier is stored
// with its exact coefficient.

struct VarIndex {
  int row = 0; // i
  int col = 0; // j, with 1 <= j < i <= n

  bool is_diagonal() const { return col + 1 == row; }
  // Generator index r of a diagonal variable x_{r+1,r}.
  int diag_gen() const { return col; }

  friend bool operator==(const VarIndex&, const VarIndex&) = default;
  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

// All variables of rank n in canonical order: (2,1),(3,1),(3,2),(4,1),...
std::vector<VarIndex> all_vars(int rank);

struct ExpEntry {
  VarIndex var;
  Rational exp; // nonzero

  friend bool operator==(const ExpEntry&, const ExpEntry&) = default;
};

// Sorted by var, zero exponents absent.
using ExponentMap = std::vector<ExpEntry>;

Rational exponent_of(const ExponentMap& m, VarIndex v);
ExponentMap mul_exps(const ExponentMap& a, const ExponentMap& b);
// with_exponent(m, v, e): exponent at v replaced by e (erased when e = 0)
ExponentMap with_exponent(const ExponentMap& m, VarIndex v, const Rational& e);
bool exps_all_nonneg_integers(const ExponentMap& m);

// Total order: walk variables in ascending (row, col); exponents (0 when
// absent) compared as rationals; first difference decides.
int cmp_exponent_maps(const ExponentMap& a, const ExponentMap& b);

struct ExpMapHash {
  std::size_t operator()(const ExponentMap& m) const;
};

struct Monomial {
  Rational coeff;   // nonzero
  ExponentMap exps;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// The tuple (lambda_1, ..., lambda_{n-1}) defining the Verma module.
struct Weight {
  std::vector<Rational> lambda;

  int rank() const { return static_cast<int>(lambda.size()) + 1; }
  const Rational& at(int i) const; // 1-based, 1 <= i <= n-1
  bool is_dominant_integral() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

// Eigenvalue tuple (mu(h_1), ..., mu(h_{n-1})) of a weighted element.
using WeightVector = std::vector<Rational>;

// Per-diagonal-variable lower bound; nullopt = -infinity (no truncation).
class Frontier {
public:
  Frontier() = default;
  explicit Frontier(int rank) : bound_(static_cast<std::size_t>(rank - 1)) {}

  int rank() const { return static_cast<int>(bound_.size()) + 1; }
  // 1-based generator index r in 1..n-1 for the variable x_{r+1,r}.
  const std::optional<Rational>& at(int gen) const;
  void set(int gen, std::optional<Rational> b);
  bool all_infinite() const;

  // Least permissive merge: per-variable max of the two bounds.
  static Frontier combine_max(const Frontier& a, const Frontier& b);
  void shift(int gen, const Rational& delta);

  friend bool operator==(const Frontier&, const Frontier&) = default;

private:
  std::vector<std::optional<Rational>> bound_;
};

class TruncatedSeries {
public:
  // Canonicalizes terms (sort, merge, drop zeros); the frontier is taken
  // as given and terms below it are kept, so that externally supplied
  // data round-trips unchanged.  Engine operations clamp their results.
  TruncatedSeries(int rank, std::vector<Monomial> terms, Frontier frontier);

  static TruncatedSeries zero(int rank);
  static TruncatedSeries one(int rank);
  static TruncatedSeries monomial(int rank, Rational coeff, ExponentMap exps);
  static TruncatedSeries variable(int rank, VarIndex v);

  int rank() const { return rank_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  const Frontier& frontier() const { return frontier_; }
  bool exact() const { return frontier_.all_infinite(); }
  bool is_zero() const { return terms_.empty(); }

  // Drops terms strictly below the frontier in some diagonal variable.
  TruncatedSeries clamped() const;
  TruncatedSeries with_frontier(Frontier f) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
  int rank_;
  std::vector<Monomial> terms_; // canonical: ascending cmp_exponent_maps
  Frontier frontier_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& f);
TruncatedSeries scale(const Rational& c, const TruncatedSeries& f);
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);
// Single-monomial product; exact frontier shift.
TruncatedSeries multiply_monomial(const Monomial& m, const TruncatedSeries& f);

// d/dx_v, power rule with rational exponents on diagonal variables.
TruncatedSeries derivative(VarIndex v, const TruncatedSeries& f);

// mu(h_i) = lambda_i + sum_{p<i}(e_{i,p} - e_{i+1,p})
//         + sum_{j>=i+2}(e_{j,i+1} - e_{j,i}) - 2 e_{i+1,i}
WeightVector weight_of(const Monomial& m, const Weight& lam);

bool is_polynomial(const TruncatedSeries& f);

// Compares the terms lying strictly above the per-variable max of the
// two frontiers; terms at or below it carry no contract.
bool agrees_above_frontier(const TruncatedSeries& a, const TruncatedSeries& b);
bool is_zero_above_frontier(const TruncatedSeries& f);

// Simple-root content (k_1,...,k_{n-1}) of a monomial: x_{i,j} contributes
// its exponent to k_j..k_{i-1}.  Defined for nonneg integer exponents.
std::vector<long> content_of(const ExponentMap& m, int rank);

std::string to_text(const TruncatedSeries& f);
std::string to_latex(const TruncatedSeries& f);
std::string to_text(const Monomial& m);

} // namespace verma

#endif
