#ifndef VERMA_WEYL_HPP
#define VERMA_WEYL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "verma/operators.hpp"
#include "verma/series.hpp"

namespace verma {

// The symmetric-group action on weighted series: a generator acts on a
// weight component of weight mu by eta_i^{mu(h_i)+1}, and the orbit of
// the constant 1 solves the singular-vector system.  Polynomial orbit
// elements are the singular vectors of the Verma module.

using PermWord = std::vector<int>; // generator indices in 1..n-1
using Permutation = std::vector<int>; // one-line notation, images of 1..n

Permutation identity_perm(int n);
Permutation perm_of_word(const PermWord& w, int n);
int inversion_count(const Permutation& p);
bool is_reduced(const PermWord& w, int n);
// Lexicographically smallest reduced word; length = inversion count.
PermWord canonical_word(const Permutation& p);
std::vector<Permutation> all_permutations(int n);

// Partition of f into maximal equal-weight groups of terms, ordered by
// weight vector; concatenation reconstitutes f.
std::vector<std::pair<WeightVector, TruncatedSeries>> decompose_weighted(
    const TruncatedSeries& f, const Weight& lam);

TruncatedSeries apply_sigma(int i, const Weight& lam, const TruncatedSeries& f,
                            const TruncationPolicy& pol = {});
// Right-to-left: the last letter acts first.
TruncatedSeries apply_word(const PermWord& w, const Weight& lam,
                           const TruncatedSeries& f,
                           const TruncationPolicy& pol = {});
TruncatedSeries evaluate_word(const PermWord& w, const Weight& lam,
                              const TruncationPolicy& pol = {});

struct SingularCertificate {
  PermWord word;
  TruncatedSeries series;
  WeightVector weight;
  bool polynomial = false;
  bool pde_zero = false;
};

inline constexpr std::size_t kOrbitBudget = 720;

// One certificate per element of S_n, sorted by canonical word.
std::vector<SingularCertificate> orbit(const Weight& lam,
                                       const TruncationPolicy& pol = {},
                                       std::size_t budget = kOrbitBudget);

// The polynomial subset of the orbit, normalized so the lexicographically
// smallest monomial has coefficient 1, deduplicated up to scalar.
std::vector<SingularCertificate> singular_vectors(
    const Weight& lam, const TruncationPolicy& pol = {},
    std::size_t budget = kOrbitBudget);

// phi_{i,j} = sigma_i ... sigma_{j-1} sigma_j sigma_{j-1} ... sigma_i (1).
std::pair<TruncatedSeries, bool> mff_vector(int i, int j, const Weight& lam,
                                            const TruncationPolicy& pol = {});

struct IrreducibilityWitness {
  int i = 0;
  int j = 0;
  Rational value;
};

struct IrreducibilityVerdict {
  bool irreducible = true;
  std::vector<IrreducibilityWitness> witnesses;
};

// Irreducible iff j + lambda_i + ... + lambda_{i+j-1} is never a positive
// integer over 1 <= i <= n-1, 1 <= j <= n-i.
IrreducibilityVerdict is_irreducible(const Weight& lam);

} // namespace verma

#endif
