#include "verma/weyl.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "verma/parallel.hpp"

namespace verma {

namespace {

void check_gen(int i, int rank) {
  if (i < 1 || i > rank - 1)
    throw std::out_of_range("generator index out of range");
}

void check_perm(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : p) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x - 1)])
      throw std::invalid_argument("not a permutation");
    seen[static_cast<std::size_t>(x - 1)] = true;
  }
}

// Left multiplication by the transposition (i, i+1): swap the two values.
void swap_values(Permutation& p, int i) {
  for (auto& x : p) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
}

std::size_t factorial_capped(int n, std::size_t cap) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) {
    if (f > cap / static_cast<std::size_t>(k)) return cap + 1;
    f *= static_cast<std::size_t>(k);
  }
  return f;
}

} // namespace

Permutation identity_perm(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) p[static_cast<std::size_t>(k - 1)] = k;
  return p;
}

Permutation perm_of_word(const PermWord& w, int n) {
  Permutation p = identity_perm(n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    check_gen(*it, n);
    swap_values(p, *it);
  }
  return p;
}

int inversion_count(const Permutation& p) {
  check_perm(p);
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inv;
  return inv;
}

bool is_reduced(const PermWord& w, int n) {
  return static_cast<int>(w.size()) == inversion_count(perm_of_word(w, n));
}

PermWord canonical_word(const Permutation& perm) {
  check_perm(perm);
  const int n = static_cast<int>(perm.size());
  Permutation p = perm;
  std::vector<int> pos(static_cast<std::size_t>(n) + 1);
  PermWord word;
  while (true) {
    for (std::size_t q = 0; q < p.size(); ++q)
      pos[static_cast<std::size_t>(p[q])] = static_cast<int>(q);
    // Smallest left descent: value i occurring after i+1.
    int i = 0;
    for (int v = 1; v < n; ++v) {
      if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(v + 1)]) {
        i = v;
        break;
      }
    }
    if (i == 0) break;
    word.push_back(i);
    swap_values(p, i);
  }
  return word;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p = identity_perm(n);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::pair<WeightVector, TruncatedSeries>> decompose_weighted(
    const TruncatedSeries& f, const Weight& lam) {
  if (lam.rank() != f.rank()) throw std::invalid_argument("weight rank mismatch");
  std::map<WeightVector, std::vector<Monomial>> groups;
  for (const auto& t : f.terms()) groups[weight_of(t, lam)].push_back(t);
  std::vector<std::pair<WeightVector, TruncatedSeries>> out;
  out.reserve(groups.size());
  for (auto& [mu, terms] : groups)
    out.emplace_back(mu, TruncatedSeries(f.rank(), std::move(terms), f.frontier()));
  return out;
}

TruncatedSeries apply_sigma(int i, const Weight& lam, const TruncatedSeries& f,
                            const TruncationPolicy& pol) {
  check_gen(i, f.rank());
  TruncatedSeries res = TruncatedSeries::zero(f.rank());
  for (const auto& [mu, part] : decompose_weighted(f, lam)) {
    const Rational a = mu[static_cast<std::size_t>(i - 1)] + 1;
    res = add(res, apply_eta_power(i, a, part, pol));
  }
  return res;
}

TruncatedSeries apply_word(const PermWord& w, const Weight& lam,
                           const TruncatedSeries& f,
                           const TruncationPolicy& pol) {
  TruncatedSeries res = f;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    res = apply_sigma(*it, lam, res, pol);
  return res;
}

TruncatedSeries evaluate_word(const PermWord& w, const Weight& lam,
                              const TruncationPolicy& pol) {
  return apply_word(w, lam, TruncatedSeries::one(lam.rank()), pol);
}

namespace {

SingularCertificate make_certificate(PermWord word, const Weight& lam,
                                     const TruncationPolicy& pol) {
  TruncatedSeries s = evaluate_word(word, lam, pol);
  WeightVector mu = s.is_zero() ? weight_of(Monomial{Rational(1), {}}, lam)
                                : weight_of(s.terms().front(), lam);
  const bool poly = is_polynomial(s);
  const bool pde0 = pde_residuals_vanish(lam, s);
  return SingularCertificate{std::move(word), std::move(s), std::move(mu), poly,
                             pde0};
}

} // namespace

std::vector<SingularCertificate> orbit(const Weight& lam,
                                       const TruncationPolicy& pol,
                                       std::size_t budget) {
  const int n = lam.rank();
  if (factorial_capped(n, budget) > budget) {
    std::ostringstream os;
    os << "orbit of S_" << n << " exceeds enumeration budget " << budget;
    throw BudgetExceeded(os.str());
  }

  std::vector<PermWord> words;
  for (const auto& p : all_permutations(n)) words.push_back(canonical_word(p));
  std::sort(words.begin(), words.end());

  std::vector<std::optional<SingularCertificate>> certs(words.size());
  const bool parallel = exec_mode() == ExecMode::OpenMP && words.size() > 2;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::size_t w = 0; w < words.size(); ++w)
    certs[w] = make_certificate(words[w], lam, pol);
  (void)parallel;

  std::vector<SingularCertificate> out;
  out.reserve(certs.size());
  for (auto& c : certs) out.push_back(std::move(*c));
  return out;
}

std::vector<SingularCertificate> singular_vectors(const Weight& lam,
                                                  const TruncationPolicy& pol,
                                                  std::size_t budget) {
  std::vector<SingularCertificate> out;
  for (auto& cert : orbit(lam, pol, budget)) {
    if (!cert.polynomial || cert.series.is_zero()) continue;
    // Scalar-normalize on the lexicographically smallest monomial.
    const Rational lead = cert.series.terms().front().coeff;
    cert.series = scale(1 / lead, cert.series);
    bool duplicate = false;
    for (const auto& prev : out)
      if (prev.series == cert.series) {
        duplicate = true;
        break;
      }
    if (!duplicate) out.push_back(std::move(cert));
  }
  return out;
}

std::pair<TruncatedSeries, bool> mff_vector(int i, int j, const Weight& lam,
                                            const TruncationPolicy& pol) {
  const int n = lam.rank();
  check_gen(i, n);
  check_gen(j, n);
  if (i > j) throw std::out_of_range("mff indices require i <= j");
  PermWord w;
  for (int k = i; k <= j; ++k) w.push_back(k);
  for (int k = j - 1; k >= i; --k) w.push_back(k);
  TruncatedSeries s = evaluate_word(w, lam, pol);
  const bool poly = is_polynomial(s);
  return {std::move(s), poly};
}

IrreducibilityVerdict is_irreducible(const Weight& lam) {
  const int n = lam.rank();
  IrreducibilityVerdict verdict;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - i; ++j) {
      Rational q(j);
      for (int p = 0; p < j; ++p) q += lam.at(i + p);
      if (is_integer(q) && sgn(q) > 0) {
        verdict.irreducible = false;
        verdict.witnesses.push_back(IrreducibilityWitness{i, j, q});
      }
    }
  }
  return verdict;
}

} // namespace verma
