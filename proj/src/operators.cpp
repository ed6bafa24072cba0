#include "verma/operators.hpp"

#include <algorithm>
#include <unordered_map>

#include "verma/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace verma {

namespace {

void check_gen(int i, int rank) {
  if (i < 1 || i > rank - 1)
    throw std::out_of_range("generator index out of range");
}

void check_policy(const TruncationPolicy& pol) {
  if (pol.depth < 1) throw std::invalid_argument("truncation depth must be >= 1");
}

using TermAcc = std::unordered_map<ExponentMap, Rational, ExpMapHash>;

std::vector<Monomial> acc_to_terms(TermAcc&& acc) {
  std::vector<Monomial> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back(Monomial{std::move(c), e});
  return out;
}

// One application of the derivation sum_{j<i} x_{i+1,j} d_{i,j} to a bare
// term list, merged.
std::vector<Monomial> eta_derivation(int i, const std::vector<Monomial>& ts) {
  TermAcc acc;
  acc.reserve(ts.size() * static_cast<std::size_t>(i));
  for (const auto& t : ts) {
    for (int j = 1; j <= i - 1; ++j) {
      const VarIndex down{i, j};
      Rational e = exponent_of(t.exps, down);
      if (e == 0) continue;
      ExponentMap m = with_exponent(t.exps, down, e - 1);
      const VarIndex up{i + 1, j};
      m = with_exponent(m, up, exponent_of(m, up) + 1);
      acc[std::move(m)] += t.coeff * e;
    }
  }
  return acc_to_terms(std::move(acc));
}

// True when the derivation power is nilpotent on the monomial: all row-i
// exponents are nonnegative integers (the interior ones always are; only
// x_{i,i-1} can be fractional or negative).
bool derivation_nilpotent(int i, const Monomial& m) {
  if (i == 1) return true;
  return is_nonneg_integer(exponent_of(m.exps, VarIndex{i, i - 1}));
}

struct EtaPowerChunk {
  TermAcc acc;
  bool truncated = false;
};

// Expands one source monomial of f into acc.  F_target is the exponent
// bound below which contributions are dropped in the nonterminating
// regime (empty optional: never cut).
void expand_monomial(int i, const Rational& a, const Monomial& m,
                     const std::optional<Rational>& f_target,
                     EtaPowerChunk& chunk) {
  const VarIndex diag{i + 1, i};
  const Rational e_m = exponent_of(m.exps, diag);
  const bool terminates = is_nonneg_integer(a) || derivation_nilpotent(i, m);

  std::vector<Monomial> cur{m};
  Rational c(1); // <a>_p / p!
  long p = 0;
  while (true) {
    if (c == 0 || cur.empty()) break;
    Rational out_exp = e_m + a - p;
    if (!terminates && f_target && out_exp <= *f_target) {
      chunk.truncated = true;
      break;
    }
    for (const auto& t : cur)
      chunk.acc[with_exponent(t.exps, diag, out_exp)] += c * t.coeff;
    c *= a - p;
    c /= p + 1;
    ++p;
    if (c != 0) cur = eta_derivation(i, cur);
  }
}

} // namespace

int cartan_entry(int l, int i) {
  if (l == i) return 2;
  if (l == i + 1 || i == l + 1) return -1;
  return 0;
}

std::vector<std::vector<int>> cartan_matrix(int n) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n - 1),
                                  std::vector<int>(static_cast<std::size_t>(n - 1)));
  for (int l = 1; l < n; ++l)
    for (int i = 1; i < n; ++i)
      a[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(i - 1)] =
          cartan_entry(l, i);
  return a;
}

TruncatedSeries apply_eta(int i, const TruncatedSeries& f) {
  const int n = f.rank();
  check_gen(i, n);
  TruncatedSeries res =
      multiply_monomial(Monomial{Rational(1), {ExpEntry{VarIndex{i + 1, i}, Rational(1)}}}, f);
  for (int j = 1; j <= i - 1; ++j) {
    res = add(res, multiply_monomial(
                       Monomial{Rational(1), {ExpEntry{VarIndex{i + 1, j}, Rational(1)}}},
                       derivative(VarIndex{i, j}, f)));
  }
  return res;
}

TruncatedSeries apply_zeta(int i, const Weight& lam, const TruncatedSeries& f) {
  const int n = f.rank();
  check_gen(i, n);
  if (lam.rank() != n) throw std::invalid_argument("weight rank mismatch");
  std::vector<Monomial> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Rational mu = weight_of(t, lam)[static_cast<std::size_t>(i - 1)];
    if (mu == 0) continue;
    out.push_back(Monomial{t.coeff * mu, t.exps});
  }
  return TruncatedSeries(n, std::move(out), f.frontier());
}

TruncatedSeries apply_d(int i, const Weight& lam, const TruncatedSeries& f) {
  const int n = f.rank();
  check_gen(i, n);
  if (lam.rank() != n) throw std::invalid_argument("weight rank mismatch");

  auto xd = [](VarIndex xv, VarIndex dv, const TruncatedSeries& g) {
    return multiply_monomial(Monomial{Rational(1), {ExpEntry{xv, Rational(1)}}},
                             derivative(dv, g));
  };

  const TruncatedSeries dfi = derivative(VarIndex{i + 1, i}, f);
  TruncatedSeries res = scale(lam.at(i), dfi);
  for (int j = i + 1; j <= n; ++j)
    res = sub(res, xd(VarIndex{j, i}, VarIndex{j, i}, dfi));
  for (int j = i + 2; j <= n; ++j)
    res = add(res, xd(VarIndex{j, i + 1}, VarIndex{j, i + 1}, dfi));
  for (int j = 1; j <= i - 1; ++j)
    res = add(res, xd(VarIndex{i, j}, VarIndex{i + 1, j}, f));
  for (int j = i + 2; j <= n; ++j)
    res = sub(res, xd(VarIndex{j, i + 1}, VarIndex{j, i}, f));
  return res;
}

namespace {

// Exponent bound for the nonterminating regime: a - depth + (min diagonal-i
// exponent of f).  Empty when f has no terms.
std::optional<Rational> eta_power_cut(int i, const Rational& a,
                                      const TruncatedSeries& f,
                                      const TruncationPolicy& pol) {
  if (f.terms().empty()) return std::nullopt;
  Rational min_e;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational e = exponent_of(t.exps, VarIndex{i + 1, i});
    if (first || e < min_e) min_e = e;
    first = false;
  }
  return a - pol.depth + min_e;
}

TruncatedSeries assemble_eta_power(int i, const Rational& a,
                                   const TruncatedSeries& f,
                                   const std::optional<Rational>& f_target,
                                   TermAcc&& acc, bool truncated) {
  const int n = f.rank();
  Frontier fr = f.frontier();
  std::optional<Rational> bound;
  if (const auto& phi = f.frontier().at(i)) bound = *phi + a;
  if (truncated && f_target && (!bound || *f_target > *bound)) bound = *f_target;
  fr.set(i, bound);
  return TruncatedSeries(n, acc_to_terms(std::move(acc)), std::move(fr)).clamped();
}

} // namespace

TruncatedSeries apply_eta_power_serial(int i, const Rational& a,
                                       const TruncatedSeries& f,
                                       const TruncationPolicy& pol) {
  check_gen(i, f.rank());
  check_policy(pol);
  const auto f_target = eta_power_cut(i, a, f, pol);
  EtaPowerChunk chunk;
  for (const auto& m : f.terms()) expand_monomial(i, a, m, f_target, chunk);
  return assemble_eta_power(i, a, f, f_target, std::move(chunk.acc), chunk.truncated);
}

TruncatedSeries apply_eta_power(int i, const Rational& a,
                                const TruncatedSeries& f,
                                const TruncationPolicy& pol) {
  check_gen(i, f.rank());
  check_policy(pol);
  const std::size_t nt = f.terms().size();
  if (exec_mode() != ExecMode::OpenMP || nt < 64)
    return apply_eta_power_serial(i, a, f, pol);

  const auto f_target = eta_power_cut(i, a, f, pol);
  const int workers = worker_count();
  std::vector<EtaPowerChunk> chunks(static_cast<std::size_t>(workers));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
#endif
  for (std::size_t t = 0; t < nt; ++t) {
#ifdef _OPENMP
    EtaPowerChunk& chunk = chunks[static_cast<std::size_t>(omp_get_thread_num())];
#else
    EtaPowerChunk& chunk = chunks[0];
#endif
    expand_monomial(i, a, f.terms()[t], f_target, chunk);
  }
  TermAcc acc = std::move(chunks[0].acc);
  bool truncated = chunks[0].truncated;
  for (std::size_t k = 1; k < chunks.size(); ++k) {
    truncated = truncated || chunks[k].truncated;
    for (auto& [e, c] : chunks[k].acc) acc[e] += c;
  }
  return assemble_eta_power(i, a, f, f_target, std::move(acc), truncated);
}

TruncatedSeries apply_raising_composite(int i, const Weight& lam,
                                        const TruncatedSeries& f) {
  const int n = f.rank();
  if (i < 2 || i > n - 1)
    throw std::out_of_range("composite raising index out of range");

  // [d_k, [d_{k+1}, ...]] expanded operationally as compose-and-subtract.
  struct Rec {
    const Weight& lam;
    int n;
    TruncatedSeries operator()(int k, const TruncatedSeries& g) const {
      if (k == n - 1) return apply_d(k, lam, g);
      return sub(apply_d(k, lam, (*this)(k + 1, g)),
                 (*this)(k + 1, apply_d(k, lam, g)));
    }
  };
  return Rec{lam, n}(i, f);
}

TruncatedSeries apply_eta_chain(const std::vector<EtaStep>& steps,
                                const TruncatedSeries& f,
                                const TruncationPolicy& pol) {
  TruncatedSeries res = f;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    res = apply_eta_power(it->gen, it->exponent, res, pol);
  return res;
}

std::vector<TruncatedSeries> check_pde(const Weight& lam,
                                       const TruncatedSeries& z) {
  std::vector<TruncatedSeries> residuals;
  residuals.reserve(static_cast<std::size_t>(z.rank() - 1));
  for (int i = 1; i < z.rank(); ++i) residuals.push_back(apply_d(i, lam, z));
  return residuals;
}

bool pde_residuals_vanish(const Weight& lam, const TruncatedSeries& z) {
  for (const auto& r : check_pde(lam, z)) {
    if (z.exact() ? !r.is_zero() : !is_zero_above_frontier(r)) return false;
  }
  return true;
}

} // namespace verma
