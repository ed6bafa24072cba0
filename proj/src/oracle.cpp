#include "verma/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "verma/linalg.hpp"
#include "verma/parallel.hpp"

namespace verma {

namespace {

void check_gen(int i, int rank) {
  if (i < 1 || i > rank - 1)
    throw std::out_of_range("generator index out of range");
}

std::size_t var_count(int rank) {
  return static_cast<std::size_t>(rank * (rank - 1) / 2);
}

void check_alpha(int rank, const GammaExponent& alpha) {
  if (alpha.size() != var_count(rank))
    throw std::invalid_argument("exponent vector length mismatch");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("negative PBW exponent");
}

int alpha_at(int rank, const GammaExponent& alpha, int row, int col) {
  if (!(1 <= col && col < row && row <= rank)) return 0;
  return alpha[pbw_index(rank, row, col)];
}

GammaExponent shifted(int rank, GammaExponent alpha, int r1, int c1, int d1,
                      int r2 = 0, int c2 = 0, int d2 = 0) {
  alpha[pbw_index(rank, r1, c1)] += d1;
  if (r2 != 0) alpha[pbw_index(rank, r2, c2)] += d2;
  return alpha;
}

void enumerate_rec(int rank, const std::vector<VarIndex>& vars, std::size_t pos,
                   RootDegree& remaining, GammaExponent& cur,
                   std::vector<GammaExponent>& out) {
  if (pos == vars.size()) {
    for (int r : remaining)
      if (r != 0) return;
    out.push_back(cur);
    return;
  }
  const VarIndex v = vars[pos];
  int cap = -1;
  for (int r = v.col; r < v.row; ++r) {
    const int avail = remaining[static_cast<std::size_t>(r - 1)];
    if (cap < 0 || avail < cap) cap = avail;
  }
  for (int e = 0; e <= cap; ++e) {
    cur[pos] = e;
    if (e > 0)
      for (int r = v.col; r < v.row; ++r)
        remaining[static_cast<std::size_t>(r - 1)] -= 1;
    enumerate_rec(rank, vars, pos + 1, remaining, cur, out);
  }
  // restore
  const int used = cur[pos];
  for (int r = v.col; r < v.row; ++r)
    remaining[static_cast<std::size_t>(r - 1)] += used;
  cur[pos] = 0;
}

} // namespace

std::size_t pbw_index(int rank, int row, int col) {
  if (!(1 <= col && col < row && row <= rank))
    throw std::out_of_range("PBW variable out of range");
  return static_cast<std::size_t>((row - 1) * (row - 2) / 2 + (col - 1));
}

RootDegree content_of_alpha(int rank, const GammaExponent& alpha) {
  check_alpha(rank, alpha);
  RootDegree k(static_cast<std::size_t>(rank - 1), 0);
  std::size_t pos = 0;
  for (int i = 2; i <= rank; ++i)
    for (int j = 1; j < i; ++j, ++pos)
      for (int r = j; r < i; ++r)
        k[static_cast<std::size_t>(r - 1)] += alpha[pos];
  return k;
}

VermaVector VermaVector::highest_weight(int rank) {
  return basis_vector(rank, GammaExponent(var_count(rank), 0));
}

VermaVector VermaVector::basis_vector(int rank, GammaExponent alpha,
                                      Rational coeff) {
  check_alpha(rank, alpha);
  VermaVector v(rank);
  if (coeff != 0) v.terms_.emplace(std::move(alpha), std::move(coeff));
  return v;
}

void VermaVector::accumulate(const GammaExponent& alpha, const Rational& c) {
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(alpha, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

VermaVector add(const VermaVector& a, const VermaVector& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  VermaVector out = a;
  for (const auto& [alpha, c] : b.terms()) out.accumulate(alpha, c);
  return out;
}

VermaVector scale(const Rational& c, const VermaVector& v) {
  VermaVector out(v.rank());
  if (c == 0) return out;
  for (const auto& [alpha, q] : v.terms()) out.accumulate(alpha, c * q);
  return out;
}

std::vector<GammaExponent> enumerate_basis(int rank, const RootDegree& k) {
  if (k.size() != static_cast<std::size_t>(rank - 1))
    throw std::invalid_argument("degree length mismatch");
  for (int r : k)
    if (r < 0) return {};
  const std::vector<VarIndex> vars = all_vars(rank);
  RootDegree remaining = k;
  GammaExponent cur(var_count(rank), 0);
  std::vector<GammaExponent> out;
  enumerate_rec(rank, vars, 0, remaining, cur, out);
  return out;
}

VermaVector lower(int i, const VermaVector& v) {
  const int n = v.rank();
  check_gen(i, n);
  VermaVector out(n);
  for (const auto& [alpha, c] : v.terms()) {
    out.accumulate(shifted(n, alpha, i + 1, i, +1), c);
    for (int j = 1; j <= i - 1; ++j) {
      const int aij = alpha_at(n, alpha, i, j);
      if (aij == 0) continue;
      out.accumulate(shifted(n, alpha, i + 1, j, +1, i, j, -1), c * aij);
    }
  }
  return out;
}

VermaVector raise(int i, const Weight& lam, const VermaVector& v) {
  const int n = v.rank();
  check_gen(i, n);
  if (lam.rank() != n) throw std::invalid_argument("weight rank mismatch");
  VermaVector out(n);
  for (const auto& [alpha, c] : v.terms()) {
    for (int j = 1; j <= i - 1; ++j) {
      const int a = alpha_at(n, alpha, i + 1, j);
      if (a == 0) continue;
      out.accumulate(shifted(n, alpha, i, j, +1, i + 1, j, -1), c * a);
    }
    for (int j = i + 2; j <= n; ++j) {
      const int a = alpha_at(n, alpha, j, i);
      if (a == 0) continue;
      out.accumulate(shifted(n, alpha, j, i + 1, +1, j, i, -1), -c * a);
    }
    const int adiag = alpha_at(n, alpha, i + 1, i);
    if (adiag != 0) {
      Rational factor = lam.at(i) + 1;
      for (int j = i + 1; j <= n; ++j) factor -= alpha_at(n, alpha, j, i);
      for (int j = i + 2; j <= n; ++j) factor += alpha_at(n, alpha, j, i + 1);
      if (factor != 0)
        out.accumulate(shifted(n, alpha, i + 1, i, -1), c * adiag * factor);
    }
  }
  return out;
}

Rational h_action(int i, const Weight& lam, const GammaExponent& alpha) {
  const int n = lam.rank();
  check_gen(i, n);
  check_alpha(n, alpha);
  Rational v = lam.at(i);
  for (int p = 1; p < i; ++p)
    v += alpha_at(n, alpha, i, p) - alpha_at(n, alpha, i + 1, p);
  for (int j = i + 2; j <= n; ++j)
    v += alpha_at(n, alpha, j, i + 1) - alpha_at(n, alpha, j, i);
  v -= 2 * alpha_at(n, alpha, i + 1, i);
  return v;
}

std::vector<VermaVector> singular_in_degree(const Weight& lam,
                                            const RootDegree& k,
                                            const OracleOptions& opts) {
  const int n = lam.rank();
  const std::vector<GammaExponent> basis = enumerate_basis(n, k);
  if (basis.empty()) return {};
  if (basis.size() > opts.dimension_cap) {
    std::ostringstream os;
    os << "weight-space dimension " << basis.size() << " exceeds cap "
       << opts.dimension_cap;
    throw BudgetExceeded(os.str());
  }

  // Stack the raising maps into one exact matrix over the slice.
  QMatrix rows;
  for (int i = 1; i < n; ++i) {
    if (k[static_cast<std::size_t>(i - 1)] < 1) continue; // image grading is empty
    RootDegree kt = k;
    kt[static_cast<std::size_t>(i - 1)] -= 1;
    const std::vector<GammaExponent> target = enumerate_basis(n, kt);
    std::map<GammaExponent, std::size_t> index;
    for (std::size_t t = 0; t < target.size(); ++t) index.emplace(target[t], t);
    const std::size_t base = rows.size();
    rows.resize(base + target.size(),
                std::vector<Rational>(basis.size(), Rational(0)));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const VermaVector img =
          raise(i, lam, VermaVector::basis_vector(n, basis[c]));
      for (const auto& [alpha, q] : img.terms())
        rows[base + index.at(alpha)][c] = q;
    }
  }
  if (rows.empty()) {
    // No raising constraints: the whole slice is singular (k = 0 only).
    std::vector<VermaVector> out;
    for (const auto& alpha : basis)
      out.push_back(VermaVector::basis_vector(n, alpha));
    return out;
  }

  std::vector<VermaVector> out;
  for (const auto& x : nullspace(rows)) {
    VermaVector v(n);
    for (std::size_t c = 0; c < basis.size(); ++c)
      if (x[c] != 0) v.accumulate(basis[c], x[c]);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<DegreeHit> search_singular(const Weight& lam, int max_total,
                                       const OracleOptions& opts) {
  if (max_total < 1) throw std::invalid_argument("max_total must be >= 1");
  const int n = lam.rank();

  std::vector<RootDegree> degrees;
  RootDegree k(static_cast<std::size_t>(n - 1), 0);
  // All k with 1 <= sum(k) <= max_total, ordered by (total, lex).
  for (int total = 1; total <= max_total; ++total) {
    struct Rec {
      int n_parts;
      std::vector<RootDegree>& out;
      RootDegree& k;
      void operator()(std::size_t pos, int rem) const {
        if (pos + 1 == static_cast<std::size_t>(n_parts)) {
          k[pos] = rem;
          out.push_back(k);
          return;
        }
        for (int e = 0; e <= rem; ++e) {
          k[pos] = e;
          (*this)(pos + 1, rem - e);
        }
      }
    };
    Rec{n - 1, degrees, k}(0, total);
  }
  std::sort(degrees.begin(), degrees.end(),
            [](const RootDegree& a, const RootDegree& b) {
              const int sa = std::accumulate(a.begin(), a.end(), 0);
              const int sb = std::accumulate(b.begin(), b.end(), 0);
              if (sa != sb) return sa < sb;
              return a < b;
            });

  std::vector<std::vector<VermaVector>> found(degrees.size());
  const bool parallel = exec_mode() == ExecMode::OpenMP;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::size_t d = 0; d < degrees.size(); ++d)
    found[d] = singular_in_degree(lam, degrees[d], opts);
  (void)parallel;

  std::vector<DegreeHit> hits;
  for (std::size_t d = 0; d < degrees.size(); ++d)
    if (!found[d].empty()) hits.push_back(DegreeHit{degrees[d], std::move(found[d])});
  return hits;
}

TruncatedSeries tau(const VermaVector& v) {
  const int n = v.rank();
  const std::vector<VarIndex> vars = all_vars(n);
  std::vector<Monomial> terms;
  terms.reserve(v.terms().size());
  for (const auto& [alpha, c] : v.terms()) {
    ExponentMap e;
    for (std::size_t p = 0; p < vars.size(); ++p)
      if (alpha[p] != 0) e.push_back(ExpEntry{vars[p], Rational(alpha[p])});
    terms.push_back(Monomial{c, std::move(e)});
  }
  return TruncatedSeries(n, std::move(terms), Frontier(n));
}

VermaVector tau_inverse(const TruncatedSeries& f) {
  if (!is_polynomial(f))
    throw std::invalid_argument("tau_inverse requires a polynomial series");
  const int n = f.rank();
  VermaVector v(n);
  for (const auto& t : f.terms()) {
    GammaExponent alpha(var_count(n), 0);
    for (const auto& [var, exp] : t.exps)
      alpha[pbw_index(n, var.row, var.col)] = static_cast<int>(to_long(exp));
    v.accumulate(alpha, t.coeff);
  }
  return v;
}

std::string to_text(const VermaVector& v) {
  if (v.is_zero()) return "0";
  const int n = v.rank();
  const std::vector<VarIndex> vars = all_vars(n);
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : v.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (std::size_t p = 0; p < vars.size(); ++p) {
      if (alpha[p] == 0) continue;
      os << "*E[" << vars[p].row << "," << vars[p].col << "]";
      if (alpha[p] != 1) os << "^" << alpha[p];
    }
    os << "*v";
  }
  return os.str();
}

} // namespace verma
