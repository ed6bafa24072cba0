#include "verma/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "verma/parallel.hpp"

namespace verma {

namespace {

using ZMatrix = std::vector<std::vector<mpz_class>>;

std::size_t cols_of(const QMatrix& a) {
  std::size_t n = 0;
  for (const auto& row : a) {
    if (n == 0) n = row.size();
    if (row.size() != n) throw std::invalid_argument("ragged matrix");
  }
  return n;
}

ZMatrix clear_denominators(const QMatrix& a, std::size_t n) {
  ZMatrix z;
  z.reserve(a.size());
  for (const auto& row : a) {
    mpz_class l(1);
    for (const auto& q : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> zr(n);
    for (std::size_t j = 0; j < n; ++j)
      zr[j] = row[j].get_num() * (l / row[j].get_den());
    z.push_back(std::move(zr));
  }
  return z;
}

// Forward Bareiss elimination in place; returns the pivot columns.  The
// row-update loop is the data-parallel kernel.
std::vector<std::size_t> bareiss_forward(ZMatrix& m, std::size_t n,
                                         bool parallel) {
  std::vector<std::size_t> pivots;
  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);

    const std::size_t rows_below = m.size() - r - 1;
    const bool go_parallel = parallel && rows_below * (n - c) >= 2048;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (go_parallel)
#endif
    for (std::size_t q = r + 1; q < m.size(); ++q) {
      mpz_class t;
      for (std::size_t d = c + 1; d < n; ++d) {
        t = m[r][c] * m[q][d] - m[q][c] * m[r][d];
        mpz_divexact(m[q][d].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[q][c] = 0;
    }
    (void)go_parallel;
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void normalize_primitive(std::vector<Rational>& v) {
  mpz_class l(1);
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  mpz_class g(0);
  std::vector<mpz_class> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    w[j] = v[j].get_num() * (l / v[j].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
  }
  if (g == 0) return;
  int lead = 0;
  for (const auto& x : w) {
    if (x != 0) {
      lead = sgn(x);
      break;
    }
  }
  if (lead < 0) g = -g;
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = Rational(w[j] / g);
}

std::vector<std::vector<Rational>> nullspace_impl(const QMatrix& a,
                                                  bool parallel) {
  const std::size_t n = cols_of(a);
  if (n == 0) return {};
  ZMatrix m = clear_denominators(a, n);
  const std::vector<std::size_t> pivots = bareiss_forward(m, n, parallel);

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> x(n, Rational(0));
    x[fc] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      if (pc > fc) continue; // echelon: row k only involves columns >= pc
      Rational s(0);
      for (std::size_t d = pc + 1; d <= fc; ++d)
        if (x[d] != 0) s += Rational(m[k][d]) * x[d];
      x[pc] = -s / Rational(m[k][pc]);
    }
    normalize_primitive(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

} // namespace

std::vector<std::vector<Rational>> nullspace_serial(const QMatrix& a) {
  return nullspace_impl(a, false);
}

std::vector<std::vector<Rational>> nullspace_parallel(const QMatrix& a) {
  return nullspace_impl(a, true);
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& a) {
  return nullspace_impl(a, exec_mode() == ExecMode::OpenMP);
}

QMatrix rref(QMatrix a) {
  if (a.empty()) return a;
  const std::size_t n = cols_of(a);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rational inv = a[r][c];
    for (std::size_t d = c; d < n; ++d) a[r][d] /= inv;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (q == r || a[q][c] == 0) continue;
      const Rational f = a[q][c];
      for (std::size_t d = c; d < n; ++d) a[q][d] -= f * a[r][d];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

} // namespace verma
