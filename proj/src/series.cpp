#include "verma/series.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace verma {

namespace {

void check_var(VarIndex v, int rank) {
  if (!(1 <= v.col && v.col < v.row && v.row <= rank))
    throw std::invalid_argument("variable index out of range for rank");
}

void check_same_rank(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch between series operands");
}

bool below_frontier(const ExponentMap& exps, const Frontier& fr) {
  for (int g = 1; g < fr.rank(); ++g) {
    const auto& b = fr.at(g);
    if (b && exponent_of(exps, VarIndex{g + 1, g}) < *b) return true;
  }
  return false;
}

bool strictly_above_frontier(const ExponentMap& exps, const Frontier& fr) {
  for (int g = 1; g < fr.rank(); ++g) {
    const auto& b = fr.at(g);
    if (b && !(exponent_of(exps, VarIndex{g + 1, g}) > *b)) return false;
  }
  return true;
}

} // namespace

std::vector<VarIndex> all_vars(int rank) {
  std::vector<VarIndex> vs;
  for (int i = 2; i <= rank; ++i)
    for (int j = 1; j < i; ++j) vs.push_back(VarIndex{i, j});
  return vs;
}

Rational exponent_of(const ExponentMap& m, VarIndex v) {
  auto it = std::lower_bound(
      m.begin(), m.end(), v,
      [](const ExpEntry& e, VarIndex w) { return e.var < w; });
  if (it != m.end() && it->var == v) return it->exp;
  return Rational(0);
}

ExponentMap mul_exps(const ExponentMap& a, const ExponentMap& b) {
  ExponentMap out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].var < b[j].var)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].var < a[i].var) {
      out.push_back(b[j++]);
    } else {
      Rational e = a[i].exp + b[j].exp;
      if (e != 0) out.push_back(ExpEntry{a[i].var, std::move(e)});
      ++i, ++j;
    }
  }
  return out;
}

ExponentMap with_exponent(const ExponentMap& m, VarIndex v, const Rational& e) {
  ExponentMap out;
  out.reserve(m.size() + 1);
  bool placed = false;
  for (const auto& entry : m) {
    if (entry.var < v) {
      out.push_back(entry);
    } else {
      if (!placed) {
        if (e != 0) out.push_back(ExpEntry{v, e});
        placed = true;
      }
      if (entry.var != v) out.push_back(entry);
    }
  }
  if (!placed && e != 0) out.push_back(ExpEntry{v, e});
  return out;
}

bool exps_all_nonneg_integers(const ExponentMap& m) {
  for (const auto& [var, exp] : m)
    if (!is_nonneg_integer(exp)) return false;
  return true;
}

int cmp_exponent_maps(const ExponentMap& a, const ExponentMap& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (i < a.size() && j < b.size() && a[i].var == b[j].var) {
      const int c = cmp(a[i].exp, b[j].exp);
      if (c != 0) return c;
      ++i, ++j;
      continue;
    }
    // One side has a nonzero exponent at a variable the other lacks.
    const bool a_first =
        j == b.size() || (i < a.size() && a[i].var < b[j].var);
    if (a_first) {
      const int c = sgn(a[i].exp);
      if (c != 0) return c;
      ++i;
    } else {
      const int c = -sgn(b[j].exp);
      if (c != 0) return c;
      ++j;
    }
  }
  return 0;
}

std::size_t ExpMapHash::operator()(const ExponentMap& m) const {
  std::size_t h = 0x243f6a8885a308d3ULL;
  for (const auto& [var, exp] : m) {
    std::size_t k = static_cast<std::size_t>(var.row * 37 + var.col);
    k = k * 0xff51afd7ed558ccdULL + hash_rational(exp);
    h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

const Rational& Weight::at(int i) const {
  if (i < 1 || i > static_cast<int>(lambda.size()))
    throw std::out_of_range("weight component index out of range");
  return lambda[static_cast<std::size_t>(i - 1)];
}

bool Weight::is_dominant_integral() const {
  for (const auto& l : lambda)
    if (!is_nonneg_integer(l)) return false;
  return true;
}

const std::optional<Rational>& Frontier::at(int gen) const {
  if (gen < 1 || gen > static_cast<int>(bound_.size()))
    throw std::out_of_range("frontier generator index out of range");
  return bound_[static_cast<std::size_t>(gen - 1)];
}

void Frontier::set(int gen, std::optional<Rational> b) {
  if (gen < 1 || gen > static_cast<int>(bound_.size()))
    throw std::out_of_range("frontier generator index out of range");
  bound_[static_cast<std::size_t>(gen - 1)] = std::move(b);
}

bool Frontier::all_infinite() const {
  for (const auto& b : bound_)
    if (b) return false;
  return true;
}

Frontier Frontier::combine_max(const Frontier& a, const Frontier& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("rank mismatch between frontiers");
  Frontier out(a.rank());
  for (int g = 1; g < a.rank(); ++g) {
    const auto& x = a.at(g);
    const auto& y = b.at(g);
    if (x && y)
      out.set(g, std::max(*x, *y));
    else if (x)
      out.set(g, *x);
    else if (y)
      out.set(g, *y);
  }
  return out;
}

void Frontier::shift(int gen, const Rational& delta) {
  const auto& cur = at(gen);
  if (cur) set(gen, *cur + delta);
}

TruncatedSeries::TruncatedSeries(int rank, std::vector<Monomial> terms,
                                 Frontier frontier)
    : rank_(rank), terms_(std::move(terms)), frontier_(std::move(frontier)) {
  if (rank_ < 2) throw std::invalid_argument("rank must be at least 2");
  if (frontier_.rank() != rank_)
    throw std::invalid_argument("frontier rank mismatch");
  for (const auto& t : terms_)
    for (const auto& e : t.exps) check_var(e.var, rank_);
  std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
    return cmp_exponent_maps(a.exps, b.exps) < 0;
  });
  std::vector<Monomial> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && cmp_exponent_maps(merged.back().exps, t.exps) == 0)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
    if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  }
  terms_ = std::move(merged);
}

TruncatedSeries TruncatedSeries::zero(int rank) {
  return TruncatedSeries(rank, {}, Frontier(rank));
}

TruncatedSeries TruncatedSeries::one(int rank) {
  return monomial(rank, Rational(1), {});
}

TruncatedSeries TruncatedSeries::monomial(int rank, Rational coeff,
                                          ExponentMap exps) {
  std::vector<Monomial> ts;
  if (coeff != 0) ts.push_back(Monomial{std::move(coeff), std::move(exps)});
  return TruncatedSeries(rank, std::move(ts), Frontier(rank));
}

TruncatedSeries TruncatedSeries::variable(int rank, VarIndex v) {
  check_var(v, rank);
  return monomial(rank, Rational(1), ExponentMap{ExpEntry{v, Rational(1)}});
}

TruncatedSeries TruncatedSeries::clamped() const {
  if (frontier_.all_infinite()) return *this;
  std::vector<Monomial> kept;
  kept.reserve(terms_.size());
  for (const auto& t : terms_)
    if (!below_frontier(t.exps, frontier_)) kept.push_back(t);
  return TruncatedSeries(rank_, std::move(kept), frontier_);
}

TruncatedSeries TruncatedSeries::with_frontier(Frontier f) const {
  return TruncatedSeries(rank_, terms_, std::move(f));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_rank(a, b);
  Frontier fr = Frontier::combine_max(a.frontier(), b.frontier());
  std::vector<Monomial> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() || j < tb.size()) {
    int c;
    if (i == ta.size())
      c = 1;
    else if (j == tb.size())
      c = -1;
    else
      c = cmp_exponent_maps(ta[i].exps, tb[j].exps);
    if (c < 0) {
      out.push_back(ta[i++]);
    } else if (c > 0) {
      out.push_back(tb[j++]);
    } else {
      Rational s = ta[i].coeff + tb[j].coeff;
      if (s != 0) out.push_back(Monomial{std::move(s), ta[i].exps});
      ++i, ++j;
    }
  }
  return TruncatedSeries(a.rank(), std::move(out), std::move(fr)).clamped();
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, negate(b));
}

TruncatedSeries negate(const TruncatedSeries& f) {
  std::vector<Monomial> out = f.terms();
  for (auto& t : out) t.coeff = -t.coeff;
  return TruncatedSeries(f.rank(), std::move(out), f.frontier());
}

TruncatedSeries scale(const Rational& c, const TruncatedSeries& f) {
  if (c == 0) return TruncatedSeries::zero(f.rank());
  std::vector<Monomial> out = f.terms();
  for (auto& t : out) t.coeff *= c;
  return TruncatedSeries(f.rank(), std::move(out), f.frontier());
}

TruncatedSeries multiply_monomial(const Monomial& m, const TruncatedSeries& f) {
  if (m.coeff == 0) return TruncatedSeries::zero(f.rank());
  Frontier fr = f.frontier();
  for (const auto& [var, exp] : m.exps) {
    check_var(var, f.rank());
    if (var.is_diagonal()) fr.shift(var.diag_gen(), exp);
  }
  std::vector<Monomial> out;
  out.reserve(f.terms().size());
  // Adding a fixed exponent vector preserves the term order.
  for (const auto& t : f.terms())
    out.push_back(Monomial{t.coeff * m.coeff, mul_exps(t.exps, m.exps)});
  return TruncatedSeries(f.rank(), std::move(out), std::move(fr));
}

namespace {

// Max stored diagonal-g exponent, merged with the frontier bound; used as
// the per-variable ceiling of the unseen tail when shifting frontiers
// through a product.
std::optional<Rational> diag_ceiling(const TruncatedSeries& f, int gen) {
  std::optional<Rational> m = f.frontier().at(gen);
  const VarIndex v{gen + 1, gen};
  for (const auto& t : f.terms()) {
    Rational e = exponent_of(t.exps, v);
    if (!m || e > *m) m = e;
  }
  return m;
}

} // namespace

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_rank(a, b);
  if (a.terms().size() == 1 && a.frontier().all_infinite())
    return multiply_monomial(a.terms()[0], b);
  if (b.terms().size() == 1 && b.frontier().all_infinite())
    return multiply_monomial(b.terms()[0], a);
  if ((a.is_zero() && a.exact()) || (b.is_zero() && b.exact()))
    return TruncatedSeries::zero(a.rank());

  Frontier fr(a.rank());
  for (int g = 1; g < a.rank(); ++g) {
    std::optional<Rational> bound;
    const auto& fa = a.frontier().at(g);
    const auto& fb = b.frontier().at(g);
    if (fa) {
      auto cb = diag_ceiling(b, g);
      if (!cb) cb = Rational(0); // b has no terms touching g beyond exponent 0
      Rational c = *fa + *cb;
      if (!bound || c > *bound) bound = c;
    }
    if (fb) {
      auto ca = diag_ceiling(a, g);
      if (!ca) ca = Rational(0);
      Rational c = *fb + *ca;
      if (!bound || c > *bound) bound = c;
    }
    if (bound) fr.set(g, *bound);
  }

  std::unordered_map<ExponentMap, Rational, ExpMapHash> acc;
  acc.reserve(a.terms().size() * b.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      acc[mul_exps(ta.exps, tb.exps)] += ta.coeff * tb.coeff;
  std::vector<Monomial> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back(Monomial{std::move(c), e});
  return TruncatedSeries(a.rank(), std::move(out), std::move(fr)).clamped();
}

TruncatedSeries derivative(VarIndex v, const TruncatedSeries& f) {
  check_var(v, f.rank());
  Frontier fr = f.frontier();
  if (v.is_diagonal()) fr.shift(v.diag_gen(), Rational(-1));
  std::vector<Monomial> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Rational e = exponent_of(t.exps, v);
    if (e == 0) continue;
    out.push_back(Monomial{t.coeff * e, with_exponent(t.exps, v, e - 1)});
  }
  // The exponent shift is uniform over surviving terms: order preserved.
  return TruncatedSeries(f.rank(), std::move(out), std::move(fr));
}

WeightVector weight_of(const Monomial& m, const Weight& lam) {
  const int n = lam.rank();
  WeightVector mu(static_cast<std::size_t>(n - 1), Rational(0));
  for (int i = 1; i < n; ++i) {
    Rational v = lam.at(i);
    for (int p = 1; p < i; ++p)
      v += exponent_of(m.exps, VarIndex{i, p}) -
           exponent_of(m.exps, VarIndex{i + 1, p});
    for (int j = i + 2; j <= n; ++j)
      v += exponent_of(m.exps, VarIndex{j, i + 1}) -
           exponent_of(m.exps, VarIndex{j, i});
    v -= 2 * exponent_of(m.exps, VarIndex{i + 1, i});
    mu[static_cast<std::size_t>(i - 1)] = std::move(v);
  }
  return mu;
}

bool is_polynomial(const TruncatedSeries& f) {
  if (!f.exact()) return false;
  for (const auto& t : f.terms())
    if (!exps_all_nonneg_integers(t.exps)) return false;
  return true;
}

bool agrees_above_frontier(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank() != b.rank()) return false;
  const Frontier fr = Frontier::combine_max(a.frontier(), b.frontier());
  std::vector<const Monomial*> fa, fb;
  for (const auto& t : a.terms())
    if (strictly_above_frontier(t.exps, fr)) fa.push_back(&t);
  for (const auto& t : b.terms())
    if (strictly_above_frontier(t.exps, fr)) fb.push_back(&t);
  if (fa.size() != fb.size()) return false;
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (!(*fa[i] == *fb[i])) return false;
  return true;
}

bool is_zero_above_frontier(const TruncatedSeries& f) {
  for (const auto& t : f.terms())
    if (strictly_above_frontier(t.exps, f.frontier())) return false;
  return true;
}

std::vector<long> content_of(const ExponentMap& m, int rank) {
  std::vector<long> k(static_cast<std::size_t>(rank - 1), 0);
  for (const auto& [var, exp] : m) {
    if (!is_nonneg_integer(exp))
      throw std::invalid_argument("content undefined for fractional exponents");
    const long e = to_long(exp);
    for (int r = var.col; r < var.row; ++r)
      k[static_cast<std::size_t>(r - 1)] += e;
  }
  return k;
}

namespace {

std::string var_text(VarIndex v) {
  return "x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
}

std::string exp_text(const Rational& e) {
  const std::string s = to_string(e);
  if (is_nonneg_integer(e)) return "^" + s;
  return "^(" + s + ")";
}

} // namespace

std::string to_text(const Monomial& m) {
  std::ostringstream os;
  os << to_string(m.coeff);
  for (const auto& [var, exp] : m.exps) {
    os << "*" << var_text(var);
    if (exp != 1) os << exp_text(exp);
  }
  return os.str();
}

std::string to_text(const TruncatedSeries& f) {
  std::ostringstream os;
  if (f.terms().empty()) {
    os << "0";
  } else {
    bool first = true;
    for (const auto& t : f.terms()) {
      if (!first) os << " + ";
      os << to_text(t);
      first = false;
    }
  }
  if (!f.exact()) {
    os << "  {frontier:";
    for (int g = 1; g < f.rank(); ++g) {
      const auto& b = f.frontier().at(g);
      os << " x[" << g + 1 << "," << g << "]"
         << (b ? ">" + to_string(*b) : std::string(">-inf"));
    }
    os << "}";
  }
  return os.str();
}

std::string to_latex(const TruncatedSeries& f) {
  if (f.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    c = abs(c);
    const bool unit = (c == 1) && !t.exps.empty();
    if (!unit) {
      if (is_integer(c))
        os << c.get_num().get_str();
      else
        os << "\\frac{" << c.get_num().get_str() << "}{" << c.get_den().get_str()
           << "}";
    }
    for (const auto& [var, exp] : t.exps) {
      os << "x_{" << var.row << "," << var.col << "}";
      if (exp != 1) os << "^{" << to_string(exp) << "}";
    }
  }
  return os.str();
}

} // namespace verma
