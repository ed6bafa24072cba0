#include "verma/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "verma/parallel.hpp"
#include "verma/weyl.hpp"

namespace verma {

RandomSource::RandomSource(std::uint64_t seed) : state_(seed ? seed : 1) {}

std::uint64_t RandomSource::next() {
  // splitmix64; stable across platforms.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long RandomSource::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(next() % span);
}

bool RandomSource::chance(int percent) { return uniform(1, 100) <= percent; }

Rational RandomSource::rational(long num_lo, long num_hi, long den_hi) {
  Rational q(uniform(num_lo, num_hi), uniform(1, den_hi));
  q.canonicalize();
  return q;
}

Rational RandomSource::rational_mixed() {
  if (chance(50)) return Rational(uniform(-4, 4));
  return rational(-6, 6, 3);
}

Weight RandomSource::weight(int n, bool dominant_integral) {
  Weight lam;
  for (int i = 1; i < n; ++i)
    lam.lambda.push_back(dominant_integral ? Rational(uniform(0, 3))
                                           : rational_mixed());
  return lam;
}

Monomial RandomSource::monomial(int rank, bool fractional_diag) {
  Monomial m{rational(-3, 3, 2), {}};
  if (m.coeff == 0) m.coeff = 1;
  for (const auto v : all_vars(rank)) {
    if (!chance(55)) continue;
    Rational e;
    if (v.is_diagonal() && fractional_diag && chance(60))
      e = rational(-4, 4, 3);
    else
      e = Rational(uniform(0, 2));
    if (e != 0) m.exps.push_back(ExpEntry{v, std::move(e)});
  }
  return m;
}

TruncatedSeries RandomSource::polynomial(int rank, int max_terms) {
  std::vector<Monomial> terms;
  const long nt = uniform(1, max_terms);
  for (long t = 0; t < nt; ++t) terms.push_back(monomial(rank, false));
  TruncatedSeries s(rank, std::move(terms), Frontier(rank));
  if (s.is_zero()) return TruncatedSeries::one(rank);
  return s;
}

TruncatedSeries RandomSource::weighted_series(int rank, bool fractional_diag) {
  Monomial m = monomial(rank, fractional_diag);
  TruncatedSeries s =
      TruncatedSeries::monomial(rank, std::move(m.coeff), std::move(m.exps));
  // A lowering image of a weighted series is again weighted.
  if (chance(40)) s = apply_eta(static_cast<int>(uniform(1, rank - 1)), s);
  return s;
}

namespace {

struct Case {
  Weight lam;
  int i = 1, l = 1;
  Rational a1, a2;
  TruncatedSeries f;
  std::string describe() const {
    std::ostringstream os;
    os << "i=" << i << " l=" << l << " a1=" << to_string(a1)
       << " a2=" << to_string(a2) << " lambda=(";
    for (std::size_t p = 0; p < lam.lambda.size(); ++p)
      os << (p ? "," : "") << to_string(lam.lambda[p]);
    os << ") f=" << to_text(f);
    return os.str();
  }
};

using CaseCheck = std::function<bool(const Case&)>;

IdentityOutcome run_cases(const std::string& name, std::vector<Case> cases,
                          const CaseCheck& check) {
  IdentityOutcome out;
  out.name = name;
  out.cases = static_cast<int>(cases.size());
  if (cases.empty()) {
    out.vacuous = true;
    return out;
  }
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<unsigned char> ok(cases.size(), 1);
  const bool parallel = exec_mode() == ExecMode::OpenMP && cases.size() > 4;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::size_t c = 0; c < cases.size(); ++c) ok[c] = check(cases[c]) ? 1 : 0;
  (void)parallel;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    if (ok[c]) continue;
    ++out.failures;
    if (out.detail.empty()) out.detail = cases[c].describe();
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return out;
}

} // namespace

bool SuiteReport::all_pass() const {
  for (const auto& o : outcomes)
    if (!o.passed()) return false;
  return true;
}

const IdentityOutcome* SuiteReport::first_failure() const {
  for (const auto& o : outcomes)
    if (!o.passed()) return &o;
  return nullptr;
}

SuiteReport run_identity_suites(const SuiteConfig& cfg) {
  const int n = cfg.n;
  if (n < 2) throw std::invalid_argument("rank must be >= 2");
  const TruncationPolicy pol = cfg.pol;
  RandomSource rng(cfg.seed);

  auto pick_weight = [&](std::size_t case_idx, RandomSource& r) -> Weight {
    if (case_idx == 0 && cfg.base_weight) return *cfg.base_weight;
    return r.weight(n, r.chance(30));
  };

  SuiteReport report;
  report.n = n;
  report.seed = cfg.seed;
  report.depth = pol.depth;

  // Bracket of the generator triple: d_i eta_j - eta_j d_i = delta_ij zeta_i
  // on exact polynomials.
  {
    std::vector<Case> cases;
    for (int c = 0; c < cfg.cases_sl2; ++c) {
      Case cs{pick_weight(static_cast<std::size_t>(c), rng),
              static_cast<int>(rng.uniform(1, n - 1)),
              static_cast<int>(rng.uniform(1, n - 1)),
              Rational(0),
              Rational(0),
              rng.polynomial(n, 3)};
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(run_cases("sl2_triple", std::move(cases), [&](const Case& c) {
      const TruncatedSeries lhs = sub(apply_d(c.l, c.lam, apply_eta(c.i, c.f)),
                                      apply_eta(c.i, apply_d(c.l, c.lam, c.f)));
      const TruncatedSeries rhs = c.i == c.l
                                      ? apply_zeta(c.l, c.lam, c.f)
                                      : TruncatedSeries::zero(n);
      return lhs == rhs;
    }));
  }

  // [d_l, eta_i^a] = a delta_il eta_i^{a-1} ((1-a) + zeta_i).
  {
    std::vector<Case> cases;
    for (int c = 0; c < cfg.cases_operators; ++c) {
      Case cs{pick_weight(static_cast<std::size_t>(c), rng),
              static_cast<int>(rng.uniform(1, n - 1)),
              static_cast<int>(rng.uniform(1, n - 1)),
              rng.rational_mixed(),
              Rational(0),
              TruncatedSeries::monomial(n, 1, rng.monomial(n, true).exps)};
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(run_cases(
        "eta_power_raising_commutator", std::move(cases), [&](const Case& c) {
          const TruncatedSeries lhs =
              sub(apply_d(c.l, c.lam, apply_eta_power(c.i, c.a1, c.f, pol)),
                  apply_eta_power(c.i, c.a1, apply_d(c.l, c.lam, c.f), pol));
          TruncatedSeries rhs = TruncatedSeries::zero(n);
          if (c.i == c.l) {
            const TruncatedSeries inner =
                add(scale(1 - c.a1, c.f), apply_zeta(c.i, c.lam, c.f));
            rhs = scale(c.a1, apply_eta_power(c.i, c.a1 - 1, inner, pol));
          }
          return agrees_above_frontier(lhs, rhs);
        }));
  }

  // [zeta_l, eta_i^a] = -a a_{l,i} eta_i^a.
  {
    std::vector<Case> cases;
    for (int c = 0; c < cfg.cases_operators; ++c) {
      Case cs{pick_weight(static_cast<std::size_t>(c), rng),
              static_cast<int>(rng.uniform(1, n - 1)),
              static_cast<int>(rng.uniform(1, n - 1)),
              rng.rational_mixed(),
              Rational(0),
              TruncatedSeries::monomial(n, 1, rng.monomial(n, true).exps)};
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(run_cases(
        "eta_power_diagonal_commutator", std::move(cases), [&](const Case& c) {
          const TruncatedSeries pw = apply_eta_power(c.i, c.a1, c.f, pol);
          const TruncatedSeries lhs =
              sub(apply_zeta(c.l, c.lam, pw),
                  apply_eta_power(c.i, c.a1, apply_zeta(c.l, c.lam, c.f), pol));
          const TruncatedSeries rhs =
              scale(-c.a1 * cartan_entry(c.l, c.i), pw);
          return agrees_above_frontier(lhs, rhs);
        }));
  }

  // eta_i^{a1} eta_{i+1}^{a1+a2} eta_i^{a2} = eta_{i+1}^{a2} eta_i^{a1+a2} eta_{i+1}^{a1}.
  {
    std::vector<Case> cases;
    for (int c = 0; n >= 3 && c < cfg.cases_operators; ++c) {
      Case cs{pick_weight(static_cast<std::size_t>(c), rng),
              static_cast<int>(rng.uniform(1, n - 2)),
              0,
              rng.rational_mixed(),
              rng.rational_mixed(),
              TruncatedSeries::monomial(n, 1, rng.monomial(n, true).exps)};
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(
        run_cases("eta_power_exchange", std::move(cases), [&](const Case& c) {
          const Rational sum = c.a1 + c.a2;
          const TruncatedSeries lhs = apply_eta_chain(
              {{c.i, c.a1}, {c.i + 1, sum}, {c.i, c.a2}}, c.f, pol);
          const TruncatedSeries rhs = apply_eta_chain(
              {{c.i + 1, c.a2}, {c.i, sum}, {c.i + 1, c.a1}}, c.f, pol);
          return agrees_above_frontier(lhs, rhs);
        }));
  }

  // eta_i^{a1} eta_i^{a2} = eta_i^{a1+a2}; includes the inverse pair.
  {
    std::vector<Case> cases;
    for (int c = 0; c < cfg.cases_operators; ++c) {
      Case cs{pick_weight(static_cast<std::size_t>(c), rng),
              static_cast<int>(rng.uniform(1, n - 1)),
              0,
              rng.rational_mixed(),
              rng.rational_mixed(),
              TruncatedSeries::monomial(n, 1, rng.monomial(n, true).exps)};
      if (c % 4 == 0) cs.a2 = -cs.a1;
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(
        run_cases("eta_power_composition", std::move(cases), [&](const Case& c) {
          const TruncatedSeries lhs = apply_eta_power(
              c.i, c.a1, apply_eta_power(c.i, c.a2, c.f, pol), pol);
          const TruncatedSeries rhs = apply_eta_power(c.i, c.a1 + c.a2, c.f, pol);
          return agrees_above_frontier(lhs, rhs);
        }));
  }

  // eta_r^a eta_s^b = eta_s^b eta_r^a for |r-s| >= 2.
  {
    std::vector<Case> cases;
    for (int c = 0; n >= 4 && c < cfg.cases_operators; ++c) {
      const int r = static_cast<int>(rng.uniform(1, n - 3));
      const int s = static_cast<int>(rng.uniform(r + 2, n - 1));
      Case cs{pick_weight(static_cast<std::size_t>(c), rng),
              r,
              s,
              rng.rational_mixed(),
              rng.rational_mixed(),
              TruncatedSeries::monomial(n, 1, rng.monomial(n, true).exps)};
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(
        run_cases("eta_power_far_commutation", std::move(cases), [&](const Case& c) {
          const TruncatedSeries lhs =
              apply_eta_power(c.i, c.a1, apply_eta_power(c.l, c.a2, c.f, pol), pol);
          const TruncatedSeries rhs =
              apply_eta_power(c.l, c.a2, apply_eta_power(c.i, c.a1, c.f, pol), pol);
          return agrees_above_frontier(lhs, rhs);
        }));
  }

  // [zeta_i, zeta_l] = 0.
  {
    std::vector<Case> cases;
    for (int c = 0; c < cfg.cases_sl2; ++c) {
      Case cs{pick_weight(static_cast<std::size_t>(c), rng),
              static_cast<int>(rng.uniform(1, n - 1)),
              static_cast<int>(rng.uniform(1, n - 1)),
              Rational(0),
              Rational(0),
              TruncatedSeries::monomial(n, 1, rng.monomial(n, true).exps)};
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(
        run_cases("diagonal_commutation", std::move(cases), [&](const Case& c) {
          return apply_zeta(c.i, c.lam, apply_zeta(c.l, c.lam, c.f)) ==
                 apply_zeta(c.l, c.lam, apply_zeta(c.i, c.lam, c.f));
        }));
  }

  // sigma_i^2 = id on weighted inputs; exact in the terminating regime.
  {
    std::vector<Case> cases;
    for (int c = 0; c < cfg.cases_sigma; ++c) {
      const bool dom = c % 2 == 0;
      Case cs{pick_weight(static_cast<std::size_t>(c), rng),
              static_cast<int>(rng.uniform(1, n - 1)),
              0,
              Rational(0),
              Rational(0),
              rng.weighted_series(n, !dom)};
      if (dom) cs.lam = rng.weight(n, true);
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(
        run_cases("sigma_involution", std::move(cases), [&](const Case& c) {
          const TruncatedSeries back =
              apply_sigma(c.i, c.lam, apply_sigma(c.i, c.lam, c.f, pol), pol);
          if (c.f.exact() && back.exact()) return back == c.f;
          return agrees_above_frontier(back, c.f);
        }));
  }

  // Braid relation of adjacent sigmas.
  {
    std::vector<Case> cases;
    for (int c = 0; n >= 3 && c < cfg.cases_sigma; ++c) {
      const bool dom = c % 2 == 0;
      Case cs{rng.weight(n, dom),
              static_cast<int>(rng.uniform(1, n - 2)),
              0,
              Rational(0),
              Rational(0),
              rng.weighted_series(n, !dom)};
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(
        run_cases("sigma_braid", std::move(cases), [&](const Case& c) {
          const PermWord lw{c.i, c.i + 1, c.i};
          const PermWord rw{c.i + 1, c.i, c.i + 1};
          const TruncatedSeries lhs = apply_word(lw, c.lam, c.f, pol);
          const TruncatedSeries rhs = apply_word(rw, c.lam, c.f, pol);
          if (lhs.exact() && rhs.exact()) return lhs == rhs;
          return agrees_above_frontier(lhs, rhs);
        }));
  }

  // Far commutation of sigmas.
  {
    std::vector<Case> cases;
    for (int c = 0; n >= 4 && c < cfg.cases_sigma; ++c) {
      const bool dom = c % 2 == 0;
      const int r = static_cast<int>(rng.uniform(1, n - 3));
      const int s = static_cast<int>(rng.uniform(r + 2, n - 1));
      Case cs{rng.weight(n, dom), r, s, Rational(0), Rational(0),
              rng.weighted_series(n, !dom)};
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(
        run_cases("sigma_far_commutation", std::move(cases), [&](const Case& c) {
          const TruncatedSeries lhs =
              apply_word(PermWord{c.i, c.l}, c.lam, c.f, pol);
          const TruncatedSeries rhs =
              apply_word(PermWord{c.l, c.i}, c.lam, c.f, pol);
          if (lhs.exact() && rhs.exact()) return lhs == rhs;
          return agrees_above_frontier(lhs, rhs);
        }));
  }

  // Longest-element word independence: lex-min vs lex-max reduced word.
  {
    PermWord wmin, wmax;
    if (n >= 3) {
      Permutation w0(static_cast<std::size_t>(n));
      for (int k = 1; k <= n; ++k)
        w0[static_cast<std::size_t>(k - 1)] = n + 1 - k;
      wmin = canonical_word(w0);
      // Greedy largest descent gives a different reduced word.
      Permutation p = w0;
      while (true) {
        std::vector<int> pos(static_cast<std::size_t>(n) + 1);
        for (std::size_t q = 0; q < p.size(); ++q)
          pos[static_cast<std::size_t>(p[q])] = static_cast<int>(q);
        int pick = 0;
        for (int v = n - 1; v >= 1; --v) {
          if (pos[static_cast<std::size_t>(v)] > pos[static_cast<std::size_t>(v + 1)]) {
            pick = v;
            break;
          }
        }
        if (pick == 0) break;
        wmax.push_back(pick);
        for (auto& x : p) {
          if (x == pick)
            x = pick + 1;
          else if (x == pick + 1)
            x = pick;
        }
      }
    }
    std::vector<Case> cases;
    for (int c = 0; n >= 3 && c < cfg.cases_sigma; ++c) {
      const bool dom = c % 2 == 0;
      Case cs{rng.weight(n, dom), 0, 0, Rational(0), Rational(0),
              rng.weighted_series(n, !dom)};
      cases.push_back(std::move(cs));
    }
    report.outcomes.push_back(
        run_cases("word_independence", std::move(cases), [&](const Case& c) {
          const TruncatedSeries lhs = apply_word(wmin, c.lam, c.f, pol);
          const TruncatedSeries rhs = apply_word(wmax, c.lam, c.f, pol);
          if (lhs.exact() && rhs.exact()) return lhs == rhs;
          return agrees_above_frontier(lhs, rhs);
        }));
  }

  return report;
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "identity suites: n = " << r.n << ", seed = " << r.seed
     << ", depth = " << r.depth << "\n";
  for (const auto& o : r.outcomes) {
    os << (o.passed() ? "PASS" : "FAIL") << "  " << o.name;
    if (o.vacuous)
      os << "  (vacuous at this rank)";
    else {
      os << "  cases=" << o.cases << " failures=" << o.failures;
      char buf[32];
      std::snprintf(buf, sizeof buf, "  [%.2fs]", o.seconds);
      os << buf;
    }
    os << "\n";
    if (!o.passed()) os << "      first failure: " << o.detail << "\n";
  }
  return os.str();
}

} // namespace verma
