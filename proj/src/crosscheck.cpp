#include "verma/crosscheck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "verma/linalg.hpp"

namespace verma {

namespace {

// Coordinates of a module vector over the lex-ordered slice basis.
std::vector<Rational> coordinates(const VermaVector& v,
                                  const std::vector<GammaExponent>& basis) {
  std::map<GammaExponent, std::size_t> index;
  for (std::size_t p = 0; p < basis.size(); ++p) index.emplace(basis[p], p);
  std::vector<Rational> x(basis.size(), Rational(0));
  for (const auto& [alpha, c] : v.terms()) x[index.at(alpha)] = c;
  return x;
}

bool same_span(const std::vector<VermaVector>& a,
               const std::vector<VermaVector>& b,
               const std::vector<GammaExponent>& basis) {
  QMatrix ma, mb;
  for (const auto& v : a) ma.push_back(coordinates(v, basis));
  for (const auto& v : b) mb.push_back(coordinates(v, basis));
  return rref(std::move(ma)) == rref(std::move(mb));
}

} // namespace

CrossCheckReport cross_check(const Weight& lam, int max_total,
                             const TruncationPolicy& pol,
                             const OracleOptions& opts) {
  const int n = lam.rank();

  // Differential-operator route: polynomial orbit vectors by degree.
  std::map<RootDegree, std::vector<VermaVector>> weyl_by_degree;
  for (const auto& cert : singular_vectors(lam, pol)) {
    if (cert.series.is_zero() || cert.series.terms().front().exps.empty())
      continue; // trivial highest-weight vector
    const std::vector<long> kl = content_of(cert.series.terms().front().exps, n);
    RootDegree k(kl.begin(), kl.end());
    const int total = std::accumulate(k.begin(), k.end(), 0);
    if (total > max_total) continue;
    weyl_by_degree[k].push_back(tau_inverse(cert.series));
  }

  // Module route: exact kernel sweep.
  CrossCheckReport report;
  report.oracle_hits = search_singular(lam, max_total, opts);
  std::map<RootDegree, std::vector<VermaVector>> oracle_by_degree;
  for (const auto& hit : report.oracle_hits)
    oracle_by_degree.emplace(hit.degree, hit.basis);
  std::vector<RootDegree> degrees;
  for (const auto& [k, vs] : weyl_by_degree) degrees.push_back(k);
  for (const auto& [k, vs] : oracle_by_degree) degrees.push_back(k);
  std::sort(degrees.begin(), degrees.end(),
            [](const RootDegree& a, const RootDegree& b) {
              const int sa = std::accumulate(a.begin(), a.end(), 0);
              const int sb = std::accumulate(b.begin(), b.end(), 0);
              if (sa != sb) return sa < sb;
              return a < b;
            });
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  for (const auto& k : degrees) {
    DegreeComparison row;
    row.degree = k;
    const auto wo = weyl_by_degree.find(k);
    const auto oo = oracle_by_degree.find(k);
    row.weyl_count = wo == weyl_by_degree.end() ? 0 : wo->second.size();
    row.oracle_dim = oo == oracle_by_degree.end() ? 0 : oo->second.size();
    if (row.weyl_count == 0) {
      row.status = MatchStatus::Missing;
    } else if (row.oracle_dim == 0) {
      row.status = MatchStatus::Extra;
    } else {
      const auto basis = enumerate_basis(n, k);
      row.status = same_span(wo->second, oo->second, basis)
                       ? MatchStatus::Match
                       : MatchStatus::Mismatch;
    }
    if (row.status != MatchStatus::Match) report.full_match = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

const char* to_cstring(MatchStatus s) {
  switch (s) {
    case MatchStatus::Match: return "MATCH";
    case MatchStatus::Missing: return "MISSING";
    case MatchStatus::Extra: return "EXTRA";
    case MatchStatus::Mismatch: return "MISMATCH";
  }
  return "?";
}

std::string to_text(const CrossCheckReport& r) {
  std::ostringstream os;
  for (const auto& row : r.rows) {
    os << "k = (";
    for (std::size_t p = 0; p < row.degree.size(); ++p)
      os << (p ? "," : "") << row.degree[p];
    os << ")  oracle_dim = " << row.oracle_dim
       << "  orbit_count = " << row.weyl_count << "  "
       << to_cstring(row.status) << "\n";
  }
  os << (r.full_match ? "FULL MATCH" : "DISAGREEMENT") << " over "
     << r.rows.size() << " degrees\n";
  return os.str();
}

} // namespace verma
