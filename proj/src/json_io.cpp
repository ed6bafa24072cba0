#include "verma/json_io.hpp"

#include <stdexcept>

namespace verma {

namespace {

using nlohmann::json;

std::string var_key(VarIndex v) {
  return std::to_string(v.row) + "," + std::to_string(v.col);
}

VarIndex parse_var_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("bad variable key: " + key);
  const int row = std::stoi(key.substr(0, comma));
  const int col = std::stoi(key.substr(comma + 1));
  return VarIndex{row, col};
}

} // namespace

json series_to_json(const TruncatedSeries& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json exps = json::object();
    for (const auto& [var, exp] : t.exps) exps[var_key(var)] = to_string(exp);
    terms.push_back(json{{"coeff", to_string(t.coeff)}, {"exps", exps}});
  }
  json frontier = json::object();
  for (int g = 1; g < f.rank(); ++g) {
    const auto& b = f.frontier().at(g);
    frontier[std::to_string(g)] = b ? to_string(*b) : "-inf";
  }
  return json{{"terms", terms}, {"frontier", frontier}, {"exact", f.exact()}};
}

TruncatedSeries series_from_json(const json& j) {
  const json& frontier = j.at("frontier");
  const int rank = static_cast<int>(frontier.size()) + 1;
  Frontier fr(rank);
  for (int g = 1; g < rank; ++g) {
    const std::string b = frontier.at(std::to_string(g)).get<std::string>();
    if (b != "-inf") fr.set(g, parse_rational(b));
  }
  std::vector<Monomial> terms;
  for (const auto& t : j.at("terms")) {
    Monomial m{parse_rational(t.at("coeff").get<std::string>()), {}};
    for (const auto& [key, val] : t.at("exps").items())
      m.exps.push_back(ExpEntry{parse_var_key(key),
                                parse_rational(val.get<std::string>())});
    std::sort(m.exps.begin(), m.exps.end(),
              [](const ExpEntry& a, const ExpEntry& b) { return a.var < b.var; });
    terms.push_back(std::move(m));
  }
  TruncatedSeries s(rank, std::move(terms), std::move(fr));
  if (j.contains("exact") && j.at("exact").get<bool>() != s.exact())
    throw std::invalid_argument("series exactness flag contradicts frontier");
  return s;
}

json certificate_to_json(const SingularCertificate& c) {
  json weight = json::array();
  for (const auto& mu : c.weight) weight.push_back(to_string(mu));
  return json{{"word", c.word},
              {"weight", weight},
              {"polynomial", c.polynomial},
              {"pde_zero", c.pde_zero},
              {"series", series_to_json(c.series)}};
}

SingularCertificate certificate_from_json(const json& j) {
  TruncatedSeries s = series_from_json(j.at("series"));
  WeightVector mu;
  for (const auto& q : j.at("weight")) mu.push_back(parse_rational(q.get<std::string>()));
  return SingularCertificate{j.at("word").get<PermWord>(), std::move(s),
                             std::move(mu), j.at("polynomial").get<bool>(),
                             j.at("pde_zero").get<bool>()};
}

json verma_vector_to_json(const VermaVector& v) {
  const std::vector<VarIndex> vars = all_vars(v.rank());
  json terms = json::array();
  for (const auto& [alpha, c] : v.terms()) {
    json a = json::object();
    for (std::size_t p = 0; p < vars.size(); ++p)
      if (alpha[p] != 0) a[var_key(vars[p])] = alpha[p];
    terms.push_back(json{{"alpha", a}, {"coeff", to_string(c)}});
  }
  return json{{"terms", terms}};
}

VermaVector verma_vector_from_json(const json& j, int rank) {
  VermaVector v(rank);
  const std::size_t nvars = static_cast<std::size_t>(rank * (rank - 1) / 2);
  for (const auto& t : j.at("terms")) {
    GammaExponent alpha(nvars, 0);
    for (const auto& [key, val] : t.at("alpha").items()) {
      const VarIndex var = parse_var_key(key);
      alpha[pbw_index(rank, var.row, var.col)] = val.get<int>();
    }
    v.accumulate(alpha, parse_rational(t.at("coeff").get<std::string>()));
  }
  return v;
}

json degree_hit_to_json(const DegreeHit& h) {
  json basis = json::array();
  for (const auto& v : h.basis) basis.push_back(verma_vector_to_json(v));
  return json{{"degree", h.degree},
              {"kernel_dim", h.basis.size()},
              {"basis", basis}};
}

} // namespace verma
