#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "verma/crosscheck.hpp"
#include "verma/json_io.hpp"
#include "verma/oracle.hpp"
#include "verma/parallel.hpp"
#include "verma/verify.hpp"
#include "verma/weyl.hpp"

namespace {

using nlohmann::json;
using namespace verma;

struct Options {
  int n = 0;
  std::string weight_str;
  int depth = 24;
  int max_degree = 8;
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::string word_str;
  std::string output;
  bool serial = false;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty list entry");
    out.push_back(std::stoi(item));
  }
  return out;
}

Weight parse_weight(const Options& o) {
  Weight lam;
  std::stringstream ss(o.weight_str);
  std::string item;
  while (std::getline(ss, item, ',')) lam.lambda.push_back(parse_rational(item));
  if (lam.rank() != o.n)
    throw std::invalid_argument("weight needs exactly n-1 components");
  return lam;
}

void emit(const Options& o, const std::string& body) {
  if (o.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw std::runtime_error("cannot open output file: " + o.output);
  out << body;
}

json config_json(const Options& o, const Weight& lam) {
  json w = json::array();
  for (const auto& l : lam.lambda) w.push_back(to_string(l));
  return json{{"n", o.n}, {"weight", w}, {"depth", o.depth}};
}

std::string word_text(const PermWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ".";
    s += "s" + std::to_string(w[k]);
  }
  return s;
}

std::string certificates_text(const std::vector<SingularCertificate>& certs,
                              bool latex) {
  std::ostringstream os;
  std::size_t idx = 1;
  for (const auto& c : certs) {
    os << "[" << idx++ << "] word = " << word_text(c.word) << "  weight = (";
    for (std::size_t p = 0; p < c.weight.size(); ++p)
      os << (p ? "," : "") << to_string(c.weight[p]);
    os << ")  polynomial = " << (c.polynomial ? "yes" : "no")
       << "  pde_zero = " << (c.pde_zero ? "yes" : "no") << "\n    "
       << (latex ? to_latex(c.series) : to_text(c.series)) << "\n";
  }
  return os.str();
}

std::string certificates_report(const Options& o, const Weight& lam,
                                const char* command,
                                const std::vector<SingularCertificate>& certs) {
  if (o.format == "json") {
    json j = config_json(o, lam);
    j["command"] = command;
    json arr = json::array();
    for (const auto& c : certs) arr.push_back(certificate_to_json(c));
    j["certificates"] = arr;
    return j.dump() + "\n";
  }
  std::ostringstream os;
  os << command << ": n = " << o.n << ", weight = " << o.weight_str
     << ", depth = " << o.depth << "\n";
  os << certificates_text(certs, o.format == "latex");
  return os.str();
}

int cmd_singular(const Options& o) {
  const Weight lam = parse_weight(o);
  const auto certs = singular_vectors(lam, TruncationPolicy{o.depth});
  emit(o, certificates_report(o, lam, "singular", certs));
  return 0;
}

int cmd_orbit(const Options& o) {
  const Weight lam = parse_weight(o);
  const TruncationPolicy pol{o.depth};
  std::vector<SingularCertificate> certs;
  if (!o.word_str.empty()) {
    PermWord w = parse_int_list(o.word_str);
    TruncatedSeries s = evaluate_word(w, lam, pol);
    WeightVector mu = s.is_zero() ? WeightVector(lam.lambda)
                                  : weight_of(s.terms().front(), lam);
    certs.push_back(SingularCertificate{std::move(w), s, std::move(mu),
                                        is_polynomial(s),
                                        pde_residuals_vanish(lam, s)});
  } else {
    certs = orbit(lam, pol);
  }
  emit(o, certificates_report(o, lam, "orbit", certs));
  return 0;
}

int cmd_oracle(const Options& o) {
  const Weight lam = parse_weight(o);
  const CrossCheckReport report =
      cross_check(lam, o.max_degree, TruncationPolicy{o.depth});
  if (o.format == "json") {
    json j = config_json(o, lam);
    j["command"] = "oracle";
    j["max_degree"] = o.max_degree;
    j["full_match"] = report.full_match;
    json rows = json::array();
    for (const auto& row : report.rows)
      rows.push_back(json{{"degree", row.degree},
                          {"oracle_dim", row.oracle_dim},
                          {"orbit_count", row.weyl_count},
                          {"status", to_cstring(row.status)}});
    j["degrees"] = rows;
    json hits = json::array();
    for (const auto& hit : report.oracle_hits)
      hits.push_back(degree_hit_to_json(hit));
    j["oracle_reports"] = hits;
    emit(o, j.dump() + "\n");
  } else {
    std::ostringstream os;
    os << "oracle: n = " << o.n << ", weight = " << o.weight_str
       << ", max degree = " << o.max_degree << "\n"
       << to_text(report);
    emit(o, os.str());
  }
  return report.full_match ? 0 : 1;
}

int cmd_irreducible(const Options& o) {
  const Weight lam = parse_weight(o);
  const IrreducibilityVerdict v = is_irreducible(lam);
  if (o.format == "json") {
    json j = config_json(o, lam);
    j["command"] = "irreducible";
    j["irreducible"] = v.irreducible;
    json ws = json::array();
    for (const auto& w : v.witnesses)
      ws.push_back(json{{"i", w.i}, {"j", w.j}, {"value", to_string(w.value)}});
    j["witnesses"] = ws;
    emit(o, j.dump() + "\n");
  } else {
    std::ostringstream os;
    os << "irreducible: n = " << o.n << ", weight = " << o.weight_str << "\n"
       << (v.irreducible ? "IRREDUCIBLE" : "REDUCIBLE") << "\n";
    for (const auto& w : v.witnesses)
      os << "  witness (i=" << w.i << ", j=" << w.j
         << "): j + sum = " << to_string(w.value) << "\n";
    emit(o, os.str());
  }
  return v.irreducible ? 0 : 1;
}

int cmd_verify(const Options& o) {
  const Weight lam = parse_weight(o);
  SuiteConfig cfg;
  cfg.n = o.n;
  cfg.base_weight = lam;
  cfg.seed = o.seed;
  cfg.pol = TruncationPolicy{o.depth};
  const SuiteReport report = run_identity_suites(cfg);
  if (o.format == "json") {
    json j = config_json(o, lam);
    j["command"] = "verify";
    j["seed"] = report.seed;
    j["all_pass"] = report.all_pass();
    json rows = json::array();
    for (const auto& out : report.outcomes)
      rows.push_back(json{{"name", out.name},
                          {"cases", out.cases},
                          {"failures", out.failures},
                          {"vacuous", out.vacuous}});
    j["identities"] = rows;
    emit(o, j.dump() + "\n");
  } else {
    emit(o, to_text(report));
  }
  if (!report.all_pass()) {
    std::cerr << "verify failed at identity: " << report.first_failure()->name
              << "\n";
    return 1;
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact singular vectors of sl(n) Verma modules via the "
               "differential-operator action of the symmetric group, with an "
               "independent module-side oracle."};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "rank n >= 2")->required()->check(CLI::Range(2, 32));
    sub->add_option("--weight", o.weight_str,
                    "comma-separated exact rationals, e.g. 3,1/2,-2")
        ->required();
    sub->add_option("--depth", o.depth, "truncation depth")->check(CLI::Range(1, 4096));
    sub->add_option("--format", o.format, "text | json | latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
    sub->add_option("--output", o.output, "write the report to a file");
    sub->add_flag("--serial", o.serial, "disable the OpenMP kernels");
  };

  CLI::App* singular = app.add_subcommand("singular", "polynomial singular vectors");
  add_common(singular);
  CLI::App* orbit_cmd = app.add_subcommand("orbit", "the full orbit of 1");
  add_common(orbit_cmd);
  orbit_cmd->add_option("--word", o.word_str,
                        "evaluate one explicit word, e.g. 1,2,1");
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "cross-check against the module oracle");
  add_common(oracle_cmd);
  oracle_cmd->add_option("--max-degree", o.max_degree, "oracle sweep bound")
      ->check(CLI::Range(1, 64));
  CLI::App* irr = app.add_subcommand("irreducible", "irreducibility criterion");
  add_common(irr);
  CLI::App* verify = app.add_subcommand("verify", "randomized identity suites");
  add_common(verify);
  verify->add_option("--seed", o.seed, "random seed (echoed in the report)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (o.serial) verma::set_exec_mode(ExecMode::Serial);

  try {
    if (app.got_subcommand(singular)) return cmd_singular(o);
    if (app.got_subcommand(orbit_cmd)) return cmd_orbit(o);
    if (app.got_subcommand(oracle_cmd)) return cmd_oracle(o);
    if (app.got_subcommand(irr)) return cmd_irreducible(o);
    if (app.got_subcommand(verify)) return cmd_verify(o);
  } catch (const verma::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
