#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef VERMA_CLI_PATH
#error "VERMA_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(VERMA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

} // namespace

TEST_CASE("singular subcommand") {
  const auto r = run("singular --n 2 --weight 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("x[2,1]^4") != std::string::npos);

  const auto half = run("singular --n 2 --weight 1/2 --format json");
  CHECK(half.exit_code == 0);
  const auto j = nlohmann::json::parse(half.out);
  CHECK(j.at("certificates").size() == 1);

  const auto three = run("singular --n 3 --weight 1,1 --format json");
  CHECK(nlohmann::json::parse(three.out).at("certificates").size() == 6);
}

TEST_CASE("orbit subcommand with an explicit word") {
  const auto r = run("orbit --n 3 --weight 1,1 --word 1,2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("x[2,1]^4") != std::string::npos);
  CHECK(r.out.find("x[3,2]^2") != std::string::npos);

  // Non-reduced words are legal inputs.
  const auto rr = run("orbit --n 2 --weight 5 --word 1,1 --format json");
  CHECK(rr.exit_code == 0);
  const auto j = nlohmann::json::parse(rr.out);
  const auto& series = j.at("certificates").at(0).at("series");
  CHECK(series.at("terms").at(0).at("coeff").get<std::string>() == "1");
  CHECK(series.at("terms").at(0).at("exps").empty());
}

TEST_CASE("oracle subcommand exit codes") {
  const auto r = run("oracle --n 2 --weight 3 --max-degree 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("MATCH") != std::string::npos);
  CHECK(r.out.find("k = (4)") != std::string::npos);

  // Nothing on either side still counts as a full match.
  const auto empty = run("oracle --n 2 --weight 1/3 --max-degree 10");
  CHECK(empty.exit_code == 0);

  const auto j = nlohmann::json::parse(
      run("oracle --n 2 --weight 3 --max-degree 8 --format json").out);
  CHECK(j.at("full_match").get<bool>());
  const auto& hit = j.at("oracle_reports").at(0);
  CHECK(hit.at("degree") == nlohmann::json::array({4}));
  CHECK(hit.at("kernel_dim").get<int>() == 1);
  CHECK(hit.at("basis").at(0).at("terms").at(0).at("alpha").at("2,1") == 4);
}

TEST_CASE("irreducible subcommand exit codes") {
  CHECK(run("irreducible --n 2 --weight 1/2").exit_code == 0);
  const auto red = run("irreducible --n 2 --weight 3");
  CHECK(red.exit_code == 1);
  CHECK(red.out.find("witness") != std::string::npos);
  CHECK(run("irreducible --n 3 --weight -1/2,-1/2").exit_code == 1);
}

TEST_CASE("verify subcommand") {
  // Boundary weight: the degenerate exponent lambda_1 + 1 = 1.
  const auto r = run("verify --n 2 --weight 0 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("all_pass").get<bool>());
  CHECK(j.at("seed").get<std::uint64_t>() == 987654321ULL);

  const auto frac = run("verify --n 3 --weight 2/3,5/7");
  CHECK(frac.exit_code == 0);
  CHECK(frac.out.find("seed = 987654321") != std::string::npos);
  CHECK(frac.out.find("FAIL") == std::string::npos);
}

TEST_CASE("parse errors exit with 2") {
  CHECK(run("singular --n 2 --weight 1.5").exit_code == 2);
  CHECK(run("singular --n 2 --weight 1,1").exit_code == 2);
  CHECK(run("singular --weight 1").exit_code == 2);
  CHECK(run("bogus --n 2 --weight 1").exit_code == 2);
}

TEST_CASE("budget exhaustion exits with 3") {
  CHECK(run("singular --n 7 --weight 1,1,1,1,1,1").exit_code == 3);
}

TEST_CASE("reports are byte deterministic") {
  const std::string cmd = "singular --n 3 --weight 2,1 --format json";
  CHECK(run(cmd).out == run(cmd).out);
  const std::string ver = "verify --n 2 --weight 1/2 --format json --seed 7";
  CHECK(run(ver).out == run(ver).out);
  // Serial mode produces the same bytes as the OpenMP kernels.
  CHECK(run(cmd).out == run(cmd + " --serial").out);
}

TEST_CASE("latex format renders subscripted variables") {
  const auto r = run("singular --n 2 --weight 3 --format latex");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("x_{2,1}^{4}") != std::string::npos);
}
