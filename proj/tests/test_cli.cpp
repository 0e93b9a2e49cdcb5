#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SPHEROIDAL_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WEXITSTATUS(raw), out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("coeffs as JSON") {
    const Run r = run("coeffs --m 3/2 --order 4 --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["m"] == "3/2");
    CHECK(j["E0"] == nlohmann::json::array({"0", "-9/5", "-247/375", "-1536/21875", "-2816/2953125"}));
    CHECK(j["b"][1][0] == "-3/5");
    CHECK(j["a"][2][0] == "8/75");
  }

  TEST_CASE("oracle levels") {
    const Run r = run("oracle --m 3/2 --beta 0 --levels 3 --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["levels"].size() == 3);
    CHECK(std::abs(j["levels"][0].get<double>() - 0.0) < 1e-8);
    CHECK(std::abs(j["levels"][1].get<double>() - 5.0) < 1e-8);
    CHECK(std::abs(j["levels"][2].get<double>() - 12.0) < 1e-8);
    CHECK(j.contains("residualNorms"));
  }

  TEST_CASE("ladder and energy outputs") {
    const Run l = run("ladder --m 3/2 --beta 0 --levels 3 --format json");
    REQUIRE(l.status == 0);
    const auto j = nlohmann::json::parse(l.out);
    CHECK(j["levels"][1].get<double>() == doctest::Approx(5.0));
    CHECK(j["R_series"][0][1] == "36/35");
    const Run e = run("energy --m 3/2 --beta 0.1 --order 1 --format csv");
    REQUIRE(e.status == 0);
    CHECK(e.out.find("-1.800000000000e-01") != std::string::npos);
  }

  TEST_CASE("wavefunction samples") {
    const Run r = run("wavefunction --m 3/2 --beta 0.05 --points 16 --format csv");
    REQUIRE(r.status == 0);
    int lines = 0;
    for (char ch : r.out) lines += ch == '\n';
    CHECK(lines == 17);
    CHECK(run("wavefunction --m 3/2 --points 16 --format csv").out == run("wavefunction --m 3/2 --points 16 --format csv").out);
  }

  TEST_CASE("verify report") {
    const Run r = run("verify --m 3/2 --order 6");
    CHECK(r.out.find("riccati residual: 0 (all orders)") != std::string::npos);
    CHECK(r.status == 3);
    const Run w = run("verify --m 3/2 --order 6 --allow-published-errata");
    CHECK(w.status == 0);
  }

  TEST_CASE("exit codes") {
    CHECK(run("coeffs --m 1/3").status == 1);
    CHECK(run("coeffs --m x").status == 1);
    CHECK(run("coeffs energy").status == 1);
    CHECK(run("").status == 1);
    CHECK(run("coeffs --m -3/2 --formal").status == 2);
  }
}
