#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <unistd.h>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef HOLONUM_CLI_PATH
#define HOLONUM_CLI_PATH ""
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult res;
  std::string cmd = std::string(HOLONUM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("metric eval emits the envelope and the value") {
  RunResult r = run_cli("metric eval --model bidisc --kind kobayashi --p 0,0 --xi 0.3,0+0,0.4");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("value").get<double>() == doctest::Approx(0.4));
  CHECK(j.contains("tool_version"));
  CHECK(j.contains("resolved_config"));
  CHECK(j.contains("checks"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("--definitely-not-a-flag").exit_code == 2);
  CHECK(run_cli("metric eval --model pentagon --p 0 --xi 1").exit_code == 2);
  CHECK(run_cli("metric eval --model disc --bogus 1").exit_code == 2);
}

TEST_CASE("numeric errors exit with 3") {
  // ball metric away from the origin is unsupported
  RunResult r = run_cli("metric eval --model ball --kind kobayashi --p 0.1,0+0,0 --xi 1,0+0,0");
  CHECK(r.exit_code == 3);
}

TEST_CASE("cauchy eval reproduces exp") {
  RunResult r = run_cli("cauchy eval --fn exp --z 0.3,0.1");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  double re = j.at("value")[0].get<double>();
  double im = j.at("value")[1].get<double>();
  CHECK(re == doctest::Approx(1.3431151360753524).epsilon(1e-9));
  CHECK(im == doctest::Approx(0.13476101675112576).epsilon(1e-9));
}

TEST_CASE("selftest passes") {
  RunResult r = run_cli("selftest");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("dbar solve accepts a grid-field file") {
  // a 24^2 indicator of the unit disc, written in the grid JSON schema
  const int n = 24;
  const double h = 2.0 / n;
  nlohmann::json values = nlohmann::json::array();
  nlohmann::json mask = nlohmann::json::array();
  for (int iy = 0; iy < n; ++iy)
    for (int ix = 0; ix < n; ++ix) {
      double x = -1.0 + h / 2.0 + ix * h, y = -1.0 + h / 2.0 + iy * h;
      bool inside = x * x + y * y <= 1.0;
      values.push_back({inside ? 1.0 : 0.0, 0.0});
      mask.push_back(inside);
    }
  nlohmann::json grid{{"origin", {-1.0 + h / 2.0, -1.0 + h / 2.0}}, {"spacing", h},
                      {"width", n},  {"height", n},
                      {"values", values}, {"mask", mask}};
  char path[] = "/tmp/holonum_alpha_XXXXXX";
  int fd = mkstemp(path);
  REQUIRE(fd >= 0);
  {
    std::ofstream out(path);
    out << grid.dump();
  }
  close(fd);

  RunResult r = run_cli(std::string("dbar solve --alpha-file ") + path +
                        " --support-radius 1 --tolerance 0.2");
  std::remove(path);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j.at("field").at("width").get<int>() == n);
}

TEST_CASE("seeded runs are reproducible") {
  RunResult a = run_cli("bers verify --coeffs \"0,0;0,0;2,0\" --trials 16 --seed 42");
  RunResult b = run_cli("bers verify --coeffs \"0,0;0,0;2,0\" --trials 16 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  RunResult c = run_cli("bers verify --coeffs \"0,0;0,0;2,0\" --trials 16 --seed 43");
  CHECK(c.output != a.output);  // the seed is honored
}

}  // TEST_SUITE
