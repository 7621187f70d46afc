#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PBWDEG_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("shape") {
  const Run r = run("shape --n 4 --j 1,2");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "shape");
  const auto& s = doc["shapes"][0];
  CHECK(s["b"] == nlohmann::json({1, 2, 0}));
  CHECK(s["ell"] == nlohmann::json({1, 3, 5}));
  CHECK(s["ambient"] == 6);
  CHECK_FALSE(s.contains("fixed_points"));
  const Run fp = run("shape --n 3 --j 1 --fixed-points");
  CHECK(fp.code == 0);
  const auto pts = nlohmann::json::parse(fp.out)["shapes"][0]["fixed_points"];
  CHECK(pts.size() == 7);
  CHECK(pts[0] == nlohmann::json::parse("[[1], [1, 2]]"));
}

TEST_CASE("verify output is deterministic and true for n = 4") {
  const Run a = run("verify --all 4 --seed 5 --samples 6");
  const Run b = run("verify --all 4 --seed 5 --samples 6");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["verdicts"].size() == 3);
  for (const auto& s : doc["verdicts"]) {
    CHECK(s["surjective"] == true);
    CHECK(s["equivariant"] == true);
    CHECK(s["failures"].empty());
  }
  const Run tsv = run("verify --n 3 --j 1 --format tsv");
  CHECK(tsv.code == 0);
  CHECK(tsv.out.find("3,1,4,2") != std::string::npos);
  const Run pretty = run("verify --n 3 --j 1 --format pretty");
  CHECK(pretty.code == 0);
  CHECK(pretty.out.rfind("verify", 0) == 0);
}

TEST_CASE("betti and ring") {
  const Run b = run("betti --n 3 --j 1");
  CHECK(b.code == 0);
  const auto doc = nlohmann::json::parse(b.out);
  CHECK(doc["rows"][0]["poincare_y"] == nlohmann::json({1, 2, 3, 1}));
  CHECK(doc["rows"][0]["kernel_lower_bound_total"] == 1);
  const Run r = run("ring --n 3 --j 1");
  CHECK(r.code == 0);
  CHECK(r.out == run("ring --n 3 --j 1").out);
}

TEST_CASE("symplectic") {
  const Run r = run("sp verify --n 2");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& v = doc["verdicts"][0];
  CHECK(v["fixed_points"] == 10);
  CHECK(v["generic_fixed_points"] == 8);
  CHECK(v["commuting_diagram"] == true);
  CHECK(v["surjective"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("verify --n 3 --j 2").code == 2);
  CHECK(run("verify --n 3 --j x").code == 2);
  CHECK(run("verify --n 3 --j 1 --all 3").code == 2);
  CHECK(run("verify --n 3 --j 1 --format xml").code == 2);
  CHECK(run("verify --n 6 --j 1").code == 2);
  CHECK(run("ring --n 5 --j 1").code == 2);
  CHECK(run("sp verify --n 4").code == 2);
  const Run strict = run("verify --n 3 --j 1 --strict-pi");
  CHECK(strict.code == 3);
  const auto doc = nlohmann::json::parse(strict.out);
  CHECK_FALSE(doc["verdicts"][0]["failures"].empty());
}

TEST_CASE("cap override") {
  const Run r = run("shape --n 7 --j 1 --cap-override");
  CHECK(r.code == 0);
}
