#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hydromom/export.hpp"

using hydromom::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

hydromom::Table parse_csv(const std::string& text) {
  std::istringstream ss(text);
  return hydromom::read_csv(ss);
}

}  // namespace

TEST_CASE("spectrum") {
  const auto r = call({"spectrum", "--n-max", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("shell 1: 1 state, E = -0.5 hartree") != std::string::npos);
  CHECK(r.out.find("shell 2: 4 states, E = -0.125 hartree") != std::string::npos);
  const auto z2 = call({"--charge", "2", "spectrum", "--n-max", "1"});
  CHECK(z2.out.find("E = -2 hartree") != std::string::npos);
  const auto after = call({"spectrum", "--n-max", "1", "--charge", "2"});
  CHECK(after.out == z2.out);
}

TEST_CASE("eval writes the full grid") {
  const auto r = call({"eval", "--system", "parab", "--state", "0,0,0", "--grid", "-3:3:61"});
  REQUIRE(r.code == 0);
  const auto t = parse_csv(r.out);
  CHECK(t.rows.size() == 3721u);
  bool found = false;
  for (const auto& row : t.rows) {
    if (row[0] == 0.0 && row[1] == 0.0) {
      found = true;
      CHECK(std::abs(std::sqrt(row[4]) - 0.5) < 1e-12);
    }
  }
  CHECK(found);
  bool has_delta = false;
  for (const auto& [k, v] : t.metadata) has_delta = has_delta || (k == "delta" && v.find("not included") != std::string::npos);
  CHECK(has_delta);
}

TEST_CASE("eval output for (n1,n2,m) and (n2,n1,m) are transposes") {
  const auto a = parse_csv(call({"eval", "--state", "2,0,1", "--grid", "-2:2:9"}).out);
  const auto b = parse_csv(call({"eval", "--state", "0,2,1", "--grid", "-2:2:9"}).out);
  REQUIRE(a.rows.size() == 81u);
  for (int i = 0; i < 9; ++i) {
    for (int j = 0; j < 9; ++j) {
      const auto& x = a.rows[i * 9 + j];
      const auto& y = b.rows[j * 9 + i];
      CHECK(x[0] == y[1]);
      CHECK(x[2] == y[2]);
      CHECK(x[3] == y[3]);
    }
  }
}

TEST_CASE("eval to file in both formats") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = (dir / "hydromom_cli_test.csv").string();
  const auto json = (dir / "hydromom_cli_test.json").string();
  CHECK(call({"eval", "--system", "spherical", "--state", "2,1,1", "--grid", "-1:1:5", "--out", csv}).code == 0);
  CHECK(call({"eval", "--system", "spherical", "--state", "2,1,1", "--grid", "-1:1:5", "--out", json, "--format",
              "json"})
            .code == 0);
  std::ifstream fc(csv), fj(json);
  const auto tc = hydromom::read_csv(fc);
  const auto tj = hydromom::read_json(fj);
  CHECK(tc.rows == tj.rows);
  CHECK(tc.columns[1] == "p_theta");
  std::remove(csv.c_str());
  std::remove(json.c_str());
}

TEST_CASE("expect") {
  const auto r = call({"expect", "--system", "spherical", "--state", "1,0,0", "--operator", "inverse-position"});
  CHECK(r.code == 0);
  CHECK(r.out.find("radial") != std::string::npos);
  const auto p = call({"expect", "--system", "parab", "--state", "1,0,0", "--operator", "position"});
  CHECK(p.code == 0);
  CHECK(p.out.find("u factor") != std::string::npos);
  CHECK(p.out.find("v factor") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
  CHECK(call({}).code == 1);
  CHECK(call({"bogus"}).code == 1);
  CHECK(call({"eval", "--state", "1,2"}).code == 1);
  CHECK(call({"eval", "--state", "0,0,0", "--grid", "3:1:4"}).code == 1);
  CHECK(call({"eval", "--system", "spherical", "--state", "1,1,0"}).code == 1);
  CHECK(call({"eval", "--state", "0,0,0", "--format", "xml"}).code == 1);
  CHECK(call({"verify", "--suite", "nope"}).code == 1);
  CHECK(call({"--charge", "-1", "spectrum", "--n-max", "1"}).code == 1);
  const auto r = call({"spectrum", "--n-max", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("help exits 0") {
  const auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify suites report and set the exit code") {
  const auto s = call({"verify", "--suite", "spectrum"});
  CHECK(s.code == 0);
  CHECK(s.out.find("PASS") != std::string::npos);
  // a tolerance override below the achievable error makes the suite fail
  const auto strict = call({"--tolerance", "1e-300", "verify", "--suite", "normalization"});
  CHECK(strict.code == 2);
  CHECK(strict.out.find("FAIL") != std::string::npos);
}

TEST_CASE("executable runs") {
  const std::string cmd = std::string(HYDROMOM_EXE) + " spectrum --n-max 1 > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
}
