#include <doctest.h>

#include <sstream>

#include "hydromom/errors.hpp"
#include "hydromom/export.hpp"

using namespace hydromom;

namespace {

GridSample sample_grid() {
  const auto wf = parabolic::wavefunction_parabolic(parabolic::parabolic_numbers(1, 1, 1));
  return evaluate_grid(wf, GridSpec{-2.5, 3.1, 23});
}

const Metadata kMeta = {{"system", "paraboloidal"}, {"Z", "1"}, {"units", "hartree atomic units"}};

}  // namespace

TEST_CASE("CSV round trip is bit-identical") {
  const auto g = sample_grid();
  std::stringstream ss;
  write_csv(ss, g, kMeta);
  const auto t = read_csv(ss);
  CHECK(t.metadata == kMeta);
  CHECK(t.columns == std::vector<std::string>{"p_u", "p_v", "re", "im", "abs2"});
  REQUIRE(t.rows.size() == g.rows.size());
  for (std::size_t k = 0; k < g.rows.size(); ++k) {
    const auto& r = g.rows[k];
    CHECK(t.rows[k] == std::array<double, 5>{r.x, r.y, r.re, r.im, r.abs2});
  }
}

TEST_CASE("JSON round trip is bit-identical") {
  const auto g = sample_grid();
  std::stringstream ss;
  write_json(ss, g, kMeta);
  const auto t = read_json(ss);
  CHECK(t.metadata == kMeta);
  REQUIRE(t.rows.size() == g.rows.size());
  for (std::size_t k = 0; k < g.rows.size(); ++k) {
    const auto& r = g.rows[k];
    CHECK(t.rows[k] == std::array<double, 5>{r.x, r.y, r.re, r.im, r.abs2});
  }
}

TEST_CASE("CSV layout") {
  GridSample g;
  g.x_label = "p_r";
  g.y_label = "p_theta";
  g.rows = {{0.1, 0.2, 1.0 / 3.0, -2.0, 4.0 + 1.0 / 9.0}};
  std::stringstream ss;
  write_csv(ss, g, {{"k", "v"}});
  CHECK(ss.str() ==
        "# k: v\np_r,p_theta,re,im,abs2\n"
        "0.10000000000000001,0.20000000000000001,0.33333333333333331,-2,4.1111111111111107\n");
}

TEST_CASE("malformed input") {
  std::stringstream a("x,y\n");
  CHECK_THROWS_AS(read_csv(a), DomainError);
  std::stringstream b("p_u,p_v,re,im,abs2\n1,2,3,4,zz\n");
  CHECK_THROWS_AS(read_csv(b), DomainError);
  std::stringstream c("{\"rows\": 3}");
  CHECK_THROWS_AS(read_json(c), DomainError);
}
