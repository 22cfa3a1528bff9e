#include <doctest.h>
#include <omp.h>

#include "hydromom/grid.hpp"
#include "hydromom/oracle.hpp"

using namespace hydromom;

TEST_CASE("parallel grid evaluation is bitwise equal to the serial reference") {
  omp_set_num_threads(4);
  const GridSpec grid{-3.0, 3.0, 61};
  for (const auto& s : parabolic::enumerate_shell(3)) {
    const auto wf = parabolic::wavefunction_parabolic(s);
    const auto a = evaluate_grid_serial(wf, grid);
    const auto b = evaluate_grid(wf, grid);
    REQUIRE(a.rows.size() == 61u * 61u);
    CHECK(a.rows == b.rows);
  }
  const auto sw = spherical::wavefunction_spherical(spherical::make_state(3, 2, 1));
  CHECK(evaluate_grid_serial(sw, grid).rows == evaluate_grid(sw, grid).rows);
}

TEST_CASE("grid rows") {
  const GridSpec grid{-1.0, 2.0, 4};
  const auto wf = parabolic::wavefunction_parabolic(parabolic::parabolic_numbers(1, 0, 0));
  const auto g = evaluate_grid(wf, grid);
  REQUIRE(g.rows.size() == 16u);
  CHECK(g.x_label == "p_u");
  CHECK(g.rows[5].x == 0.0);
  CHECK(g.rows[5].y == 0.0);
  CHECK(g.rows[15].x == 2.0);
  for (const auto& r : g.rows) {
    CHECK(std::abs(r.abs2 - (r.re * r.re + r.im * r.im)) <= 1e-15 * std::max(1.0, r.abs2));
    const Complex v = wf(r.x, r.y);
    CHECK(r.re == v.real());
    CHECK(r.im == v.imag());
  }
}

TEST_CASE("parallel transform is bitwise equal to the serial reference") {
  omp_set_num_threads(4);
  std::vector<double> ps;
  for (int k = 0; k < 97; ++k) ps.push_back(-6.0 + 0.125 * k);
  const auto f = oracle::radial_samples(3, 1, 1.0);
  CHECK(oracle::conjugate_transform(f, -1, ps) == oracle::conjugate_transform_serial(f, -1, ps));
  const auto b = oracle::angular_samples(3, 2);
  CHECK(oracle::conjugate_transform(b, -1, ps) == oracle::conjugate_transform_serial(b, -1, ps));
}

TEST_CASE("grid parsing") {
  const auto g = parse_grid("-3:3:61");
  CHECK(g == GridSpec{-3.0, 3.0, 61});
  CHECK(g.at(30) == 0.0);
  CHECK(g.at(60) == 3.0);
  CHECK_THROWS_AS(parse_grid("3:-3:5"), DomainError);
  CHECK_THROWS_AS(parse_grid("0:1:1"), DomainError);
  CHECK_THROWS_AS(parse_grid("0:1"), DomainError);
  CHECK_THROWS_AS(parse_grid("a:1:5"), DomainError);
  CHECK_THROWS_AS(parse_grid("0:1:5:2"), DomainError);
}
