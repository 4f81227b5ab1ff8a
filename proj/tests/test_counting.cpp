#include "cquiver/counting.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cquiver;

TEST_CASE("binomial") {
  CHECK(binomial(9, 2) == 36);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(17, 0) == 1);
  CHECK(binomial(6, 7) == 0);
  CHECK(binomial(6, -1) == 0);
  CHECK(binomial(60, 30) == Count("118264581564861424"));
  // Pascal's rule
  for (int a = 1; a < 40; ++a)
    for (int b = 1; b <= a; ++b) CHECK(binomial(a, b) == binomial(a - 1, b) + binomial(a - 1, b - 1));
}

TEST_CASE("euler_phi matches unit counting") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  for (int d = 1; d <= 300; ++d) CHECK(euler_phi(d) == oracle::totient(d));
  CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);
}

TEST_CASE("num_indecomposables") {
  for (int m = 1; m <= 6; ++m) CHECK(num_indecomposables(1, m) == m + 1);
  CHECK(num_indecomposables(3, 1) == 9);
  CHECK(num_indecomposables(3, 2) == 15);
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; m <= 4; ++m) CHECK(num_indecomposables(n, m) == oracle::m_diagonals(n + 1, m).size());
}

TEST_CASE("fuss_catalan_tilting") {
  for (int m = 1; m <= 6; ++m) CHECK(fuss_catalan_tilting(1, m) == m + 1);
  CHECK(fuss_catalan_tilting(2, 2) == 12);
  CHECK(fuss_catalan_tilting(3, 1) == 14);
  const int catalan_seq[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 5; ++n) CHECK(fuss_catalan_tilting(n, 1) == catalan_seq[n]);
  CHECK(fuss_catalan_tilting(2, 2) == oracle::angulations(3, 2).size());
  CHECK(fuss_catalan_tilting(3, 1) == oracle::angulations(4, 1).size());
  CHECK(fuss_catalan_tilting(3, 3) == oracle::angulations(4, 3).size());
}

TEST_CASE("u_power_coeff") {
  CHECK(u_power_coeff(3, 1, 2) == 2);
  CHECK(u_power_coeff(4, 2, 3) == 6);
  for (int t = 1; t <= 5; ++t) CHECK(u_power_coeff(5, t, t) == 1);
  CHECK(u_power_coeff(5, 3, 2) == 0);

  SUBCASE("agrees with repeated convolution of the t = 1 series") {
    for (int s = 3; s <= 6; ++s) {
      const auto u = oracle::u_series(s, 12);
      for (int i = 1; i <= 12; ++i) CHECK(u_power_coeff(s, 1, i) == u[i]);
      for (int t = 1; t <= 4; ++t) {
        const auto ut = oracle::convolve_power(u, t);
        for (int i = 1; i <= 12; ++i) {
          INFO("s=" << s << " t=" << t << " i=" << i);
          CHECK(u_power_coeff(s, t, i) == ut[i]);
        }
      }
    }
  }
}

TEST_CASE("f_coeff counts clusters rooted at a cell") {
  CHECK(f_coeff(4, 3) == 5);
  CHECK(f_coeff(3, 3) == 3);
  for (int s = 3; s <= 9; ++s) CHECK(f_coeff(s, 1) == 1);

  CHECK(oracle::cell_rooted_orbits(3, 2) == 5);
  CHECK(oracle::cell_rooted_orbits(3, 1) == 3);
  for (int m = 1; m <= 3; ++m) {
    for (int k = 2; k <= 6 - m; ++k) {
      INFO("s=" << m + 2 << " k=" << k);
      CHECK(f_coeff(m + 2, k) == oracle::cell_rooted_orbits(k, m));
    }
  }
}

TEST_CASE("h_correction_coeff") {
  CHECK(h_correction_coeff(4, 3) == 3);
  for (int s = 3; s <= 8; ++s) CHECK(h_correction_coeff(s, 1) == 0);
  CHECK(h_correction_coeff(3, 2) == 0);
  // odd k has no second term
  CHECK(h_correction_coeff(5, 5) == ExactRational(binomial(20, 3), 5));
  CHECK(h_correction_coeff(5, 4) == ExactRational(binomial(16, 2) - binomial(8, 1), 4));
}

TEST_CASE("count_coloured_quivers") {
  CHECK(count_coloured_quivers(2, 1) == 1);
  CHECK(count_coloured_quivers(4, 2) == 25);
  // The reference table prints this as 873654669882575000 (15 significant digits).
  CHECK(count_coloured_quivers(20, 4) == Count("873654669882574580"));
  for (int m = 1; m <= 6; ++m) CHECK(count_coloured_quivers(1, m) == 1);

  SUBCASE("equals rotation orbits of angulations") {
    for (int n = 1; n <= 5; ++n)
      for (int m = 1; m <= 3 && n + m <= 7; ++m) {
        INFO("n=" << n << " m=" << m);
        CHECK(count_coloured_quivers(n, m) == oracle::rotation_orbits(n + 1, m));
      }
  }

  SUBCASE("rooted series minus correction") {
    for (int n = 1; n <= 40; ++n)
      for (int m = 1; m <= 8; ++m) {
        const ExactRational lhs(count_coloured_quivers(n, m));
        CHECK(lhs == ExactRational(f_coeff(m + 2, n + 1)) - h_correction_coeff(m + 2, n + 1));
      }
  }
}

TEST_CASE("count_m1_specialization") {
  CHECK(count_m1_specialization(2) == 1);
  CHECK(count_m1_specialization(3) == 4);
  CHECK(count_m1_specialization(7) == 150);
  for (int n = 2; n <= 40; ++n) CHECK(count_m1_specialization(n) == count_coloured_quivers(n, 1));
}

TEST_CASE("integrality failures are reported") {
  CHECK_THROWS_AS(to_integer(ExactRational(7, 2), "half"), IntegralityError);
  CHECK(to_integer(ExactRational(8, 2), "four") == 4);
}
