#include "cquiver/counting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cquiver {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

Count exact_div(const Count& num, const Count& den, const char* what) {
  Count q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw IntegralityError(std::string(what) + ": inexact division");
  return q;
}

}  // namespace

Count binomial(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Count result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: product of i consecutive integers over i!
  }
  return result;
}

Count euler_phi(long long d) {
  require(d >= 1, "euler_phi: argument must be positive");
  long long result = d;
  long long rest = d;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

Count to_integer(const ExactRational& r, const char* what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw IntegralityError(std::string(what) + ": value is not an integer");
  }
  return boost::multiprecision::numerator(r);
}

Count num_indecomposables(long long n, long long m) {
  require(n >= 1 && m >= 1, "num_indecomposables: need n >= 1, m >= 1");
  Count numer = Count(m) * n * (n + 1) + 2 * Count(n);
  return exact_div(numer, 2, "num_indecomposables");
}

Count fuss_catalan(long long r, long long s) {
  require(r >= 1 && s >= 2, "fuss_catalan: need r >= 1, s >= 2");
  return exact_div(binomial(r * (s - 1), r - 1), r, "fuss_catalan");
}

Count fuss_catalan_tilting(long long n, long long m) {
  require(n >= 1 && m >= 1, "fuss_catalan_tilting: need n >= 1, m >= 1");
  return exact_div(binomial((n + 1) * (m + 1), n), n + 1, "fuss_catalan_tilting");
}

Count u_power_coeff(long long s, long long t, long long i) {
  require(s >= 3 && t >= 1 && i >= 1, "u_power_coeff: need s >= 3, t >= 1, i >= 1");
  if (i < t) return 0;
  return exact_div(t * binomial(i * (s - 1), i - t), i, "u_power_coeff");
}

Count f_coeff(long long s, long long k) {
  require(s >= 3 && k >= 1, "f_coeff: need s >= 3, k >= 1");
  if (k == 1) return 1;
  const long long g = std::gcd(s, k - 1);
  ExactRational sum = 0;
  for (long long d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    const long long top = std::min(s / d, (k - 1) / d);
    for (long long t = 1; t <= top; ++t) {
      ExactRational term(euler_phi(d) * d * t, Count(s) * (k - 1));
      term *= binomial(s / d, t) * binomial((s - 1) * ((k - 1) / d), (k - 1) / d - t);
      sum += term;
    }
  }
  return to_integer(sum, "f_coeff");
}

ExactRational h_correction_coeff(long long s, long long k) {
  require(s >= 3 && k >= 1, "h_correction_coeff: need s >= 3, k >= 1");
  ExactRational value(binomial((s - 1) * k, k - 2), Count(k));
  if (k % 2 == 0) value -= ExactRational(binomial((s - 1) * (k / 2), k / 2 - 1), Count(k));
  return value;
}

Count count_coloured_quivers(long long n, long long m) {
  require(n >= 1 && m >= 1, "count_coloured_quivers: need n >= 1, m >= 1");
  const long long s = m + 2;
  const long long g = std::gcd(n, s);
  ExactRational total = 0;
  for (long long d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    const long long top = std::min(s / d, n / d);
    for (long long t = 1; t <= top; ++t) {
      ExactRational term(euler_phi(d) * d * t, Count(s) * n);
      term *= binomial(s / d, t) * binomial((m + 1) * (n / d), n / d - t);
      total += term;
    }
  }
  total -= ExactRational(binomial((m + 1) * (n + 1), n - 1), Count(n + 1));
  if ((n + 1) % 2 == 0) {
    total += ExactRational(binomial((m + 1) * (n + 1) / 2, (n + 1) / 2 - 1), Count(n + 1));
  }
  return to_integer(total, "count_coloured_quivers");
}

Count catalan(long long i) {
  require(i >= 0, "catalan: need i >= 0");
  return exact_div(binomial(2 * i, i), i + 1, "catalan");
}

Count count_m1_specialization(long long n) {
  require(n >= 2, "count_m1_specialization: need n >= 2");
  ExactRational total(catalan(n + 1), Count(n + 3));
  if ((n + 1) % 2 == 0) total += ExactRational(catalan((n + 1) / 2), Count(2));
  if (n % 3 == 0) total += ExactRational(2 * catalan(n / 3), Count(3));
  return to_integer(total, "count_m1_specialization");
}

}  // namespace cquiver
