#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace cquiver {

using Count = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// Raised when a quantity that must be an integer is not.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// binom(a, b); zero when b < 0 or b > a.
Count binomial(long long a, long long b);

Count euler_phi(long long d);

/// Returns r as a Count, throwing IntegralityError if r has a denominator.
Count to_integer(const ExactRational& r, const char* what);

/// Indecomposable objects of the m-cluster category of type A_n:
/// (m n (n+1) + 2n) / 2.
Count num_indecomposables(long long n, long long m);

/// m-cluster tilting objects of type A_n, i.e. labelled (m+2)-angulations of
/// a polygon with n+1 cells: binom((n+1)(m+1), n) / (n+1).
Count fuss_catalan_tilting(long long n, long long m);

/// s-angulations with r cells rooted at an outer edge:
/// binom(r(s-1), r-1) / r.
Count fuss_catalan(long long r, long long s);

/// Coefficient of x^i in U_s(x)^t: (t/i) binom(i(s-1), i-t), zero for i < t.
Count u_power_coeff(long long s, long long t, long long i);

/// Coefficient of x^k in the cell-rooted series F_s (Polya sum over the
/// cyclic group of order s).
Count f_coeff(long long s, long long k);

/// Coefficient of x^k in (U_s(x)^2 - U_s(x^2)) / 2.
ExactRational h_correction_coeff(long long s, long long k);

/// Size of the m-mutation class of coloured quivers of type A_n (closed form).
Count count_coloured_quivers(long long n, long long m);

/// The m = 1 specialisation in terms of Catalan numbers.
Count count_m1_specialization(long long n);

Count catalan(long long i);

}  // namespace cquiver
