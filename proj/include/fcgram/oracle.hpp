#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <functional>
#include <vector>

#include "fcgram/polynomial.hpp"

namespace fcgram {
namespace oracle {

using BigRational = boost::multiprecision::cpp_rational;

/// Exact-coefficient polynomial in one variable, ascending powers.
struct RationalPolynomial {
    std::vector<BigRational> coeffs;

    BigRational eval(const BigRational& u) const;
    Polynomial to_polynomial() const;  ///< lossy double conversion
};

/// Exact discrete inner product sum_{j=0}^{d-1} a(j) b(j).
BigRational node_inner(const RationalPolynomial& a, const RationalPolynomial& b, int d);

/// Unnormalized Gram-Schmidt over integer nodes 0..d-1 in exact arithmetic;
/// pairwise inner products are exactly zero. d <= 8.
std::vector<RationalPolynomial> exact_gram_unnormalized(int d);

/// Two-point Hermite basis by directly solving the (2r+2)^2 system of
/// derivative conditions in exact rational arithmetic over plain monomials
/// (u1, u2 converted exactly from their double representations). r <= 6.
std::vector<Polynomial> hermite_solve_direct(int r, double u1, double u2);

/// O(N^2) forward DFT, normalized by 1/N, coefficients ordered l = -N/2..N/2-1.
std::vector<std::complex<double>> naive_dft(const std::vector<double>& samples);

/// Direct kernel sum  sum_j samples[j] L_j(x)  on the n+C+1 point grid.
double kernel_interp(const std::vector<double>& samples, int n, int C, double x);

/// m-th derivative by order-2 central differences with one Richardson level.
double fd_derivative(const std::function<double(double)>& f, double x, int m, double step);

}  // namespace oracle
}  // namespace fcgram
