#pragma once

#include <vector>

#include "fcgram/gram.hpp"
#include "fcgram/polynomial.hpp"

namespace fcgram {

// Two-point Hermite basis: r+1 polynomials of degree 2r+1 with
// (p_m)^{(j)}(u1) = delta_{jm} and a root of multiplicity r+1 at u2,
// for 0 <= j, m <= r.
struct HermiteBasis {
    int r = 0;
    double u1 = 0.0;
    double u2 = 1.0;
    // basis[m] = p_m^{u1,u2}; all share the frame (center u1, scale u2-u1).
    std::vector<Polynomial> basis;
};

HermiteBasis hermite_basis(int r, double u1, double u2);

// Normalized unit-interval tables: q01[m] are the tau-monomial coefficients of
// the basis matching at tau=0 and vanishing to order r at tau=1; q10[m](tau) =
// (-1)^m q01[m](1-tau) matches at tau=1. Integer convolutions divided by m!.
std::vector<std::vector<double>> hermite_q01_table(int r);
std::vector<std::vector<double>> hermite_q10_table(int r);

// max over a 1000-point grid of |p_0^{u1,u2} + p_0^{u2,u1} - 1|.
double hermite_partition_check(int r, double u1, double u2);

// Extension of the left Gram polynomial onto [1,b]: derivatives 0..d-1 at x=b
// match p_ell^L at x=0, derivatives 0..d-1 vanish at x=1. hb_rev must be built
// at (u1=b, u2=1) with r = d-1.
Polynomial left_extension_poly(const GramBasis& basis, const HermiteBasis& hb_rev,
                               int ell, int s, double h);

// Extension of the right Gram polynomial onto [1,b]: derivatives at x=1 match
// p_ell^R at x=1, vanish at x=b. hb_fwd must be built at (u1=1, u2=b), r = d-1.
Polynomial right_extension_poly(const GramBasis& basis, const HermiteBasis& hb_fwd,
                                int ell, int s, double h);

// Blend of exact endpoint data: derivatives 0..d-1 at x=1 equal f_derivs_1 and
// at x=b equal f_derivs_0 (the periodic wrap to x=0). Frame (1, b-1).
Polynomial reference_extension(const std::vector<double>& f_derivs_0,
                               const std::vector<double>& f_derivs_1, int d, double b);

// Piecewise polynomial on [breakpoints.front(), breakpoints.back()].
struct PiecewiseExtension {
    std::vector<double> breakpoints;
    std::vector<Polynomial> pieces;
    double operator()(double x) const;
};

// The four-branch diagnostic extension of one Gram polynomial across a full
// period window [0, (d+C+Z+E)h] (stride 1): the Gram polynomial itself, a
// Hermite blend down to zero, a zero plateau, and a Hermite blend back up to
// the left-end derivative data.
PiecewiseExtension build_phi_H(const GramBasis& basis, int ell, int d, int C, int Z,
                               int E, double h);

}  // namespace fcgram
