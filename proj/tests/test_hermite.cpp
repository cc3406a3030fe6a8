#include "doctest.h"

#include <cmath>
#include <vector>

#include "fcgram/errors.hpp"
#include "fcgram/gram.hpp"
#include "fcgram/hermite.hpp"
#include "fcgram/oracle.hpp"
#include "fcgram/polynomial.hpp"

using namespace fcgram;

TEST_CASE("hermite: order zero on the unit interval") {
    const HermiteBasis hb = hermite_basis(0, 0.0, 1.0);
    REQUIRE(hb.basis.size() == 1);
    CHECK(hb.basis[0](0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(hb.basis[0](1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(hb.basis[0].degree() == 1);
}

TEST_CASE("hermite: delta property of the derivative matrix") {
    const HermiteBasis hb = hermite_basis(2, 1.0, 2.0);
    for (int m = 0; m <= 2; ++m) {
        CHECK(hb.basis[static_cast<std::size_t>(m)].degree() == 5);
        for (int j = 0; j <= 2; ++j) {
            const double at_u1 = hb.basis[static_cast<std::size_t>(m)].derivative(j)(1.0);
            const double at_u2 = hb.basis[static_cast<std::size_t>(m)].derivative(j)(2.0);
            CHECK(std::abs(at_u1 - (j == m ? 1.0 : 0.0)) <= 1e-10);
            CHECK(std::abs(at_u2) <= 1e-10);
        }
    }
}

TEST_CASE("hermite: delta property survives a short interval") {
    const int r = 5;
    const double u1 = 1.0, u2 = 1.0625;
    const HermiteBasis hb = hermite_basis(r, u1, u2);
    const double gap = std::abs(u1 - u2);
    const double tol = 1e-9 * std::max(1.0, std::pow(gap, -(2.0 * r + 1.0)));
    for (int m = 0; m <= r; ++m) {
        for (int j = 0; j <= r; ++j) {
            const double at_u1 = hb.basis[static_cast<std::size_t>(m)].derivative(j)(u1);
            const double at_u2 = hb.basis[static_cast<std::size_t>(m)].derivative(j)(u2);
            CHECK(std::abs(at_u1 - (j == m ? 1.0 : 0.0)) <= tol);
            CHECK(std::abs(at_u2) <= tol);
        }
    }
}

TEST_CASE("hermite: structural root at the far endpoint") {
    const HermiteBasis hb = hermite_basis(3, 0.0, 2.5);
    for (int m = 0; m <= 3; ++m) CHECK(std::abs(hb.basis[static_cast<std::size_t>(m)](2.5)) <= 1e-12);
}

TEST_CASE("hermite: partition of unity") {
    CHECK(hermite_partition_check(0, 0.0, 1.0) <= 1e-12);
    CHECK(hermite_partition_check(3, 1.0, 2.0) <= 1e-10);
    CHECK(hermite_partition_check(5, 1.0, 1.0625) <= 1e-7);
}

TEST_CASE("hermite: reversed table is the reflected forward table") {
    for (int r : {1, 3, 5}) {
        const auto q01 = hermite_q01_table(r);
        const auto q10 = hermite_q10_table(r);
        for (int m = 0; m <= r; ++m) {
            const Polynomial fwd(q01[static_cast<std::size_t>(m)]);
            const Polynomial rev(q10[static_cast<std::size_t>(m)]);
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            for (double tau : {0.0, 0.125, 0.5, 0.875, 1.0})
                CHECK(rev(tau) == doctest::Approx(sign * fwd(1.0 - tau)).epsilon(1e-12));
        }
    }
}

TEST_CASE("hermite: left Gram extension carries the end data across the gap") {
    const int d = 6, C = 25;
    const double h = 1.0 / 256.0;
    const double b = 1.0 + (C + 1) * h;
    const GramBasis basis = build_gram_basis(d);
    const HermiteBasis hb_rev = hermite_basis(d - 1, b, 1.0);

    const Polynomial e0 = left_extension_poly(basis, hb_rev, 0, 1, h);
    CHECK(e0(b) == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-12));
    CHECK(std::abs(e0(1.0)) <= 1e-12);

    const Polynomial e1 = left_extension_poly(basis, hb_rev, 1, 1, h);
    const double slope = std::sqrt(12.0 / 210.0) / h;
    CHECK(e1(b) == doctest::Approx(-2.5 * std::sqrt(12.0 / 210.0)).epsilon(1e-10));
    CHECK(e1.derivative(1)(b) == doctest::Approx(slope).epsilon(1e-8));

    // d-fold vanishing at x = 1, with head-room for the short-interval scaling.
    const double vanish_tol = 1e-8 * std::pow(h, -(d - 1.0));
    for (int ell = 0; ell < d; ++ell) {
        const Polynomial e = left_extension_poly(basis, hb_rev, ell, 1, h);
        for (int m = 0; m < d; ++m) CHECK(std::abs(e.derivative(m)(1.0)) <= vanish_tol);
    }
}

TEST_CASE("hermite: right Gram extension matches at 1 and dies at b") {
    const int d = 5, C = 15;
    const double h = 1.0 / 64.0;
    const double b = 1.0 + (C + 1) * h;
    const GramBasis basis = build_gram_basis(d);
    const HermiteBasis hb_fwd = hermite_basis(d - 1, 1.0, b);
    for (int ell = 0; ell < d; ++ell) {
        const Polynomial e = right_extension_poly(basis, hb_fwd, ell, 1, h);
        const double want = basis.scaled_left[static_cast<std::size_t>(ell)](d - 1.0);
        CHECK(e(1.0) == doctest::Approx(want).epsilon(1e-10));
        CHECK(std::abs(e(b)) <= 1e-7);
    }
}

TEST_CASE("hermite: extension endpoint derivatives match the Gram data") {
    for (int d = 2; d <= 7; ++d) {
        const int C = 9;
        const double h = 1.0 / 128.0;
        const double b = 1.0 + (C + 1) * h;
        const GramBasis basis = build_gram_basis(d);
        const HermiteBasis hb_rev = hermite_basis(d - 1, b, 1.0);
        const HermiteBasis hb_fwd = hermite_basis(d - 1, 1.0, b);
        for (int ell = 0; ell < d; ++ell) {
            const Polynomial pl = left_gram_poly(basis, ell, 1, h);
            const Polynomial pr = right_gram_poly(basis, ell, 1, h);
            const Polynomial el = left_extension_poly(basis, hb_rev, ell, 1, h);
            const Polynomial er = right_extension_poly(basis, hb_fwd, ell, 1, h);
            for (int m = 0; m < d; ++m) {
                const double want_l = pl.derivative(m)(0.0);
                const double got_l = el.derivative(m)(b);
                CHECK(std::abs(got_l - want_l) <= 1e-8 * std::max(1.0, std::abs(want_l)));
                const double want_r = pr.derivative(m)(1.0);
                const double got_r = er.derivative(m)(1.0);
                CHECK(std::abs(got_r - want_r) <= 1e-8 * std::max(1.0, std::abs(want_r)));
            }
        }
    }
}

TEST_CASE("hermite: reference extension of a constant is constant") {
    const std::vector<double> derivs = {1.0, 0.0, 0.0, 0.0};
    const Polynomial p = reference_extension(derivs, derivs, 4, 2.0);
    for (double x = 1.0; x <= 2.0; x += 0.1) CHECK(p(x) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("hermite: reference extension of the identity map") {
    // f(x) = x with d = 2 and b = 2: match (1, 1) at x = 1 and (0, 1) at the wrap.
    const Polynomial p = reference_extension({0.0, 1.0}, {1.0, 1.0}, 2, 2.0);
    CHECK(p(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(p.derivative(1)(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(p(2.0)) <= 1e-13);
    CHECK(p.derivative(1)(2.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermite: reference extension joins the exponential smoothly") {
    const int d = 4;
    const double b = 2.0;
    std::vector<double> at1(4), at0(4);
    for (int m = 0; m < d; ++m) {
        at1[static_cast<std::size_t>(m)] = std::exp(1.0);
        at0[static_cast<std::size_t>(m)] = 1.0;
    }
    const Polynomial p = reference_extension(at0, at1, d, b);
    // Differentiate each smooth piece near the junctions and compare; the
    // per-order steps keep both truncation and round-off below the tolerance.
    const double steps[4] = {0.0, 1e-4, 1e-3, 5e-3};
    const auto pf = [&](double x) { return p(x); };
    const auto ef = [](double x) { return std::exp(x); };
    for (int m = 0; m < d; ++m) {
        const double step = steps[m];
        const double p_at_1 = (m == 0) ? p(1.0) : oracle::fd_derivative(pf, 1.0, m, step);
        const double f_at_1 = (m == 0) ? std::exp(1.0) : oracle::fd_derivative(ef, 1.0, m, step);
        CHECK(std::abs(p_at_1 - f_at_1) <= 1e-5);
        const double p_at_b = (m == 0) ? p(b) : oracle::fd_derivative(pf, b, m, step);
        const double f_at_0 = (m == 0) ? 1.0 : oracle::fd_derivative(ef, 0.0, m, step);
        CHECK(std::abs(p_at_b - f_at_0) <= 1e-5);
    }
}

TEST_CASE("hermite: four-branch diagnostic extension") {
    const int d = 5, C = 25, Z = 12, E = 25;
    const double h = 1.0 / 256.0;
    const GramBasis basis = build_gram_basis(d);

    const PiecewiseExtension phi0 = build_phi_H(basis, 0, d, C, Z, E, h);
    REQUIRE(phi0.breakpoints.size() == 5);
    CHECK(phi0.breakpoints[0] == 0.0);
    CHECK(phi0.breakpoints[1] == (d - 1) * h);
    CHECK(phi0.breakpoints[2] == (d + C) * h);
    CHECK(phi0.breakpoints[3] == (d + C + Z - 1) * h);
    CHECK(phi0.breakpoints[4] == (d + C + Z + E) * h);

    // First branch: the left Gram polynomial itself.
    const Polynomial pl0 = left_gram_poly(basis, 0, 1, h);
    for (double x = 0.0; x <= (d - 1) * h; x += h / 3.0)
        CHECK(phi0(x) == doctest::Approx(pl0(x)).epsilon(1e-13));

    // Second branch carries the value down to zero.
    CHECK(phi0((d - 1) * h) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
    CHECK(std::abs(phi0((d + C) * h)) <= 1e-12);

    // Third branch: identically zero.
    for (double x : {(d + C + 1) * h, (d + C + 5) * h, (d + C + Z - 1.2) * h})
        CHECK(phi0(x) == 0.0);

    // Fourth branch rises to the left-end data at the period end.
    CHECK(std::abs(phi0((d + C + Z - 1) * h)) <= 1e-12);
    CHECK(phi0((d + C + Z + E) * h) == doctest::Approx(pl0(0.0)).epsilon(1e-10));

    // Continuity at every interior breakpoint, for every ell.
    for (int ell = 0; ell < d; ++ell) {
        const PiecewiseExtension phi = build_phi_H(basis, ell, d, C, Z, E, h);
        for (std::size_t k = 1; k + 1 < phi.breakpoints.size(); ++k) {
            const double x = phi.breakpoints[k];
            CHECK(std::abs(phi.pieces[k - 1](x) - phi.pieces[k](x)) <= 1e-9);
        }
    }

    CHECK_THROWS_AS(phi0(-h), DomainError);
    CHECK_THROWS_AS(phi0((d + C + Z + E + 1) * h), DomainError);
}

TEST_CASE("hermite: argument validation") {
    CHECK_THROWS_AS(hermite_basis(0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(hermite_basis(10, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(hermite_basis(-1, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(hermite_q01_table(10), DomainError);
    CHECK_THROWS_AS(hermite_q10_table(-1), DomainError);

    const GramBasis basis = build_gram_basis(4);
    const HermiteBasis wrong_r = hermite_basis(4, 2.0, 1.0);
    CHECK_THROWS_AS(left_extension_poly(basis, wrong_r, 0, 1, 0.1), DomainError);
    const HermiteBasis hb = hermite_basis(3, 2.0, 1.0);
    CHECK_THROWS_AS(left_extension_poly(basis, hb, 4, 1, 0.1), DomainError);
    CHECK_THROWS_AS(reference_extension({1.0}, {1.0, 0.0}, 2, 2.0), DomainError);
    CHECK_THROWS_AS(reference_extension({1.0, 0.0}, {1.0, 0.0}, 2, 1.0), DomainError);
    CHECK_THROWS_AS(build_phi_H(basis, 0, 5, 25, 12, 25, 0.01), DomainError);
    CHECK_THROWS_AS(build_phi_H(basis, 0, 4, 0, 12, 25, 0.01), DomainError);
}
