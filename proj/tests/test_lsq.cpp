#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "fcgram/continuation.hpp"
#include "fcgram/errors.hpp"
#include "fcgram/gram.hpp"
#include "fcgram/lsq.hpp"
#include "fcgram/params.hpp"

using namespace fcgram;

namespace {

// l2 residual of the full collocation system (match and zero rows together);
// this is the quantity the least-squares solve minimizes.
double full_residual(const LsSystem& sys, const LsExtension& e) {
    double acc = 0.0;
    const int cols = 2 * e.M + 1;
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        std::complex<double> v = 0.0;
        for (int k = 0; k < cols; ++k)
            v += sys.rows[i][static_cast<std::size_t>(k)] * e.coeffs[static_cast<std::size_t>(k)];
        if (i < static_cast<std::size_t>(sys.match_rows))
            v -= sys.alpha[static_cast<std::size_t>(e.ell)][i];
        acc += std::norm(v);
    }
    return std::sqrt(acc);
}

int count_lines(const std::string& path) {
    std::ifstream in(path);
    int count = 0;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++count;
    return count;
}

}  // namespace

TEST_CASE("lsq: collocation system structure at the defaults") {
    const LsGrid grid;  // d=6, s=1, C=25, Z=12, E=25, n_over=20
    CHECK(grid.period() == 68);
    const LsSystem sys = build_ls_system(grid, 15);
    CHECK(sys.match_rows == 101);
    CHECK(sys.zero_rows == 240);
    REQUIRE(sys.rows.size() == 341);
    REQUIRE(sys.rows[0].size() == 31);

    for (const auto& entry : sys.rows[0]) {
        CHECK(entry.real() == 1.0);
        CHECK(entry.imag() == 0.0);
    }

    REQUIRE(sys.alpha.size() == 6);
    for (const double a : sys.alpha[0])
        CHECK(a == doctest::Approx(1.0 / std::sqrt(6.0)).epsilon(1e-13));
    CHECK(sys.alpha[1][0] == doctest::Approx(-2.5 * std::sqrt(12.0 / 210.0)).epsilon(1e-13));
}

TEST_CASE("lsq: system validation") {
    LsGrid narrow;
    narrow.Z = 5;  // below d = 6
    CHECK_THROWS_AS(build_ls_system(narrow, 10), DomainError);

    const LsGrid grid;
    CHECK_THROWS_AS(build_ls_system(grid, 171), DomainError);  // 343 columns > 341 rows
    CHECK_THROWS_AS(build_ls_system(grid, 0), DomainError);

    LsGrid bad_over;
    bad_over.n_over = 0;
    CHECK_THROWS_AS(build_ls_system(bad_over, 10), DomainError);
}

TEST_CASE("lsq: solver residuals at the defaults") {
    const LsGrid grid;
    const LsSystem sys = build_ls_system(grid, 15);
    for (int ell = 0; ell < grid.d; ++ell) {
        const LsExtension ext = solve_ls_extension(sys, ell, 1e-12);
        CHECK(ext.ell == ell);
        CHECK(ext.M == 15);
        CHECK(ext.period == 68);
        REQUIRE(ext.coeffs.size() == 31);
        // The fit quality degrades with the polynomial degree; the tightest
        // bounds hold for the constant.
        CHECK(ext.match_residual <= (ell == 0 ? 1e-8 : 1e-5));
        CHECK(ext.zero_residual <= (ell == 0 ? 1e-6 : 1e-5));
    }
}

TEST_CASE("lsq: enlarging the mode set cannot worsen the fit") {
    const LsGrid grid;
    double prev = -1.0;
    for (const int M : {15, 20, 30}) {
        const LsSystem sys = build_ls_system(grid, M);
        const LsExtension ext = solve_ls_extension(sys, 1, 1e-12);
        const double res = full_residual(sys, ext);
        if (prev >= 0.0) CHECK(res <= prev * 1.01 + 1e-10);
        prev = res;
    }
}

TEST_CASE("lsq: assembly and solve are deterministic and free of h") {
    const LsGrid grid;
    const LsSystem a = build_ls_system(grid, 15);
    const LsSystem b = build_ls_system(grid, 15);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i)
        for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
            CHECK(a.rows[i][j].real() == b.rows[i][j].real());
            CHECK(a.rows[i][j].imag() == b.rows[i][j].imag());
        }
    const LsExtension ea = solve_ls_extension(a, 2, 1e-12);
    const LsExtension eb = solve_ls_extension(b, 2, 1e-12);
    for (std::size_t k = 0; k < ea.coeffs.size(); ++k) {
        CHECK(ea.coeffs[k].real() == eb.coeffs[k].real());
        CHECK(ea.coeffs[k].imag() == eb.coeffs[k].imag());
    }
}

TEST_CASE("lsq: degenerate and invalid solves are rejected") {
    LsSystem sys;
    sys.M = 1;
    sys.match_rows = 2;
    sys.zero_rows = 1;
    sys.rows.assign(3, std::vector<std::complex<double>>(3, 0.0));
    sys.alpha.assign(6, std::vector<double>(2, 0.0));
    CHECK_THROWS_AS(solve_ls_extension(sys, 0, 1e-12), NumericalError);
    CHECK_THROWS_AS(solve_ls_extension(sys, -1, 1e-12), DomainError);
    CHECK_THROWS_AS(solve_ls_extension(sys, 6, 1e-12), DomainError);
    CHECK_THROWS_AS(solve_ls_extension(sys, 0, 0.0), DomainError);
    CHECK_THROWS_AS(solve_ls_extension(sys, 0, 1.0), DomainError);
}

TEST_CASE("lsq: classical continuation of the constant") {
    FcParams p = params_from_C(32, 6, 25, Method::leastsquares);
    REQUIRE(p.ls.has_value());
    CHECK(p.M == 15);  // d + Z - 3 at the default Z = 12
    const GramBasis basis = build_gram_basis(6);
    const std::vector<LsExtension> ls = ls_basis_for(*p.ls, p.M, p.svd_cutoff);
    REQUIRE(ls.size() == 6);

    const std::vector<double> ones(33, 1.0);
    double max_imag = -1.0;
    const ContinuedSamples fc = classic_continue(ones, p, basis, ls, &max_imag);
    REQUIRE(fc.values.size() == 58);
    CHECK(fc.n == 32);
    CHECK(fc.C == 25);
    CHECK(fc.period == Rational(58, 32));

    for (int j = 0; j <= 32; ++j) CHECK(fc.values[static_cast<std::size_t>(j)] == 1.0);

    // Blend-to-zero structure: a shallow dip, back near f(0) = 1 at the last
    // node before the periodic wrap.
    double lo = 2.0, hi = -2.0;
    for (int j = 33; j <= 57; ++j) {
        lo = std::min(lo, fc.values[static_cast<std::size_t>(j)]);
        hi = std::max(hi, fc.values[static_cast<std::size_t>(j)]);
    }
    CHECK(lo >= 0.9);
    CHECK(hi <= 1.0 + 1e-6);
    CHECK(std::abs(fc.values[57] - 1.0) <= 1e-5);
    CHECK(max_imag >= 0.0);
    CHECK(max_imag <= 1e-5);
}

TEST_CASE("lsq: classical continuation argument checks") {
    FcParams p = params_from_C(32, 6, 25, Method::leastsquares);
    const GramBasis basis = build_gram_basis(6);
    const std::vector<LsExtension> ls = ls_basis_for(*p.ls, p.M, p.svd_cutoff);
    const std::vector<double> ones(33, 1.0);

    CHECK_THROWS_AS(classic_continue(std::vector<double>(32, 1.0), p, basis, ls), DomainError);
    CHECK_THROWS_AS(classic_continue(ones, p, basis, std::vector<LsExtension>(ls.begin(), ls.begin() + 3)),
                    DomainError);

    FcParams hermite_p = params_from_C(32, 6, 25, Method::hermite);
    CHECK_THROWS_AS(classic_continue(ones, hermite_p, basis, ls), DomainError);

    FcParams skew = p;
    skew.ls->E = 10;
    CHECK_THROWS_AS(classic_continue(ones, skew, basis, ls), DomainError);
}

TEST_CASE("lsq: file cache stores, loads, and survives corruption") {
    char tmpl[] = "/tmp/fc_cache_XXXXXX";
    REQUIRE(mkdtemp(tmpl) != nullptr);
    const std::string dir(tmpl);
    REQUIRE(setenv("FC_CACHE_DIR", dir.c_str(), 1) == 0);

    LsGrid small;
    small.d = 3;
    small.Z = 5;
    small.n_over = 6;
    const int M = 5;

    // Fresh solve writes the coefficient table: header plus d*(2M+1) rows.
    small.C = 7;
    small.E = 7;
    ls_basis_for(small, M, 1e-12);
    const std::string path_a = dir + "/ls_d3_s1_C7_Z5_E7_no6_M5_cut1e-12.csv";
    CHECK(count_lines(path_a) == 1 + 3 * 11);
    {
        std::ifstream in(path_a);
        std::string header;
        REQUIRE(std::getline(in, header));
        CHECK(header == "ell,k,re,im");
    }

    // A pre-seeded valid file is loaded instead of recomputed: all-zero
    // coefficients come back verbatim, and residuals are refilled from them.
    small.C = 9;
    small.E = 9;
    const std::string path_b = dir + "/ls_d3_s1_C9_Z5_E9_no6_M5_cut1e-12.csv";
    {
        std::ofstream out(path_b);
        out << "ell,k,re,im\n";
        for (int ell = 0; ell < 3; ++ell)
            for (int k = -M; k <= M; ++k) out << ell << "," << k << ",0,0\n";
    }
    const std::vector<LsExtension> loaded = ls_basis_for(small, M, 1e-12);
    REQUIRE(loaded.size() == 3);
    for (const auto& e : loaded)
        for (const auto& c : e.coeffs) {
            CHECK(c.real() == 0.0);
            CHECK(c.imag() == 0.0);
        }
    CHECK(loaded[0].match_residual > 1.0);  // residual of the zero function

    // A corrupt file is ignored, recomputed, and rewritten.
    small.C = 11;
    small.E = 11;
    const std::string path_c = dir + "/ls_d3_s1_C11_Z5_E11_no6_M5_cut1e-12.csv";
    {
        std::ofstream out(path_c);
        out << "not,a,header\n1,2,3\n";
    }
    const std::vector<LsExtension> recomputed = ls_basis_for(small, M, 1e-12);
    double largest = 0.0;
    for (const auto& e : recomputed)
        for (const auto& c : e.coeffs) largest = std::max(largest, std::abs(c));
    CHECK(largest > 1e-3);
    CHECK(recomputed[0].match_residual <= 1e-2);  // the short d=3 window fits to ~1e-4
    {
        std::ifstream in(path_c);
        std::string header;
        REQUIRE(std::getline(in, header));
        CHECK(header == "ell,k,re,im");
    }
    CHECK(count_lines(path_c) == 1 + 3 * 11);

    REQUIRE(unsetenv("FC_CACHE_DIR") == 0);
}
