#include "fcgram/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "fcgram/errors.hpp"

namespace fcgram {

namespace {

constexpr int kMaxR = 9;

std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
    return acc;
}

// Integer tau-coefficients of m! * q01_m: tau^m (1-tau)^{r+1} sum_{l<=r-m} C(r+l,r) tau^l.
std::vector<std::int64_t> q01_numerator(int r, int m) {
    std::vector<std::int64_t> down(static_cast<std::size_t>(r) + 2);  // (1-tau)^{r+1}
    for (int j = 0; j <= r + 1; ++j)
        down[static_cast<std::size_t>(j)] = (j % 2 == 0 ? 1 : -1) * binom(r + 1, j);
    std::vector<std::int64_t> series(static_cast<std::size_t>(r - m) + 1);
    for (int l = 0; l <= r - m; ++l) series[static_cast<std::size_t>(l)] = binom(r + l, r);

    std::vector<std::int64_t> prod(down.size() + series.size() - 1, 0);
    for (std::size_t i = 0; i < down.size(); ++i)
        for (std::size_t j = 0; j < series.size(); ++j) prod[i + j] += down[i] * series[j];

    std::vector<std::int64_t> out(static_cast<std::size_t>(2 * r + 2), 0);  // degree 2r+1
    for (std::size_t i = 0; i < prod.size(); ++i) out[i + static_cast<std::size_t>(m)] = prod[i];
    return out;
}

double factorial(int m) {
    double acc = 1.0;
    for (int i = 2; i <= m; ++i) acc *= i;
    return acc;
}

}  // namespace

std::vector<std::vector<double>> hermite_q01_table(int r) {
    if (r < 0 || r > kMaxR)
        throw DomainError("hermite_q01_table: r must be in 0.." + std::to_string(kMaxR));
    std::vector<std::vector<double>> table;
    for (int m = 0; m <= r; ++m) {
        const auto num = q01_numerator(r, m);
        std::vector<double> c(num.size());
        const double mf = factorial(m);
        for (std::size_t k = 0; k < num.size(); ++k) c[k] = static_cast<double>(num[k]) / mf;
        table.push_back(std::move(c));
    }
    return table;
}

std::vector<std::vector<double>> hermite_q10_table(int r) {
    if (r < 0 || r > kMaxR)
        throw DomainError("hermite_q10_table: r must be in 0.." + std::to_string(kMaxR));
    std::vector<std::vector<double>> table;
    for (int m = 0; m <= r; ++m) {
        const auto num = q01_numerator(r, m);
        // (-1)^m q01_m(1 - tau): integer binomial recomposition.
        std::vector<std::int64_t> out(num.size(), 0);
        for (std::size_t k = 0; k < num.size(); ++k) {
            for (std::size_t j = 0; j <= k; ++j) {
                const std::int64_t term =
                    num[k] * binom(static_cast<int>(k), static_cast<int>(j));
                out[j] += (j % 2 == 0 ? term : -term);
            }
        }
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        const double mf = factorial(m);
        std::vector<double> c(out.size());
        for (std::size_t k = 0; k < out.size(); ++k)
            c[k] = sign * static_cast<double>(out[k]) / mf;
        table.push_back(std::move(c));
    }
    return table;
}

HermiteBasis hermite_basis(int r, double u1, double u2) {
    if (r < 0 || r > kMaxR)
        throw DomainError("hermite_basis: r must be in 0.." + std::to_string(kMaxR));
    if (u1 == u2) throw DomainError("hermite_basis: u1 and u2 must differ");
    HermiteBasis hb;
    hb.r = r;
    hb.u1 = u1;
    hb.u2 = u2;
    const double scale = u2 - u1;
    const auto q01 = hermite_q01_table(r);
    double sm = 1.0;  // scale^m
    for (int m = 0; m <= r; ++m) {
        std::vector<double> c = q01[static_cast<std::size_t>(m)];
        for (auto& ck : c) ck *= sm;
        hb.basis.emplace_back(std::move(c), u1, scale);
        sm *= scale;
    }
    return hb;
}

double hermite_partition_check(int r, double u1, double u2) {
    const Polynomial p0 = hermite_basis(r, u1, u2).basis[0];
    const Polynomial p0_rev = hermite_basis(r, u2, u1).basis[0];
    const double lo = std::min(u1, u2), hi = std::max(u1, u2);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double u = lo + (hi - lo) * static_cast<double>(i) / 999.0;
        worst = std::max(worst, std::abs(p0(u) + p0_rev(u) - 1.0));
    }
    return worst;
}

namespace {

void check_extension_args(const GramBasis& basis, const HermiteBasis& hb, int ell,
                          const char* who) {
    if (hb.r != basis.d - 1)
        throw DomainError(std::string(who) + ": Hermite order r=" + std::to_string(hb.r) +
                          " does not match d-1=" + std::to_string(basis.d - 1));
    if (ell < 0 || ell >= basis.d)
        throw DomainError(std::string(who) + ": ell out of range");
}

}  // namespace

Polynomial left_extension_poly(const GramBasis& basis, const HermiteBasis& hb_rev, int ell,
                               int s, double h) {
    check_extension_args(basis, hb_rev, ell, "left_extension_poly");
    const Polynomial pl = left_gram_poly(basis, ell, s, h);
    Polynomial out = Polynomial::zero(hb_rev.u1, hb_rev.u2 - hb_rev.u1);
    for (int m = 0; m <= ell; ++m)
        out.add_scaled(hb_rev.basis[static_cast<std::size_t>(m)], pl.derivative(m)(0.0));
    return out;
}

Polynomial right_extension_poly(const GramBasis& basis, const HermiteBasis& hb_fwd, int ell,
                                int s, double h) {
    check_extension_args(basis, hb_fwd, ell, "right_extension_poly");
    const Polynomial pr = right_gram_poly(basis, ell, s, h);
    Polynomial out = Polynomial::zero(hb_fwd.u1, hb_fwd.u2 - hb_fwd.u1);
    for (int m = 0; m <= ell; ++m)
        out.add_scaled(hb_fwd.basis[static_cast<std::size_t>(m)], pr.derivative(m)(1.0));
    return out;
}

Polynomial reference_extension(const std::vector<double>& f_derivs_0,
                               const std::vector<double>& f_derivs_1, int d, double b) {
    if (static_cast<int>(f_derivs_0.size()) != d || static_cast<int>(f_derivs_1.size()) != d)
        throw DomainError("reference_extension: derivative lists must have length d");
    if (!(b > 1.0)) throw DomainError("reference_extension: b must exceed 1");
    const auto q01 = hermite_q01_table(d - 1);
    const auto q10 = hermite_q10_table(d - 1);
    std::vector<double> c(static_cast<std::size_t>(2 * d), 0.0);
    double sm = 1.0;  // (b-1)^m
    for (int m = 0; m < d; ++m) {
        const auto& c01 = q01[static_cast<std::size_t>(m)];
        const auto& c10 = q10[static_cast<std::size_t>(m)];
        const double w1 = f_derivs_1[static_cast<std::size_t>(m)] * sm;
        const double w0 = f_derivs_0[static_cast<std::size_t>(m)] * sm;
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += w1 * c01[k] + w0 * c10[k];
        sm *= (b - 1.0);
    }
    return Polynomial(std::move(c), 1.0, b - 1.0);
}

double PiecewiseExtension::operator()(double x) const {
    if (breakpoints.empty() || x < breakpoints.front() || x > breakpoints.back())
        throw DomainError("PiecewiseExtension: x outside domain");
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
    std::size_t idx = static_cast<std::size_t>(it - breakpoints.begin());
    if (idx > 0) --idx;
    if (idx >= pieces.size()) idx = pieces.size() - 1;
    return pieces[idx](x);
}

PiecewiseExtension build_phi_H(const GramBasis& basis, int ell, int d, int C, int Z, int E,
                               double h) {
    if (d != basis.d) throw DomainError("build_phi_H: d does not match the basis");
    if (ell < 0 || ell >= d) throw DomainError("build_phi_H: ell out of range");
    if (C < 1 || Z < 2 || E < 1 || !(h > 0.0))
        throw DomainError("build_phi_H: segment lengths must be positive (C>=1, Z>=2, E>=1, h>0)");

    PiecewiseExtension phi;
    phi.breakpoints = {0.0, (d - 1) * h, (d + C) * h, (d + C + Z - 1) * h, (d + C + Z + E) * h};

    const Polynomial pl = left_gram_poly(basis, ell, 1, h);
    phi.pieces.push_back(pl);

    const HermiteBasis down = hermite_basis(d - 1, (d - 1) * h, (d + C) * h);
    Polynomial blend_down = Polynomial::zero(down.u1, down.u2 - down.u1);
    for (int m = 0; m <= ell; ++m)
        blend_down.add_scaled(down.basis[static_cast<std::size_t>(m)],
                              pl.derivative(m)((d - 1) * h));
    phi.pieces.push_back(std::move(blend_down));

    phi.pieces.push_back(Polynomial::zero());

    const HermiteBasis up = hermite_basis(d - 1, (d + C + Z + E) * h, (d + C + Z - 1) * h);
    Polynomial blend_up = Polynomial::zero(up.u1, up.u2 - up.u1);
    for (int m = 0; m <= ell; ++m)
        blend_up.add_scaled(up.basis[static_cast<std::size_t>(m)], pl.derivative(m)(0.0));
    phi.pieces.push_back(std::move(blend_up));

    return phi;
}

}  // namespace fcgram
