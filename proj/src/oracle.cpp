#include "fcgram/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "fcgram/errors.hpp"
#include "fcgram/trig.hpp"

namespace fcgram {
namespace oracle {

BigRational RationalPolynomial::eval(const BigRational& u) const {
    BigRational acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * u + coeffs[k];
    return acc;
}

Polynomial RationalPolynomial::to_polynomial() const {
    std::vector<double> c(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        c[k] = static_cast<double>(coeffs[k]);
    return Polynomial(std::move(c));
}

BigRational node_inner(const RationalPolynomial& a, const RationalPolynomial& b, int d) {
    BigRational acc = 0;
    for (int j = 0; j < d; ++j) acc += a.eval(j) * b.eval(j);
    return acc;
}

std::vector<RationalPolynomial> exact_gram_unnormalized(int d) {
    if (d < 2 || d > 8) throw DomainError("exact_gram_unnormalized: d must be in 2..8");
    std::vector<RationalPolynomial> q;
    for (int ell = 0; ell < d; ++ell) {
        RationalPolynomial cur;
        cur.coeffs.assign(static_cast<std::size_t>(ell) + 1, 0);
        cur.coeffs[static_cast<std::size_t>(ell)] = 1;  // u^ell
        for (int k = 0; k < ell; ++k) {
            const BigRational w =
                node_inner(cur, q[static_cast<std::size_t>(k)], d) /
                node_inner(q[static_cast<std::size_t>(k)], q[static_cast<std::size_t>(k)], d);
            for (std::size_t i = 0; i < q[static_cast<std::size_t>(k)].coeffs.size(); ++i)
                cur.coeffs[i] -= w * q[static_cast<std::size_t>(k)].coeffs[i];
        }
        q.push_back(std::move(cur));
    }
    return q;
}

std::vector<Polynomial> hermite_solve_direct(int r, double u1, double u2) {
    if (r < 0 || r > 6) throw DomainError("hermite_solve_direct: r must be in 0..6");
    if (u1 == u2) throw DomainError("hermite_solve_direct: u1 and u2 must differ");
    const int dim = 2 * r + 2;
    const BigRational ru1(u1), ru2(u2);  // doubles convert exactly

    // Row block 0..r: p^{(j)}(u1); rows r+1..2r+1: p^{(j)}(u2).
    auto deriv_row = [&](int j, const BigRational& u, std::vector<BigRational>& row) {
        row.assign(static_cast<std::size_t>(dim), 0);
        for (int k = j; k < dim; ++k) {
            BigRational fall = 1;
            for (int i = 0; i < j; ++i) fall *= (k - i);
            BigRational up = 1;
            for (int i = 0; i < k - j; ++i) up *= u;
            row[static_cast<std::size_t>(k)] = fall * up;
        }
    };

    std::vector<std::vector<BigRational>> A(static_cast<std::size_t>(dim));
    for (int j = 0; j <= r; ++j) deriv_row(j, ru1, A[static_cast<std::size_t>(j)]);
    for (int j = 0; j <= r; ++j) deriv_row(j, ru2, A[static_cast<std::size_t>(r + 1 + j)]);

    std::vector<Polynomial> basis;
    for (int m = 0; m <= r; ++m) {
        // Gaussian elimination with a fresh augmented copy per right-hand side.
        std::vector<std::vector<BigRational>> M(A);
        std::vector<BigRational> rhs(static_cast<std::size_t>(dim), 0);
        rhs[static_cast<std::size_t>(m)] = 1;
        for (int col = 0; col < dim; ++col) {
            int pivot = -1;
            for (int row = col; row < dim; ++row)
                if (M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                    pivot = row;
                    break;
                }
            if (pivot < 0)
                throw NumericalError("hermite_solve_direct: singular system");
            std::swap(M[static_cast<std::size_t>(col)], M[static_cast<std::size_t>(pivot)]);
            std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(pivot)]);
            const BigRational piv =
                M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            for (int row = 0; row < dim; ++row) {
                if (row == col) continue;
                const BigRational f =
                    M[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] / piv;
                if (f == 0) continue;
                for (int k = col; k < dim; ++k)
                    M[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] -=
                        f * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
                rhs[static_cast<std::size_t>(row)] -= f * rhs[static_cast<std::size_t>(col)];
            }
        }
        std::vector<double> c(static_cast<std::size_t>(dim));
        for (int k = 0; k < dim; ++k)
            c[static_cast<std::size_t>(k)] = static_cast<double>(
                rhs[static_cast<std::size_t>(k)] /
                M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]);
        basis.emplace_back(std::move(c));
    }
    return basis;
}

std::vector<std::complex<double>> naive_dft(const std::vector<double>& samples) {
    const int N = static_cast<int>(samples.size());
    if (N == 0 || N % 2 != 0) throw DomainError("naive_dft: need an even sample count");
    const double two_pi = 8.0 * std::atan(1.0);
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(N));
    for (int l = -N / 2; l < N / 2; ++l) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < N; ++j) {
            const double phase = -two_pi * static_cast<double>(l) * j / N;
            acc += samples[static_cast<std::size_t>(j)] *
                   std::complex<double>(std::cos(phase), std::sin(phase));
        }
        coeffs[static_cast<std::size_t>(l + N / 2)] = acc / static_cast<double>(N);
    }
    return coeffs;
}

double kernel_interp(const std::vector<double>& samples, int n, int C, double x) {
    if (static_cast<int>(samples.size()) != n + C + 1)
        throw DomainError("kernel_interp: need n+C+1 samples");
    double acc = 0.0;
    for (int j = 0; j <= n + C; ++j)
        acc += samples[static_cast<std::size_t>(j)] * kernel_L(j, n, C, x);
    return acc;
}

double fd_derivative(const std::function<double(double)>& f, double x, int m, double step) {
    if (m < 0 || m > 6) throw DomainError("fd_derivative: m must be in 0..6");
    if (!(step > 0.0)) throw DomainError("fd_derivative: step must be positive");
    auto central = [&](double h) {
        // Central m-th difference: sum_i (-1)^i C(m,i) f(x + (m/2 - i) h) / h^m.
        double acc = 0.0;
        double binom = 1.0;
        for (int i = 0; i <= m; ++i) {
            const double node = x + (0.5 * m - i) * h;
            acc += (i % 2 == 0 ? binom : -binom) * f(node);
            binom = binom * (m - i) / (i + 1);
        }
        return acc / std::pow(h, m);
    };
    const double d1 = central(step), d2 = central(step / 2.0);
    return (4.0 * d2 - d1) / 3.0;  // one Richardson level on the O(h^2) error
}

}  // namespace oracle
}  // namespace fcgram
