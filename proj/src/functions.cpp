#include "fcgram/functions.hpp"

#include <cmath>
#include <cstddef>

#include "fcgram/errors.hpp"

namespace fcgram {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr int kMaxOrder = 9;

void check_order(int m) {
    if (m < 0 || m > kMaxOrder)
        throw DomainError("derivative order must be in 0.." + std::to_string(kMaxOrder));
}

// Taylor coefficients f_j = f^{(j)}(x)/j!, j = 0..m, for f = exp(g):
// f_j = (1/j) sum_{i=1..j} i * g_i * f_{j-i}.
double exp_jet_derivative(const std::vector<double>& g, int m) {
    std::vector<double> f(static_cast<std::size_t>(m) + 1, 0.0);
    f[0] = std::exp(g[0]);
    for (int j = 1; j <= m; ++j) {
        double acc = 0.0;
        for (int i = 1; i <= j; ++i)
            acc += static_cast<double>(i) * g[static_cast<std::size_t>(i)] *
                   f[static_cast<std::size_t>(j - i)];
        f[static_cast<std::size_t>(j)] = acc / j;
    }
    double mf = 1.0;
    for (int i = 2; i <= m; ++i) mf *= i;
    return f[static_cast<std::size_t>(m)] * mf;
}

// Taylor coefficients of a*sin(w x + phi) about x: a * w^j / j! * sin(.+ j pi/2).
void add_sin_jet(std::vector<double>& g, double a, double w, double phi, double x) {
    double wj = 1.0, jf = 1.0;
    for (int j = 0; j < static_cast<int>(g.size()); ++j) {
        if (j > 0) {
            wj *= w;
            jf *= j;
        }
        g[static_cast<std::size_t>(j)] += a * wj / jf * std::sin(w * x + phi + j * kPi / 2.0);
    }
}

}  // namespace

TestFunction make_function(const std::string& id, double k, double eps) {
    TestFunction f;
    f.id = id;
    if (id == "const1") {
        f.description = "f(x) = 1";
        f.eval = [](double) { return 1.0; };
        f.derivative = [](int m, double) {
            check_order(m);
            return m == 0 ? 1.0 : 0.0;
        };
    } else if (id == "expx") {
        f.description = "f(x) = exp(x)";
        f.eval = [](double x) { return std::exp(x); };
        f.derivative = [](int m, double x) {
            check_order(m);
            return std::exp(x);
        };
    } else if (id == "osc54") {
        f.description = "f(x) = exp(sin(5.4 pi x - 2.7 pi) - cos(2 pi x))";
        f.eval = [](double x) {
            return std::exp(std::sin(5.4 * kPi * x - 2.7 * kPi) - std::cos(2.0 * kPi * x));
        };
        f.derivative = [](int m, double x) {
            check_order(m);
            std::vector<double> g(static_cast<std::size_t>(m) + 1, 0.0);
            add_sin_jet(g, 1.0, 5.4 * kPi, -2.7 * kPi, x);
            // -cos(2 pi x) = sin(2 pi x - pi/2)
            add_sin_jet(g, 1.0, 2.0 * kPi, -kPi / 2.0, x);
            return exp_jet_derivative(g, m);
        };
    } else if (id == "cosk") {
        f.description = "f(x) = exp(-cos(k x)), k = " + std::to_string(k);
        f.eval = [k](double x) { return std::exp(-std::cos(k * x)); };
        f.derivative = [k](int m, double x) {
            check_order(m);
            std::vector<double> g(static_cast<std::size_t>(m) + 1, 0.0);
            // -cos(k x) = sin(k x - pi/2)
            add_sin_jet(g, 1.0, k, -kPi / 2.0, x);
            return exp_jet_derivative(g, m);
        };
    } else if (id == "runge") {
        f.description = "f(x) = ((x - 1/3)^2 + eps^2)^{-1}, eps = " + std::to_string(eps);
        f.eval = [eps](double x) {
            const double u = x - 1.0 / 3.0;
            return 1.0 / (u * u + eps * eps);
        };
        f.derivative = [eps](int m, double x) {
            check_order(m);
            // Reciprocal jet: q has Taylor coefficients (q0, q1, 1, 0, ...).
            const double u = x - 1.0 / 3.0;
            const double q0 = u * u + eps * eps, q1 = 2.0 * u;
            std::vector<double> f_jet(static_cast<std::size_t>(m) + 1, 0.0);
            f_jet[0] = 1.0 / q0;
            for (int j = 1; j <= m; ++j) {
                double acc = q1 * f_jet[static_cast<std::size_t>(j - 1)];
                if (j >= 2) acc += f_jet[static_cast<std::size_t>(j - 2)];
                f_jet[static_cast<std::size_t>(j)] = -acc / q0;
            }
            double mf = 1.0;
            for (int i = 2; i <= m; ++i) mf *= i;
            return f_jet[static_cast<std::size_t>(m)] * mf;
        };
    } else {
        throw UnknownFunction("unknown function id '" + id +
                              "' (known: const1, osc54, expx, cosk, runge)");
    }
    return f;
}

std::vector<std::string> builtin_function_ids() {
    return {"const1", "osc54", "expx", "cosk", "runge"};
}

}  // namespace fcgram
