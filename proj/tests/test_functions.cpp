#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fcgram/errors.hpp"
#include "fcgram/functions.hpp"
#include "fcgram/oracle.hpp"

using namespace fcgram;

TEST_CASE("functions: registry values") {
    const TestFunction c = make_function("const1");
    CHECK(c.eval(0.3) == 1.0);
    CHECK(c.derivative(0, 0.3) == 1.0);
    CHECK(c.derivative(4, 0.9) == 0.0);

    const TestFunction e = make_function("expx");
    CHECK(e.eval(1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK(e.derivative(5, 0.5) == doctest::Approx(std::exp(0.5)).epsilon(1e-14));

    const TestFunction r = make_function("runge", 200.0, 0.1);
    // ((1/3 - 1/3)^2 + eps^2)^{-1} = eps^{-2} = 100.
    CHECK(r.eval(1.0 / 3.0) == doctest::Approx(100.0).epsilon(1e-12));

    const TestFunction o = make_function("osc54");
    CHECK(o.eval(0.0) == doctest::Approx(0.16381508883516019).epsilon(1e-15));

    const TestFunction ck = make_function("cosk", 10.0);
    CHECK(ck.eval(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("functions: ids are enumerable and unknown ids are named") {
    const auto ids = builtin_function_ids();
    for (const char* want : {"const1", "osc54", "expx", "cosk", "runge"})
        CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
    CHECK_THROWS_AS(make_function("mystery"), UnknownFunction);
    try {
        make_function("mystery");
    } catch (const UnknownFunction& e) {
        CHECK(std::string(e.what()).find("const1") != std::string::npos);
    }
}

TEST_CASE("functions: derivative orders beyond the jet are rejected") {
    const TestFunction o = make_function("osc54");
    CHECK_THROWS_AS(o.derivative(10, 0.5), DomainError);
    CHECK_THROWS_AS(o.derivative(-1, 0.5), DomainError);
    CHECK(o.derivative(9, 0.25) == o.derivative(9, 0.25));  // finite, deterministic
}

TEST_CASE("functions: analytic derivatives agree with finite differences") {
    std::mt19937 rng(60221023);
    std::uniform_real_distribution<double> dist(0.05, 0.95);
    struct Probe {
        const char* id;
        double k, eps;
    };
    for (const Probe probe : {Probe{"osc54", 200.0, 0.1}, Probe{"expx", 200.0, 0.1},
                              Probe{"cosk", 6.0, 0.1}, Probe{"runge", 200.0, 0.25}}) {
        const TestFunction f = make_function(probe.id, probe.k, probe.eps);
        for (int trial = 0; trial < 20; ++trial) {
            const double x = dist(rng);
            for (int m = 1; m <= 2; ++m) {
                const double want = f.derivative(m, x);
                const double got = oracle::fd_derivative(f.eval, x, m, 1e-3);
                CHECK(std::abs(got - want) <= 1e-5 * std::max(1.0, std::abs(want)));
            }
        }
    }
}

TEST_CASE("functions: third derivatives stay consistent on a smooth case") {
    const TestFunction e = make_function("expx");
    for (double x : {0.1, 0.5, 0.9}) {
        const double got = oracle::fd_derivative(e.eval, x, 3, 1e-2);
        CHECK(std::abs(got - e.derivative(3, x)) <= 1e-5 * std::exp(x));
    }
}
