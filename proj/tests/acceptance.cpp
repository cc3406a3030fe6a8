// Acceptance gate: six end-to-end checks of the library's headline guarantees,
// run against the shipped defaults. Each prints one [PASS]/[FAIL] line with
// the measured quantities; the exit status is the number of failed checks.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "fcgram/convergence.hpp"
#include "fcgram/functions.hpp"
#include "fcgram/rational.hpp"
#include "fcgram/verify.hpp"

using namespace fcgram;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(const char* pattern, ...) {
    char buf[256];
    va_list args;
    va_start(args, pattern);
    std::vsnprintf(buf, sizeof buf, pattern, args);
    va_end(args);
    return buf;
}

// 1. Interior convergence orders: for the oscillatory probe the median
//    observed order over n = 512..2048 must sit within 0.35 of d for every
//    (d, period) combination.
Outcome interior_orders() {
    double worst = -1.0;
    std::string worst_at;
    for (int d : {3, 4, 5}) {
        for (const Rational& b : {Rational(2), Rational(17, 16)}) {
            StudyConfig cfg;
            cfg.function_id = "osc54";
            cfg.d = d;
            cfg.b = b;
            cfg.n_list = {256, 512, 1024, 2048};
            const auto rows = run_study(cfg);
            std::vector<double> nocs;
            for (const auto& r : rows)
                if (r.noc) nocs.push_back(*r.noc);
            const double med = median(nocs);
            const double dev = std::abs(med - d);
            if (dev > worst) {
                worst = dev;
                worst_at = fmt("d=%d b=%s (median %.2f)", d, b.str().c_str(), med);
            }
        }
    }
    return {worst <= 0.35,
            fmt("worst |median noc - d| = %.3f at %s, limit 0.35", worst, worst_at.c_str())};
}

// 2. Error magnitudes at three recorded reference points, within 10x.
Outcome reference_errors() {
    struct Probe {
        const char* fn;
        int d;
        int n;
        double ref;
    };
    const Probe probes[] = {{"expx", 4, 512, 2.40e-11},
                            {"osc54", 3, 1024, 4.51e-8},
                            {"runge", 5, 512, 5.61e-12}};
    bool ok = true;
    std::string detail;
    for (const Probe& p : probes) {
        StudyConfig cfg;
        cfg.function_id = p.fn;
        cfg.d = p.d;
        cfg.b = Rational(2);
        cfg.n_list = {p.n};
        const double e = run_study(cfg)[0].e_n;
        const double ratio = e / p.ref;
        ok = ok && ratio >= 0.1 && ratio <= 10.0;
        if (!detail.empty()) detail += "; ";
        detail += fmt("%s n=%d: e=%.3g (%.2fx of %.2g)", p.fn, p.n, e, ratio, p.ref);
    }
    return {ok, detail};
}

// 3. Classical blend-to-zero baseline: error plateau (no convergence) at
//    fixed C, but strict decrease when C grows with n.
Outcome classical_plateau() {
    StudyConfig cfg;
    cfg.function_id = "const1";
    cfg.d = 6;
    cfg.method = Method::leastsquares;
    cfg.c_rule = "fixed:25";
    cfg.n_list = {8, 16, 32, 64};
    cfg.N_eval = 8192;
    const auto plateau = run_study(cfg);
    bool ok = true;
    double e_lo = plateau[0].e_n, e_hi = plateau[0].e_n, max_noc = -1e30;
    for (const auto& r : plateau) {
        ok = ok && r.e_n >= 1e-13 && r.e_n <= 1e-9;
        e_lo = std::min(e_lo, r.e_n);
        e_hi = std::max(e_hi, r.e_n);
        if (r.noc) max_noc = std::max(max_noc, *r.noc);
    }
    ok = ok && max_noc <= 0.5;

    cfg.c_rule = "quarter";
    cfg.n_list = {16, 32, 64, 128};
    const auto growing = run_study(cfg);
    bool decreasing = true;
    for (std::size_t i = 1; i < growing.size(); ++i)
        decreasing = decreasing && growing[i].e_n < growing[i - 1].e_n;
    ok = ok && decreasing;

    return {ok, fmt("fixed-C e in [%.2g, %.2g], max noc %.2f (limit 0.5); growing-C %s, "
                    "final e=%.2g",
                    e_lo, e_hi, max_noc, decreasing ? "strictly decreasing" : "NOT decreasing",
                    growing.back().e_n)};
}

// 4. End-interval projection orders: observed order of the m-th derivative
//    error within 0.4 of d - m for d = 4 and 5.
Outcome projection_orders() {
    const TestFunction f = make_function("expx");
    std::vector<double> hs;
    for (int k = 64; k <= 1024; k *= 2) hs.push_back(1.0 / k);
    double worst = -1.0;
    std::string worst_at;
    bool ok = true;
    for (int d : {4, 5}) {
        const ProjectionRates st = run_projection_rate_study(f, d, hs);
        for (int m = 0; m < d; ++m) {
            const double order = st.orders[static_cast<std::size_t>(m)];
            if (std::isnan(order)) {
                ok = false;
                worst_at = fmt("d=%d m=%d saturated", d, m);
                continue;
            }
            const double dev = std::abs(order - (d - m));
            if (dev > worst) {
                worst = dev;
                worst_at = fmt("d=%d m=%d (order %.2f)", d, m, order);
            }
        }
    }
    ok = ok && worst <= 0.4;
    return {ok, fmt("worst |order - (d-m)| = %.3f at %s, limit 0.4", worst, worst_at.c_str())};
}

// 5. Structural invariant suite against the exact-arithmetic oracles.
Outcome invariant_suite() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Check> checks = run_verify("fast");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    int green = 0;
    std::string first_fail;
    for (const Check& c : checks) {
        if (c.passed)
            ++green;
        else if (first_fail.empty())
            first_fail = c.name + ": " + c.detail;
    }
    const bool ok = green == static_cast<int>(checks.size()) && secs < 10.0;
    std::string detail = fmt("%d/%zu checks green in %.1fs (limit 10s)", green, checks.size(),
                             secs);
    if (!first_fail.empty()) detail += "; first failure " + first_fail;
    return {ok, detail};
}

// 6. Decay of the blended extension toward the exact-derivative reference
//    extension: observed order within 0.4 of d at m = 0.
Outcome extension_gap() {
    const ExtensionGapStudy st =
        run_extension_gap_study(make_function("expx"), 4, 15, {16, 32, 64, 128, 256});
    const double order = st.orders[0];
    const double dev = std::abs(order - 4.0);
    return {dev <= 0.4, fmt("observed order %.3f, target 4 +/- 0.4", order)};
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*fn)();
        double time_limit;  // seconds; 0 = unlimited
    };
    const Entry entries[] = {
        {"interior-orders", interior_orders, 120.0},
        {"reference-errors", reference_errors, 0.0},
        {"classical-plateau", classical_plateau, 0.0},
        {"projection-orders", projection_orders, 0.0},
        {"invariant-suite", invariant_suite, 0.0},
        {"extension-gap", extension_gap, 0.0},
    };

    int failures = 0;
    int index = 0;
    for (const Entry& entry : entries) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = entry.fn();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool passed = out.passed;
        std::string detail = out.detail;
        if (entry.time_limit > 0.0 && secs >= entry.time_limit) {
            passed = false;
            detail += fmt(" [over time limit %.0fs]", entry.time_limit);
        }
        std::printf("[%s] %d %-18s %s (%.1fs)\n", passed ? "PASS" : "FAIL", index, entry.name,
                    detail.c_str(), secs);
        std::fflush(stdout);
        if (!passed) ++failures;
    }
    std::printf("acceptance: %d/6 passed\n", 6 - failures);
    return failures;
}
