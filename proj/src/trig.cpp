#include "fcgram/trig.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdint>
#include <mutex>

#include "fcgram/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fcgram {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& fftw_mutex() {
    static std::mutex m;
    return m;
}

void dft_inplace(std::vector<std::complex<double>>& data, int sign) {
    const int N = static_cast<int>(data.size());
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        plan = fftw_plan_dft_1d(N, raw, raw, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_mutex());
        fftw_destroy_plan(plan);
    }
}

}  // namespace

TrigInterpolant fit(const ContinuedSamples& samples) {
    const int N = static_cast<int>(samples.values.size());
    if (N == 0 || N % 2 != 0)
        throw DomainError("fit: sample count must be even, got " + std::to_string(N));

    std::vector<std::complex<double>> data(samples.values.begin(), samples.values.end());
    dft_inplace(data, FFTW_FORWARD);

    TrigInterpolant t;
    t.period = samples.period;
    t.N = N;
    t.coeffs.resize(static_cast<std::size_t>(N));
    for (int l = -N / 2; l < N / 2; ++l) {
        const int src = (l + N) % N;
        t.coeffs[static_cast<std::size_t>(l + N / 2)] =
            data[static_cast<std::size_t>(src)] / static_cast<double>(N);
    }
    return t;
}

double eval(const TrigInterpolant& t, double x) {
    const double b = t.period_value();
    const int half = t.N / 2;
    std::complex<double> acc = 0.0;
    for (int l = -half + 1; l < half; ++l) {
        const double phase = 2.0 * kPi * static_cast<double>(l) * x / b;
        acc += t.coeff(l) * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    const double edge = std::cos(kPi * static_cast<double>(t.N) * x / b);
    return acc.real() + t.coeff(-half).real() * edge;
}

std::vector<double> eval_points(const TrigInterpolant& t, const std::vector<double>& xs,
                                Execution exec) {
    std::vector<double> out(xs.size());
    const std::int64_t count = static_cast<std::int64_t>(xs.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] = eval(t, xs[static_cast<std::size_t>(i)]);
    } else {
        for (std::int64_t i = 0; i < count; ++i)
            out[static_cast<std::size_t>(i)] = eval(t, xs[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<double> eval_fine_grid(const TrigInterpolant& t, int N_eval, Execution exec,
                                   bool full_period) {
    if (N_eval < t.N)
        throw DomainError("eval_fine_grid: N_eval must be at least N = " + std::to_string(t.N));

    std::int64_t padded = 0;
    const bool fast = t.period.times_is_integral(N_eval, padded) && padded > N_eval;
    if (fast) {
        const int N2 = static_cast<int>(padded);
        const int half = t.N / 2;
        std::vector<std::complex<double>> spectrum(static_cast<std::size_t>(N2), 0.0);
        for (int l = -half + 1; l < half; ++l)
            spectrum[static_cast<std::size_t>((l + N2) % N2)] += t.coeff(l);
        // Split the unpaired edge mode into +-N/2 to keep values real.
        const std::complex<double> edge = t.coeff(-half) * 0.5;
        spectrum[static_cast<std::size_t>((N2 - half) % N2)] += edge;
        spectrum[static_cast<std::size_t>(half % N2)] += edge;
        dft_inplace(spectrum, FFTW_BACKWARD);
        const int take = full_period ? N2 : N_eval + 1;
        std::vector<double> out(static_cast<std::size_t>(take));
        for (int j = 0; j < take; ++j) out[static_cast<std::size_t>(j)] =
            spectrum[static_cast<std::size_t>(j)].real();
        return out;
    }

    const double b = t.period_value();
    const int take = full_period ? static_cast<int>(std::ceil(b * N_eval)) : N_eval + 1;
    std::vector<double> xs(static_cast<std::size_t>(take));
    for (int j = 0; j < take; ++j)
        xs[static_cast<std::size_t>(j)] = static_cast<double>(j) / N_eval;
    return eval_points(t, xs, exec);
}

double kernel_L(int j, int n, int C, double x) {
    const int N = n + C + 1;
    const double u_raw = static_cast<double>(j) - static_cast<double>(n) * x;
    const double u = u_raw - static_cast<double>(N) * std::round(u_raw / N);
    if (std::abs(u) < 1e-9) return 1.0;
    const double ratio = std::sin(kPi * (N - 1) * u / N) / std::sin(kPi * u / N);
    return (ratio + std::cos(kPi * u)) / static_cast<double>(N);
}

}  // namespace fcgram
