#pragma once

#include <complex>
#include <vector>

#include "fcgram/continuation.hpp"
#include "fcgram/rational.hpp"

namespace fcgram {

/// Kernel switch: `parallel` runs the OpenMP data-parallel path, `serial`
/// the reference loop kept for testing. Both produce bit-identical results
/// (per-point work is independent; reductions use max only).
enum class Execution { serial, parallel };

/// Trigonometric interpolant of one period of samples: coefficients
/// c_l for l = -N/2..N/2-1 of the period-b interpolant.
struct TrigInterpolant {
    Rational period = Rational(1);  ///< b, kept exact for grid-size checks
    int N = 0;                      ///< sample count n+C+1, even
    std::vector<std::complex<double>> coeffs;  ///< index i holds l = i - N/2

    double period_value() const { return period.value(); }
    std::complex<double> coeff(int l) const {
        return coeffs[static_cast<std::size_t>(l + N / 2)];
    }
};

/// Forward DFT of the continued samples, normalized by 1/N.
TrigInterpolant fit(const ContinuedSamples& samples);

/// sum_{|l|<N/2} c_l e^{2 pi i l x / b} + c_{-N/2} cos(pi N x / b).
double eval(const TrigInterpolant& t, double x);

/// Pointwise evaluation at many abscissae.
std::vector<double> eval_points(const TrigInterpolant& t, const std::vector<double>& xs,
                                Execution exec = Execution::parallel);

/// Values at z_j = j/N_eval, j = 0..N_eval (the [0,1] window), or over the
/// whole period [0,b) at spacing 1/N_eval when full_period is set. Uses a
/// zero-padded inverse FFT when N_eval*b is an integer, else pointwise eval.
std::vector<double> eval_fine_grid(const TrigInterpolant& t, int N_eval,
                                   Execution exec = Execution::parallel,
                                   bool full_period = false);

/// The cardinal interpolation kernel L_j on the n+C+1 point grid.
double kernel_L(int j, int n, int C, double x);

}  // namespace fcgram
