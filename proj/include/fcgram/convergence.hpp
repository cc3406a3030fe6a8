#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcgram/functions.hpp"
#include "fcgram/params.hpp"
#include "fcgram/rational.hpp"
#include "fcgram/trig.hpp"

namespace fcgram {

struct ConvergenceRow {
    int n = 0;
    double e_n = 0.0;
    std::optional<double> noc;  ///< present iff the previous row had n/2
};

/// Full description of one study run; round-trips losslessly through the
/// JSON manifest (see study.hpp).
struct StudyConfig {
    std::string function_id = "osc54";
    double k = 200.0;   ///< cosk frequency
    double eps = 0.1;   ///< runge width
    int d = 5;
    Rational b = Rational(2);
    std::vector<int> n_list;
    Method method = Method::hermite;
    std::string c_rule = "from-b";  ///< "from-b" | "fixed:<C>" | "quarter"
    int s = 1;
    int N_eval = 32768;
    int Z = 12;          ///< least-squares zero-window length
    int n_over = 20;     ///< least-squares oversampling
    int M = 0;           ///< least-squares modes; 0 = default d+Z-3
    double svd_cutoff = 1e-12;
    Execution exec = Execution::parallel;
};

/// max_j |t(z_j) - f(z_j)| / max_j |f(z_j)| over z_j = j/N_eval, j = 0..N_eval.
double relative_error(const TestFunction& f, const TrigInterpolant& t, int N_eval,
                      Execution exec = Execution::parallel);

/// log2(e_prev / e_cur); both inputs must be positive.
double noc(double e_prev, double e_cur);

/// Builds FcParams for one study row, applying the configured C rule.
FcParams study_params(const StudyConfig& cfg, int n);

/// Full pipeline per n: sample, continue, fit, measure. Rows ordered by n.
std::vector<ConvergenceRow> run_study(const StudyConfig& cfg);

/// Observed orders of the end-interval projection error per derivative m.
struct ProjectionRates {
    int d = 0;
    std::vector<double> h_list;
    /// errors[i][m] = sup |(P f)^{(m)} - f^{(m)}| on [0, (d-1)h_i].
    std::vector<std::vector<double>> errors;
    std::vector<double> orders;    ///< per m; NaN when saturated
    std::vector<bool> saturated;   ///< true when every level sat at round-off
};

/// h_list must be successively halving. Pairs where either level sits at the
/// m-dependent round-off floor are excluded from the median order.
ProjectionRates run_projection_rate_study(const TestFunction& f, int d,
                                          const std::vector<double>& h_list);

/// Decay of the blended extension toward the exact-derivative reference
/// extension, at fixed C (so b shrinks to 1 as n grows).
struct ExtensionGapStudy {
    int d = 0;
    int C = 0;
    std::vector<int> n_list;
    /// gaps[i][m] = max over [1, b_i] of |(p - p_ref)^{(m)}|.
    std::vector<std::vector<double>> gaps;
    std::vector<double> orders;  ///< median doubling order per m
};

ExtensionGapStudy run_extension_gap_study(const TestFunction& f, int d, int C,
                                          const std::vector<int>& n_list);

}  // namespace fcgram
