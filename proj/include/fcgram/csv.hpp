#pragma once

#include <string>
#include <vector>

#include "fcgram/continuation.hpp"
#include "fcgram/convergence.hpp"
#include "fcgram/trig.hpp"

namespace fcgram {

/// All writers emit 17-significant-digit scientific notation (exact double
/// round-trip) and throw IoError when the file cannot be opened.

/// Columns: n,e_n,noc_n (noc blank on the first row).
void write_convergence_csv(const std::string& path, const std::vector<ConvergenceRow>& rows);

/// Markdown table with the same content.
std::string render_convergence_md(const std::vector<ConvergenceRow>& rows);
void write_convergence_md(const std::string& path, const std::vector<ConvergenceRow>& rows);

/// Columns: x,f,tau_n_f,error over the evaluation grid.
void write_approx_csv(const std::string& path, const std::vector<double>& xs,
                      const std::vector<double>& f_vals, const std::vector<double>& tau_vals);

/// Columns: j,x_j,value — one row per continued sample.
void write_samples_csv(const std::string& path, const ContinuedSamples& samples);

/// Columns: x,phi_LS,phi_H for one Gram index.
void write_compare_csv(const std::string& path, const std::vector<double>& xs,
                       const std::vector<double>& phi_ls, const std::vector<double>& phi_h);

/// Columns: l,re,im — the interpolant's coefficients.
void write_coeff_csv(const std::string& path, const TrigInterpolant& t);

}  // namespace fcgram
