#pragma once

#include <string>
#include <vector>

#include "fcgram/gram.hpp"
#include "fcgram/rational.hpp"

namespace fcgram {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;  ///< worst deviation or failure description
};

/// Individual invariant checks (exposed so tests can feed tampered inputs).
Check check_gram_orthonormality(const GramBasis& basis, double tol);
Check check_gram_exact_agreement(int d, double tol);
Check check_hermite_direct(int r, double u1, double u2, double tol);
Check check_dft_oracle(int N, double tol);
Check check_kernel_oracle(int n, int C, double tol);
Check check_interpolation_property(double tol);
Check check_const_identity(double tol);
Check check_rate_window(const std::string& function_id, int d, const Rational& b,
                        const std::vector<int>& n_list, double tol);

/// level "fast": the structural invariant suite (seconds).
/// level "full": fast plus the convergence-rate assertions for the
/// oscillatory and exponential studies at both period choices.
std::vector<Check> run_verify(const std::string& level);

}  // namespace fcgram
