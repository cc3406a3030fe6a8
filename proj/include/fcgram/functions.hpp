#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fcgram {

/// A named test function with analytic derivatives through order 9,
/// enough for every matching order d <= 10 used by the studies.
struct TestFunction {
    std::string id;
    std::string description;
    std::function<double(double)> eval;
    /// m-th derivative at x, m = 0..9 (m = 0 is the value).
    std::function<double(int, double)> derivative;
};

/// Registry lookup. Ids: const1, osc54, expx, cosk (uses k), runge (uses eps).
/// Throws UnknownFunction for anything else.
TestFunction make_function(const std::string& id, double k = 200.0, double eps = 0.1);

std::vector<std::string> builtin_function_ids();

}  // namespace fcgram
