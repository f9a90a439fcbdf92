#pragma once

#include <functional>
#include <vector>

namespace widths {

struct NelderMeadOptions {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double initial_scale = 0.1;
    double diameter_tolerance = 1e-12;
    int max_iterations = 20000;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free simplex descent from `start`; the initial simplex offsets
/// each coordinate by `initial_scale`. Stops when the simplex diameter drops
/// below `diameter_tolerance` or after `max_iterations`.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> start, const NelderMeadOptions& options = {});

} // namespace widths
