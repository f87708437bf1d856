#ifndef QSEL_NELDER_MEAD_HPP
#define QSEL_NELDER_MEAD_HPP

#include <functional>
#include <vector>

namespace qsel {

struct NelderMeadOptions {
    int max_evaluations = 1000;
    double f_spread_tol = 1e-8; // stop when max_i f_i - min_i f_i over the simplex drops below this
    // secondary stop guard: the simplex must also have collapsed spatially,
    // otherwise equal f values straddling an optimum stop the search early
    double x_spread_tol = 1e-6;
};

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0.0;
    int evaluations = 0;
    bool converged = false; // false when the evaluation budget ran out first
};

// Downhill simplex (minimization): reflection 1.0, expansion 2.0,
// contraction 0.5, shrink 0.5. Initial simplex is x0 plus one vertex per
// coordinate, perturbed by 0.1 (0.00025 when that coordinate is zero).
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

} // namespace qsel

#endif
