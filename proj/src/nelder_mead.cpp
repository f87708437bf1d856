#include "qsel/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qsel {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
    const int d = static_cast<int>(x0.size());
    if (d < 1) throw std::invalid_argument("nelder_mead: dimension must be >= 1");

    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

    NelderMeadResult res;
    std::vector<std::vector<double>> simplex;
    std::vector<double> fvals;
    simplex.reserve(d + 1);
    fvals.reserve(d + 1);

    auto eval = [&](const std::vector<double>& x) {
        ++res.evaluations;
        return objective(x);
    };

    simplex.push_back(x0);
    fvals.push_back(eval(x0));
    for (int i = 0; i < d; ++i) {
        std::vector<double> v = x0;
        v[i] += (v[i] == 0.0) ? 0.00025 : 0.1;
        simplex.push_back(v);
        fvals.push_back(eval(v));
    }

    std::vector<std::size_t> order(d + 1);
    std::vector<double> centroid(d), xr(d), xe(d), xc(d);

    while (res.evaluations < opts.max_evaluations) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(),
                  [&fvals](std::size_t a, std::size_t b) { return fvals[a] < fvals[b]; });

        const double spread = fvals[order.back()] - fvals[order.front()];
        if (spread < opts.f_spread_tol) {
            // Guard against the symmetric-simplex degeneracy (equal f values
            // straddling the optimum): only stop once the simplex itself has
            // collapsed too.
            double diameter = 0.0;
            for (int k = 0; k < d; ++k) {
                double lo = simplex[0][k], hi = simplex[0][k];
                for (int i = 1; i <= d; ++i) {
                    lo = std::min(lo, simplex[i][k]);
                    hi = std::max(hi, simplex[i][k]);
                }
                diameter = std::max(diameter, hi - lo);
            }
            if (diameter < opts.x_spread_tol) {
                res.converged = true;
                break;
            }
        }

        const std::size_t worst = order.back();
        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t idx : order)
            if (idx != worst)
                for (int k = 0; k < d; ++k) centroid[k] += simplex[idx][k];
        for (int k = 0; k < d; ++k) centroid[k] /= d;

        for (int k = 0; k < d; ++k) xr[k] = centroid[k] + kReflect * (centroid[k] - simplex[worst][k]);
        const double fr = eval(xr);
        const double fbest = fvals[order.front()];
        const double fsecond = fvals[order[d - 1]];

        if (fr < fbest) {
            for (int k = 0; k < d; ++k) xe[k] = centroid[k] + kExpand * (xr[k] - centroid[k]);
            const double fe = eval(xe);
            if (fe < fr) {
                simplex[worst] = xe;
                fvals[worst] = fe;
            } else {
                simplex[worst] = xr;
                fvals[worst] = fr;
            }
        } else if (fr < fsecond) {
            simplex[worst] = xr;
            fvals[worst] = fr;
        } else {
            const bool outside = fr < fvals[worst];
            const std::vector<double>& toward = outside ? xr : simplex[worst];
            for (int k = 0; k < d; ++k) xc[k] = centroid[k] + kContract * (toward[k] - centroid[k]);
            const double fc = eval(xc);
            if (fc < (outside ? fr : fvals[worst])) {
                simplex[worst] = xc;
                fvals[worst] = fc;
            } else {
                const std::size_t best = order.front();
                for (std::size_t idx = 0; idx <= static_cast<std::size_t>(d); ++idx) {
                    if (idx == best) continue;
                    for (int k = 0; k < d; ++k)
                        simplex[idx][k] = simplex[best][k] + kShrink * (simplex[idx][k] - simplex[best][k]);
                    fvals[idx] = eval(simplex[idx]);
                    if (res.evaluations >= opts.max_evaluations) break;
                }
            }
        }
    }

    const std::size_t best =
        std::min_element(fvals.begin(), fvals.end()) - fvals.begin();
    res.x = simplex[best];
    res.f = fvals[best];
    return res;
}

} // namespace qsel
