#include "qsel/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qsel/rng.hpp"

namespace qsel {

std::vector<double> QaoaAngles::flat() const {
    std::vector<double> x(gammas);
    x.insert(x.end(), betas.begin(), betas.end());
    return x;
}

QaoaAngles QaoaAngles::from_flat(const std::vector<double>& x) {
    if (x.empty() || x.size() % 2 != 0)
        throw std::invalid_argument("flat angle vector must have even positive length");
    const std::size_t p = x.size() / 2;
    QaoaAngles a;
    a.gammas.assign(x.begin(), x.begin() + p);
    a.betas.assign(x.begin() + p, x.end());
    return a;
}

QaoaAngles QaoaAngles::zero_padded(int new_depth) const {
    if (new_depth < depth()) throw std::invalid_argument("cannot pad to a smaller depth");
    QaoaAngles out = *this;
    out.gammas.resize(new_depth, 0.0);
    out.betas.resize(new_depth, 0.0);
    return out;
}

QaoaSimulator::QaoaSimulator(const Graph& g) : g_(g), n_(g.num_vertices()) {
    if (n_ > 26) throw std::invalid_argument("statevector simulation limited to n <= 26");
    dim_ = 1ULL << n_;
    half_total_weight_ = 0.5 * g_.total_weight();

    cut_.assign(dim_, 0.0);
    for (const auto& e : g_.edges()) {
        const std::uint64_t bu = 1ULL << e.u, bv = 1ULL << e.v;
        const double half_w = 0.5 * e.w;
        for (std::uint64_t z = 0; z < dim_; ++z) {
            const bool cutting = ((z & bu) != 0) != ((z & bv) != 0);
            if (cutting) cut_[z] += 2.0 * half_w;
        }
    }

    // For (half-)integral cuts the phase table per layer is a power table
    // instead of one complex exp per basis state.
    double max_cut = 0.0;
    half_integral_ = true;
    for (std::uint64_t z = 0; z < dim_; ++z) {
        max_cut = std::max(max_cut, cut_[z]);
        if (std::abs(cut_[z] * 2.0 - std::round(cut_[z] * 2.0)) > 1e-12) {
            half_integral_ = false;
            break;
        }
    }
    if (half_integral_ && max_cut * 2.0 < 65000.0) {
        max_scaled_ = static_cast<int>(std::lround(max_cut * 2.0));
        cut_scaled_.resize(dim_);
        for (std::uint64_t z = 0; z < dim_; ++z)
            cut_scaled_[z] = static_cast<std::uint16_t>(std::lround(cut_[z] * 2.0));
    } else {
        half_integral_ = false;
    }
}

void QaoaSimulator::apply_layer(std::vector<std::complex<double>>& amp, double gamma,
                                double beta) const {
    // Diagonal phase exp(-i gamma C(z)), i.e. the cost-phase convention under
    // which (gamma, beta) = (pi/2, pi/8) maximizes the single-edge p=1
    // expectation. It differs from exp(-i gamma H_C) only by the global phase
    // exp(-i gamma w).
    if (half_integral_) {
        std::vector<std::complex<double>> phase(max_scaled_ + 1);
        const std::complex<double> step = std::polar(1.0, -gamma * 0.5);
        std::complex<double> acc(1.0, 0.0);
        for (int k = 0; k <= max_scaled_; ++k) {
            phase[k] = acc;
            acc *= step;
        }
        for (std::uint64_t z = 0; z < dim_; ++z) amp[z] *= phase[cut_scaled_[z]];
    } else {
        for (std::uint64_t z = 0; z < dim_; ++z)
            amp[z] *= std::polar(1.0, -gamma * cut_[z]);
    }

    // Mixer exp(-i beta X) on every qubit.
    const double c = std::cos(beta), s = std::sin(beta);
    const std::complex<double> is(0.0, s);
    for (int q = 0; q < n_; ++q) {
        const std::uint64_t bit = 1ULL << q;
        for (std::uint64_t base = 0; base < dim_; base += bit << 1) {
            for (std::uint64_t off = 0; off < bit; ++off) {
                const std::uint64_t i0 = base + off;
                const std::uint64_t i1 = i0 + bit;
                const std::complex<double> a0 = amp[i0], a1 = amp[i1];
                amp[i0] = c * a0 - is * a1;
                amp[i1] = c * a1 - is * a0;
            }
        }
    }
}

std::vector<std::complex<double>> QaoaSimulator::statevector(const QaoaAngles& angles) const {
    if (angles.gammas.size() != angles.betas.size() || angles.gammas.empty())
        throw std::invalid_argument("need matching non-empty gamma/beta vectors");
    std::vector<std::complex<double>> amp(dim_, std::complex<double>(std::pow(2.0, -0.5 * n_), 0.0));
    for (int k = 0; k < angles.depth(); ++k) apply_layer(amp, angles.gammas[k], angles.betas[k]);
    return amp;
}

double QaoaSimulator::expected_cost(const QaoaAngles& angles) const {
    const auto amp = statevector(angles);
    double f = 0.0;
    for (std::uint64_t z = 0; z < dim_; ++z) f += std::norm(amp[z]) * cut_[z];
    return f;
}

SampleStats QaoaSimulator::sample_cut_distribution(const QaoaAngles& angles, int m,
                                                   std::uint64_t seed) const {
    if (m < 1) throw std::invalid_argument("sample count must be >= 1");
    const auto amp = statevector(angles);
    std::vector<double> cdf(dim_);
    double acc = 0.0;
    for (std::uint64_t z = 0; z < dim_; ++z) {
        acc += std::norm(amp[z]);
        cdf[z] = acc;
    }
    cdf.back() = 1.0;

    Rng rng(mix_seed(seed, 0x5A3));
    double sum = 0.0, sum2 = 0.0, best = 0.0;
    for (int k = 0; k < m; ++k) {
        const double u = rng.next_double();
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::uint64_t z = static_cast<std::uint64_t>(it - cdf.begin());
        const double c = cut_[std::min(z, dim_ - 1)];
        sum += c;
        sum2 += c * c;
        best = std::max(best, c);
    }
    SampleStats st;
    st.mean = sum / m;
    st.stddev = std::sqrt(std::max(0.0, sum2 / m - st.mean * st.mean));
    st.best = best;
    return st;
}

std::vector<std::complex<double>> apply_qaoa_circuit(const Graph& g, const QaoaAngles& angles) {
    return QaoaSimulator(g).statevector(angles);
}

double expected_cost(const Graph& g, const QaoaAngles& angles) {
    return QaoaSimulator(g).expected_cost(angles);
}

SampleStats sample_cut_distribution(const Graph& g, const QaoaAngles& angles, int m,
                                    std::uint64_t seed) {
    return QaoaSimulator(g).sample_cut_distribution(angles, m, seed);
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;

QaoaAngles random_angles(int p, Rng& rng) {
    QaoaAngles a;
    a.gammas.resize(p);
    a.betas.resize(p);
    for (int k = 0; k < p; ++k) a.gammas[k] = kTwoPi * rng.next_double();
    for (int k = 0; k < p; ++k) a.betas[k] = kPi * rng.next_double();
    return a;
}

// One NM run (maximization via negation); updates `run` if the result improves it.
void try_start(const QaoaSimulator& sim, double c_max, const QaoaAngles& start,
               const NelderMeadOptions& nm_opts, QaoaRun& run) {
    const auto objective = [&sim](const std::vector<double>& x) {
        return -sim.expected_cost(QaoaAngles::from_flat(x));
    };
    const NelderMeadResult r = nelder_mead(objective, start.flat(), nm_opts);
    run.evaluations += r.evaluations;
    if (!r.converged) run.budget_exhausted = true;
    if (-r.f > run.f_p) {
        run.f_p = -r.f;
        run.angles = QaoaAngles::from_flat(r.x);
        run.ratio = run.f_p / c_max;
    }
}

} // namespace

QaoaRun optimize_angles(const Graph& g, double c_max, int p, const AngleOptimizeOptions& opts,
                        const std::vector<QaoaAngles>& extra_starts) {
    QaoaSimulator sim(g);
    NelderMeadOptions nm;
    nm.max_evaluations = opts.evals_per_start > 0 ? opts.evals_per_start : 400 * 2 * p;
    nm.f_spread_tol = opts.f_spread_tol;

    QaoaRun run;
    run.seed = opts.seed;
    run.f_p = -1.0;
    Rng rng(mix_seed(opts.seed, 0x0A7));
    for (const auto& s : extra_starts) try_start(sim, c_max, s.zero_padded(p), nm, run);
    for (int k = 0; k < opts.random_starts; ++k)
        try_start(sim, c_max, random_angles(p, rng), nm, run);
    return run;
}

std::vector<QaoaRun> optimize_dataset_angles(const std::vector<Graph>& graphs,
                                             const std::vector<double>& c_max, int p,
                                             const std::vector<double>& gw_ratios,
                                             const AngleOptimizeOptions& opts,
                                             const std::vector<std::optional<QaoaAngles>>& warm_starts) {
    const std::size_t count = graphs.size();
    if (c_max.size() != count || gw_ratios.size() != count)
        throw std::invalid_argument("graphs, c_max and gw_ratios must align");
    if (!warm_starts.empty() && warm_starts.size() != count)
        throw std::invalid_argument("warm_starts must align with graphs when given");

    std::vector<QaoaRun> runs(count);
    NelderMeadOptions nm;
    nm.max_evaluations = opts.evals_per_start > 0 ? opts.evals_per_start : 400 * 2 * p;
    nm.f_spread_tol = opts.f_spread_tol;

    // Pass 1: random starts on the first instance, then chain each optimum
    // into the next instance as a warm start.
    for (std::size_t i = 0; i < count; ++i) {
        QaoaSimulator sim(graphs[i]);
        QaoaRun& run = runs[i];
        run.seed = mix_seed(opts.seed, i);
        run.f_p = -1.0;
        Rng rng(mix_seed(run.seed, 0x0A7));

        if (!warm_starts.empty() && warm_starts[i])
            try_start(sim, c_max[i], warm_starts[i]->zero_padded(p), nm, run);
        if (i > 0) try_start(sim, c_max[i], runs[i - 1].angles, nm, run);
        // Only the head of the chain explores random starts; later instances
        // rely on the chained (and zero-padded) optima.
        const int starts = (i == 0) ? std::max(1, opts.random_starts) : 0;
        for (int k = 0; k < starts; ++k) try_start(sim, c_max[i], random_angles(p, rng), nm, run);
        if (run.f_p < 0.0) { // no starts configured at all; fall back to one random start
            try_start(sim, c_max[i], random_angles(p, rng), nm, run);
        }
    }

    // Pass 2 (single round): instances still behind GW retry from every other
    // instance's optimum.
    if (opts.second_pass) {
        for (std::size_t i = 0; i < count; ++i) {
            if (runs[i].ratio > gw_ratios[i]) continue;
            QaoaSimulator sim(graphs[i]);
            for (std::size_t j = 0; j < count; ++j) {
                if (j == i) continue;
                try_start(sim, c_max[i], runs[j].angles, nm, runs[i]);
            }
        }
    }
    return runs;
}

LogFit fit_log_depth(const std::vector<int>& depths, const std::vector<double>& mean_stds) {
    if (depths.size() != mean_stds.size() || depths.size() < 2)
        throw std::invalid_argument("need at least two (depth, std) points");
    std::vector<int> distinct(depths);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 2) throw std::invalid_argument("need at least two distinct depths");
    for (int d : depths)
        if (d < 1) throw std::invalid_argument("depths must be >= 1");
    for (double s : mean_stds)
        if (!(s > 0.0)) throw std::invalid_argument("mean stds must be positive");

    const std::size_t m = depths.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x = std::log(static_cast<double>(depths[i]));
        sx += x;
        sy += mean_stds[i];
        sxx += x * x;
        sxy += x * mean_stds[i];
    }
    const double denom = m * sxx - sx * sx;
    LogFit fit;
    fit.a = (m * sxy - sx * sy) / denom;
    fit.b = (sy - fit.a * sx) / m;
    return fit;
}

double log_fit_crossing_depth(const LogFit& fit, double gw_std) {
    if (fit.a < 0.0) return std::exp((gw_std - fit.b) / fit.a);
    return fit.b < gw_std ? 1.0 : std::numeric_limits<double>::infinity();
}

} // namespace qsel
