#include "prodobs/numeric.hpp"

#include "prodobs/error.hpp"
#include "prodobs/observability.hpp"
#include "prodobs/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace prodobs {

namespace {

constexpr double kDivergenceGuard = 1e150;
// exp(700) is still a finite double.
constexpr double kMaxLogScale = 700.0;

bool has_cycle(const DiGraph& g)
{
    auto d = scc_decompose(g);
    for (const auto& c : d.components)
        if (c.size() > 1 || g.has_self_loop(c.front()))
            return true;
    return false;
}

double spectral_radius(const Eigen::MatrixXd& a)
{
    if (a.size() == 0)
        return 0.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(a, false);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

std::size_t numeric_rank(const Eigen::MatrixXd& m, double tolerance)
{
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0)
        return 0;
    const double cutoff = tolerance * s(0);
    return static_cast<std::size_t>((s.array() >= cutoff).count());
}

} // namespace

Eigen::MatrixXd selection_matrix(std::size_t n, const std::vector<NodeIndex>& observers)
{
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(observers.size()),
                                              static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < observers.size(); ++i) {
        if (observers[i] >= n)
            throw Error(ErrorCode::UnknownObserver, "observer index " + std::to_string(observers[i]) +
                                                        " is out of range");
        c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(observers[i])) = 1.0;
    }
    return c;
}

WeightedRealization realize_weights(const DiGraph& g, const std::vector<NodeIndex>& observers,
                                    std::uint64_t seed, bool scale_unstable)
{
    if (g.empty())
        throw Error(ErrorCode::InvalidArgument, "cannot realize weights on an empty graph");

    WeightedRealization r;
    r.seed = seed;
    r.observers = observers;
    std::sort(r.observers.begin(), r.observers.end());
    r.observers.erase(std::unique(r.observers.begin(), r.observers.end()), r.observers.end());

    const auto n = static_cast<Eigen::Index>(g.size());
    r.a_matrix = Eigen::MatrixXd::Zero(n, n);
    r.c_matrix = selection_matrix(g.size(), r.observers);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> magnitude(0.1, 1.0);
    std::bernoulli_distribution negative(0.5);
    for (const auto& e : g.edges()) {
        double w = magnitude(rng);
        r.a_matrix(static_cast<Eigen::Index>(e.to), static_cast<Eigen::Index>(e.from)) = negative(rng) ? -w : w;
    }

    if (g.edge_count() == 0)
        r.warnings.push_back("ZeroStructure: graph has no edges, A is the zero matrix");

    if (!has_cycle(g)) {
        r.spectral_radius = 0.0;
        if (scale_unstable && g.edge_count() > 0)
            r.warnings.push_back("graph has no cycles, so A is nilpotent and cannot be scaled to rho > 1");
        return r;
    }
    r.spectral_radius = spectral_radius(r.a_matrix);
    if (scale_unstable && r.spectral_radius > 0.0 && r.spectral_radius <= 1.0) {
        r.a_matrix *= 1.1 / r.spectral_radius;
        r.spectral_radius = spectral_radius(r.a_matrix);
    }
    return r;
}

namespace {

struct ScaledStack {
    Eigen::MatrixXd blocks;         // [C; CA; ...] with each CA^k normalised
    std::vector<double> log_scale;  // log of the factor removed from block k
};

ScaledStack scaled_observability(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c, double tolerance)
{
    if (!(tolerance > 0.0))
        throw Error(ErrorCode::InvalidArgument, "rank tolerance must be positive");
    if (!a.allFinite() || !c.allFinite())
        throw Error(ErrorCode::NumericOverflow, "system matrices contain non-finite entries");

    const auto n = a.rows();
    const auto p = c.rows();
    ScaledStack stack;
    stack.blocks.resize(p * n, n);
    stack.log_scale.assign(static_cast<std::size_t>(n), 0.0);
    if (n == 0 || p == 0)
        return stack;

    Eigen::MatrixXd block = c;
    stack.blocks.topRows(p) = block;
    for (Eigen::Index k = 1; k < n; ++k) {
        Eigen::MatrixXd next = block * a;
        double norm = next.norm();
        if (!std::isfinite(norm))
            throw Error(ErrorCode::NumericOverflow, "observability block overflowed");
        auto ku = static_cast<std::size_t>(k);
        stack.log_scale[ku] = stack.log_scale[ku - 1];
        if (norm > 0.0) {
            next /= norm;
            stack.log_scale[ku] += std::log(norm);
        }
        stack.blocks.middleRows(k * p, p) = next;
        block = std::move(next);
    }
    return stack;
}

} // namespace

std::size_t observability_rank_only(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c, double tolerance)
{
    return numeric_rank(scaled_observability(a, c, tolerance).blocks, tolerance);
}

RankResult observability_rank(const Eigen::MatrixXd& a, const Eigen::MatrixXd& c, double tolerance)
{
    auto stack = scaled_observability(a, c, tolerance);
    const auto n = a.rows();
    const auto p = c.rows();
    RankResult result;
    result.condition_number = std::numeric_limits<double>::infinity();
    result.rank = numeric_rank(stack.blocks, tolerance);
    if (n == 0 || result.rank < static_cast<std::size_t>(n))
        return result;

    // Full rank: condition number of the unscaled O, i.e. sqrt(lmax/lmin) of
    // the Gramian O^T O.
    Eigen::MatrixXd unscaled = stack.blocks;
    for (Eigen::Index k = 1; k < n; ++k) {
        double ls = stack.log_scale[static_cast<std::size_t>(k)];
        if (std::abs(ls) > kMaxLogScale)
            throw Error(ErrorCode::NumericOverflow, "A^k leaves double range; condition number unavailable");
        unscaled.middleRows(k * p, p) *= std::exp(ls);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(unscaled);
    const auto& s = svd.singularValues();
    double smin = s(s.size() - 1);
    result.condition_number = smin > 0.0 ? s(0) / smin : std::numeric_limits<double>::infinity();
    return result;
}

RankResult observability_rank(const WeightedRealization& r, double tolerance)
{
    return observability_rank(r.a_matrix, r.c_matrix, tolerance);
}

Discretization discretize(const Eigen::MatrixXd& a)
{
    Discretization d;
    const auto n = a.rows();
    double norm = 0.0;
    if (a.size() > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
        norm = svd.singularValues()(0);
    }
    d.step = norm > 0.0 ? 0.5 / norm : 0.0;
    d.a_d = Eigen::MatrixXd::Identity(n, n) + d.step * a;
    return d;
}

WindowEstimator::WindowEstimator(const Eigen::MatrixXd& a_d, const Eigen::MatrixXd& c)
    : window_(static_cast<std::size_t>(a_d.rows()))
{
    const auto n = a_d.rows();
    const auto p = c.rows();
    obs_.resize(p * n, n);
    Eigen::MatrixXd block = c;
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        obs_.middleRows(k * p, p) = block;
        block = block * a_d;
        if (k + 1 < n)
            power = a_d * power;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(obs_);
    pinv_ = qr.solve(Eigen::MatrixXd::Identity(p * n, p * n));
    pinv_last_ = power * pinv_;
}

Eigen::VectorXd WindowEstimator::estimate_first(const Eigen::VectorXd& stacked) const
{
    return pinv_ * stacked;
}

Eigen::VectorXd WindowEstimator::estimate_last(const Eigen::VectorXd& stacked) const
{
    return pinv_last_ * stacked;
}

EstimationTrace simulate_estimation(const WeightedRealization& r, const EstimationOptions& options)
{
    if (options.trials == 0 || options.steps == 0)
        throw Error(ErrorCode::InvalidArgument, "trials and steps must be at least 1");
    const auto n = r.a_matrix.rows();
    const auto p = r.c_matrix.rows();
    if (observability_rank_only(r.a_matrix, r.c_matrix) < static_cast<std::size_t>(n))
        throw Error(ErrorCode::NotNumericallyObservable, "realization is not numerically observable");

    auto disc = discretize(r.a_matrix);
    if (observability_rank_only(disc.a_d, r.c_matrix) < static_cast<std::size_t>(n))
        throw Error(ErrorCode::NotNumericallyObservable, "discretized realization lost observability");
    WindowEstimator estimator(disc.a_d, r.c_matrix);

    const auto window = static_cast<std::size_t>(n);
    const auto horizon = std::max(options.steps, window);

    std::vector<Eigen::MatrixXd> powers{Eigen::MatrixXd::Identity(n, n)};
    for (std::size_t k = 1; k < window; ++k)
        powers.push_back(disc.a_d * powers.back());

    std::vector<std::vector<double>> per_trial(options.trials);
    std::vector<std::string> failures(options.trials);
    std::vector<std::size_t> precision_from(options.trials, options.steps);
    const double gain = estimator.last_gain();
    constexpr double eps = std::numeric_limits<double>::epsilon();

    auto run_trial = [&](std::size_t t) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> init(-options.x0_range, options.x0_range);
        std::normal_distribution<double> process(0.0, 1.0), measurement(0.0, 1.0);

        Eigen::MatrixXd states(n, static_cast<Eigen::Index>(horizon));
        Eigen::VectorXd outputs(p * static_cast<Eigen::Index>(horizon));
        Eigen::VectorXd x(n);
        for (Eigen::Index i = 0; i < n; ++i)
            x(i) = init(rng);
        for (std::size_t k = 0; k < horizon; ++k) {
            auto kk = static_cast<Eigen::Index>(k);
            states.col(kk) = x;
            Eigen::VectorXd y = r.c_matrix * x;
            for (Eigen::Index i = 0; i < p; ++i)
                y(i) += options.meas_std * measurement(rng);
            outputs.segment(kk * p, p) = y;
            Eigen::VectorXd v(n);
            for (Eigen::Index i = 0; i < n; ++i)
                v(i) = options.process_std * process(rng);
            x = disc.a_d * x + v;
        }

        auto& trace = per_trial[t];
        trace.resize(options.steps);
        Eigen::VectorXd x0_hat = estimator.estimate_first(outputs.head(p * n));
        for (std::size_t k = 0; k < options.steps; ++k) {
            Eigen::VectorXd estimate =
                k + 1 < window
                    ? Eigen::VectorXd(powers[k] * x0_hat)
                    : estimator.estimate_last(outputs.segment(static_cast<Eigen::Index>(k + 1 - window) * p, p * n));
            double err = (states.col(static_cast<Eigen::Index>(k)) - estimate).squaredNorm() / static_cast<double>(n);
            if (!std::isfinite(err) || err > kDivergenceGuard) {
                failures[t] = "estimate diverged at step " + std::to_string(k) + " of trial " + std::to_string(t);
                return;
            }
            trace[k] = err;
            auto first = k + 1 >= window ? k + 1 - window : 0;
            auto recent = outputs.segment(static_cast<Eigen::Index>(first) * p,
                                          static_cast<Eigen::Index>(k + 1 - first) * p);
            double roundoff = eps * gain * recent.norm();
            if (precision_from[t] == options.steps && roundoff * roundoff > 0.01 * err * static_cast<double>(n))
                precision_from[t] = k;
        }
    };

    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, options.trials));
    if (workers <= 1) {
        for (std::size_t t = 0; t < options.trials; ++t)
            run_trial(t);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t t = w; t < options.trials; t += workers)
                    run_trial(t);
            });
    }
    for (const auto& f : failures)
        if (!f.empty())
            throw Error(ErrorCode::DivergedEstimate, f);

    EstimationTrace out;
    out.trials = options.trials;
    out.steps = options.steps;
    out.noise_std_process = options.process_std;
    out.noise_std_measurement = options.meas_std;
    out.step_size = disc.step;
    out.discrete_spectral_radius = spectral_radius(disc.a_d);
    auto first_limited = *std::min_element(precision_from.begin(), precision_from.end());
    if (first_limited < options.steps)
        out.precision_limited_from = first_limited;
    out.msee.assign(options.steps, 0.0);
    for (const auto& trace : per_trial)
        for (std::size_t k = 0; k < options.steps; ++k)
            out.msee[k] += trace[k];
    for (auto& v : out.msee)
        v /= static_cast<double>(options.trials);
    return out;
}

CrossValidationReport cross_validate(const DiGraph& g, const std::vector<NodeIndex>& observers,
                                     const std::vector<std::uint64_t>& seeds, double tolerance)
{
    if (seeds.empty())
        throw Error(ErrorCode::InvalidArgument, "cross-validation needs at least one seed");
    CrossValidationReport report;
    report.n = g.size();
    report.structural_observable = check_observable(g, observers).observable();
    for (auto seed : seeds) {
        auto r = realize_weights(g, observers, seed, false);
        CrossValidationEntry entry;
        entry.seed = seed;
        entry.numeric_rank = observability_rank_only(r.a_matrix, r.c_matrix, tolerance);
        entry.numeric_observable = entry.numeric_rank == g.size();
        entry.agrees = entry.numeric_observable == report.structural_observable;
        (entry.agrees ? report.agreements : report.disagreements) += 1;
        report.entries.push_back(entry);
    }
    return report;
}

} // namespace prodobs
