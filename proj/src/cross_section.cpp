#include "ivsf/cross_section.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ivsf/errors.hpp"
#include "ivsf/linalg.hpp"
#include "ivsf/optim.hpp"

namespace ivsf {

namespace {

Eigen::MatrixXd gg_design(const SurfacePanel& panel, const MoneynessTransform& transform) {
    const Eigen::Index n = static_cast<Eigen::Index>(panel.quotes.size());
    Eigen::MatrixXd X(n, 5);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& q = panel.quotes[static_cast<std::size_t>(i)];
        const double d = transform.delta(q.moneyness);
        X(i, 0) = 1.0;
        X(i, 1) = d;
        X(i, 2) = d * d;
        X(i, 3) = q.maturity;
        X(i, 4) = d * q.maturity;
    }
    return X;
}

Eigen::MatrixXd ct_design(const SurfacePanel& panel, double lambda,
                          const MoneynessTransform& transform) {
    const Eigen::Index n = static_cast<Eigen::Index>(panel.quotes.size());
    Eigen::MatrixXd X(n, 7);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& q = panel.quotes[static_cast<std::size_t>(i)];
        const double d = transform.delta(q.moneyness);
        const auto [slope, curv] = ns_loadings(q.maturity, lambda);
        X(i, 0) = 1.0;
        X(i, 1) = d > 0.0 ? d * d : 0.0;
        X(i, 2) = d < 0.0 ? d * d : 0.0;
        X(i, 3) = slope;
        X(i, 4) = curv;
        X(i, 5) = d > 0.0 ? d * q.maturity : 0.0;
        X(i, 6) = d < 0.0 ? d * q.maturity : 0.0;
    }
    return X;
}

Eigen::VectorXd iv_vector(const SurfacePanel& panel) {
    Eigen::VectorXd y(static_cast<Eigen::Index>(panel.quotes.size()));
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        y(i) = panel.quotes[static_cast<std::size_t>(i)].iv;
    }
    return y;
}

}  // namespace

std::pair<double, double> ns_loadings(double maturity, double lambda) {
    if (maturity <= 0.0 || lambda <= 0.0) {
        throw DomainError("ns_loadings: maturity and lambda must be positive");
    }
    const double x = lambda * maturity;
    double slope;
    if (x < 1e-8) {
        slope = 1.0 - 0.5 * x;  // series limit of (1 - e^-x)/x
    } else {
        slope = (1.0 - std::exp(-x)) / x;
    }
    const double curvature = slope - std::exp(-x);
    return {slope, curvature};
}

GGCoefficients fit_gg(const SurfacePanel& panel, const MoneynessTransform& transform) {
    if (panel.quotes.size() < 5) {
        throw TooFewObservationsError("fit_gg: need at least 5 quotes, have " +
                                      std::to_string(panel.quotes.size()));
    }
    const Eigen::MatrixXd X = gg_design(panel, transform);
    const Eigen::VectorXd y = iv_vector(panel);
    const OlsFit fit = ols(X, y, RankPolicy::kThrow, true);

    GGCoefficients out;
    out.date = panel.date;
    for (int j = 0; j < 5; ++j) out.alpha[static_cast<std::size_t>(j)] = fit.coef(j);
    out.fit_stats.rss = fit.rss;
    out.fit_stats.n = static_cast<int>(fit.n);
    out.fit_stats.std_errors.assign(fit.std_errors.data(), fit.std_errors.data() + 5);
    return out;
}

double ct_profile_sse(const SurfacePanel& panel, double lambda,
                      const MoneynessTransform& transform) {
    const Eigen::MatrixXd X = ct_design(panel, lambda, transform);
    const Eigen::VectorXd y = iv_vector(panel);
    const OlsFit fit = ols(X, y, RankPolicy::kThrow, false);
    return fit.rss;
}

LambdaEstimate fit_ct_stage1_day(const SurfacePanel& panel, const MoneynessTransform& transform,
                                 const LambdaBounds& bounds) {
    if (panel.quotes.size() < 8) {
        throw TooFewObservationsError("fit_ct_stage1: need at least 8 quotes, have " +
                                      std::to_string(panel.quotes.size()));
    }
    if (!(bounds.lo > 0.0) || !(bounds.hi > bounds.lo)) {
        throw DomainError("fit_ct_stage1: bad lambda bounds");
    }

    auto sse = [&](double lambda) { return ct_profile_sse(panel, lambda, transform); };

    // Coarse log-spaced scan to bracket the optimum, then Brent refinement.
    constexpr int kGrid = 24;
    const double log_lo = std::log(bounds.lo);
    const double log_hi = std::log(bounds.hi);
    int best = 0;
    double best_sse = std::numeric_limits<double>::infinity();
    std::vector<double> grid(kGrid);
    for (int g = 0; g < kGrid; ++g) {
        grid[static_cast<std::size_t>(g)] =
            std::exp(log_lo + (log_hi - log_lo) * g / (kGrid - 1));
        const double v = sse(grid[static_cast<std::size_t>(g)]);
        if (v < best_sse) {
            best_sse = v;
            best = g;
        }
    }

    LambdaEstimate est;
    est.date = panel.date;
    const double lo = grid[static_cast<std::size_t>(std::max(0, best - 1))];
    const double hi = grid[static_cast<std::size_t>(std::min(kGrid - 1, best + 1))];
    est.lambda = brent_minimize(sse, lo, hi, 1e-6);
    est.sse = sse(est.lambda);
    est.at_bound = best == 0 || best == kGrid - 1;
    if (est.at_bound) {
        // keep the better of the refined point and the bound itself
        const double bound = best == 0 ? bounds.lo : bounds.hi;
        const double bound_sse = sse(bound);
        if (bound_sse < est.sse) {
            est.lambda = bound;
            est.sse = bound_sse;
        }
    }
    return est;
}

std::vector<LambdaEstimate> fit_ct_stage1(const std::vector<SurfacePanel>& panels,
                                          const MoneynessTransform& transform,
                                          const LambdaBounds& bounds) {
    std::vector<LambdaEstimate> out;
    out.reserve(panels.size());
    for (const auto& panel : panels) {
        out.push_back(fit_ct_stage1_day(panel, transform, bounds));
    }
    return out;
}

double fix_lambda(const std::vector<double>& daily_lambdas) {
    if (daily_lambdas.empty()) throw EmptyInputError("fix_lambda: empty input");
    for (double v : daily_lambdas) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw DomainError("fix_lambda: lambdas must be positive finite");
        }
    }
    std::vector<double> sorted = daily_lambdas;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

CTCoefficients fit_ct(const SurfacePanel& panel, double lambda,
                      const MoneynessTransform& transform) {
    if (panel.quotes.size() < 7) {
        throw TooFewObservationsError("fit_ct: need at least 7 quotes, have " +
                                      std::to_string(panel.quotes.size()));
    }
    if (lambda <= 0.0) throw DomainError("fit_ct: lambda must be positive");
    const Eigen::MatrixXd X = ct_design(panel, lambda, transform);
    const Eigen::VectorXd y = iv_vector(panel);
    const OlsFit fit = ols(X, y, RankPolicy::kThrow, true);

    CTCoefficients out;
    out.date = panel.date;
    out.lambda = lambda;
    for (int j = 0; j < 7; ++j) out.beta[static_cast<std::size_t>(j)] = fit.coef(j);
    out.fit_stats.rss = fit.rss;
    out.fit_stats.n = static_cast<int>(fit.n);
    out.fit_stats.std_errors.assign(fit.std_errors.data(), fit.std_errors.data() + 7);
    return out;
}

double evaluate_gg_raw(const double* alpha, double moneyness, double maturity,
                       const MoneynessTransform& transform) {
    const double d = transform.delta(moneyness);
    return alpha[0] + alpha[1] * d + alpha[2] * d * d + alpha[3] * maturity +
           alpha[4] * d * maturity;
}

double evaluate_ct_raw(const double* beta, double lambda, double moneyness, double maturity,
                       const MoneynessTransform& transform) {
    const double d = transform.delta(moneyness);
    const auto [slope, curv] = ns_loadings(maturity, lambda);
    double iv = beta[0] + beta[3] * slope + beta[4] * curv;
    if (d > 0.0) {
        iv += beta[1] * d * d + beta[5] * d * maturity;
    } else if (d < 0.0) {
        iv += beta[2] * d * d + beta[6] * d * maturity;
    }
    return iv;
}

double evaluate_gg(const GGCoefficients& coeffs, double moneyness, double maturity,
                   const MoneynessTransform& transform) {
    return evaluate_gg_raw(coeffs.alpha.data(), moneyness, maturity, transform);
}

double evaluate_ct(const CTCoefficients& coeffs, double moneyness, double maturity,
                   const MoneynessTransform& transform) {
    return evaluate_ct_raw(coeffs.beta.data(), coeffs.lambda, moneyness, maturity, transform);
}

}  // namespace ivsf
