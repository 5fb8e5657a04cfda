#pragma once

#include <array>
#include <vector>

#include "ivsf/dates.hpp"
#include "ivsf/surface_data.hpp"

namespace ivsf {

// Signed moneyness coordinate fed to the models: delta = percent/100 - center,
// so ATM quotes sit at 0 and the CT indicator split has a natural pivot.
struct MoneynessTransform {
    double center = 100.0;

    double delta(double moneyness_percent) const { return moneyness_percent / center - 1.0; }
};

struct FitStats {
    double rss = 0.0;
    int n = 0;
    std::vector<double> std_errors;  // classical homoskedastic, per coefficient
};

// Quadratic smile / linear term-structure specification:
// iv = a0 + a1*d + a2*d^2 + a3*tau + a4*d*tau.
struct GGCoefficients {
    std::array<double, 5> alpha{};
    Date date = 0;
    FitStats fit_stats;
};

// Asymmetric-smile Nelson-Siegel specification:
// iv = b0 + b1*1{d>0}d^2 + b2*1{d<0}d^2 + b3*slope(tau) + b4*curvature(tau)
//      + b5*1{d>0}d*tau + b6*1{d<0}d*tau.
struct CTCoefficients {
    std::array<double, 7> beta{};
    double lambda = 0.0;
    Date date = 0;
    FitStats fit_stats;
};

// Nelson-Siegel slope and curvature loadings at maturity tau (years) for
// decay rate lambda. Continuous extension at lambda*tau -> 0 is (1, 0).
std::pair<double, double> ns_loadings(double maturity, double lambda);

GGCoefficients fit_gg(const SurfacePanel& panel, const MoneynessTransform& transform = {});

struct LambdaBounds {
    double lo = 0.05;
    double hi = 30.0;
};

struct LambdaEstimate {
    Date date = 0;
    double lambda = 0.0;
    double sse = 0.0;
    bool at_bound = false;  // optimum pinned at a search bound, value still usable
};

// Stage one of the two-step calibration: per-day lambda minimizing that day's
// SSE with the beta vector profiled out by OLS at each candidate lambda.
std::vector<LambdaEstimate> fit_ct_stage1(const std::vector<SurfacePanel>& panels,
                                          const MoneynessTransform& transform = {},
                                          const LambdaBounds& bounds = {});
LambdaEstimate fit_ct_stage1_day(const SurfacePanel& panel,
                                 const MoneynessTransform& transform = {},
                                 const LambdaBounds& bounds = {});

// Stage two anchor: exact median of the stage-one estimates (mean of the
// middle pair for even counts).
double fix_lambda(const std::vector<double>& daily_lambdas);

CTCoefficients fit_ct(const SurfacePanel& panel, double lambda,
                      const MoneynessTransform& transform = {});

double evaluate_gg(const GGCoefficients& coeffs, double moneyness, double maturity,
                   const MoneynessTransform& transform = {});
double evaluate_ct(const CTCoefficients& coeffs, double moneyness, double maturity,
                   const MoneynessTransform& transform = {});

// Raw-array variants used by the synthetic generator and forecast evaluator,
// where coefficient vectors come from a dynamics model rather than a fit.
double evaluate_gg_raw(const double* alpha, double moneyness, double maturity,
                       const MoneynessTransform& transform = {});
double evaluate_ct_raw(const double* beta, double lambda, double moneyness, double maturity,
                       const MoneynessTransform& transform = {});

// In-sample SSE of the CT model at a fixed lambda (beta profiled out by OLS).
double ct_profile_sse(const SurfacePanel& panel, double lambda,
                      const MoneynessTransform& transform = {});

}  // namespace ivsf
