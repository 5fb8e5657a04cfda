#pragma once

#include <Eigen/Dense>
#include <functional>

namespace ivsf {

// Scalar Brent minimization over [lo, hi]; returns argmin to tolerance tol.
double brent_minimize(const std::function<double(double)>& f, double lo, double hi,
                      double tol, int max_iter = 200);

// Nelder-Mead simplex minimization. Returns the best point found; `converged`
// reports whether the simplex collapsed below tol within the budget.
Eigen::VectorXd nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& start, double step, double tol,
                            int max_evals, bool* converged = nullptr);

}  // namespace ivsf
