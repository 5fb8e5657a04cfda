#include "ivsf/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ivsf {

double brent_minimize(const std::function<double(double)>& f, double lo, double hi,
                      double tol, int max_iter) {
    const double gold = 0.3819660112501051;
    double a = lo, b = hi;
    double x = a + gold * (b - a);
    double w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;

    for (int iter = 0; iter < max_iter; ++iter) {
        const double m = 0.5 * (a + b);
        const double tol1 = tol * std::abs(x) + 1e-12;
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;

        bool use_golden = true;
        if (std::abs(e) > tol1) {
            // parabolic fit through (v,fv), (w,fw), (x,fx)
            const double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double e_old = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * e_old) && p > q * (a - x) && p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = (m > x) ? tol1 : -tol1;
                use_golden = false;
            }
        }
        if (use_golden) {
            e = (x < m) ? b - x : a - x;
            d = gold * e;
        }
        const double u = (std::abs(d) >= tol1) ? x + d : x + ((d > 0) ? tol1 : -tol1);
        const double fu = f(u);
        if (fu <= fx) {
            if (u < x) b = x; else a = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    return x;
}

Eigen::VectorXd nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                            const Eigen::VectorXd& start, double step, double tol,
                            int max_evals, bool* converged) {
    const int dim = static_cast<int>(start.size());
    const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

    auto safe_eval = [&](const Eigen::VectorXd& p) {
        const double v = f(p);
        return std::isfinite(v) ? v : std::numeric_limits<double>::max();
    };

    std::vector<Eigen::VectorXd> pts(dim + 1, start);
    std::vector<double> vals(dim + 1);
    int evals = 0;
    vals[0] = safe_eval(pts[0]);
    ++evals;
    for (int i = 0; i < dim; ++i) {
        pts[i + 1](i) += (start(i) != 0.0) ? step * std::abs(start(i)) : step;
        vals[i + 1] = safe_eval(pts[i + 1]);
        ++evals;
    }

    std::vector<int> order(dim + 1);
    bool done = false;
    while (evals < max_evals) {
        for (int i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return vals[a] < vals[b]; });
        const int best = order[0], worst = order[dim], second_worst = order[dim - 1];

        if (std::abs(vals[worst] - vals[best]) <=
            tol * (std::abs(vals[best]) + std::abs(vals[worst])) + 1e-14) {
            done = true;
            break;
        }

        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(dim);
        for (int i = 0; i <= dim; ++i) {
            if (i != worst) centroid += pts[i];
        }
        centroid /= static_cast<double>(dim);

        Eigen::VectorXd reflected = centroid + alpha * (centroid - pts[worst]);
        const double fr = safe_eval(reflected);
        ++evals;
        if (fr < vals[best]) {
            Eigen::VectorXd expanded = centroid + gamma * (reflected - centroid);
            const double fe = safe_eval(expanded);
            ++evals;
            if (fe < fr) {
                pts[worst] = expanded; vals[worst] = fe;
            } else {
                pts[worst] = reflected; vals[worst] = fr;
            }
        } else if (fr < vals[second_worst]) {
            pts[worst] = reflected; vals[worst] = fr;
        } else {
            Eigen::VectorXd contracted = centroid + rho * (pts[worst] - centroid);
            const double fc = safe_eval(contracted);
            ++evals;
            if (fc < vals[worst]) {
                pts[worst] = contracted; vals[worst] = fc;
            } else {
                for (int i = 0; i <= dim; ++i) {
                    if (i == best) continue;
                    pts[i] = pts[best] + sigma * (pts[i] - pts[best]);
                    vals[i] = safe_eval(pts[i]);
                    ++evals;
                }
            }
        }
    }

    int best = 0;
    for (int i = 1; i <= dim; ++i) {
        if (vals[i] < vals[best]) best = i;
    }
    if (converged) *converged = done;
    return pts[best];
}

}  // namespace ivsf
