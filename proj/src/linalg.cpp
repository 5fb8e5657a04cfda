#include "ivsf/linalg.hpp"

#include <cmath>
#include <limits>

#include "ivsf/errors.hpp"

namespace ivsf {

OlsFit ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, RankPolicy policy,
           bool want_std_errors) {
    const Eigen::Index n = X.rows();
    const Eigen::Index k = X.cols();
    if (n < k) throw TooFewObservationsError("ols: fewer rows than columns");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    qr.setThreshold(kRankThreshold);
    const Eigen::Index rank = qr.rank();

    OlsFit fit;
    fit.n = n;
    fit.rank = rank;
    fit.rank_deficient = rank < k;

    if (fit.rank_deficient) {
        switch (policy) {
            case RankPolicy::kThrow:
                throw RankDeficientError("ols: design matrix rank " + std::to_string(rank) +
                                         " < " + std::to_string(k));
            case RankPolicy::kTruncate:
                fit.coef = qr.solve(y);
                break;
            case RankPolicy::kRidge: {
                Eigen::MatrixXd gram = X.transpose() * X;
                gram.diagonal().array() += kRidgePenalty;
                fit.coef = gram.ldlt().solve(X.transpose() * y);
                fit.ridge_fallback = true;
                break;
            }
        }
    } else {
        fit.coef = qr.solve(y);
    }

    const Eigen::VectorXd resid = y - X * fit.coef;
    fit.rss = resid.squaredNorm();

    if (want_std_errors) {
        fit.std_errors = Eigen::VectorXd::Constant(k, std::numeric_limits<double>::quiet_NaN());
        const Eigen::Index dof = n - rank;
        if (dof > 0 && !fit.rank_deficient) {
            const double sigma2 = fit.rss / static_cast<double>(dof);
            const Eigen::MatrixXd xtx_inv =
                (X.transpose() * X).ldlt().solve(Eigen::MatrixXd::Identity(k, k));
            for (Eigen::Index j = 0; j < k; ++j) {
                fit.std_errors(j) = std::sqrt(std::max(0.0, sigma2 * xtx_inv(j, j)));
            }
        }
    }
    return fit;
}

}  // namespace ivsf
