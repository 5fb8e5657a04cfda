#pragma once

#include <Eigen/Dense>

namespace ivsf {

enum class RankPolicy {
    kThrow,     // RankDeficientError when the design loses rank
    kTruncate,  // basic least-squares solution from the pivoted QR
    kRidge,     // fall back to (X'X + penalty*I) \ X'y, flagged
};

struct OlsFit {
    Eigen::VectorXd coef;
    Eigen::VectorXd std_errors;  // classical homoskedastic; NaN when dof <= 0
    double rss = 0.0;
    Eigen::Index n = 0;
    Eigen::Index rank = 0;
    bool rank_deficient = false;
    bool ridge_fallback = false;
};

inline constexpr double kRankThreshold = 1e-10;
inline constexpr double kRidgePenalty = 1e-8;

// Least squares via column-pivoted Householder QR. Rank is detected by a
// relative threshold on the R-diagonal decay.
OlsFit ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
           RankPolicy policy = RankPolicy::kThrow, bool want_std_errors = false);

}  // namespace ivsf
