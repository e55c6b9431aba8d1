#pragma once

#include "aci/types.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace aci {

/// Dense symmetric positive-definite solver with a conditioning guard.
///
/// Factorizes once (LLT); every solve is checked against a relative
/// residual tolerance so a nearly singular system surfaces as a
/// NumericError instead of silently returning garbage.
template <typename Scalar>
class SpdSolver {
 public:
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// Reciprocal condition numbers below this are treated as singular.
  static constexpr double kMinRcond = 1e-13;

  explicit SpdSolver(Mat gram) : gram_(std::move(gram)), llt_(gram_) {
    rcond_ = llt_.info() == Eigen::Success ? static_cast<double>(llt_.rcond()) : 0.0;
    if (llt_.info() != Eigen::Success || !(rcond_ >= kMinRcond)) {
      throw NumericError("symmetric system is singular or ill-conditioned (rcond=" +
                             std::to_string(rcond_) + ")",
                         rcond_);
    }
  }

  double rcond() const noexcept { return rcond_; }
  const Mat& gram() const noexcept { return gram_; }

  template <typename Rhs>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Rhs::ColsAtCompileTime> solve(
      const Eigen::MatrixBase<Rhs>& rhs) const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Rhs::ColsAtCompileTime> sol = llt_.solve(rhs);
    const double scale = std::max<double>(1.0, static_cast<double>(rhs.cwiseAbs().maxCoeff()));
    const double resid = static_cast<double>((gram_ * sol - rhs).cwiseAbs().maxCoeff());
    if (!(resid <= 1e-8 * scale)) {
      throw NumericError("symmetric solve residual " + std::to_string(resid) +
                             " exceeds tolerance",
                         rcond_);
    }
    return sol;
  }

 private:
  Mat gram_;
  Eigen::LLT<Mat> llt_;
  double rcond_ = 0.0;
};

/// X^T X + a I
template <typename DerivedX>
Eigen::Matrix<typename DerivedX::Scalar, Eigen::Dynamic, Eigen::Dynamic>
regularized_gram(const Eigen::MatrixBase<DerivedX>& X, typename DerivedX::Scalar a) {
  using Scalar = typename DerivedX::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> g =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(X.cols(), X.cols());
  g.template selfadjointView<Eigen::Lower>().rankUpdate(X.transpose());
  g = g.template selfadjointView<Eigen::Lower>();
  g.diagonal().array() += a;
  return g;
}

/// Ridge coefficients (X^T X + a I)^{-1} X^T y.
template <typename DerivedX, typename DerivedY>
Eigen::Matrix<typename DerivedX::Scalar, Eigen::Dynamic, 1> ridge_solve(
    const Eigen::MatrixBase<DerivedX>& X, const Eigen::MatrixBase<DerivedY>& y,
    typename DerivedX::Scalar a) {
  if (X.rows() != y.rows()) throw InputError("ridge_solve: X and y row counts differ");
  if (a < 0) throw InputError("ridge_solve: ridge parameter must be nonnegative");
  SpdSolver<typename DerivedX::Scalar> solver(regularized_gram(X, a));
  return solver.solve(X.transpose() * y);
}

template <typename Scalar>
struct HatResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> residuals;  // (I - H) y
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> hat_diag;   // diag(H)
  Scalar rss = 0;
};

/// Residuals of the ridge fit and the diagonal of H = X (X^T X + aI)^{-1} X^T,
/// computed column-by-column from one factorization; H is never formed.
template <typename DerivedX, typename DerivedY>
HatResult<typename DerivedX::Scalar> hat_diag_and_residuals(
    const Eigen::MatrixBase<DerivedX>& X, const Eigen::MatrixBase<DerivedY>& y,
    typename DerivedX::Scalar a) {
  using Scalar = typename DerivedX::Scalar;
  if (X.rows() != y.rows()) throw InputError("hat_diag_and_residuals: size mismatch");
  SpdSolver<Scalar> solver(regularized_gram(X, a));
  const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w = solver.solve(X.transpose() * y);
  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> ginv_xt =
      solver.solve(X.transpose());
  HatResult<Scalar> out;
  out.residuals = y - X * w;
  out.hat_diag = (X.transpose().cwiseProduct(ginv_xt)).colwise().sum().transpose();
  out.rss = out.residuals.squaredNorm();
  return out;
}

// Scalar kernels (double only).

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

double student_t_cdf(double t, double dof);

/// Inverse CDF of Student's t: |cdf(result) - p| <= 1e-10.
double student_t_quantile(double p, double dof);

/// floor / ceil of a nonnegative product, robust to one-ulp noise so that
/// e.g. 0.7 * 10 lands on 7 rather than 8.
long floor_index(double value);
long ceil_index(double value);

/// Order statistic at 1-based index ceil(q * m) clamped to [1, m].
double empirical_quantile(std::span<const double> values, double q);
/// As empirical_quantile, for input already sorted ascending.
double sorted_quantile(std::span<const double> sorted, double q);

/// Least-squares nondecreasing fit (pool adjacent violators).
std::vector<double> isotonic_monotonize(std::span<const double> levels,
                                        std::span<const double> values);

}  // namespace aci
