#ifndef GMN_SPD_MATRIX_HPP_
#define GMN_SPD_MATRIX_HPP_

#include <Eigen/Dense>

#include "gmn/errors.hpp"

namespace gmn {

// Symmetric positive-definite matrix with a cached lower Cholesky factor.
// Construction validates symmetry (1e-12 relative) and strict positive
// definiteness; every inverse in the library flows through this factor.
class SpdMatrix {
 public:
  explicit SpdMatrix(Eigen::MatrixXd m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXd& matrix() const { return mat_; }
  const Eigen::MatrixXd& chol_lower() const { return chol_; }

  double log_det() const { return log_det_; }

  // Sigma^{-1} b via two triangular solves.
  Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
  Eigen::MatrixXd solve(const Eigen::MatrixXd& b) const;

  // x^T Sigma^{-1} x
  double mahalanobis_sq(const Eigen::VectorXd& x) const;

  Eigen::MatrixXd inverse() const;

 private:
  Eigen::MatrixXd mat_;
  Eigen::MatrixXd chol_;  // lower triangular, mat_ = chol_ chol_^T
  double log_det_;
};

namespace specfun {

// x^T Sigma^{-1} x, errors on dimension mismatch.
double mahalanobis_sq(const Eigen::VectorXd& x, const SpdMatrix& sigma);

// (A + b d^T)^{-1} from A^{-1} by the rank-one update formula.
// Errors when |1 + d^T A^{-1} b| is within 1e-14 of zero.
Eigen::MatrixXd sherman_morrison_inv(const Eigen::MatrixXd& a_inv,
                                     const Eigen::VectorXd& b,
                                     const Eigen::VectorXd& d);

// log phi_d(y; mu, Sigma)
double mvn_logpdf(const Eigen::VectorXd& y, const Eigen::VectorXd& mu,
                  const SpdMatrix& sigma);

}  // namespace specfun
}  // namespace gmn

#endif  // GMN_SPD_MATRIX_HPP_
