#ifndef GMN_SPECFUN_HPP_
#define GMN_SPECFUN_HPP_

namespace gmn {
namespace specfun {

// ---- standard normal ----

double std_normal_pdf(double x);
double std_normal_logpdf(double x);
double std_normal_cdf(double x);
// Stable in both tails (asymptotic series below the erfc underflow point).
double std_normal_logcdf(double x);
// Inverse cdf, Wichura AS241 double-precision rational approximation.
double std_normal_quantile(double p);

// Inverse Mills ratio zeta(t) = phi(t)/Phi(t). Total on finite reals;
// evaluated in log space for t < -8 where phi and Phi both underflow.
double zeta(double t);

// ---- truncated normal moments ----

struct TruncNormSpec {
  double lower;  // truncation point a
  int degree;    // k, 0 <= k <= 12
};

// E[W^k | W > a] for W ~ N(0,1), by the stable recursion
//   m_k = (k-1) m_{k-2} + a^{k-1} zeta(-a),  m_0 = 1, m_1 = zeta(-a).
double truncnorm_moment(const TruncNormSpec& spec);
double truncnorm_moment(int k, double a);

// E[(W + t)^j | W + t > 0], the binomial expansion over truncnorm_moment.
double truncnorm_shifted_moment(int j, double t);

// ---- gamma/beta incomplete integrals ----

// Regularized lower incomplete gamma P(a, x).
double reg_lower_inc_gamma(double a, double x);
// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double a, double b, double x);

double chi_sq_cdf(double x, double dof);
double gamma_cdf(double x, double shape, double rate);

// ---- Student t ----

double student_t_pdf(double x, double nu);
double student_t_logpdf(double x, double nu);
// cdf via the incomplete-beta identity.
double student_t_cdf(double x, double nu);
double student_t_quantile(double p, double nu);

// ---- modified Bessel function of the third kind ----

// K_order(x) for real order, x > 0. Temme's series for x <= 2, Steed's
// continued-fraction method beyond, order recurrence from the two
// minimal-order kernels.
double bessel_k(double order, double x);
// log K_order(x); safe where K underflows (large x).
double log_bessel_k(double order, double x);

}  // namespace specfun
}  // namespace gmn

#endif  // GMN_SPECFUN_HPP_
