#include "gmn/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gmn/errors.hpp"

namespace gmn {
namespace specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogSqrt2Pi = 0.918938533204672741780329736405617639;
constexpr double kSqrt2 = 1.414213562373095048801688724209698079;
constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

double std_normal_pdf(double x) { return std::exp(-0.5 * x * x - kLogSqrt2Pi); }

double std_normal_logpdf(double x) { return -0.5 * x * x - kLogSqrt2Pi; }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double std_normal_logcdf(double x) {
  if (x > -37.0) {
    // erfc stays above the underflow threshold here and keeps full
    // relative precision.
    return std::log(0.5 * std::erfc(-x / kSqrt2));
  }
  // Tail expansion Phi(x) ~ phi(x)/|x| * (1 - 1/x^2 + 3/x^4 - ...).
  const double z = 1.0 / (x * x);
  double series = 0.0, term = 1.0;
  for (int k = 1; k <= 7; ++k) {
    term *= -(2 * k - 1) * z;
    series += term;
  }
  return std_normal_logpdf(x) - std::log(-x) + std::log1p(series);
}

double std_normal_quantile(double p) {
  // Wichura's algorithm AS241, PPND16.
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw ModelError("std_normal_quantile: p outside [0,1]");
  }
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
               1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
             1.3314166789178437745e+2) * r + 3.3871328727963666080e0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
               5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
             4.2313330701600911252e+1) * r + 1.0);
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
              3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
            4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
              6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
            2.05319162663775882187e0) * r + 1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
              2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
            5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
              1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
            5.99832206555887937690e-1) * r + 1.0);
  }
  return (q < 0.0) ? -val : val;
}

double zeta(double t) {
  if (!std::isfinite(t)) throw ModelError("zeta: non-finite argument");
  if (t >= -8.0) return std_normal_pdf(t) / std_normal_cdf(t);
  return std::exp(std_normal_logpdf(t) - std_normal_logcdf(t));
}

double truncnorm_moment(int k, double a) {
  if (k < 0 || k > 12)
    throw ModelError("truncnorm_moment: degree must be in [0, 12]");
  if (k == 0) return 1.0;
  const double z = zeta(-a);  // E[W | W > a]
  if (k == 1) return z;
  double m_prev = 1.0, m_cur = z, apow = a;  // a^{k-1} built incrementally
  for (int j = 2; j <= k; ++j) {
    const double m_next = (j - 1) * m_prev + apow * z;
    m_prev = m_cur;
    m_cur = m_next;
    apow *= a;
  }
  return m_cur;
}

double truncnorm_moment(const TruncNormSpec& spec) {
  return truncnorm_moment(spec.degree, spec.lower);
}

double truncnorm_shifted_moment(int j, double t) {
  if (j < 0 || j > 12)
    throw ModelError("truncnorm_shifted_moment: degree must be in [0, 12]");
  // E[(W+t)^j | W+t > 0] = sum_k C(j,k) E[W^k | W > -t] t^{j-k}
  double sum = 0.0, binom = 1.0;
  for (int k = 0; k <= j; ++k) {
    sum += binom * truncnorm_moment(k, -t) * std::pow(t, j - k);
    binom *= static_cast<double>(j - k) / (k + 1);
  }
  return sum;
}

namespace {

// Series branch of P(a,x), x < a+1.
double inc_gamma_series(double a, double x) {
  double ap = a, sum = 1.0 / a, del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued-fraction branch of Q(a,x) = 1 - P(a,x), x >= a+1 (Lentz).
double inc_gamma_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double reg_lower_inc_gamma(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw ModelError("reg_lower_inc_gamma: bad arguments");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return inc_gamma_series(a, x);
  return 1.0 - inc_gamma_cf(a, x);
}

double chi_sq_cdf(double x, double dof) {
  if (x <= 0.0) return 0.0;
  return reg_lower_inc_gamma(0.5 * dof, 0.5 * x);
}

double gamma_cdf(double x, double shape, double rate) {
  if (x <= 0.0) return 0.0;
  return reg_lower_inc_gamma(shape, rate * x);
}

namespace {

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double inc_beta_cf(double a, double b, double x) {
  const double tiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0, d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 500; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double reg_inc_beta(double a, double b, double x) {
  if (a <= 0.0 || b <= 0.0) throw ModelError("reg_inc_beta: a, b must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * inc_beta_cf(a, b, x) / a;
  return 1.0 - front * inc_beta_cf(b, a, 1.0 - x) / b;
}

double student_t_logpdf(double x, double nu) {
  if (nu <= 0.0) throw ModelError("student_t: nu must be positive");
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
         0.5 * std::log(nu * kPi) -
         0.5 * (nu + 1.0) * std::log1p(x * x / nu);
}

double student_t_pdf(double x, double nu) { return std::exp(student_t_logpdf(x, nu)); }

double student_t_cdf(double x, double nu) {
  if (nu <= 0.0) throw ModelError("student_t: nu must be positive");
  if (x == 0.0) return 0.5;
  const double z = nu / (nu + x * x);
  const double half_tail = 0.5 * reg_inc_beta(0.5 * nu, 0.5, z);
  return (x > 0.0) ? 1.0 - half_tail : half_tail;
}

double student_t_quantile(double p, double nu) {
  if (!(p > 0.0 && p < 1.0)) {
    if (p == 0.0) return -std::numeric_limits<double>::infinity();
    if (p == 1.0) return std::numeric_limits<double>::infinity();
    throw ModelError("student_t_quantile: p outside [0,1]");
  }
  if (p == 0.5) return 0.0;
  // Normal start, expanding bracket, then bisection/Newton hybrid.
  double x = std_normal_quantile(p);
  if (nu < 30.0) x *= std::sqrt(nu / std::max(nu - 2.0, 0.5));
  double lo = x, hi = x;
  double step = std::max(1.0, std::abs(x));
  while (student_t_cdf(lo, nu) > p) lo -= step, step *= 2.0;
  step = std::max(1.0, std::abs(x));
  while (student_t_cdf(hi, nu) < p) hi += step, step *= 2.0;
  x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = student_t_cdf(x, nu) - p;
    if (f > 0.0) hi = x;
    else lo = x;
    const double dfdx = student_t_pdf(x, nu);
    double next = (dfdx > 0.0) ? x - f / dfdx : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, std::abs(x))) return next;
    x = next;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Modified Bessel function of the third kind, real order.
//
// Temme's series (J. Comput. Phys. 19, 1975) for x <= 2 delivers K_f and
// K_{f+1} for |f| <= 1/2; Steed's continued-fraction CF2 covers x > 2.
// Upward recurrence K_{l+1} = K_{l-1} + (2l/x) K_l raises the order; the
// recurrence is growing and therefore stable in this direction.
// ---------------------------------------------------------------------------

namespace {

// (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), continuous through mu = 0.
double temme_gam1(double mu) {
  // 1/Gamma(1+z) = 1 + a1 z + a2 z^2 + a3 z^3 + ..., a1 = EulerGamma.
  constexpr double a1 = 0.57721566490153286060651209008240243;
  constexpr double a3 = -0.04200263503409523552900393487542982;
  constexpr double a5 = -0.00096219715278769735621149216723482;
  if (std::abs(mu) < 1e-3) {
    const double m2 = mu * mu;
    return -(a1 + m2 * (a3 + m2 * a5));
  }
  return (1.0 / std::tgamma(1.0 - mu) - 1.0 / std::tgamma(1.0 + mu)) / (2.0 * mu);
}

double temme_gam2(double mu) {
  return 0.5 * (1.0 / std::tgamma(1.0 - mu) + 1.0 / std::tgamma(1.0 + mu));
}

struct BesselKPair {
  double k_mu;    // K_mu(x), possibly scaled by e^x
  double k_mu1;   // K_{mu+1}(x), same scaling
  bool scaled;    // true when values carry the e^x factor
};

// Temme series, x <= 2, |mu| <= 1/2. Unscaled (no underflow in this range).
BesselKPair bessel_k_temme(double mu, double x) {
  const double x2 = 0.5 * x;
  const double pimu = kPi * mu;
  const double fact = (std::abs(pimu) < 1e-12) ? 1.0 : pimu / std::sin(pimu);
  const double d = -std::log(x2);
  const double e = mu * d;
  const double fact2 = (std::abs(e) < 1e-12) ? 1.0 : std::sinh(e) / e;
  const double gampl = 1.0 / std::tgamma(1.0 + mu);
  const double gammi = 1.0 / std::tgamma(1.0 - mu);
  double ff = fact * (temme_gam1(mu) * std::cosh(e) + temme_gam2(mu) * fact2 * d);
  double sum = ff;
  const double ee = std::exp(e);
  double p = 0.5 * ee / gampl;
  double q = 0.5 / (ee * gammi);
  double c = 1.0;
  const double x2sq = x2 * x2;
  double sum1 = p;
  for (int i = 1; i <= 500; ++i) {
    ff = (i * ff + p + q) / (i * i - mu * mu);
    c *= x2sq / i;
    p /= (i - mu);
    q /= (i + mu);
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - i * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * kEps) break;
  }
  return {sum, sum1 * 2.0 / x, false};
}

// Steed CF2, x > 2, |mu| <= 1/2. Returns e^x-scaled values.
BesselKPair bessel_k_cf2(double mu, double x) {
  const double a1 = 0.25 - mu * mu;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  double a = -a1;
  double q = a1, c = a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= 2000; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h = a1 * h;
  const double k_mu = std::sqrt(kPi / (2.0 * x)) / s;  // scaled by e^x
  const double k_mu1 = k_mu * (mu + x + 0.5 - h) / x;
  return {k_mu, k_mu1, true};
}

BesselKPair bessel_k_kernel(double mu, double x) {
  return (x <= 2.0) ? bessel_k_temme(mu, x) : bessel_k_cf2(mu, x);
}

}  // namespace

double bessel_k(double order, double x) {
  if (!(x > 0.0)) throw ModelError("bessel_k: x must be positive");
  const double lam = std::abs(order);  // K_{-lam} = K_{lam}
  const int nl = static_cast<int>(std::floor(lam + 0.5));
  const double mu = lam - nl;  // in [-1/2, 1/2)
  BesselKPair kp = bessel_k_kernel(mu, x);
  double km = kp.k_mu, k1 = kp.k_mu1;
  for (int i = 1; i <= nl; ++i) {
    const double knext = km + 2.0 * (mu + i) / x * k1;
    km = k1;
    k1 = knext;
  }
  const double value = (nl == 0) ? km : km;  // after loop km = K_{mu+nl}
  return kp.scaled ? value * std::exp(-x) : value;
}

double log_bessel_k(double order, double x) {
  if (!(x > 0.0)) throw ModelError("log_bessel_k: x must be positive");
  const double lam = std::abs(order);
  const int nl = static_cast<int>(std::floor(lam + 0.5));
  const double mu = lam - nl;
  BesselKPair kp = bessel_k_kernel(mu, x);
  double km = kp.k_mu, k1 = kp.k_mu1;
  double log_rescale = 0.0;
  for (int i = 1; i <= nl; ++i) {
    double knext = km + 2.0 * (mu + i) / x * k1;
    km = k1;
    k1 = knext;
    if (k1 > 1e280) {  // renormalize so extreme orders cannot overflow
      km *= 1e-280;
      k1 *= 1e-280;
      log_rescale += 280.0 * std::log(10.0);
    }
  }
  return std::log(km) + log_rescale - (kp.scaled ? x : 0.0);
}

}  // namespace specfun
}  // namespace gmn
