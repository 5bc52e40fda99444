#include "mvop/stats.hpp"

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <iostream>
#include <limits>
#include <mutex>
#include <sstream>

#include "mvop/errors.hpp"
#include "mvop/rng.hpp"

namespace mvop {

namespace {
const boost::math::normal_distribution<double> kStdNormal(0.0, 1.0);
constexpr double kInf = std::numeric_limits<double>::infinity();
std::mutex g_log_mutex;
}  // namespace

void log_warning(const std::string& message) {
  std::lock_guard<std::mutex> lock(g_log_mutex);
  std::cerr << "[mvop] warning: " << message << "\n";
}

double norm_pdf(double x) { return boost::math::pdf(kStdNormal, x); }

double norm_cdf(double x) {
  if (x == -kInf) return 0.0;
  if (x == kInf) return 1.0;
  return boost::math::cdf(kStdNormal, x);
}

double norm_cdf_compl(double x) {
  if (x == -kInf) return 1.0;
  if (x == kInf) return 0.0;
  return boost::math::cdf(boost::math::complement(kStdNormal, x));
}

double norm_quantile(double p) {
  if (p <= 0.0 || p >= 1.0) {
    if (p == 0.0) return -kInf;
    if (p == 1.0) return kInf;
    throw NumericalError("norm_quantile: probability outside [0,1]");
  }
  return boost::math::quantile(kStdNormal, p);
}

double students_t_quantile(double p, double df) {
  if (!(df > 0.0)) throw NumericalError("students_t_quantile: df must be positive");
  if (df > 1e8 || std::isinf(df)) return norm_quantile(p);
  const boost::math::students_t_distribution<double> dist(df);
  return boost::math::quantile(dist, p);
}

double norm_interval_prob(double a, double b) {
  if (!(a < b)) return 0.0;
  // Evaluate in whichever tail keeps the difference well conditioned.
  if (a >= 0.0) return norm_cdf_compl(a) - norm_cdf_compl(b);
  if (b <= 0.0) return norm_cdf(b) - norm_cdf(a);
  return norm_cdf(b) - norm_cdf(a);
}

namespace {

// Quantile of N(0,1) given the complementary probability q = P(X > x).
double quantile_compl(double q) {
  return -boost::math::quantile(kStdNormal, q);
}

// One-sided exponential rejection for extreme tails where even the
// complementary CDF underflows (Robert 1995), capped for safety.
double tail_rejection(Rng& rng, double a, double b) {
  const double lambda = 0.5 * (a + std::sqrt(a * a + 4.0));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double x = a + rng.exponential() / lambda;
    if (x > b) continue;
    const double diff = x - lambda;
    if (std::log(rng.uniform_pos()) <= -0.5 * diff * diff) return x;
  }
  // Interval so deep in the tail the mass is effectively at the lower edge.
  return std::isfinite(b) ? a + 0.5 * (b - a) * 1e-3 : a + 1.0 / lambda;
}

}  // namespace

double trunc_std_normal_from_u(double u, double a, double b) {
  if (!(a < b)) throw ValidationError("truncated normal: empty interval");
  if (a == -kInf && b == kInf) return norm_quantile(u);
  double x;
  if (a >= 0.0) {
    // Upper-tail interval: work with complementary probabilities.
    const double qa = norm_cdf_compl(a);  // larger
    const double qb = norm_cdf_compl(b);  // smaller
    const double q = qb + u * (qa - qb);
    if (q <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    x = quantile_compl(q);
  } else if (b <= 0.0) {
    const double pa = norm_cdf(a);
    const double pb = norm_cdf(b);
    const double p = pa + u * (pb - pa);
    if (p <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    x = norm_quantile(p);
  } else {
    const double pa = norm_cdf(a);
    const double pb = norm_cdf(b);
    x = norm_quantile(pa + u * (pb - pa));
  }
  // Round-off can push the draw onto (or past) a bound; nudge it back inside.
  if (x <= a) x = std::nextafter(a, kInf);
  if (x >= b) x = std::nextafter(b, -kInf);
  return x;
}

double trunc_std_normal(Rng& rng, double a, double b) {
  const double x = trunc_std_normal_from_u(rng.uniform_pos(), a, b);
  if (std::isnan(x)) {
    // Probability mass underflowed; fall back to tail rejection.
    if (a >= 0.0) return tail_rejection(rng, a, b);
    return -tail_rejection(rng, -b, -a);
  }
  return x;
}

Eigen::MatrixXd cholesky_pd(const Eigen::MatrixXd& m, const char* context) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    std::ostringstream oss;
    oss << context << ": matrix not positive definite";
    if (es.info() == Eigen::Success && es.eigenvalues().size() > 0) {
      const double lo = es.eigenvalues().minCoeff();
      const double hi = es.eigenvalues().maxCoeff();
      oss << " (eigenvalue range [" << lo << ", " << hi << "]";
      if (lo > 0.0) oss << ", condition number " << hi / lo;
      oss << ")";
    }
    throw NumericalError(oss.str());
  }
  return llt.matrixL();
}

Eigen::MatrixXd wishart_draw(Rng& rng, double df, const Eigen::MatrixXd& scale) {
  const int j = static_cast<int>(scale.rows());
  if (df <= j - 1) throw NumericalError("wishart_draw: df too small");
  const Eigen::MatrixXd l = cholesky_pd(scale, "wishart_draw scale");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(j, j);
  for (int r = 0; r < j; ++r) {
    a(r, r) = std::sqrt(rng.chisq(df - r));
    for (int c = 0; c < r; ++c) a(r, c) = rng.normal();
  }
  const Eigen::MatrixXd la = l * a;
  return la * la.transpose();
}

Eigen::MatrixXd inv_wishart_draw(Rng& rng, double df, const Eigen::MatrixXd& scale) {
  const int j = static_cast<int>(scale.rows());
  Eigen::LLT<Eigen::MatrixXd> llt(scale);
  if (llt.info() != Eigen::Success)
    throw NumericalError("inv_wishart_draw: scale matrix not positive definite");
  const Eigen::MatrixXd scale_inv =
      llt.solve(Eigen::MatrixXd::Identity(j, j));
  const Eigen::MatrixXd w = wishart_draw(rng, df, 0.5 * (scale_inv + scale_inv.transpose()));
  Eigen::LLT<Eigen::MatrixXd> lltw(w);
  if (lltw.info() != Eigen::Success)
    throw NumericalError("inv_wishart_draw: degenerate Wishart draw");
  Eigen::MatrixXd sigma = lltw.solve(Eigen::MatrixXd::Identity(j, j));
  return 0.5 * (sigma + sigma.transpose());
}

}  // namespace mvop
