#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace mvop {

class Rng;

// Standard normal density, CDF, complementary CDF and quantile.
double norm_pdf(double x);
double norm_cdf(double x);
double norm_cdf_compl(double x);
double norm_quantile(double p);

// Student-t quantile; df may be non-integral. Large df falls back to the
// normal quantile.
double students_t_quantile(double p, double df);

// Probability mass of N(0,1) on (a, b]; computed in the tail that keeps
// precision. a and b may be infinite.
double norm_interval_prob(double a, double b);

// Inverse-CDF draw from N(0,1) truncated to (a, b), driven by a supplied
// uniform u in (0,1). Far-tail intervals are handled on the complementary
// scale so that cells beyond |6| sigma do not collapse.
double trunc_std_normal_from_u(double u, double a, double b);

// Truncated standard normal draw using the chain's own RNG.
double trunc_std_normal(Rng& rng, double a, double b);

// Wishart(df, scale) draw via Bartlett decomposition; scale must be PD.
Eigen::MatrixXd wishart_draw(Rng& rng, double df, const Eigen::MatrixXd& scale);

// Inverse-Wishart(df, scale) draw; scale must be PD.
Eigen::MatrixXd inv_wishart_draw(Rng& rng, double df, const Eigen::MatrixXd& scale);

// Cholesky factor of a symmetric PD matrix; throws NumericalError with the
// estimated condition number when the factorization fails.
Eigen::MatrixXd cholesky_pd(const Eigen::MatrixXd& m, const char* context);

}  // namespace mvop
