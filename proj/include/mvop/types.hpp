#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace mvop {

// N x J ordinal responses with per-item level counts and an N x P covariate
// matrix whose first column is the all-ones intercept. Missing responses are
// stored as 0; observed codes run 1..c_j.
struct OrdinalDataset {
  static constexpr int kMissing = 0;

  Eigen::MatrixXi responses;   // N x J
  Eigen::VectorXi levels;      // J entries, c_j >= 2
  Eigen::MatrixXd covariates;  // N x P
  std::vector<std::string> item_names;       // optional, size J when present
  std::vector<std::string> covariate_names;  // optional, size P when present

  int n() const { return static_cast<int>(responses.rows()); }
  int j() const { return static_cast<int>(responses.cols()); }
  int p() const { return static_cast<int>(covariates.cols()); }

  bool is_missing(int i, int jj) const { return responses(i, jj) == kMissing; }
  int n_missing() const;
  bool has_missing() const { return n_missing() > 0; }

  // Checks level ranges, covariate completeness and the intercept column.
  // Throws ValidationError; logs a note for binary items (c_j = 2), whose
  // latent scale is identified only through Sigma.
  void validate() const;
};

enum class IdMode {
  kThreshold,    // gamma_{j,1} = 0 and gamma_{j,c_j-1} = 1 fixed; Sigma free
  kCorrelation,  // gamma_{j,1} = 0 fixed; Sigma restricted to a correlation matrix
  kWorking,      // parameter-expanded form: gamma_{j,1} = 0, Sigma unconstrained
};

// Thresholds, coefficients and covariance of the multivariate ordinal probit.
// gamma[j] stores the interior thresholds (gamma_{j,1}, ..., gamma_{j,c_j-1});
// the outer -inf / +inf bounds are implicit.
struct MvopParams {
  IdMode mode = IdMode::kThreshold;
  std::vector<Eigen::VectorXd> gamma;
  Eigen::MatrixXd beta;   // J x P
  Eigen::MatrixXd sigma;  // J x J

  int j() const { return static_cast<int>(beta.rows()); }
  int p() const { return static_cast<int>(beta.cols()); }
  int n_levels(int item) const { return static_cast<int>(gamma[item].size()) + 1; }

  // Threshold below/above a level's cell, with the implicit infinities.
  double lower_bound(int item, int level) const;
  double upper_bound(int item, int level) const;

  // Enforces monotone thresholds, the mode's pinned constraints, symmetry
  // and positive definiteness. Throws ValidationError.
  void validate() const;
};

// Latent N x J responses underlying the ordinal observations.
using LatentMatrix = Eigen::MatrixXd;

// Positive diagonal of the parameter-expansion matrix D.
using ExpansionScale = Eigen::VectorXd;

}  // namespace mvop
