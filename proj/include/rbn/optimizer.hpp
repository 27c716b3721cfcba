// Copyright 2026 The RBN Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RBN_OPTIMIZER_HPP
#define RBN_OPTIMIZER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rbn/channels.hpp"
#include "rbn/observables.hpp"
#include "rbn/quantifiers.hpp"
#include "rbn/states.hpp"

namespace rbn {

/// Search settings for the maximizations over observable pairs.
///
/// Qubit sides are seeded from a grid_theta x grid_phi lattice of Bloch
/// angles (theta over [0, pi] inclusive, phi over [0, pi) when halve_phi is
/// set, otherwise [0, 2 pi)). Sides of dimension d > 2 use Givens angles and
/// are seeded with the computational basis plus grid_theta * grid_phi - 1
/// pseudo-random angle vectors drawn from `seed`. The pair lattice is
/// evaluated exhaustively, then the best `refine_seeds` cells are refined by
/// Nelder-Mead.
struct OptimizerConfig {
  int grid_theta = 24;
  int grid_phi = 12;
  bool halve_phi = true;
  int refine_seeds = 5;
  int max_iterations = 500;
  double objective_tol = 1e-8;
  double parameter_tol = 1e-6;
  /// Values within this distance of the best are ties, resolved by lattice
  /// index.
  double tie_tol = 1e-12;
  /// Fill BoundsReport::trivial_ub with a separate N(rho) maximization.
  bool compute_n_bound = true;
  /// Worker threads for the lattice; 0 uses the hardware concurrency.
  unsigned threads = 0;
  std::uint64_t seed = 20190917;

  /// Throws InvalidArgument on nonsensical settings.
  void validate() const;

  /// Applies "key=value" overrides (grid_theta, grid_phi, halve_phi,
  /// refine_seeds, max_iterations, objective_tol, parameter_tol, tie_tol,
  /// compute_n_bound, threads, seed). Unknown keys throw.
  static OptimizerConfig from_key_values(
      const std::map<std::string, std::string>& values,
      const OptimizerConfig& base);
  static OptimizerConfig from_key_values(
      const std::map<std::string, std::string>& values);

  /// Stable one-line "key=value ..." rendering, used in CSV headers.
  std::string describe() const;
};

/// Angles of the argmax pair. For a qubit side the two entries are the Bloch
/// (theta, phi); otherwise the d (d - 1) Givens angles of givens_basis.
struct PairParams {
  std::vector<double> a;
  std::vector<double> b;
};

struct SuppressionReport {
  double value = 0.0;
  PairParams argmax;
  BoundsReport bounds;
  long evaluations = 0;
  bool converged = false;
  int dim_a = 0;
  int dim_b = 0;

  /// The argmax pair as observables.
  std::pair<ProjectiveObservable, ProjectiveObservable> observables() const;
};

/// Observable described by one side of PairParams.
ProjectiveObservable observable_from_params(int d,
                                            const std::vector<double>& params);

/// N(rho) = max_{A,B} eta_AB(rho).
SuppressionReport max_context_rbn(const DensityMatrix& rho,
                                  const OptimizerConfig& config = {});

/// Delta_B^eps(rho) = max_{A,B} delta^{1 eps}_AB(rho) for monitoring_side B,
/// or Delta_A^eps = max delta^{eps 1}_AB for monitoring_side A. Bounds are
/// LB1, UB1, LB2, UB2 at the argmax (mirrored when monitoring A).
SuppressionReport local_suppression(const DensityMatrix& rho,
                                    MonitoringStrength eps,
                                    const OptimizerConfig& config = {},
                                    Side monitoring_side = Side::B);

/// Delta^{eps_a eps_b}(rho) = max_{A,B} delta^{eps_a eps_b}_AB(rho), with
/// bilocal bounds lb1/ub1 at the argmax.
SuppressionReport bilocal_suppression(const DensityMatrix& rho,
                                      MonitoringStrength eps_a,
                                      MonitoringStrength eps_b,
                                      const OptimizerConfig& config = {});

/// The objective used by the optimizer, evaluated at explicit observables
/// through the block-entropy fast paths. Agrees with delta() to rounding.
double fast_delta(const DensityMatrix& rho, const ProjectiveObservable& obs_a,
                  const ProjectiveObservable& obs_b, MonitoringStrength eps_a,
                  MonitoringStrength eps_b);

}  // namespace rbn

#endif  // RBN_OPTIMIZER_HPP
