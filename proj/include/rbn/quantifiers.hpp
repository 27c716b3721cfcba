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

#ifndef RBN_QUANTIFIERS_HPP
#define RBN_QUANTIFIERS_HPP

#include <limits>
#include <optional>
#include <vector>

#include "rbn/channels.hpp"
#include "rbn/observables.hpp"
#include "rbn/states.hpp"

namespace rbn {

// All entropies are in nats.

/// Analytic bounds on a suppression value at a given pair of observables.
/// Entries that do not apply to a report are NaN.
struct BoundsReport {
  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

  double lb1 = kUnset;
  double ub1 = kUnset;
  double lb2 = kUnset;
  double ub2 = kUnset;
  double lb1_bi = kUnset;
  double ub1_bi = kUnset;
  double trivial_lb = 0.0;
  double trivial_ub = kUnset;  // N(rho) when known
};

/// -sum p ln p over nonnegative weights, with 0 ln 0 = 0.
double shannon_entropy(const std::vector<double>& probs);

/// H(p) = -p ln p - (1 - p) ln(1 - p).
double binary_entropy(double p);

/// -sum lambda ln lambda with eigenvalues in [-1e-10, 0) clamped to zero.
/// Throws InvalidState for anything that is not a density matrix.
double vn_entropy(const ComplexMatrix& rho);
double vn_entropy(const DensityMatrix& rho);

/// Tr rho (ln rho - ln sigma). Throws SupportViolation when rho has weight
/// outside the support of sigma (eigenvalue threshold 1e-12).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// S(Phi_O(rho)) - S(rho) for O on the given side.
double irreality(const ProjectiveObservable& obs, const DensityMatrix& rho,
                 Side side);

/// S(Phi_A rho) + S(Phi_B rho) - S(Phi_A Phi_B rho) - S(rho).
double eta(const ProjectiveObservable& obs_a, const ProjectiveObservable& obs_b,
           const DensityMatrix& rho);

/// I(A|rho) - I(A|Phi_B rho); algebraically equal to eta().
double eta_from_irreality(const ProjectiveObservable& obs_a,
                          const ProjectiveObservable& obs_b,
                          const DensityMatrix& rho);

/// S(M_A rho) + S(M_B rho) - S(M_A M_B rho) - S(rho) with strengths eps_a on
/// A and eps_b on B. Exactly zero when either strength is zero.
double delta(const ProjectiveObservable& obs_a,
             const ProjectiveObservable& obs_b, const DensityMatrix& rho,
             MonitoringStrength eps_a, MonitoringStrength eps_b);

/// S(M_O^eps rho) - S(rho).
double reality_gain(const ProjectiveObservable& obs, const DensityMatrix& rho,
                    MonitoringStrength eps, Side side);

/// eps tau ln(d - 1) + H(eps tau) with tau = T(Phi_O rho, rho) and d the full
/// dimension of rho.
double gamma_bound(const ProjectiveObservable& obs, const DensityMatrix& rho,
                   MonitoringStrength eps, Side side);

/// d sqrt(eps tau / e), which strictly dominates gamma_bound when tau > 0.
double gamma_sqrt_bound(const ProjectiveObservable& obs,
                        const DensityMatrix& rho, MonitoringStrength eps,
                        Side side);

/// Bounds on the local suppression (monitoring on B) at the pair (A, B):
///   UB1 = Gamma_B(rho) - eps I(B|Phi_A rho)
///   LB1 = eps I(B|rho) - Gamma_B(Phi_A rho)
///   UB2 = eps eta_AB(rho) + (1 - eps) I(B|rho)
///   LB2 = eps eta_AB(rho) - (1 + eps) I(B|Phi_A rho)
BoundsReport local_bounds(const DensityMatrix& rho, MonitoringStrength eps,
                          const ProjectiveObservable& obs_a,
                          const ProjectiveObservable& obs_b,
                          std::optional<double> n_value = std::nullopt);

/// Bilocal bounds at the pair (A, B):
///   ub1 = Gamma_B^{eps_b}(rho) - eps_b I(B|M_A^{eps_a} rho)
///   lb1 = eps_b I(B|rho) - Gamma_B^{eps_b}(M_A^{eps_a} rho)
/// For eps_a = eps_b these are the symmetric-monitoring bounds.
BoundsReport bilocal_bounds(const DensityMatrix& rho, MonitoringStrength eps_a,
                            MonitoringStrength eps_b,
                            const ProjectiveObservable& obs_a,
                            const ProjectiveObservable& obs_b,
                            std::optional<double> n_value = std::nullopt);

/// Local suppression of the Werner family rho^{1/2, beta} at sigma_z sigma_z:
/// 1/4 sum_{i,j} (-1)^j l_ij ln l_ij, l_ij = 1 + beta [4i - 1 + 2 j eps (1-2i)].
double closed_form_werner_suppression(double beta, double eps);

/// Local suppression of |psi_alpha> in the stable form
/// ln 2 - [(1+x)/2 ln(1+x) + (1-x)/2 ln(1-x)], x = sqrt(1 - 4 L),
/// L = eps alpha (2 - eps)(1 - alpha).
double closed_form_pure_suppression(double alpha, double eps);

/// -ln sqrt(L) - sqrt(1 - 4L) artanh sqrt(1 - 4L); singular at L = 0.
/// Kept to cross-check closed_form_pure_suppression.
double closed_form_pure_suppression_literal(double alpha, double eps);

/// S(Tr_B psi) (equal to S(Tr_A psi)).
double entanglement_entropy(const PureState& psi);

}  // namespace rbn

#endif  // RBN_QUANTIFIERS_HPP
