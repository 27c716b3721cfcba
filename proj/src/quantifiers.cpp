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

#include "rbn/quantifiers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rbn/error.hpp"

namespace rbn {

namespace {

constexpr double kClampTol = 1e-10;
constexpr double kSupportTol = 1e-12;

double entropy_of_spectrum(const std::vector<double>& values) {
  double s = 0.0;
  for (double lambda : values) {
    if (lambda < -kClampTol) {
      std::ostringstream msg;
      msg << "entropy of a matrix with negative eigenvalue " << lambda;
      throw Error(ErrorCode::InvalidState, msg.str());
    }
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

void check_same_shape(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim_a() != b.dim_a() || a.dim_b() != b.dim_b()) {
    throw Error(ErrorCode::DimensionMismatch,
                "states have different bipartitions");
  }
}

void check_unit(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in [0, 1], got " << value;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

double x_log_x(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double shannon_entropy(const std::vector<double>& probs) {
  double s = 0.0;
  for (double p : probs) {
    if (p < 0.0) {
      throw Error(ErrorCode::InvalidArgument, "negative probability");
    }
    s -= x_log_x(p);
  }
  return s;
}

double binary_entropy(double p) {
  p = std::clamp(p, 0.0, 1.0);
  return -x_log_x(p) - x_log_x(1.0 - p);
}

double vn_entropy(const ComplexMatrix& rho) {
  validate_density(rho, "entropy argument");
  return entropy_of_spectrum(hermitian_eigenvalues(rho));
}

double vn_entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(hermitian_eigenvalues(rho.matrix()));
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_same_shape(rho, sigma);
  const Spectrum spectrum = hermitian_eig(sigma.matrix());
  double cross = 0.0;
  for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
    const double weight =
        expectation(rho.matrix(), spectrum.eigenvectors[k]).real();
    const double mu = spectrum.eigenvalues[k];
    if (mu <= kSupportTol) {
      if (weight > kSupportTol) {
        std::ostringstream msg;
        msg << "relative entropy diverges: weight " << weight
            << " outside the support of sigma";
        throw Error(ErrorCode::SupportViolation, msg.str());
      }
      continue;
    }
    cross += weight * std::log(mu);
  }
  return -vn_entropy(rho) - cross;
}

double irreality(const ProjectiveObservable& obs, const DensityMatrix& rho,
                 Side side) {
  return vn_entropy(dephase(rho, obs, side)) - vn_entropy(rho);
}

double eta(const ProjectiveObservable& obs_a, const ProjectiveObservable& obs_b,
           const DensityMatrix& rho) {
  const DensityMatrix phi_a = dephase(rho, obs_a, Side::A);
  const DensityMatrix phi_b = dephase(rho, obs_b, Side::B);
  const DensityMatrix phi_ab = dephase(phi_b, obs_a, Side::A);
  return vn_entropy(phi_a) + vn_entropy(phi_b) - vn_entropy(phi_ab) -
         vn_entropy(rho);
}

double eta_from_irreality(const ProjectiveObservable& obs_a,
                          const ProjectiveObservable& obs_b,
                          const DensityMatrix& rho) {
  return irreality(obs_a, rho, Side::A) -
         irreality(obs_a, dephase(rho, obs_b, Side::B), Side::A);
}

double delta(const ProjectiveObservable& obs_a,
             const ProjectiveObservable& obs_b, const DensityMatrix& rho,
             MonitoringStrength eps_a, MonitoringStrength eps_b) {
  if (eps_a.value() == 0.0 || eps_b.value() == 0.0) return 0.0;
  const DensityMatrix m_a = monitor(rho, obs_a, eps_a, Side::A);
  const DensityMatrix m_b = monitor(rho, obs_b, eps_b, Side::B);
  const DensityMatrix m_ab = monitor(m_b, obs_a, eps_a, Side::A);
  return vn_entropy(m_a) + vn_entropy(m_b) - vn_entropy(m_ab) -
         vn_entropy(rho);
}

double reality_gain(const ProjectiveObservable& obs, const DensityMatrix& rho,
                    MonitoringStrength eps, Side side) {
  return vn_entropy(monitor(rho, obs, eps, side)) - vn_entropy(rho);
}

double gamma_bound(const ProjectiveObservable& obs, const DensityMatrix& rho,
                   MonitoringStrength eps, Side side) {
  const int d = rho.dim();
  if (d < 2) {
    throw Error(ErrorCode::InvalidArgument, "gamma_bound needs dimension >= 2");
  }
  const double tau =
      trace_distance(dephase(rho, obs, side).matrix(), rho.matrix());
  const double x = std::clamp(eps.value() * tau, 0.0, 1.0);
  return x * std::log(static_cast<double>(d - 1)) + binary_entropy(x);
}

double gamma_sqrt_bound(const ProjectiveObservable& obs,
                        const DensityMatrix& rho, MonitoringStrength eps,
                        Side side) {
  const double tau =
      trace_distance(dephase(rho, obs, side).matrix(), rho.matrix());
  return static_cast<double>(rho.dim()) *
         std::sqrt(eps.value() * tau / std::numbers::e);
}

BoundsReport local_bounds(const DensityMatrix& rho, MonitoringStrength eps,
                          const ProjectiveObservable& obs_a,
                          const ProjectiveObservable& obs_b,
                          std::optional<double> n_value) {
  const double e = eps.value();
  const DensityMatrix phi_a = dephase(rho, obs_a, Side::A);
  const double irr_b = irreality(obs_b, rho, Side::B);
  const double irr_b_phi_a = irreality(obs_b, phi_a, Side::B);
  const double eta_ab = eta(obs_a, obs_b, rho);

  BoundsReport report;
  report.ub1 = gamma_bound(obs_b, rho, eps, Side::B) - e * irr_b_phi_a;
  report.lb1 = e * irr_b - gamma_bound(obs_b, phi_a, eps, Side::B);
  report.ub2 = e * eta_ab + (1.0 - e) * irr_b;
  report.lb2 = e * eta_ab - (1.0 + e) * irr_b_phi_a;
  if (n_value) report.trivial_ub = *n_value;
  return report;
}

BoundsReport bilocal_bounds(const DensityMatrix& rho, MonitoringStrength eps_a,
                            MonitoringStrength eps_b,
                            const ProjectiveObservable& obs_a,
                            const ProjectiveObservable& obs_b,
                            std::optional<double> n_value) {
  const double e = eps_b.value();
  const DensityMatrix m_a = monitor(rho, obs_a, eps_a, Side::A);
  BoundsReport report;
  report.ub1_bi = gamma_bound(obs_b, rho, eps_b, Side::B) -
                  e * irreality(obs_b, m_a, Side::B);
  report.lb1_bi = e * irreality(obs_b, rho, Side::B) -
                  gamma_bound(obs_b, m_a, eps_b, Side::B);
  if (n_value) report.trivial_ub = *n_value;
  return report;
}

double closed_form_werner_suppression(double beta, double eps) {
  check_unit(beta, "beta");
  check_unit(eps, "eps");
  double sum = 0.0;
  for (int i = 0; i <= 1; ++i) {
    for (int j = 0; j <= 1; ++j) {
      const double lambda =
          1.0 + beta * (4.0 * i - 1.0 + 2.0 * j * eps * (1.0 - 2.0 * i));
      const double term = x_log_x(lambda);
      sum += (j == 0 ? term : -term);
    }
  }
  return 0.25 * sum;
}

double closed_form_pure_suppression(double alpha, double eps) {
  check_unit(alpha, "alpha");
  check_unit(eps, "eps");
  const double big_lambda = eps * alpha * (2.0 - eps) * (1.0 - alpha);
  const double x = std::sqrt(std::max(0.0, 1.0 - 4.0 * big_lambda));
  return std::numbers::ln2 - 0.5 * (x_log_x(1.0 + x) + x_log_x(1.0 - x));
}

double closed_form_pure_suppression_literal(double alpha, double eps) {
  const double big_lambda = eps * alpha * (2.0 - eps) * (1.0 - alpha);
  const double x = std::sqrt(1.0 - 4.0 * big_lambda);
  return -std::log(std::sqrt(big_lambda)) - x * std::atanh(x);
}

double entanglement_entropy(const PureState& psi) {
  const DensityMatrix rho = psi.density();
  return vn_entropy(rho.reduced(Subsystem::B));
}

}  // namespace rbn
