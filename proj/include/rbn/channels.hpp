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

#ifndef RBN_CHANNELS_HPP
#define RBN_CHANNELS_HPP

#include "rbn/observables.hpp"
#include "rbn/states.hpp"

namespace rbn {

/// Where a projective observable acts. Global means the observable lives on
/// the full dA * dB space.
enum class Side { A, B, Global };

/// Monitoring intensity in [0, 1]; 0 is no measurement, 1 is the unrevealed
/// projective measurement.
class MonitoringStrength {
 public:
  MonitoringStrength(double value);  // NOLINT: implicit by intent

  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }  // NOLINT

 private:
  double value_;
};

/// sum_a (A_a (x) 1) rho (A_a (x) 1), mirrored for side B.
DensityMatrix dephase(const DensityMatrix& rho, const ProjectiveObservable& obs,
                      Side side);

/// Phi_A Phi_B as two local dephasings. The order does not matter.
DensityMatrix dephase_both(const DensityMatrix& rho,
                           const ProjectiveObservable& obs_a,
                           const ProjectiveObservable& obs_b);

/// (1 - eps) rho + eps Phi_O(rho) for O on side A or B.
DensityMatrix monitor(const DensityMatrix& rho, const ProjectiveObservable& obs,
                      MonitoringStrength eps, Side side);

/// n-fold monitor in closed form:
/// (1 - eps)^n rho + [1 - (1 - eps)^n] Phi_O(rho).
DensityMatrix monitor_iterated(const DensityMatrix& rho,
                               const ProjectiveObservable& obs,
                               MonitoringStrength eps, Side side, int n);

}  // namespace rbn

#endif  // RBN_CHANNELS_HPP
