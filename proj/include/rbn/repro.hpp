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

#ifndef RBN_REPRO_HPP
#define RBN_REPRO_HPP

#include <limits>
#include <string>
#include <vector>

#include "rbn/optimizer.hpp"

namespace rbn {

/// One point of the Werner-family suppression sweep, rho^{1/2, beta}.
struct WernerRow {
  double eps = 0.0;
  double beta = 0.0;
  double delta_b = 0.0;
  double n = 0.0;
  double lb1 = 0.0;
  double ub1 = 0.0;
  double lb2 = 0.0;
  double ub2 = 0.0;
  double closed_form = 0.0;
  double delta_a = std::numeric_limits<double>::quiet_NaN();  // when requested
  bool converged = false;
};

/// One point of the pure-state sweep, rho^{alpha 1}.
struct PureRow {
  double eps = 0.0;
  double alpha = 0.0;
  double delta_b = 0.0;
  double entanglement = 0.0;
  double eps_times_e = 0.0;
  double closed_form = 0.0;
  double delta_a = std::numeric_limits<double>::quiet_NaN();  // when requested
  bool converged = false;
};

/// One point of the bilocal comparison on rho^{1/2, beta} with eps on both
/// sides.
struct BilocalRow {
  double beta = 0.0;
  double eps = 0.0;
  double n = 0.0;
  double delta_b = 0.0;
  double delta_bilocal = 0.0;
  double lb1_bi = 0.0;
  double ub1_bi = 0.0;
  bool converged = false;
};

struct HierarchyReport {
  std::vector<double> probs;
  double eta_mub = 0.0;   // eta at the Fourier partners of the classical bases
  double shannon = 0.0;   // H({p})
  double n_value = 0.0;   // N(rho_cc) from the optimizer
  bool product = false;   // rho_cc == rho_A (x) rho_B
  bool passed = false;    // eta_mub == H within 1e-10 and N >= H - 1e-6
};

/// Rows ordered eps-major, then beta, in input order. Points are evaluated
/// concurrently on `threads` workers (0 = hardware concurrency). With
/// `with_side_a` each row also carries Delta_A^eps, monitoring A instead.
std::vector<WernerRow> sweep_werner(const std::vector<double>& eps,
                                    const std::vector<double>& beta,
                                    const OptimizerConfig& config,
                                    unsigned threads = 0,
                                    bool with_side_a = false);

std::vector<PureRow> sweep_pure(const std::vector<double>& eps,
                                const std::vector<double>& alpha,
                                const OptimizerConfig& config,
                                unsigned threads = 0, bool with_side_a = false);

/// Rows ordered beta-major, then eps.
std::vector<BilocalRow> sweep_bilocal(const std::vector<double>& eps,
                                      const std::vector<double>& beta,
                                      const OptimizerConfig& config,
                                      unsigned threads = 0);

/// Classical-classical state on computational bases with d = probs.size().
HierarchyReport hierarchy_report(const std::vector<double>& probs,
                                 const OptimizerConfig& config);

/// The containment chain of quantumness classes, weakest first.
std::string hierarchy_chain();

/// Row-level checks used by the CLI before exiting. The tolerance absorbs
/// optimizer error.
bool respects_bounds(const WernerRow& row, double tol);
bool respects_bounds(const PureRow& row, double tol);
bool respects_ordering(const BilocalRow& row, double tol);

/// |Delta_A - Delta_B| <= tol; true when Delta_A was not computed.
bool sides_agree(const WernerRow& row, double tol);
bool sides_agree(const PureRow& row, double tol);

}  // namespace rbn

#endif  // RBN_REPRO_HPP
