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

#include "rbn/repro.hpp"

#include <cmath>

#include "parallel.hpp"
#include "rbn/error.hpp"

namespace rbn {

namespace {

// Inner optimizations run single-threaded when the sweep itself is
// parallel; N(rho) is computed once per state, outside the per-eps loop.
OptimizerConfig inner_config(const OptimizerConfig& config, unsigned threads) {
  OptimizerConfig inner = config;
  if (detail::resolve_threads(threads) > 1) inner.threads = 1;
  inner.compute_n_bound = false;
  return inner;
}

void require_unit_grid(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " grid is empty");
  }
  for (double v : grid) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(name) + " grid values must lie in [0, 1]");
    }
  }
}

std::vector<double> n_per_beta(const std::vector<double>& beta,
                               const OptimizerConfig& inner, unsigned threads) {
  std::vector<double> n(beta.size());
  detail::parallel_for(beta.size(), threads, [&](std::size_t i) {
    n[i] = max_context_rbn(two_parameter_state(0.5, beta[i]), inner).value;
  });
  return n;
}

}  // namespace

std::vector<WernerRow> sweep_werner(const std::vector<double>& eps,
                                    const std::vector<double>& beta,
                                    const OptimizerConfig& config,
                                    unsigned threads, bool with_side_a) {
  require_unit_grid(eps, "eps");
  require_unit_grid(beta, "beta");
  const OptimizerConfig inner = inner_config(config, threads);
  const std::vector<double> n = n_per_beta(beta, inner, threads);

  std::vector<WernerRow> rows(eps.size() * beta.size());
  detail::parallel_for(rows.size(), threads, [&](std::size_t idx) {
    const std::size_t ie = idx / beta.size();
    const std::size_t ib = idx % beta.size();
    const DensityMatrix rho = two_parameter_state(0.5, beta[ib]);
    const SuppressionReport report = local_suppression(rho, eps[ie], inner);
    WernerRow& row = rows[idx];
    row.eps = eps[ie];
    row.beta = beta[ib];
    row.delta_b = report.value;
    row.n = n[ib];
    row.lb1 = report.bounds.lb1;
    row.ub1 = report.bounds.ub1;
    row.lb2 = report.bounds.lb2;
    row.ub2 = report.bounds.ub2;
    row.closed_form = closed_form_werner_suppression(beta[ib], eps[ie]);
    row.converged = report.converged;
    if (with_side_a) {
      row.delta_a = local_suppression(rho, eps[ie], inner, Side::A).value;
    }
  });
  return rows;
}

std::vector<PureRow> sweep_pure(const std::vector<double>& eps,
                                const std::vector<double>& alpha,
                                const OptimizerConfig& config,
                                unsigned threads, bool with_side_a) {
  require_unit_grid(eps, "eps");
  require_unit_grid(alpha, "alpha");
  const OptimizerConfig inner = inner_config(config, threads);

  std::vector<PureRow> rows(eps.size() * alpha.size());
  detail::parallel_for(rows.size(), threads, [&](std::size_t idx) {
    const std::size_t ie = idx / alpha.size();
    const std::size_t ia = idx % alpha.size();
    const PureState psi = psi_alpha(alpha[ia]);
    const SuppressionReport report =
        local_suppression(psi.density(), eps[ie], inner);
    PureRow& row = rows[idx];
    row.eps = eps[ie];
    row.alpha = alpha[ia];
    row.delta_b = report.value;
    row.entanglement = entanglement_entropy(psi);
    row.eps_times_e = eps[ie] * row.entanglement;
    row.closed_form = closed_form_pure_suppression(alpha[ia], eps[ie]);
    row.converged = report.converged;
    if (with_side_a) {
      row.delta_a =
          local_suppression(psi.density(), eps[ie], inner, Side::A).value;
    }
  });
  return rows;
}

std::vector<BilocalRow> sweep_bilocal(const std::vector<double>& eps,
                                      const std::vector<double>& beta,
                                      const OptimizerConfig& config,
                                      unsigned threads) {
  require_unit_grid(eps, "eps");
  require_unit_grid(beta, "beta");
  const OptimizerConfig inner = inner_config(config, threads);
  const std::vector<double> n = n_per_beta(beta, inner, threads);

  std::vector<BilocalRow> rows(beta.size() * eps.size());
  detail::parallel_for(rows.size(), threads, [&](std::size_t idx) {
    const std::size_t ib = idx / eps.size();
    const std::size_t ie = idx % eps.size();
    const DensityMatrix rho = two_parameter_state(0.5, beta[ib]);
    const SuppressionReport local = local_suppression(rho, eps[ie], inner);
    const SuppressionReport bilocal =
        bilocal_suppression(rho, eps[ie], eps[ie], inner);
    BilocalRow& row = rows[idx];
    row.beta = beta[ib];
    row.eps = eps[ie];
    row.n = n[ib];
    row.delta_b = local.value;
    row.delta_bilocal = bilocal.value;
    row.lb1_bi = bilocal.bounds.lb1_bi;
    row.ub1_bi = bilocal.bounds.ub1_bi;
    row.converged = local.converged && bilocal.converged;
  });
  return rows;
}

HierarchyReport hierarchy_report(const std::vector<double>& probs,
                                 const OptimizerConfig& config) {
  const int d = static_cast<int>(probs.size());
  if (d < 1) {
    throw Error(ErrorCode::InvalidArgument, "probability vector is empty");
  }
  std::vector<ComplexMatrix> basis_projectors;
  std::vector<ComplexVector> basis;
  for (int k = 0; k < d; ++k) {
    ComplexVector e(static_cast<std::size_t>(d));
    e[k] = 1.0;
    basis_projectors.push_back(ComplexMatrix::outer(e));
    basis.push_back(std::move(e));
  }
  const DensityMatrix rho =
      classical_classical_state(probs, basis_projectors, basis_projectors);

  HierarchyReport report;
  report.probs = probs;
  report.shannon = shannon_entropy(probs);
  if (d >= 2) {
    const ProjectiveObservable partner = mub_partner(basis_observable(basis));
    report.eta_mub = eta(partner, partner, rho);
  }
  OptimizerConfig n_config = config;
  n_config.compute_n_bound = false;
  report.n_value = max_context_rbn(rho, n_config).value;
  const ComplexMatrix product = tensor_product(rho.reduced(Subsystem::A),
                                               rho.reduced(Subsystem::B));
  report.product = max_abs_diff(product, rho.matrix()) < 1e-12;
  report.passed = std::abs(report.eta_mub - report.shannon) <= 1e-10 &&
                  report.n_value >= report.shannon - 1e-6;
  return report;
}

std::string hierarchy_chain() {
  return "s_BN < s_S < s_E < s_D < s_SD < s_RBN";
}

bool respects_bounds(const WernerRow& row, double tol) {
  const double v = row.delta_b;
  return v >= -tol && v <= row.n + tol && v >= row.lb1 - tol &&
         v <= row.ub1 + tol && v >= row.lb2 - tol && v <= row.ub2 + tol;
}

bool respects_bounds(const PureRow& row, double tol) {
  const double v = row.delta_b;
  return v >= row.eps_times_e - tol && v <= row.entanglement + tol;
}

bool respects_ordering(const BilocalRow& row, double tol) {
  return row.delta_bilocal >= -tol && row.delta_bilocal <= row.delta_b + tol &&
         row.delta_b <= row.n + tol && row.delta_bilocal >= row.lb1_bi - tol &&
         row.delta_bilocal <= row.ub1_bi + tol;
}

bool sides_agree(const WernerRow& row, double tol) {
  return std::isnan(row.delta_a) || std::abs(row.delta_a - row.delta_b) <= tol;
}

bool sides_agree(const PureRow& row, double tol) {
  return std::isnan(row.delta_a) || std::abs(row.delta_a - row.delta_b) <= tol;
}

}  // namespace rbn
