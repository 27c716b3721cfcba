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

#include "rbn/optimizer.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "nelder_mead.hpp"
#include "parallel.hpp"
#include "rbn/error.hpp"

namespace rbn {

namespace {

using Basis = std::vector<ComplexVector>;

// -sum mu ln mu over the eigenvalues of an unnormalized PSD block.
double block_entropy(const ComplexMatrix& x) {
  auto term = [](double mu) { return mu > 0.0 ? -mu * std::log(mu) : 0.0; };
  if (x.dim() == 1) return term(x(0, 0).real());
  if (x.dim() == 2) {
    const double a = x(0, 0).real();
    const double d = x(1, 1).real();
    const double half_gap = 0.5 * (a - d);
    const double r = std::sqrt(half_gap * half_gap + std::norm(x(0, 1)));
    const double mid = 0.5 * (a + d);
    return term(mid + r) + term(mid - r);
  }
  double s = 0.0;
  for (double mu : hermitian_eigenvalues(x)) s += term(mu);
  return s;
}

double spectrum_entropy(const ComplexMatrix& m) {
  double s = 0.0;
  for (double mu : hermitian_eigenvalues(m)) {
    if (mu > 0.0) s -= mu * std::log(mu);
  }
  return s;
}

// (<a| (x) 1) sigma (|a> (x) 1), a dB x dB block.
ComplexMatrix block_a(const ComplexMatrix& sigma, const ComplexVector& a,
                      int dA, int dB) {
  ComplexMatrix x(dB);
  for (int i = 0; i < dA; ++i) {
    const Complex ai = std::conj(a[i]);
    if (ai == Complex{}) continue;
    for (int j = 0; j < dA; ++j) {
      const Complex w = ai * a[j];
      if (w == Complex{}) continue;
      for (int k = 0; k < dB; ++k) {
        for (int l = 0; l < dB; ++l) x(k, l) += w * sigma(i * dB + k, j * dB + l);
      }
    }
  }
  return x;
}

// (1 (x) <b|) sigma (1 (x) |b>), a dA x dA block.
ComplexMatrix block_b(const ComplexMatrix& sigma, const ComplexVector& b,
                      int dA, int dB) {
  ComplexMatrix y(dA);
  for (int k = 0; k < dB; ++k) {
    const Complex bk = std::conj(b[k]);
    if (bk == Complex{}) continue;
    for (int l = 0; l < dB; ++l) {
      const Complex w = bk * b[l];
      if (w == Complex{}) continue;
      for (int i = 0; i < dA; ++i) {
        for (int j = 0; j < dA; ++j) y(i, j) += w * sigma(i * dB + k, j * dB + l);
      }
    }
  }
  return y;
}

ComplexMatrix dephase_a(const ComplexMatrix& sigma, const Basis& basis, int dA,
                        int dB) {
  ComplexMatrix out(dA * dB);
  for (const ComplexVector& a : basis) {
    out += tensor_product(ComplexMatrix::outer(a), block_a(sigma, a, dA, dB));
  }
  return out;
}

ComplexMatrix dephase_b(const ComplexMatrix& sigma, const Basis& basis, int dA,
                        int dB) {
  ComplexMatrix out(dA * dB);
  for (const ComplexVector& b : basis) {
    out += tensor_product(block_b(sigma, b, dA, dB), ComplexMatrix::outer(b));
  }
  return out;
}

ComplexMatrix mix(const ComplexMatrix& keep, const ComplexMatrix& dephased,
                  double eps) {
  ComplexMatrix out = keep * Complex(1.0 - eps);
  out += dephased * Complex(eps);
  return out;
}

// delta^{eps_a eps_b} for rank-1 observables given by their eigenbases.
// Dephasing by a rank-1 observable leaves a block-diagonal operator whose
// entropy is the sum of block entropies, which avoids most full
// diagonalizations.
class ContextEvaluator {
 public:
  struct Prepared {
    Basis basis;
    double side_entropy = 0.0;        // S(M_side rho)
    ComplexMatrix monitored;          // M_side rho
    std::vector<ComplexMatrix> rho_blocks;  // blocks of rho for this basis
  };

  ContextEvaluator(const DensityMatrix& rho, double eps_a, double eps_b)
      : rho_(rho.matrix()),
        dA_(rho.dim_a()),
        dB_(rho.dim_b()),
        eps_a_(eps_a),
        eps_b_(eps_b),
        rho_entropy_(spectrum_entropy(rho.matrix())) {}

  Prepared prepare_a(Basis basis) const {
    Prepared p;
    double s = 0.0;
    for (const ComplexVector& a : basis) {
      p.rho_blocks.push_back(block_a(rho_, a, dA_, dB_));
      s += block_entropy(p.rho_blocks.back());
    }
    if (eps_a_ == 1.0) {
      p.side_entropy = s;
      p.monitored = dephase_a(rho_, basis, dA_, dB_);
    } else {
      p.monitored = mix(rho_, dephase_a(rho_, basis, dA_, dB_), eps_a_);
      p.side_entropy = spectrum_entropy(p.monitored);
    }
    p.basis = std::move(basis);
    return p;
  }

  Prepared prepare_b(Basis basis) const {
    Prepared p;
    double s = 0.0;
    for (const ComplexVector& b : basis) {
      p.rho_blocks.push_back(block_b(rho_, b, dA_, dB_));
      s += block_entropy(p.rho_blocks.back());
    }
    if (eps_b_ == 1.0) {
      p.side_entropy = s;
      p.monitored = dephase_b(rho_, basis, dA_, dB_);
    } else {
      p.monitored = mix(rho_, dephase_b(rho_, basis, dA_, dB_), eps_b_);
      p.side_entropy = spectrum_entropy(p.monitored);
    }
    p.basis = std::move(basis);
    return p;
  }

  double delta(const Prepared& a, const Prepared& b) const {
    if (eps_a_ == 0.0 || eps_b_ == 0.0) return 0.0;
    return a.side_entropy + b.side_entropy - joint_entropy(a, b) - rho_entropy_;
  }

  double delta(Basis a, Basis b) const {
    return delta(prepare_a(std::move(a)), prepare_b(std::move(b)));
  }

 private:
  double joint_entropy(const Prepared& a, const Prepared& b) const {
    if (eps_a_ == 1.0 && eps_b_ == 1.0) {
      // Phi_A Phi_B rho is diagonal in the product basis.
      double s = 0.0;
      for (const ComplexMatrix& x : a.rho_blocks) {
        for (const ComplexVector& v : b.basis) {
          const double p = expectation(x, v).real();
          if (p > 0.0) s -= p * std::log(p);
        }
      }
      return s;
    }
    if (eps_a_ == 1.0) {
      double s = 0.0;
      for (const ComplexVector& v : a.basis) {
        s += block_entropy(block_a(b.monitored, v, dA_, dB_));
      }
      return s;
    }
    if (eps_b_ == 1.0) {
      double s = 0.0;
      for (const ComplexVector& v : b.basis) {
        s += block_entropy(block_b(a.monitored, v, dA_, dB_));
      }
      return s;
    }
    const ComplexMatrix both =
        mix(b.monitored, dephase_a(b.monitored, a.basis, dA_, dB_), eps_a_);
    return spectrum_entropy(both);
  }

  const ComplexMatrix& rho_;
  int dA_;
  int dB_;
  double eps_a_;
  double eps_b_;
  double rho_entropy_;
};

Basis basis_from_params(int d, const std::vector<double>& params) {
  if (d == 2) return qubit_basis(params[0], params[1]);
  return givens_basis(d, params);
}

struct SideCandidates {
  std::vector<std::vector<double>> params;
  std::vector<double> steps;  // initial simplex step per parameter
};

SideCandidates make_candidates(int d, const OptimizerConfig& config,
                               std::uint64_t stream) {
  SideCandidates side;
  const double phi_span =
      config.halve_phi ? std::numbers::pi : 2.0 * std::numbers::pi;
  const double theta_step =
      std::numbers::pi / static_cast<double>(std::max(1, config.grid_theta - 1));
  const double phi_step = phi_span / static_cast<double>(config.grid_phi);

  if (d == 1) {
    side.params.push_back({});
    return side;
  }
  if (d == 2) {
    for (int i = 0; i < config.grid_theta; ++i) {
      const double theta =
          config.grid_theta == 1 ? 0.0 : std::numbers::pi * i / (config.grid_theta - 1);
      for (int j = 0; j < config.grid_phi; ++j) {
        side.params.push_back({theta, phi_span * j / config.grid_phi});
      }
    }
    side.steps = {theta_step, phi_step};
    return side;
  }

  const int count = givens_parameter_count(d);
  const std::size_t total =
      static_cast<std::size_t>(config.grid_theta) * static_cast<std::size_t>(config.grid_phi);
  std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  std::uniform_real_distribution<double> theta_dist(0.0, std::numbers::pi);
  std::uniform_real_distribution<double> phi_dist(0.0, 2.0 * std::numbers::pi);
  side.params.push_back(std::vector<double>(static_cast<std::size_t>(count), 0.0));
  while (side.params.size() < total) {
    std::vector<double> p(static_cast<std::size_t>(count));
    for (int k = 0; k < count; k += 2) {
      p[k] = theta_dist(rng);
      p[k + 1] = phi_dist(rng);
    }
    side.params.push_back(std::move(p));
  }
  for (int k = 0; k < count; k += 2) {
    side.steps.push_back(theta_step);
    side.steps.push_back(phi_step);
  }
  return side;
}

std::vector<double> canonical_params(int d, std::vector<double> params) {
  if (d == 2) {
    const BlochAngles angles = BlochAngles::canonical(params[0], params[1]);
    return {angles.theta, angles.phi};
  }
  return params;
}

// Maximizes delta^{eps_a eps_b}_AB(rho) over rank-1 pairs.
SuppressionReport maximize_delta(const DensityMatrix& rho, double eps_a,
                                 double eps_b, const OptimizerConfig& config) {
  config.validate();
  const int dA = rho.dim_a();
  const int dB = rho.dim_b();
  const ContextEvaluator evaluator(rho, eps_a, eps_b);

  const SideCandidates cand_a = make_candidates(dA, config, 0);
  const SideCandidates cand_b = make_candidates(dB, config, 1);
  const std::size_t n_a = cand_a.params.size();
  const std::size_t n_b = cand_b.params.size();

  std::vector<ContextEvaluator::Prepared> prep_a(n_a);
  std::vector<ContextEvaluator::Prepared> prep_b(n_b);
  detail::parallel_for(n_a, config.threads, [&](std::size_t i) {
    prep_a[i] = evaluator.prepare_a(basis_from_params(dA, cand_a.params[i]));
  });
  detail::parallel_for(n_b, config.threads, [&](std::size_t j) {
    prep_b[j] = evaluator.prepare_b(basis_from_params(dB, cand_b.params[j]));
  });

  std::vector<double> lattice(n_a * n_b);
  detail::parallel_for(n_a, config.threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < n_b; ++j) {
      lattice[i * n_b + j] = evaluator.delta(prep_a[i], prep_b[j]);
    }
  });
  long evaluations = static_cast<long>(lattice.size());

  // Ordered reduction: best value, lowest lattice index among ties.
  const double top = *std::max_element(lattice.begin(), lattice.end());
  std::size_t first = 0;
  while (lattice[first] < top - config.tie_tol) ++first;
  std::vector<std::size_t> order(lattice.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t keep =
      std::min<std::size_t>(static_cast<std::size_t>(config.refine_seeds), order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(std::min(order.size(), keep + 1)),
                    order.end(), [&](std::size_t x, std::size_t y) {
                      if (lattice[x] != lattice[y]) return lattice[x] > lattice[y];
                      return x < y;
                    });
  std::vector<std::size_t> seeds{first};
  for (std::size_t idx : order) {
    if (seeds.size() >= keep) break;
    if (idx != first) seeds.push_back(idx);
  }

  const std::size_t n_params_a = cand_a.params[0].size();
  auto split = [&](const std::vector<double>& x) {
    PairParams p;
    p.a.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n_params_a));
    p.b.assign(x.begin() + static_cast<std::ptrdiff_t>(n_params_a), x.end());
    return p;
  };
  auto objective = [&](const std::vector<double>& x) {
    const PairParams p = split(x);
    return -evaluator.delta(basis_from_params(dA, p.a), basis_from_params(dB, p.b));
  };

  std::vector<double> steps = cand_a.steps;
  steps.insert(steps.end(), cand_b.steps.begin(), cand_b.steps.end());

  struct Candidate {
    double value;
    std::vector<double> x;
    bool converged;
    long evaluations;
  };
  std::vector<Candidate> refined(seeds.size());
  detail::SimplexOptions options;
  options.max_iterations = config.max_iterations;
  options.f_tol = config.objective_tol;
  options.x_tol = config.parameter_tol;
  detail::parallel_for(seeds.size(), config.threads, [&](std::size_t s) {
    const std::size_t idx = seeds[s];
    std::vector<double> x0 = cand_a.params[idx / n_b];
    const std::vector<double>& xb = cand_b.params[idx % n_b];
    x0.insert(x0.end(), xb.begin(), xb.end());
    const double seed_value = lattice[idx];
    if (steps.empty()) {
      refined[s] = {seed_value, x0, true, 0};
      return;
    }
    const detail::SimplexResult r = detail::nelder_mead(objective, x0, steps, options);
    // Refinement only replaces the lattice point when it is a strict
    // improvement; this keeps lattice argmaxima stable.
    if (-r.f > seed_value + config.tie_tol) {
      refined[s] = {-r.f, r.x, r.converged, r.evaluations};
    } else {
      refined[s] = {seed_value, x0, r.converged, r.evaluations};
    }
  });

  std::size_t winner = 0;
  for (std::size_t s = 0; s < refined.size(); ++s) {
    evaluations += refined[s].evaluations;
    if (refined[s].value > refined[winner].value + config.tie_tol) winner = s;
  }

  SuppressionReport report;
  report.dim_a = dA;
  report.dim_b = dB;
  PairParams best = split(refined[winner].x);
  report.argmax.a = canonical_params(dA, std::move(best.a));
  report.argmax.b = canonical_params(dB, std::move(best.b));
  report.value = refined[winner].value;
  report.converged = refined[winner].converged;
  report.evaluations = evaluations;
  return report;
}

}  // namespace

void OptimizerConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, "optimizer config: " + what);
  };
  if (grid_theta < 1) fail("grid_theta must be >= 1");
  if (grid_phi < 1) fail("grid_phi must be >= 1");
  if (refine_seeds < 1) fail("refine_seeds must be >= 1");
  if (max_iterations < 0) fail("max_iterations must be >= 0");
  if (!(objective_tol > 0.0)) fail("objective_tol must be > 0");
  if (!(parameter_tol > 0.0)) fail("parameter_tol must be > 0");
  if (!(tie_tol >= 0.0)) fail("tie_tol must be >= 0");
}

OptimizerConfig OptimizerConfig::from_key_values(
    const std::map<std::string, std::string>& values) {
  return from_key_values(values, OptimizerConfig{});
}

OptimizerConfig OptimizerConfig::from_key_values(
    const std::map<std::string, std::string>& values,
    const OptimizerConfig& defaults) {
  OptimizerConfig base = defaults;
  for (const auto& [key, text] : values) {
    try {
      std::size_t used = 0;
      auto as_int = [&] {
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
      };
      auto as_double = [&] {
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
      };
      auto as_bool = [&] {
        if (text == "true" || text == "1") return true;
        if (text == "false" || text == "0") return false;
        throw std::invalid_argument(text);
      };
      if (key == "grid_theta") base.grid_theta = as_int();
      else if (key == "grid_phi") base.grid_phi = as_int();
      else if (key == "halve_phi") base.halve_phi = as_bool();
      else if (key == "refine_seeds") base.refine_seeds = as_int();
      else if (key == "max_iterations") base.max_iterations = as_int();
      else if (key == "objective_tol") base.objective_tol = as_double();
      else if (key == "parameter_tol") base.parameter_tol = as_double();
      else if (key == "tie_tol") base.tie_tol = as_double();
      else if (key == "compute_n_bound") base.compute_n_bound = as_bool();
      else if (key == "threads") {
        const int v = as_int();
        if (v < 0) throw std::invalid_argument(text);
        base.threads = static_cast<unsigned>(v);
      }
      else if (key == "seed") base.seed = std::stoull(text);
      else throw Error(ErrorCode::InvalidArgument, "unknown optimizer key '" + key + "'");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidArgument,
                  "optimizer key '" + key + "' has invalid value '" + text + "'");
    }
  }
  base.validate();
  return base;
}

std::string OptimizerConfig::describe() const {
  // Shortest round-trip form keeps headers readable and exact.
  auto num = [](double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  };
  std::ostringstream out;
  out << "grid_theta=" << grid_theta << " grid_phi=" << grid_phi
      << " halve_phi=" << (halve_phi ? "true" : "false")
      << " refine_seeds=" << refine_seeds << " max_iterations=" << max_iterations
      << " objective_tol=" << num(objective_tol)
      << " parameter_tol=" << num(parameter_tol) << " tie_tol=" << num(tie_tol)
      << " seed=" << seed;
  return out.str();
}

ProjectiveObservable observable_from_params(int d,
                                            const std::vector<double>& params) {
  if (d == 1) return ProjectiveObservable({ComplexMatrix::identity(1)}, {1.0});
  if (d == 2 && params.size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "qubit side takes (theta, phi)");
  }
  return basis_observable(basis_from_params(d, params));
}

std::pair<ProjectiveObservable, ProjectiveObservable>
SuppressionReport::observables() const {
  return {observable_from_params(dim_a, argmax.a),
          observable_from_params(dim_b, argmax.b)};
}

SuppressionReport max_context_rbn(const DensityMatrix& rho,
                                  const OptimizerConfig& config) {
  SuppressionReport report = maximize_delta(rho, 1.0, 1.0, config);
  report.bounds.trivial_ub = report.value;
  return report;
}

SuppressionReport local_suppression(const DensityMatrix& rho,
                                    MonitoringStrength eps,
                                    const OptimizerConfig& config,
                                    Side monitoring_side) {
  if (monitoring_side == Side::Global) {
    throw Error(ErrorCode::InvalidArgument,
                "local suppression monitors side A or side B");
  }
  if (monitoring_side == Side::A) {
    // Delta_A(rho) is Delta_B of the swapped state with the pair exchanged.
    SuppressionReport report =
        local_suppression(swap_parties(rho), eps, config, Side::B);
    std::swap(report.argmax.a, report.argmax.b);
    std::swap(report.dim_a, report.dim_b);
    return report;
  }

  SuppressionReport report = maximize_delta(rho, 1.0, eps.value(), config);
  std::optional<double> n_value;
  if (config.compute_n_bound) n_value = max_context_rbn(rho, config).value;
  const auto [obs_a, obs_b] = report.observables();
  report.bounds = local_bounds(rho, eps, obs_a, obs_b, n_value);
  return report;
}

SuppressionReport bilocal_suppression(const DensityMatrix& rho,
                                      MonitoringStrength eps_a,
                                      MonitoringStrength eps_b,
                                      const OptimizerConfig& config) {
  SuppressionReport report =
      maximize_delta(rho, eps_a.value(), eps_b.value(), config);
  std::optional<double> n_value;
  if (config.compute_n_bound) n_value = max_context_rbn(rho, config).value;
  const auto [obs_a, obs_b] = report.observables();
  report.bounds = bilocal_bounds(rho, eps_a, eps_b, obs_a, obs_b, n_value);
  return report;
}

double fast_delta(const DensityMatrix& rho, const ProjectiveObservable& obs_a,
                  const ProjectiveObservable& obs_b, MonitoringStrength eps_a,
                  MonitoringStrength eps_b) {
  if (obs_a.dim() != rho.dim_a() || obs_b.dim() != rho.dim_b()) {
    throw Error(ErrorCode::DimensionMismatch,
                "observables do not match the state bipartition");
  }
  if (!obs_a.nondegenerate() || !obs_b.nondegenerate()) {
    return delta(obs_a, obs_b, rho, eps_a, eps_b);
  }
  const ContextEvaluator evaluator(rho, eps_a.value(), eps_b.value());
  return evaluator.delta(obs_a.basis(), obs_b.basis());
}

}  // namespace rbn
