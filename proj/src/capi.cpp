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

#include "rbn/rbn.h"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "rbn/error.hpp"
#include "rbn/optimizer.hpp"
#include "rbn/repro.hpp"
#include "rbn/verify.hpp"

struct rbn_state {
  rbn::DensityMatrix rho;
};

struct rbn_observable {
  rbn::ProjectiveObservable obs;
};

namespace {

thread_local std::string last_error;

rbn_status to_status(rbn::ErrorCode code) {
  switch (code) {
    case rbn::ErrorCode::InvalidArgument: return RBN_ERR_INVALID_ARGUMENT;
    case rbn::ErrorCode::DimensionMismatch: return RBN_ERR_DIMENSION_MISMATCH;
    case rbn::ErrorCode::NotHermitian: return RBN_ERR_NOT_HERMITIAN;
    case rbn::ErrorCode::InvalidState: return RBN_ERR_INVALID_STATE;
    case rbn::ErrorCode::SupportViolation: return RBN_ERR_SUPPORT;
    case rbn::ErrorCode::Parse: return RBN_ERR_PARSE;
    case rbn::ErrorCode::Io: return RBN_ERR_IO;
  }
  return RBN_ERR_INTERNAL;
}

rbn_status fail(rbn_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body and converts any exception into a status code.
template <typename Body>
rbn_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return RBN_OK;
  } catch (const rbn::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RBN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RBN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RBN_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw rbn::Error(rbn::ErrorCode::InvalidArgument, message);
}

rbn::OptimizerConfig to_config(const rbn_optimizer_config* c) {
  rbn::OptimizerConfig config;
  if (c == nullptr) return config;
  config.grid_theta = c->grid_theta;
  config.grid_phi = c->grid_phi;
  config.halve_phi = c->halve_phi != 0;
  config.refine_seeds = c->refine_seeds;
  config.max_iterations = c->max_iterations;
  config.objective_tol = c->objective_tol;
  config.parameter_tol = c->parameter_tol;
  config.tie_tol = c->tie_tol;
  config.compute_n_bound = c->compute_n_bound != 0;
  config.threads = c->threads;
  config.seed = c->seed;
  config.validate();
  return config;
}

void from_config(const rbn::OptimizerConfig& config, rbn_optimizer_config* c) {
  c->grid_theta = config.grid_theta;
  c->grid_phi = config.grid_phi;
  c->halve_phi = config.halve_phi ? 1 : 0;
  c->refine_seeds = config.refine_seeds;
  c->max_iterations = config.max_iterations;
  c->objective_tol = config.objective_tol;
  c->parameter_tol = config.parameter_tol;
  c->tie_tol = config.tie_tol;
  c->compute_n_bound = config.compute_n_bound ? 1 : 0;
  c->threads = config.threads;
  c->seed = config.seed;
}

void fill_report(const rbn::SuppressionReport& r, rbn_suppression_report* out) {
  if (r.argmax.a.size() > RBN_MAX_PARAMS || r.argmax.b.size() > RBN_MAX_PARAMS) {
    throw rbn::Error(rbn::ErrorCode::DimensionMismatch,
                     "argmax has more parameters than RBN_MAX_PARAMS");
  }
  *out = rbn_suppression_report{};
  out->value = r.value;
  std::copy(r.argmax.a.begin(), r.argmax.a.end(), out->argmax_a);
  std::copy(r.argmax.b.begin(), r.argmax.b.end(), out->argmax_b);
  out->params_a = r.argmax.a.size();
  out->params_b = r.argmax.b.size();
  out->lb1 = r.bounds.lb1;
  out->ub1 = r.bounds.ub1;
  out->lb2 = r.bounds.lb2;
  out->ub2 = r.bounds.ub2;
  out->lb1_bi = r.bounds.lb1_bi;
  out->ub1_bi = r.bounds.ub1_bi;
  out->trivial_ub = r.bounds.trivial_ub;
  out->evaluations = r.evaluations;
  out->converged = r.converged ? 1 : 0;
}

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::vector<double> to_vector(const double* values, size_t n) {
  require(values != nullptr || n == 0, "null array");
  return std::vector<double>(values, values + n);
}

rbn::WernerRow to_row(const rbn_werner_row& r) {
  rbn::WernerRow row;
  row.eps = r.eps;
  row.beta = r.beta;
  row.delta_b = r.delta_b;
  row.n = r.n;
  row.lb1 = r.lb1;
  row.ub1 = r.ub1;
  row.lb2 = r.lb2;
  row.ub2 = r.ub2;
  row.closed_form = r.closed_form;
  row.delta_a = r.delta_a;
  row.converged = r.converged != 0;
  return row;
}

rbn::PureRow to_row(const rbn_pure_row& r) {
  rbn::PureRow row;
  row.eps = r.eps;
  row.alpha = r.alpha;
  row.delta_b = r.delta_b;
  row.entanglement = r.entanglement;
  row.eps_times_e = r.eps_times_e;
  row.closed_form = r.closed_form;
  row.delta_a = r.delta_a;
  row.converged = r.converged != 0;
  return row;
}

rbn::BilocalRow to_row(const rbn_bilocal_row& r) {
  rbn::BilocalRow row;
  row.beta = r.beta;
  row.eps = r.eps;
  row.n = r.n;
  row.delta_b = r.delta_b;
  row.delta_bilocal = r.delta_bilocal;
  row.lb1_bi = r.lb1_bi;
  row.ub1_bi = r.ub1_bi;
  row.converged = r.converged != 0;
  return row;
}

}  // namespace

extern "C" {

const char* rbn_version(void) { return "0.1.0"; }

const char* rbn_last_error(void) { return last_error.c_str(); }

const char* rbn_status_name(rbn_status status) {
  switch (status) {
    case RBN_OK: return "ok";
    case RBN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RBN_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case RBN_ERR_NOT_HERMITIAN: return "not hermitian";
    case RBN_ERR_INVALID_STATE: return "invalid state";
    case RBN_ERR_SUPPORT: return "support violation";
    case RBN_ERR_PARSE: return "parse error";
    case RBN_ERR_IO: return "io error";
    case RBN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

rbn_status rbn_state_two_parameter(double alpha, double beta, rbn_state** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new rbn_state{rbn::two_parameter_state(alpha, beta)};
  });
}

rbn_status rbn_state_classical(const double* probs, size_t n, rbn_state** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(n >= 1, "probability vector is empty");
    const std::vector<double> p = to_vector(probs, n);
    std::vector<rbn::ComplexMatrix> projectors;
    for (size_t k = 0; k < n; ++k) {
      rbn::ComplexVector e(n);
      e[k] = 1.0;
      projectors.push_back(rbn::ComplexMatrix::outer(e));
    }
    *out = new rbn_state{rbn::classical_classical_state(p, projectors, projectors)};
  });
}

rbn_status rbn_state_random(int dim_a, int dim_b, int rank, uint64_t seed,
                            rbn_state** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new rbn_state{rbn::random_density(dim_a, dim_b, rank, seed)};
  });
}

rbn_status rbn_state_from_json(const char* text, rbn_state** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new rbn_state{rbn::density_from_json(text)};
  });
}

rbn_status rbn_state_load(const char* path, rbn_state** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw rbn::Error(rbn::ErrorCode::Io,
                       std::string("cannot open state file '") + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    *out = new rbn_state{rbn::density_from_json(text.str())};
  });
}

rbn_status rbn_state_to_json(const rbn_state* state, char** out) {
  return guarded([&] {
    require(state != nullptr && out != nullptr, "null argument");
    *out = copy_string(rbn::to_json(state->rho));
  });
}

rbn_status rbn_state_dims(const rbn_state* state, int* dim_a, int* dim_b) {
  return guarded([&] {
    require(state != nullptr && dim_a != nullptr && dim_b != nullptr,
            "null argument");
    *dim_a = state->rho.dim_a();
    *dim_b = state->rho.dim_b();
  });
}

void rbn_state_free(rbn_state* state) { delete state; }

void rbn_string_free(char* text) { delete[] text; }

rbn_status rbn_observable_qubit(double theta, double phi, rbn_observable** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = new rbn_observable{
        rbn::basis_observable(rbn::qubit_basis(theta, phi))};
  });
}

rbn_status rbn_observable_computational(int dim, rbn_observable** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    require(dim >= 1, "dimension must be positive");
    std::vector<rbn::ComplexVector> basis;
    for (int k = 0; k < dim; ++k) {
      rbn::ComplexVector e(static_cast<size_t>(dim));
      e[k] = 1.0;
      basis.push_back(std::move(e));
    }
    *out = new rbn_observable{rbn::basis_observable(basis)};
  });
}

rbn_status rbn_observable_mub_partner(const rbn_observable* obs,
                                      rbn_observable** out) {
  return guarded([&] {
    require(obs != nullptr && out != nullptr, "null argument");
    *out = new rbn_observable{rbn::mub_partner(obs->obs)};
  });
}

void rbn_observable_free(rbn_observable* obs) { delete obs; }

rbn_status rbn_evaluate_context(const rbn_state* state,
                                const rbn_observable* obs_a,
                                const rbn_observable* obs_b, double eps_a,
                                double eps_b, rbn_context_report* out) {
  return guarded([&] {
    require(state != nullptr && obs_a != nullptr && obs_b != nullptr &&
                out != nullptr,
            "null argument");
    const rbn::DensityMatrix& rho = state->rho;
    const rbn::ProjectiveObservable& a = obs_a->obs;
    const rbn::ProjectiveObservable& b = obs_b->obs;
    const rbn::MonitoringStrength ea(eps_a);
    const rbn::MonitoringStrength eb(eps_b);
    using rbn::Side;
    rbn_context_report r{};
    r.irreality_a = rbn::irreality(a, rho, Side::A);
    r.irreality_b = rbn::irreality(b, rho, Side::B);
    r.eta = rbn::eta(a, b, rho);
    r.delta = rbn::delta(a, b, rho, ea, eb);
    r.delta_local = rbn::delta(a, b, rho, 1.0, eb);
    r.reality_gain_a = rbn::reality_gain(a, rho, ea, Side::A);
    r.reality_gain_b = rbn::reality_gain(b, rho, eb, Side::B);
    r.gamma_a = rbn::gamma_bound(a, rho, ea, Side::A);
    r.gamma_b = rbn::gamma_bound(b, rho, eb, Side::B);
    r.gamma_sqrt_b = rbn::gamma_sqrt_bound(b, rho, eb, Side::B);
    const rbn::BoundsReport local = rbn::local_bounds(rho, eb, a, b);
    r.lb1 = local.lb1;
    r.ub1 = local.ub1;
    r.lb2 = local.lb2;
    r.ub2 = local.ub2;
    const rbn::BoundsReport bilocal = rbn::bilocal_bounds(rho, ea, eb, a, b);
    r.lb1_bi = bilocal.lb1_bi;
    r.ub1_bi = bilocal.ub1_bi;
    *out = r;
  });
}

void rbn_optimizer_config_default(rbn_optimizer_config* config) {
  if (config != nullptr) from_config(rbn::OptimizerConfig{}, config);
}

rbn_status rbn_optimizer_config_set(rbn_optimizer_config* config,
                                    const char* key, const char* value) {
  return guarded([&] {
    require(config != nullptr && key != nullptr && value != nullptr,
            "null argument");
    const rbn::OptimizerConfig updated =
        rbn::OptimizerConfig::from_key_values({{key, value}}, to_config(config));
    from_config(updated, config);
  });
}

rbn_status rbn_optimizer_config_describe(const rbn_optimizer_config* config,
                                         char** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = copy_string(to_config(config).describe());
  });
}

rbn_status rbn_max_context_rbn(const rbn_state* state,
                               const rbn_optimizer_config* config,
                               rbn_suppression_report* out) {
  return guarded([&] {
    require(state != nullptr && out != nullptr, "null argument");
    fill_report(rbn::max_context_rbn(state->rho, to_config(config)), out);
  });
}

rbn_status rbn_local_suppression(const rbn_state* state, double eps,
                                 int monitor_a,
                                 const rbn_optimizer_config* config,
                                 rbn_suppression_report* out) {
  return guarded([&] {
    require(state != nullptr && out != nullptr, "null argument");
    fill_report(rbn::local_suppression(state->rho, eps, to_config(config),
                                       monitor_a ? rbn::Side::A : rbn::Side::B),
                out);
  });
}

rbn_status rbn_bilocal_suppression(const rbn_state* state, double eps_a,
                                   double eps_b,
                                   const rbn_optimizer_config* config,
                                   rbn_suppression_report* out) {
  return guarded([&] {
    require(state != nullptr && out != nullptr, "null argument");
    fill_report(
        rbn::bilocal_suppression(state->rho, eps_a, eps_b, to_config(config)),
        out);
  });
}

rbn_status rbn_closed_form_werner(double beta, double eps, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = rbn::closed_form_werner_suppression(beta, eps);
  });
}

rbn_status rbn_closed_form_pure(double alpha, double eps, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = rbn::closed_form_pure_suppression(alpha, eps);
  });
}

rbn_status rbn_sweep_werner(const double* eps, size_t n_eps, const double* beta,
                            size_t n_beta, const rbn_optimizer_config* config,
                            unsigned threads, int with_side_a,
                            rbn_werner_row* rows) {
  return guarded([&] {
    require(rows != nullptr, "null output");
    const auto result =
        rbn::sweep_werner(to_vector(eps, n_eps), to_vector(beta, n_beta),
                          to_config(config), threads, with_side_a != 0);
    for (size_t i = 0; i < result.size(); ++i) {
      const rbn::WernerRow& r = result[i];
      rows[i] = rbn_werner_row{r.eps, r.beta, r.delta_b, r.n, r.lb1, r.ub1,
                               r.lb2, r.ub2, r.closed_form, r.delta_a,
                               r.converged ? 1 : 0};
    }
  });
}

rbn_status rbn_sweep_pure(const double* eps, size_t n_eps, const double* alpha,
                          size_t n_alpha, const rbn_optimizer_config* config,
                          unsigned threads, int with_side_a, rbn_pure_row* rows) {
  return guarded([&] {
    require(rows != nullptr, "null output");
    const auto result =
        rbn::sweep_pure(to_vector(eps, n_eps), to_vector(alpha, n_alpha),
                        to_config(config), threads, with_side_a != 0);
    for (size_t i = 0; i < result.size(); ++i) {
      const rbn::PureRow& r = result[i];
      rows[i] = rbn_pure_row{r.eps, r.alpha, r.delta_b, r.entanglement,
                             r.eps_times_e, r.closed_form, r.delta_a,
                             r.converged ? 1 : 0};
    }
  });
}

rbn_status rbn_sweep_bilocal(const double* eps, size_t n_eps, const double* beta,
                             size_t n_beta, const rbn_optimizer_config* config,
                             unsigned threads, rbn_bilocal_row* rows) {
  return guarded([&] {
    require(rows != nullptr, "null output");
    const auto result =
        rbn::sweep_bilocal(to_vector(eps, n_eps), to_vector(beta, n_beta),
                           to_config(config), threads);
    for (size_t i = 0; i < result.size(); ++i) {
      const rbn::BilocalRow& r = result[i];
      rows[i] = rbn_bilocal_row{r.beta, r.eps, r.n, r.delta_b, r.delta_bilocal,
                                r.lb1_bi, r.ub1_bi, r.converged ? 1 : 0};
    }
  });
}

int rbn_werner_row_ok(const rbn_werner_row* row, double tol) {
  if (row == nullptr) return 0;
  const rbn::WernerRow r = to_row(*row);
  return rbn::respects_bounds(r, tol) && rbn::sides_agree(r, tol) ? 1 : 0;
}

int rbn_pure_row_ok(const rbn_pure_row* row, double tol) {
  if (row == nullptr) return 0;
  const rbn::PureRow r = to_row(*row);
  return rbn::respects_bounds(r, tol) && rbn::sides_agree(r, tol) ? 1 : 0;
}

int rbn_bilocal_row_ok(const rbn_bilocal_row* row, double tol) {
  if (row == nullptr) return 0;
  return rbn::respects_ordering(to_row(*row), tol) ? 1 : 0;
}

rbn_status rbn_hierarchy(const double* probs, size_t n,
                         const rbn_optimizer_config* config,
                         rbn_hierarchy_report* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const rbn::HierarchyReport r =
        rbn::hierarchy_report(to_vector(probs, n), to_config(config));
    *out = rbn_hierarchy_report{r.eta_mub, r.shannon, r.n_value,
                                r.product ? 1 : 0, r.passed ? 1 : 0};
  });
}

const char* rbn_hierarchy_chain(void) {
  static const std::string chain = rbn::hierarchy_chain();
  return chain.c_str();
}

rbn_status rbn_verify(uint64_t seed, int samples, rbn_property_result* results,
                      size_t capacity, size_t* count) {
  return guarded([&] {
    require(count != nullptr, "null output");
    require(results != nullptr || capacity == 0, "null results array");
    const auto suite = rbn::run_property_suite(seed, samples);
    *count = suite.size();
    for (size_t i = 0; i < suite.size() && i < capacity; ++i) {
      rbn_property_result& r = results[i];
      r = rbn_property_result{};
      std::strncpy(r.name, suite[i].name.c_str(), RBN_NAME_LEN - 1);
      r.samples = suite[i].samples;
      r.max_violation = suite[i].max_violation;
      r.tolerance = suite[i].tolerance;
      r.passed = suite[i].passed ? 1 : 0;
    }
  });
}

}  // extern "C"
