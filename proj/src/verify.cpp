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

#include "rbn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "rbn/channels.hpp"
#include "rbn/error.hpp"
#include "rbn/optimizer.hpp"
#include "rbn/quantifiers.hpp"

namespace rbn {

namespace {

// One random bipartite context: state, observables, strengths.
struct Tuple {
  DensityMatrix rho;
  ProjectiveObservable obs_a;
  ProjectiveObservable obs_b;
  double eps_a;
  double eps_b;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next_seed() { return rng_(); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  // dims in {2, 3}, any rank, strengths in (0, 1].
  Tuple tuple() {
    const int dA = pick(2, 3);
    const int dB = pick(2, 3);
    const int rank = pick(1, dA * dB);
    return Tuple{random_density(dA, dB, rank, next_seed()),
                 random_observable(dA, next_seed()),
                 random_observable(dB, next_seed()), strength(), strength()};
  }

  double strength() { return std::max(1e-3, uniform(0.0, 1.0)); }

  ComplexMatrix hermitian(int d) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix h(d);
    for (int i = 0; i < d; ++i) {
      h(i, i) = gauss(rng_);
      for (int j = i + 1; j < d; ++j) {
        const double re = gauss(rng_);
        const double im = gauss(rng_);
        h(i, j) = Complex(re, im);
        h(j, i) = std::conj(h(i, j));
      }
    }
    return h;
  }

 private:
  std::mt19937_64 rng_;
};

struct Property {
  const char* name;
  double tolerance;
  // Returns the violation of one random instance.
  std::function<double(Sampler&)> instance;
};

double identity_violation(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs_diff(a, b);
}

double rejection_violation(const std::function<void()>& call) {
  try {
    call();
  } catch (const Error&) {
    return 0.0;
  }
  return 1.0;
}

std::vector<Property> build_properties() {
  std::vector<Property> props;

  props.push_back({"eigen_reconstruction", 1e-9, [](Sampler& s) {
    const ComplexMatrix h = s.hermitian(s.pick(1, 8));
    const Spectrum sp = hermitian_eig(h);
    ComplexMatrix rebuilt(h.dim());
    for (std::size_t k = 0; k < sp.eigenvalues.size(); ++k) {
      rebuilt += ComplexMatrix::outer(sp.eigenvectors[k]) * Complex(sp.eigenvalues[k]);
    }
    return max_abs_diff(rebuilt, h);
  }});

  props.push_back({"eigenvector_orthonormality", 1e-10, [](Sampler& s) {
    const Spectrum sp = hermitian_eig(s.hermitian(s.pick(1, 8)));
    double worst = 0.0;
    for (std::size_t i = 0; i < sp.eigenvectors.size(); ++i) {
      for (std::size_t j = 0; j < sp.eigenvectors.size(); ++j) {
        const Complex g = inner(sp.eigenvectors[i], sp.eigenvectors[j]);
        worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
      }
    }
    return worst;
  }});

  props.push_back({"partial_trace_of_product", 1e-12, [](Sampler& s) {
    const int dA = s.pick(1, 4);
    const int dB = s.pick(1, 4);
    const ComplexMatrix ra = random_density(dA, 1, s.pick(1, dA), s.next_seed()).matrix();
    const ComplexMatrix rb = random_density(dB, 1, s.pick(1, dB), s.next_seed()).matrix();
    const ComplexMatrix prod = tensor_product(ra, rb);
    return std::max(
        max_abs_diff(partial_trace(prod, dA, dB, Subsystem::A), ra),
        max_abs_diff(partial_trace(prod, dA, dB, Subsystem::B), rb));
  }});

  props.push_back({"trace_distance_metric", 1e-10, [](Sampler& s) {
    const int d = s.pick(2, 6);
    const ComplexMatrix a = random_density(d, 1, s.pick(1, d), s.next_seed()).matrix();
    const ComplexMatrix b = random_density(d, 1, s.pick(1, d), s.next_seed()).matrix();
    const ComplexMatrix c = random_density(d, 1, s.pick(1, d), s.next_seed()).matrix();
    const double ab = trace_distance(a, b);
    const double ba = trace_distance(b, a);
    const double ac = trace_distance(a, c);
    const double bc = trace_distance(b, c);
    return std::max({-ab, std::abs(ab - ba), ac - ab - bc, ab - 1.0});
  }});

  props.push_back({"channel_outputs_are_states", 1e-10, [](Sampler& s) {
    const Tuple t = s.tuple();
    return std::max(
        {density_violation(dephase(t.rho, t.obs_a, Side::A).matrix()),
         density_violation(monitor(t.rho, t.obs_b, t.eps_b, Side::B).matrix()),
         density_violation(monitor(t.rho, t.obs_a, t.eps_a, Side::A).matrix())});
  }});

  props.push_back({"dephase_idempotent", 1e-12, [](Sampler& s) {
    const Tuple t = s.tuple();
    const DensityMatrix once = dephase(t.rho, t.obs_b, Side::B);
    return identity_violation(dephase(once, t.obs_b, Side::B).matrix(), once.matrix());
  }});

  props.push_back({"dephase_order_independent", 1e-12, [](Sampler& s) {
    const Tuple t = s.tuple();
    const DensityMatrix ab =
        dephase(dephase(t.rho, t.obs_b, Side::B), t.obs_a, Side::A);
    const DensityMatrix ba =
        dephase(dephase(t.rho, t.obs_a, Side::A), t.obs_b, Side::B);
    return identity_violation(ab.matrix(), ba.matrix());
  }});

  props.push_back({"monitor_dephase_commute", 1e-12, [](Sampler& s) {
    const Tuple t = s.tuple();
    const DensityMatrix phi = dephase(t.rho, t.obs_a, Side::A);
    const DensityMatrix m_phi = monitor(phi, t.obs_a, t.eps_a, Side::A);
    const DensityMatrix phi_m =
        dephase(monitor(t.rho, t.obs_a, t.eps_a, Side::A), t.obs_a, Side::A);
    return std::max(identity_violation(m_phi.matrix(), phi.matrix()),
                    identity_violation(phi_m.matrix(), phi.matrix()));
  }});

  props.push_back({"monitor_iterated_closed_form", 1e-12, [](Sampler& s) {
    const Tuple t = s.tuple();
    const int n = s.pick(0, 20);
    DensityMatrix repeated = t.rho;
    for (int k = 0; k < n; ++k) repeated = monitor(repeated, t.obs_b, t.eps_b, Side::B);
    return identity_violation(
        monitor_iterated(t.rho, t.obs_b, t.eps_b, Side::B, n).matrix(),
        repeated.matrix());
  }});

  props.push_back({"monitor_iterated_limit", 1e-8, [](Sampler& s) {
    const Tuple t = s.tuple();
    const double eps = s.uniform(0.1, 1.0);
    return identity_violation(
        monitor_iterated(t.rho, t.obs_a, eps, Side::A, 200).matrix(),
        dephase(t.rho, t.obs_a, Side::A).matrix());
  }});

  props.push_back({"entropy_monotone_under_monitoring", 1e-10, [](Sampler& s) {
    const Tuple t = s.tuple();
    const int n = s.pick(1, 10);
    const double s_phi = vn_entropy(dephase(t.rho, t.obs_b, Side::B));
    const double s_mon =
        vn_entropy(monitor_iterated(t.rho, t.obs_b, t.eps_b, Side::B, n));
    const double s_rho = vn_entropy(t.rho);
    return std::max(s_mon - s_phi, s_rho - s_mon);
  }});

  props.push_back({"delta_nonnegative", 1e-10, [](Sampler& s) {
    const Tuple t = s.tuple();
    return -delta(t.obs_a, t.obs_b, t.rho, t.eps_a, t.eps_b);
  }});

  props.push_back({"delta_equality_cases", 1e-10, [](Sampler& s) {
    const Tuple t = s.tuple();
    const DensityMatrix product =
        product_state(t.rho.reduced(Subsystem::A), t.rho.reduced(Subsystem::B));
    const DensityMatrix real_a = dephase(t.rho, t.obs_a, Side::A);
    const DensityMatrix real_b = dephase(t.rho, t.obs_b, Side::B);
    return std::max({std::abs(delta(t.obs_a, t.obs_b, product, t.eps_a, t.eps_b)),
                     std::abs(delta(t.obs_a, t.obs_b, real_a, t.eps_a, t.eps_b)),
                     std::abs(delta(t.obs_a, t.obs_b, real_b, t.eps_a, t.eps_b))});
  }});

  props.push_back({"delta_limits", 1e-12, [](Sampler& s) {
    const Tuple t = s.tuple();
    return std::max(
        {std::abs(delta(t.obs_a, t.obs_b, t.rho, 0.0, t.eps_b)),
         std::abs(delta(t.obs_a, t.obs_b, t.rho, t.eps_a, 0.0)),
         std::abs(delta(t.obs_a, t.obs_b, t.rho, 1.0, 1.0) -
                  eta(t.obs_a, t.obs_b, t.rho))});
  }});

  props.push_back({"irreality_monotone_under_monitoring", 1e-10, [](Sampler& s) {
    const Tuple t = s.tuple();
    const double before = irreality(t.obs_a, t.rho, Side::A);
    const ProjectiveObservable& probe = s.pick(0, 1) == 0 ? t.obs_a : t.obs_b;
    const Side side = (&probe == &t.obs_a) ? Side::A : Side::B;
    const double after =
        irreality(t.obs_a, monitor(t.rho, probe, t.eps_b, side), Side::A);
    return after - before;
  }});

  props.push_back({"delta_difference_identities", 1e-12, [](Sampler& s) {
    const Tuple t = s.tuple();
    const double direct = delta(t.obs_a, t.obs_b, t.rho, t.eps_a, t.eps_b);
    const DensityMatrix m_b = monitor(t.rho, t.obs_b, t.eps_b, Side::B);
    const DensityMatrix m_a = monitor(t.rho, t.obs_a, t.eps_a, Side::A);
    const double via_b = delta(t.obs_a, t.obs_b, t.rho, t.eps_a, 1.0) -
                         delta(t.obs_a, t.obs_b, m_b, t.eps_a, 1.0);
    const double via_a = delta(t.obs_a, t.obs_b, t.rho, 1.0, t.eps_b) -
                         delta(t.obs_a, t.obs_b, m_a, 1.0, t.eps_b);
    return std::max(std::abs(direct - via_b), std::abs(direct - via_a));
  }});

  props.push_back({"telescoping_sum", 1e-10, [](Sampler& s) {
    const Tuple t = s.tuple();
    const int n = s.pick(0, 20);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
      sum += delta(t.obs_a, t.obs_b,
                   monitor_iterated(t.rho, t.obs_b, t.eps_b, Side::B, k), 1.0,
                   t.eps_b);
    }
    const double eps_n = 1.0 - std::pow(1.0 - t.eps_b, n + 1);
    return std::abs(sum - delta(t.obs_a, t.obs_b, t.rho, 1.0, eps_n));
  }});

  props.push_back({"telescoping_limit_is_eta", 1e-6, [](Sampler& s) {
    const Tuple t = s.tuple();
    const double eps = s.uniform(0.1, 1.0);
    const double eps_n = 1.0 - std::pow(1.0 - eps, 201);
    return std::abs(delta(t.obs_a, t.obs_b, t.rho, 1.0, eps_n) -
                    eta(t.obs_a, t.obs_b, t.rho));
  }});

  props.push_back({"reality_gain_sandwich", 1e-10, [](Sampler& s) {
    const Tuple t = s.tuple();
    const double gain = reality_gain(t.obs_b, t.rho, t.eps_b, Side::B);
    const double irr = irreality(t.obs_b, t.rho, Side::B);
    const double gamma = gamma_bound(t.obs_b, t.rho, t.eps_b, Side::B);
    return std::max({t.eps_b * irr - gain, gain - irr, gain - gamma});
  }});

  props.push_back({"gamma_below_sqrt_bound", 0.0, [](Sampler& s) {
    const Tuple t = s.tuple();
    const double tau = trace_distance(dephase(t.rho, t.obs_a, Side::A).matrix(),
                                      t.rho.matrix());
    if (tau <= 1e-6) return 0.0;
    const double gamma = gamma_bound(t.obs_a, t.rho, t.eps_a, Side::A);
    const double sqrt_bound = gamma_sqrt_bound(t.obs_a, t.rho, t.eps_a, Side::A);
    return gamma < sqrt_bound ? 0.0 : gamma - sqrt_bound + 1e-300;
  }});

  props.push_back({"eta_forms_and_symmetry", 1e-12, [](Sampler& s) {
    const Tuple t = s.tuple();
    const double e5 = eta(t.obs_a, t.obs_b, t.rho);
    const double e3 = eta_from_irreality(t.obs_a, t.obs_b, t.rho);
    const double swapped = eta(t.obs_b, t.obs_a, swap_parties(t.rho));
    return std::max({std::abs(e5 - e3), std::abs(e5 - swapped), -e5});
  }});

  props.push_back({"relative_entropy_is_irreality", 1e-9, [](Sampler& s) {
    const Tuple t = s.tuple();
    const DensityMatrix phi = dephase(t.rho, t.obs_a, Side::A);
    return std::abs(relative_entropy(t.rho, phi) - irreality(t.obs_a, t.rho, Side::A));
  }});

  props.push_back({"classical_state_eta_is_shannon", 1e-10, [](Sampler& s) {
    const int d = s.pick(2, 3);
    std::vector<double> p(static_cast<std::size_t>(d));
    double total = 0.0;
    for (double& x : p) {
      x = s.uniform(0.0, 1.0);
      total += x;
    }
    for (double& x : p) x /= total;
    const ProjectiveObservable a = random_observable(d, s.next_seed());
    const ProjectiveObservable b = random_observable(d, s.next_seed());
    const DensityMatrix rho = classical_classical_state(p, a.projectors(), b.projectors());
    return std::abs(eta(mub_partner(a), mub_partner(b), rho) - shannon_entropy(p));
  }});

  props.push_back({"mub_partner_overlaps", 1e-10, [](Sampler& s) {
    const int d = s.pick(2, 5);
    const ProjectiveObservable a = random_observable(d, s.next_seed());
    const ProjectiveObservable f = mub_partner(a);
    double worst = 0.0;
    for (const ComplexMatrix& pa : a.projectors()) {
      for (const ComplexMatrix& pf : f.projectors()) {
        worst = std::max(worst, std::abs((pa * pf).trace().real() * d - 1.0));
      }
    }
    return worst;
  }});

  props.push_back({"schmidt_consistency", 1e-10, [](Sampler& s) {
    const int dA = s.pick(2, 3);
    const int dB = s.pick(2, 3);
    const PureState psi = random_pure_state(dA, dB, s.next_seed());
    const SchmidtForm form = schmidt_decompose(psi);
    const std::vector<double> reduced = hermitian_eigenvalues(
        partial_trace(ComplexMatrix::outer(psi.amplitudes()), dA, dB, Subsystem::A));
    double worst = 0.0;
    double total = 0.0;
    ComplexVector rebuilt(psi.amplitudes().size());
    for (std::size_t i = 0; i < form.coefficients.size(); ++i) {
      worst = std::max(worst, std::abs(form.coefficients[i] - reduced[i]));
      total += form.coefficients[i];
      const double w = std::sqrt(form.coefficients[i]);
      for (int x = 0; x < dA; ++x) {
        for (int y = 0; y < dB; ++y) {
          rebuilt[x * dB + y] += w * form.basis_a[i][x] * form.basis_b[i][y];
        }
      }
    }
    const double fidelity = std::norm(inner(rebuilt, psi.amplitudes()));
    return std::max({worst, std::abs(total - 1.0), 1.0 - fidelity});
  }});

  props.push_back({"fast_objective_matches_reference", 1e-10, [](Sampler& s) {
    Tuple t = s.tuple();
    const int mode = s.pick(0, 3);
    const double ea = (mode == 0 || mode == 1) ? 1.0 : t.eps_a;
    const double eb = (mode == 0 || mode == 2) ? 1.0 : t.eps_b;
    return std::abs(fast_delta(t.rho, t.obs_a, t.obs_b, ea, eb) -
                    delta(t.obs_a, t.obs_b, t.rho, ea, eb));
  }});

  props.push_back({"label_invariance", 0.0, [](Sampler& s) {
    const Tuple t = s.tuple();
    std::vector<double> labels;
    for (std::size_t k = 0; k < t.obs_a.outcomes(); ++k) {
      labels.push_back(s.uniform(-10.0, 10.0) + 100.0 * static_cast<double>(k));
    }
    const ProjectiveObservable relabeled = t.obs_a.relabeled(labels);
    return std::abs(delta(relabeled, t.obs_b, t.rho, t.eps_a, t.eps_b) -
                    delta(t.obs_a, t.obs_b, t.rho, t.eps_a, t.eps_b));
  }});

  props.push_back({"pure_closed_form_equivalence", 1e-12, [](Sampler& s) {
    const double alpha = s.uniform(0.05, 0.95);
    const double eps = s.uniform(0.05, 0.95);
    return std::abs(closed_form_pure_suppression(alpha, eps) -
                    closed_form_pure_suppression_literal(alpha, eps));
  }});

  props.push_back({"input_validation", 0.0, [](Sampler& s) {
    const Tuple t = s.tuple();
    const double bad = 1.0 + s.uniform(1e-9, 1.0);
    return std::max(
        {rejection_violation([&] { monitor(t.rho, t.obs_a, bad, Side::A); }),
         rejection_violation([&] { monitor(t.rho, t.obs_a, -bad, Side::A); }),
         rejection_violation([&] { two_parameter_state(bad, 0.5); }),
         rejection_violation([&] {
           ComplexMatrix h = ComplexMatrix::identity(2);
           h(0, 1) = 1.0;
           hermitian_eig(h);
         })});
  }});

  return props;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed, int samples) {
  if (samples < 1) {
    throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");
  }
  std::vector<PropertyResult> results;
  std::uint64_t stream = 0;
  for (const Property& prop : build_properties()) {
    Sampler sampler(seed * 1000003ULL + stream++);
    PropertyResult r;
    r.name = prop.name;
    r.samples = samples;
    r.tolerance = prop.tolerance;
    double worst = 0.0;
    bool ok = true;
    for (int i = 0; i < samples; ++i) {
      double v = 0.0;
      try {
        v = prop.instance(sampler);
      } catch (const std::exception&) {
        v = std::numeric_limits<double>::infinity();
      }
      if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
      worst = std::max(worst, v);
      if (v > prop.tolerance) ok = false;
    }
    r.max_violation = worst;
    r.passed = ok;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace rbn
