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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rbn/error.hpp"
#include "rbn/observables.hpp"
#include "test_support.hpp"

using namespace rbn;

namespace {

constexpr double kPi = std::numbers::pi;

double projector_gap(const ProjectiveObservable& obs,
                     const std::vector<ComplexMatrix>& want) {
  double worst = 0.0;
  for (std::size_t k = 0; k < want.size(); ++k) {
    worst = std::max(worst, max_abs_diff(obs.projectors()[k], want[k]));
  }
  return worst;
}

ComplexMatrix pure(std::initializer_list<Complex> amps) {
  return ComplexMatrix::outer(ComplexVector(amps));
}

}  // namespace

TEST_CASE("qubit_observable examples") {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);

  const ProjectiveObservable z = qubit_observable(BlochAngles::make(0.0, 0.0));
  CHECK(projector_gap(z, {pure({1.0, 0.0}), pure({0.0, 1.0})}) < 1e-15);
  CHECK(z.labels() == std::vector<double>{1.0, -1.0});

  const ProjectiveObservable x = qubit_observable(BlochAngles::make(kPi / 2, 0.0));
  CHECK(projector_gap(x, {pure({r, r}), pure({r, -r})}) < 1e-15);

  const ProjectiveObservable y =
      qubit_observable(BlochAngles::make(kPi / 2, kPi / 2));
  CHECK(projector_gap(y, {pure({r, r * i}), pure({r, -r * i})}) < 1e-15);

  CHECK_THROWS_AS(BlochAngles::make(-0.1, 0.0), Error);
  CHECK_THROWS_AS(BlochAngles::make(0.0, 2 * kPi), Error);
}

TEST_CASE("Bloch symmetry used to halve the phi range") {
  // (theta, phi) and (pi - theta, phi + pi) give the same projector pair,
  // with the roles of + and - exchanged.
  for (double theta = 0.0; theta <= kPi; theta += kPi / 7) {
    for (double phi = 0.0; phi < kPi; phi += kPi / 5) {
      const auto a = qubit_observable(BlochAngles::make(theta, phi));
      const auto b =
          qubit_observable(BlochAngles::make(kPi - theta, phi + kPi));
      CHECK(max_abs_diff(a.projectors()[0], b.projectors()[1]) < 1e-14);
      CHECK(max_abs_diff(a.projectors()[1], b.projectors()[0]) < 1e-14);
    }
  }
  const BlochAngles c = BlochAngles::canonical(-0.4, 0.3);
  CHECK(c.theta == doctest::Approx(0.4));
  CHECK(c.phi == doctest::Approx(0.3 + kPi));
}

TEST_CASE("ProjectiveObservable validation") {
  const ComplexMatrix p0 = pure({1.0, 0.0});
  const ComplexMatrix p1 = pure({0.0, 1.0});
  CHECK_NOTHROW(ProjectiveObservable({p0, p1}, {1.0, -1.0}));
  CHECK_THROWS_AS(ProjectiveObservable({p0, p1}, {1.0, 1.0}), Error);
  CHECK_THROWS_AS(ProjectiveObservable({p0}, {1.0}), Error);  // incomplete
  const double r = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(ProjectiveObservable({p0, pure({r, r})}, {0.0, 1.0}), Error);
  CHECK_THROWS_AS(ProjectiveObservable({p0 * 2.0, p1}, {0.0, 1.0}), Error);
}

TEST_CASE("from_hermitian examples") {
  const ComplexMatrix sz{{1.0, 0.0}, {0.0, -1.0}};
  const ProjectiveObservable z = from_hermitian(sz);
  CHECK(z.outcomes() == 2);
  CHECK(z.nondegenerate());

  const ProjectiveObservable id = from_hermitian(ComplexMatrix::identity(3));
  CHECK(id.outcomes() == 1);
  CHECK(max_abs_diff(id.projectors()[0], ComplexMatrix::identity(3)) < 1e-14);

  const double d[] = {1.0, 1.0 + 1e-12, 2.0};
  const ProjectiveObservable clustered = from_hermitian(ComplexMatrix::diagonal(d), 1e-9);
  REQUIRE(clustered.outcomes() == 2);
  CHECK_FALSE(clustered.nondegenerate());
  CHECK(std::abs(clustered.projectors()[0].trace() - 1.0) < 1e-12);  // label 2
  CHECK(std::abs(clustered.projectors()[1].trace() - 2.0) < 1e-12);  // label ~1

  ComplexMatrix skew = sz;
  skew(0, 1) = 0.5;
  CHECK_THROWS_AS(from_hermitian(skew), Error);
}

TEST_CASE("mub_partner examples") {
  const ProjectiveObservable z = qubit_observable(BlochAngles::make(0.0, 0.0));
  const ProjectiveObservable x = qubit_observable(BlochAngles::make(kPi / 2, 0.0));
  const ProjectiveObservable f = mub_partner(z);
  // Hadamard basis, same projector pair as sigma_x.
  CHECK(max_abs_diff(f.projectors()[0], x.projectors()[0]) < 1e-15);
  CHECK(max_abs_diff(f.projectors()[1], x.projectors()[1]) < 1e-15);

  for (int d = 2; d <= 5; ++d) {
    std::vector<ComplexVector> basis;
    for (int k = 0; k < d; ++k) {
      ComplexVector e(static_cast<std::size_t>(d));
      e[k] = 1.0;
      basis.push_back(e);
    }
    const ProjectiveObservable a = basis_observable(basis);
    const ProjectiveObservable p = mub_partner(a);
    for (const ComplexMatrix& pa : a.projectors())
      for (const ComplexMatrix& pf : p.projectors())
        CHECK(std::abs((pa * pf).trace().real() * d - 1.0) < 1e-10);
  }

  const ProjectiveObservable degenerate =
      from_hermitian(ComplexMatrix::identity(2));
  CHECK_THROWS_AS(mub_partner(degenerate), Error);
}

TEST_CASE("mub_partner of random bases") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int d = 2 + static_cast<int>(seed % 4);
    const ProjectiveObservable a = random_observable(d, seed);
    const ProjectiveObservable f = mub_partner(a);
    for (const ComplexMatrix& pa : a.projectors())
      for (const ComplexMatrix& pf : f.projectors())
        CHECK(std::abs((pa * pf).trace().real() * d - 1.0) < 1e-10);
  }
}

TEST_CASE("schmidt_observables examples") {
  const ComplexMatrix p0 = pure({1.0, 0.0});
  const ComplexMatrix p1 = pure({0.0, 1.0});
  auto is_computational = [&](const ProjectiveObservable& o) {
    const double direct = std::max(max_abs_diff(o.projectors()[0], p0),
                                   max_abs_diff(o.projectors()[1], p1));
    const double swapped = std::max(max_abs_diff(o.projectors()[0], p1),
                                    max_abs_diff(o.projectors()[1], p0));
    return std::min(direct, swapped) < 1e-12;
  };
  for (double alpha : {0.3, 0.5}) {
    const auto [a, b] = schmidt_observables(psi_alpha(alpha));
    CHECK(is_computational(a));
    CHECK(is_computational(b));
  }
  const auto [a, b] = schmidt_observables(PureState(ComplexVector{0.0, 1.0, 0.0, 0.0}, 2, 2));
  CHECK(is_computational(a));
  CHECK(is_computational(b));
  CHECK(a.labels() == std::vector<double>{0.0, 1.0});
}

TEST_CASE("givens_basis") {
  CHECK(givens_parameter_count(2) == 2);
  CHECK(givens_parameter_count(3) == 6);
  // d = 2 reduces to the Bloch parametrization.
  const std::vector<double> angles{0.7, 1.9};
  const auto g = givens_basis(2, angles);
  const auto q = qubit_basis(0.7, 1.9);
  for (int k = 0; k < 2; ++k) {
    CHECK(std::norm(inner(g[k], q[k])) == doctest::Approx(1.0).epsilon(1e-14));
  }
  // Orthonormal for random angles in d = 3, 4.
  for (int d : {3, 4}) {
    std::vector<double> p(static_cast<std::size_t>(givens_parameter_count(d)));
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = 0.37 * (k + 1);
    const auto basis = givens_basis(d, p);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        CHECK(std::abs(inner(basis[i], basis[j]) - (i == j ? 1.0 : 0.0)) < 1e-13);
  }
  CHECK_THROWS_AS(givens_basis(3, angles), Error);
}
