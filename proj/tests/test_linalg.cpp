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
#include <random>

#include "doctest.h"
#include "rbn/error.hpp"
#include "rbn/linalg.hpp"
#include "rbn/states.hpp"
#include "test_support.hpp"

using namespace rbn;
using rbn::testing::random_hermitian;

namespace {

const ComplexMatrix sigma_x{{0.0, 1.0}, {1.0, 0.0}};

}  // namespace

TEST_CASE("tensor_product examples") {
  CHECK(max_abs_diff(tensor_product(ComplexMatrix::identity(2),
                                    ComplexMatrix::identity(2)),
                     ComplexMatrix::identity(4)) == 0.0);

  const double p0[] = {1.0, 0.0};
  const double p1[] = {0.0, 1.0};
  const double expect[] = {0.0, 1.0, 0.0, 0.0};
  CHECK(max_abs_diff(tensor_product(ComplexMatrix::diagonal(p0),
                                    ComplexMatrix::diagonal(p1)),
                     ComplexMatrix::diagonal(expect)) == 0.0);

  const ComplexMatrix k = tensor_product(ComplexMatrix::diagonal(p0), sigma_x);
  ComplexMatrix want(4);
  want(0, 1) = 1.0;
  want(1, 0) = 1.0;
  CHECK(max_abs_diff(k, want) == 0.0);
}

TEST_CASE("tensor_product index layout") {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_hermitian(2, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const ComplexMatrix k = tensor_product(a, b);
  REQUIRE(k.dim() == 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
          CHECK(std::abs(k(i * 3 + x, j * 3 + y) - a(i, j) * b(x, y)) == 0.0);
}

TEST_CASE("partial_trace examples") {
  // Bell |Phi+> = (|00> + |11>)/sqrt 2
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexVector bell{r, 0.0, 0.0, r};
  const ComplexMatrix reduced =
      partial_trace(ComplexMatrix::outer(bell), 2, 2, Subsystem::A);
  CHECK(max_abs_diff(reduced, ComplexMatrix::identity(2) * 0.5) < 1e-15);

  ComplexMatrix mixed = ComplexMatrix::identity(4) * 0.25;
  CHECK(max_abs_diff(partial_trace(mixed, 2, 2, Subsystem::B),
                     ComplexMatrix::identity(2) * 0.5) < 1e-15);
}

TEST_CASE("partial_trace of a product returns each factor") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int dA = 1 + static_cast<int>(rng() % 4);
    const int dB = 1 + static_cast<int>(rng() % 4);
    const ComplexMatrix a = random_density(dA, 1, dA, rng()).matrix();
    const ComplexMatrix b = random_density(dB, 1, dB, rng()).matrix();
    const ComplexMatrix ab = tensor_product(a, b);
    CHECK(max_abs_diff(partial_trace(ab, dA, dB, Subsystem::A), a) < 1e-12);
    CHECK(max_abs_diff(partial_trace(ab, dA, dB, Subsystem::B), b) < 1e-12);
  }
}

TEST_CASE("partial_trace rejects a dimension mismatch") {
  try {
    partial_trace(ComplexMatrix::identity(4), 2, 3, Subsystem::A);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("hermitian_eig examples") {
  const double d[] = {3.0, 1.0, 2.0};
  const Spectrum s = hermitian_eig(ComplexMatrix::diagonal(d));
  REQUIRE(s.eigenvalues.size() == 3);
  CHECK(s.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(s.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(s.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-15));

  const Spectrum x = hermitian_eig(sigma_x);
  CHECK(x.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(x.eigenvalues[1] == doctest::Approx(-1.0));
  const double r = 1.0 / std::sqrt(2.0);
  // Phase convention: first nonzero component real and positive.
  CHECK(std::abs(x.eigenvectors[0][0] - Complex(r)) < 1e-14);
  CHECK(std::abs(x.eigenvectors[0][1] - Complex(r)) < 1e-14);
  CHECK(std::abs(x.eigenvectors[1][0] - Complex(r)) < 1e-14);
  CHECK(std::abs(x.eigenvectors[1][1] - Complex(-r)) < 1e-14);

  const std::vector<double> singlet =
      hermitian_eigenvalues(two_parameter_state(0.5, 1.0).matrix());
  CHECK(singlet[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(singlet[k]) < 1e-14);
}

TEST_CASE("hermitian_eig reconstructs random Hermitian matrices") {
  std::mt19937_64 rng(2024);
  double worst_rebuild = 0.0;
  double worst_ortho = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 8);
    const ComplexMatrix h = random_hermitian(d, rng);
    const Spectrum s = hermitian_eig(h);
    ComplexMatrix rebuilt(d);
    for (int k = 0; k < d; ++k) {
      rebuilt += ComplexMatrix::outer(s.eigenvectors[k]) * Complex(s.eigenvalues[k]);
      if (k > 0) CHECK(s.eigenvalues[k - 1] >= s.eigenvalues[k]);
      for (int l = 0; l < d; ++l) {
        const Complex g = inner(s.eigenvectors[k], s.eigenvectors[l]);
        worst_ortho = std::max(worst_ortho, std::abs(g - (k == l ? 1.0 : 0.0)));
      }
    }
    worst_rebuild = std::max(worst_rebuild, max_abs_diff(rebuilt, h));
  }
  CHECK(worst_rebuild < 1e-9);
  CHECK(worst_ortho < 1e-10);
}

TEST_CASE("hermitian_eig handles degenerate spectra") {
  // U diag(2,2,-1) U^dagger with a random unitary from a Hermitian eigenbasis.
  std::mt19937_64 rng(5);
  const Spectrum basis = hermitian_eig(random_hermitian(3, rng));
  ComplexMatrix h(3);
  const double values[] = {2.0, 2.0, -1.0};
  for (int k = 0; k < 3; ++k) {
    h += ComplexMatrix::outer(basis.eigenvectors[k]) * Complex(values[k]);
  }
  const std::vector<double> ev = hermitian_eigenvalues(h);
  CHECK(ev[0] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(ev[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(ev[2] == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("hermitian_eig agrees with the 2x2 closed form") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const ComplexMatrix h = random_hermitian(2, rng);
    const auto [hi, lo] = rbn::testing::eig2(h);
    const std::vector<double> ev = hermitian_eigenvalues(h);
    CHECK(std::abs(ev[0] - hi) < 1e-12);
    CHECK(std::abs(ev[1] - lo) < 1e-12);
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  ComplexMatrix m = ComplexMatrix::identity(2);
  m(0, 1) = 1e-6;
  try {
    hermitian_eig(m);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  // Within 1e-10 is accepted.
  m(0, 1) = 1e-11;
  CHECK_NOTHROW(hermitian_eig(m));
}

TEST_CASE("trace_distance examples") {
  const double p0[] = {1.0, 0.0};
  const double p1[] = {0.0, 1.0};
  const ComplexMatrix zero = ComplexMatrix::diagonal(p0);
  const ComplexMatrix one = ComplexMatrix::diagonal(p1);
  CHECK(trace_distance(zero, zero) == 0.0);
  CHECK(trace_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(trace_distance(ComplexMatrix::identity(2) * 0.5, zero) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(trace_distance(zero, ComplexMatrix::identity(3)), Error);
}

TEST_CASE("trace_distance is a metric on sampled triples") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const ComplexMatrix a = random_density(d, 1, d, rng()).matrix();
    const ComplexMatrix b = random_density(d, 1, 1, rng()).matrix();
    const ComplexMatrix c = random_density(d, 1, 2, rng()).matrix();
    const double ab = trace_distance(a, b);
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0 + 1e-12);
    CHECK(std::abs(ab - trace_distance(b, a)) < 1e-10);
    CHECK(trace_distance(a, c) <= ab + trace_distance(b, c) + 1e-10);
  }
}
