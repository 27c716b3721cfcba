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
#include <functional>
#include <random>

#include "doctest.h"
#include "rbn/error.hpp"
#include "rbn/linalg.hpp"
#include "rbn/states.hpp"
#include "test_support.hpp"

using namespace rbn;

namespace {

ComplexMatrix projector(int d, int k) {
  ComplexVector e(static_cast<std::size_t>(d));
  e[k] = 1.0;
  return ComplexMatrix::outer(e);
}

ErrorCode code_of(const std::function<void()>& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an rbn::Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("two_parameter_state examples") {
  CHECK(max_abs_diff(two_parameter_state(0.5, 0.0).matrix(),
                     ComplexMatrix::identity(4) * 0.25) < 1e-16);

  // Singlet (|01> - |10>)/sqrt 2
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexVector singlet{0.0, r, -r, 0.0};
  CHECK(max_abs_diff(two_parameter_state(0.5, 1.0).matrix(),
                     ComplexMatrix::outer(singlet)) < 1e-15);

  CHECK(max_abs_diff(two_parameter_state(1.0, 1.0).matrix(), projector(4, 1)) ==
        0.0);

  const DensityMatrix rho = two_parameter_state(0.3, 0.7);
  CHECK(rho.dim_a() == 2);
  CHECK(rho.dim_b() == 2);
  CHECK(density_violation(rho.matrix()) < 1e-12);

  CHECK(code_of([] { two_parameter_state(-0.1, 0.5); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { two_parameter_state(0.5, 1.01); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("classical_classical_state examples") {
  const std::vector<ComplexMatrix> one{projector(2, 0)};
  CHECK(max_abs_diff(classical_classical_state({1.0}, one, one).matrix(),
                     projector(4, 0)) == 0.0);

  const std::vector<ComplexMatrix> z{projector(2, 0), projector(2, 1)};
  const double half[] = {0.5, 0.0, 0.0, 0.5};
  CHECK(max_abs_diff(classical_classical_state({0.5, 0.5}, z, z).matrix(),
                     ComplexMatrix::diagonal(half)) == 0.0);
  const double quarter[] = {0.75, 0.0, 0.0, 0.25};
  CHECK(max_abs_diff(classical_classical_state({0.75, 0.25}, z, z).matrix(),
                     ComplexMatrix::diagonal(quarter)) == 0.0);
}

TEST_CASE("classical_classical_state rejects bad input") {
  const std::vector<ComplexMatrix> z{projector(2, 0), projector(2, 1)};
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<ComplexMatrix> overlapping{
      projector(2, 0), ComplexMatrix::outer(ComplexVector{r, r})};
  CHECK(code_of([&] { classical_classical_state({0.5, 0.5}, overlapping, z); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { classical_classical_state({0.5, 0.6}, z, z); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { classical_classical_state({0.5}, z, z); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { classical_classical_state({1.2, -0.2}, z, z); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("product_state examples") {
  const ComplexMatrix half = ComplexMatrix::identity(2) * 0.5;
  CHECK(max_abs_diff(product_state(half, half).matrix(),
                     ComplexMatrix::identity(4) * 0.25) == 0.0);

  const double r = 1.0 / std::sqrt(2.0);
  const ComplexMatrix plus = ComplexMatrix::outer(ComplexVector{r, r});
  const DensityMatrix pure = product_state(projector(2, 0), plus);
  const std::vector<double> ev = hermitian_eigenvalues(pure.matrix());
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(ev[1]) < 1e-14);

  // mixed (rank 2) x pure -> rank 2
  const double mixed_diag[] = {0.6, 0.4};
  const std::vector<double> ev2 = hermitian_eigenvalues(
      product_state(ComplexMatrix::diagonal(mixed_diag), plus).matrix());
  int rank = 0;
  for (double v : ev2) rank += v > 1e-12;
  CHECK(rank == 2);

  ComplexMatrix not_state = ComplexMatrix::identity(2);
  CHECK_THROWS_AS(product_state(not_state, half), Error);
}

TEST_CASE("random_density properties") {
  const DensityMatrix pure = random_density(2, 3, 1, 42);
  const std::vector<double> ev = hermitian_eigenvalues(pure.matrix());
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(ev[1]) < 1e-12);

  CHECK(max_abs_diff(random_density(3, 3, 4, 7).matrix(),
                     random_density(3, 3, 4, 7).matrix()) == 0.0);
  CHECK(max_abs_diff(random_density(3, 3, 4, 7).matrix(),
                     random_density(3, 3, 4, 8).matrix()) > 1e-3);

  // Mean eigenvalue is 1/(dA dB) for every sample.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityMatrix rho = random_density(2, 2, 4, seed);
    const std::vector<double> e = hermitian_eigenvalues(rho.matrix());
    double sum = 0.0;
    for (double v : e) {
      sum += v;
      CHECK(v >= -1e-12);
    }
    CHECK(sum / 4.0 == doctest::Approx(0.25).epsilon(1e-12));
  }

  CHECK_THROWS_AS(random_density(2, 2, 0, 1), Error);
  CHECK_THROWS_AS(random_density(2, 2, 5, 1), Error);
}

TEST_CASE("DensityMatrix validation") {
  ComplexMatrix m = ComplexMatrix::identity(4) * 0.25;
  CHECK_NOTHROW(DensityMatrix(m, 2, 2));
  CHECK(code_of([&] { DensityMatrix(m, 2, 3); }) == ErrorCode::DimensionMismatch);

  ComplexMatrix trace_two = ComplexMatrix::identity(4) * 0.5;
  CHECK(code_of([&] { DensityMatrix(trace_two, 2, 2); }) == ErrorCode::InvalidState);

  const double negative[] = {1.1, -0.1, 0.0, 0.0};
  CHECK(code_of([&] { DensityMatrix(ComplexMatrix::diagonal(negative), 2, 2); }) ==
        ErrorCode::InvalidState);

  ComplexMatrix skew = m;
  skew(0, 1) = Complex(0.0, 0.1);
  CHECK(code_of([&] { DensityMatrix(skew, 2, 2); }) == ErrorCode::NotHermitian);

  // Tiny negative eigenvalues within 1e-10 are tolerated.
  const double tiny[] = {0.5 + 5e-11, 0.5, -5e-11, 0.0};
  CHECK_NOTHROW(DensityMatrix(ComplexMatrix::diagonal(tiny), 2, 2));
}

TEST_CASE("PureState normalization") {
  CHECK_NOTHROW(PureState(ComplexVector{1.0, 0.0, 0.0, 0.0}, 2, 2));
  CHECK_THROWS_AS(PureState(ComplexVector{1.0, 1e-6, 0.0, 0.0}, 2, 2), Error);
  CHECK_THROWS_AS(PureState(ComplexVector{1.0, 0.0, 0.0}, 2, 2), Error);
}

TEST_CASE("schmidt_decompose examples") {
  const SchmidtForm product =
      schmidt_decompose(PureState(ComplexVector{0.0, 1.0, 0.0, 0.0}, 2, 2));
  REQUIRE(product.coefficients.size() == 2);
  CHECK(product.coefficients[0] == doctest::Approx(1.0));
  CHECK(std::abs(product.coefficients[1]) < 1e-14);

  const SchmidtForm psi = schmidt_decompose(psi_alpha(0.3));
  CHECK(psi.coefficients[0] == doctest::Approx(0.7).epsilon(1e-14));
  CHECK(psi.coefficients[1] == doctest::Approx(0.3).epsilon(1e-14));

  const SchmidtForm singlet = schmidt_decompose(psi_alpha(0.5));
  CHECK(singlet.coefficients[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(singlet.coefficients[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("schmidt_decompose reconstructs random states") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int dA = 2 + static_cast<int>(seed % 2);
    const int dB = 2 + static_cast<int>((seed / 2) % 3);
    const PureState psi = random_pure_state(dA, dB, seed);
    const SchmidtForm form = schmidt_decompose(psi);
    const std::vector<double> reduced = hermitian_eigenvalues(
        partial_trace(ComplexMatrix::outer(psi.amplitudes()), dA, dB, Subsystem::A));
    double total = 0.0;
    ComplexVector rebuilt(psi.amplitudes().size());
    for (std::size_t i = 0; i < form.coefficients.size(); ++i) {
      CHECK(std::abs(form.coefficients[i] - reduced[i]) < 1e-10);
      total += form.coefficients[i];
      const double w = std::sqrt(form.coefficients[i]);
      for (int x = 0; x < dA; ++x)
        for (int y = 0; y < dB; ++y)
          rebuilt[x * dB + y] += w * form.basis_a[i][x] * form.basis_b[i][y];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::norm(inner(rebuilt, psi.amplitudes())) > 1.0 - 1e-9);
    // Phase convention on basis A.
    for (const ComplexVector& v : form.basis_a) {
      for (const Complex& z : v) {
        if (std::abs(z) > 1e-10) {
          CHECK(std::abs(z.imag()) < 1e-12);
          CHECK(z.real() > 0.0);
          break;
        }
      }
    }
  }
}

TEST_CASE("swap_parties exchanges the subsystems") {
  const DensityMatrix rho = random_density(2, 3, 3, 17);
  const DensityMatrix swapped = swap_parties(rho);
  CHECK(swapped.dim_a() == 3);
  CHECK(swapped.dim_b() == 2);
  CHECK(max_abs_diff(swapped.reduced(Subsystem::A), rho.reduced(Subsystem::B)) <
        1e-15);
  CHECK(max_abs_diff(swap_parties(swapped).matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("JSON round trip and errors") {
  const DensityMatrix rho = random_density(2, 3, 2, 5);
  const DensityMatrix back = density_from_json(to_json(rho));
  CHECK(back.dim_a() == 2);
  CHECK(back.dim_b() == 3);
  CHECK(max_abs_diff(back.matrix(), rho.matrix()) == 0.0);

  try {
    density_from_json("{\"dA\": 2,\n \"dB\": 2,\n \"re\": [[1, 0}");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([] { density_from_json(R"({"dA": 2, "dB": 2, "re": [[1]], "im": [[0]]})"); }) ==
        ErrorCode::Parse);
  // Well-formed JSON that is not a state.
  CHECK(code_of([] {
          density_from_json(R"({"dA": 1, "dB": 2, "re": [[1, 0], [0, 1]],
                                "im": [[0, 0], [0, 0]]})");
        }) == ErrorCode::InvalidState);
}
