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

#ifndef RBN_STATES_HPP
#define RBN_STATES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rbn/linalg.hpp"

namespace rbn {

/// Positive unit-trace operator on a dA x dB bipartite space.
class DensityMatrix {
 public:
  /// Validates: Hermitian, unit trace and eigenvalues >= -tol, all at 1e-10.
  DensityMatrix(ComplexMatrix matrix, int dA, int dB);

  /// Skips the spectral checks. Only for images of valid states under maps
  /// that are known to be trace preserving and positive.
  static DensityMatrix unchecked(ComplexMatrix matrix, int dA, int dB);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  int dim_a() const noexcept { return dA_; }
  int dim_b() const noexcept { return dB_; }
  int dim() const noexcept { return matrix_.dim(); }

  /// Reduced state of one factor.
  ComplexMatrix reduced(Subsystem keep) const;

 private:
  struct NoCheck {};
  DensityMatrix(ComplexMatrix matrix, int dA, int dB, NoCheck);

  ComplexMatrix matrix_;
  int dA_;
  int dB_;
};

/// Worst violation of the density-matrix conditions (hermiticity, trace and
/// negativity). Zero for an exact state.
double density_violation(const ComplexMatrix& m);

/// Throws InvalidState if the single-system matrix is not a density matrix.
void validate_density(const ComplexMatrix& m, const char* what);

class PureState {
 public:
  /// Requires unit norm within 1e-12.
  PureState(ComplexVector amplitudes, int dA, int dB);

  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  int dim_a() const noexcept { return dA_; }
  int dim_b() const noexcept { return dB_; }

  DensityMatrix density() const;

 private:
  ComplexVector amplitudes_;
  int dA_;
  int dB_;
};

/// psi = sum_i sqrt(coefficients[i]) |basis_a[i]>|basis_b[i]>. Both bases are
/// completed to full orthonormal bases of their factors; only the first
/// min(dA, dB) vectors carry Schmidt weight.
struct SchmidtForm {
  std::vector<double> coefficients;
  std::vector<ComplexVector> basis_a;
  std::vector<ComplexVector> basis_b;
};

/// (1 - beta) I/4 + beta |psi_alpha><psi_alpha| with
/// |psi_alpha> = sqrt(alpha)|01> - sqrt(1 - alpha)|10>.
DensityMatrix two_parameter_state(double alpha, double beta);

/// |psi_alpha> from two_parameter_state.
PureState psi_alpha(double alpha);

/// sum_l probs[l] P_l (x) Q_l for rank-1 orthogonal families P, Q.
DensityMatrix classical_classical_state(const std::vector<double>& probs,
                                        const std::vector<ComplexMatrix>& proj_a,
                                        const std::vector<ComplexMatrix>& proj_b);

DensityMatrix product_state(const ComplexMatrix& rho_a,
                            const ComplexMatrix& rho_b);

/// G G^dagger / Tr(G G^dagger) with G a seeded complex Gaussian
/// (dA dB) x rank matrix.
DensityMatrix random_density(int dA, int dB, int rank, std::uint64_t seed);

/// Normalized complex Gaussian vector.
PureState random_pure_state(int dA, int dB, std::uint64_t seed);

SchmidtForm schmidt_decompose(const PureState& psi);

/// The same state with the roles of A and B exchanged.
DensityMatrix swap_parties(const DensityMatrix& rho);

/// {"dA": .., "dB": .., "re": [[..]], "im": [[..]]}
std::string to_json(const DensityMatrix& rho);

/// Parses and validates. Malformed text throws ErrorCode::Parse with the
/// line and column of the failure.
DensityMatrix density_from_json(const std::string& text);

}  // namespace rbn

#endif  // RBN_STATES_HPP
