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

#ifndef RBN_OBSERVABLES_HPP
#define RBN_OBSERVABLES_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rbn/linalg.hpp"
#include "rbn/states.hpp"

namespace rbn {

/// A = sum_a a A_a with orthogonal projectors summing to the identity.
///
/// Quantifiers only ever look at the projectors; labels are carried for
/// reporting and must be distinct.
class ProjectiveObservable {
 public:
  /// Validates A_a A_a' = delta A_a and completeness within 1e-10.
  ProjectiveObservable(std::vector<ComplexMatrix> projectors,
                       std::vector<double> labels);

  const std::vector<ComplexMatrix>& projectors() const noexcept {
    return projectors_;
  }
  const std::vector<double>& labels() const noexcept { return labels_; }
  int dim() const noexcept { return projectors_.front().dim(); }
  std::size_t outcomes() const noexcept { return projectors_.size(); }

  /// True when every projector has rank one.
  bool nondegenerate() const noexcept { return !basis_.empty(); }

  /// Unit eigenvectors, one per projector; empty when degenerate.
  const std::vector<ComplexVector>& basis() const noexcept { return basis_; }

  /// Same projectors, new labels.
  ProjectiveObservable relabeled(std::vector<double> labels) const;

 private:
  std::vector<ComplexMatrix> projectors_;
  std::vector<double> labels_;
  std::vector<ComplexVector> basis_;
};

/// Bloch-sphere direction of the "+" eigenvector.
struct BlochAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  /// Throws InvalidArgument when outside the ranges above.
  static BlochAngles make(double theta, double phi);

  /// Maps arbitrary reals onto the canonical ranges without changing the
  /// projector pair. Uses (theta, phi) ~ (-theta, phi + pi) and 2 pi
  /// periodicity.
  static BlochAngles canonical(double theta, double phi);
};

/// {|+>, |->} with |+> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> and
/// |-> = -sin(theta/2)|0> + e^{i phi} cos(theta/2)|1>. Accepts any reals.
std::vector<ComplexVector> qubit_basis(double theta, double phi);

/// Projectors |+><+|, |-><-| with labels (+1, -1).
ProjectiveObservable qubit_observable(const BlochAngles& angles);

/// Rank-1 observable on an orthonormal basis. Labels are (+1, -1) for qubits
/// and 0..d-1 otherwise.
ProjectiveObservable basis_observable(const std::vector<ComplexVector>& basis);

/// Eigen-projectors of h, merging eigenvalues whose consecutive gaps are
/// below degeneracy_tol. Each cluster is labelled by its mean eigenvalue.
ProjectiveObservable from_hermitian(const ComplexMatrix& h,
                                    double degeneracy_tol = 1e-9);

/// Observable whose eigenbasis is the discrete Fourier transform of the
/// input eigenbasis: f_k = d^{-1/2} sum_j w^{jk} e_j, w = exp(2 pi i / d).
ProjectiveObservable mub_partner(const ProjectiveObservable& obs);

/// Observables diagonal in the Schmidt bases, labelled 0, 1, ...
std::pair<ProjectiveObservable, ProjectiveObservable> schmidt_observables(
    const PureState& psi);

/// Number of angles consumed by givens_basis for dimension d: d (d - 1).
int givens_parameter_count(int d);

/// Orthonormal basis U e_k for U a product of complex Givens rotations over
/// the planes (j, k), j < k, in lexicographic order. Each plane takes an
/// angle pair (theta, phi) acting like qubit_basis, so for d = 2 the result
/// coincides with qubit_basis(theta, phi).
std::vector<ComplexVector> givens_basis(int d, std::span<const double> angles);

/// Rank-1 observable in a Haar-like random basis (Gram-Schmidt of a seeded
/// complex Gaussian matrix).
ProjectiveObservable random_observable(int d, std::uint64_t seed);

}  // namespace rbn

#endif  // RBN_OBSERVABLES_HPP
