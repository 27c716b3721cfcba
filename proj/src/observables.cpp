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

#include "rbn/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "rbn/error.hpp"

namespace rbn {

namespace {

constexpr double kProjectorTol = 1e-10;

ComplexVector dominant_column(const ComplexMatrix& p) {
  const int d = p.dim();
  int best = 0;
  double best_norm = -1.0;
  for (int col = 0; col < d; ++col) {
    double norm = 0.0;
    for (int row = 0; row < d; ++row) norm += std::norm(p(row, col));
    if (norm > best_norm) {
      best_norm = norm;
      best = col;
    }
  }
  ComplexVector v(static_cast<std::size_t>(d));
  const double scale = 1.0 / std::sqrt(best_norm);
  for (int row = 0; row < d; ++row) v[row] = p(row, best) * scale;
  return v;
}

}  // namespace

ProjectiveObservable::ProjectiveObservable(std::vector<ComplexMatrix> projectors,
                                           std::vector<double> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty() || projectors_.size() != labels_.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "observable needs one label per projector");
  }
  const int d = projectors_.front().dim();
  std::vector<double> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "observable labels must be distinct");
  }

  ComplexMatrix sum(d);
  bool rank_one = true;
  for (std::size_t a = 0; a < projectors_.size(); ++a) {
    const ComplexMatrix& p = projectors_[a];
    if (p.dim() != d) {
      throw Error(ErrorCode::DimensionMismatch,
                  "observable projectors have different dimensions");
    }
    for (std::size_t b = 0; b <= a; ++b) {
      const ComplexMatrix prod = p * projectors_[b];
      const double err =
          a == b ? max_abs_diff(prod, p) : max_abs_diff(prod, ComplexMatrix(d));
      if (err > kProjectorTol) {
        std::ostringstream msg;
        msg << "projectors violate A_a A_a' = delta A_a by " << err;
        throw Error(ErrorCode::InvalidArgument, msg.str());
      }
    }
    if (hermiticity_violation(p) > kProjectorTol) {
      throw Error(ErrorCode::InvalidArgument, "projector is not Hermitian");
    }
    if (std::abs(p.trace().real() - 1.0) > 1e-6) rank_one = false;
    sum += p;
  }
  const double completeness = max_abs_diff(sum, ComplexMatrix::identity(d));
  if (completeness > kProjectorTol) {
    std::ostringstream msg;
    msg << "projectors do not sum to the identity (deviation " << completeness
        << ")";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  if (rank_one) {
    basis_.reserve(projectors_.size());
    for (const ComplexMatrix& p : projectors_) {
      basis_.push_back(dominant_column(p));
    }
  }
}

ProjectiveObservable ProjectiveObservable::relabeled(
    std::vector<double> labels) const {
  return ProjectiveObservable(projectors_, std::move(labels));
}

BlochAngles BlochAngles::make(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi) ||
      !(phi >= 0.0 && phi < 2.0 * std::numbers::pi)) {
    std::ostringstream msg;
    msg << "Bloch angles out of range: theta=" << theta << " phi=" << phi;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
  return BlochAngles{theta, phi};
}

BlochAngles BlochAngles::canonical(double theta, double phi) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0.0) theta += kTwoPi;
  if (theta > std::numbers::pi) {
    theta = kTwoPi - theta;
    phi += std::numbers::pi;
  }
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  if (phi >= kTwoPi) phi = 0.0;
  return BlochAngles{theta, phi};
}

std::vector<ComplexVector> qubit_basis(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex e = std::polar(1.0, phi);
  return {ComplexVector{c, e * s}, ComplexVector{-s, e * c}};
}

ProjectiveObservable basis_observable(const std::vector<ComplexVector>& basis) {
  std::vector<ComplexMatrix> projectors;
  std::vector<double> labels;
  projectors.reserve(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    projectors.push_back(ComplexMatrix::outer(basis[k]));
    if (basis.size() == 2) {
      labels.push_back(k == 0 ? 1.0 : -1.0);
    } else {
      labels.push_back(static_cast<double>(k));
    }
  }
  return ProjectiveObservable(std::move(projectors), std::move(labels));
}

ProjectiveObservable qubit_observable(const BlochAngles& angles) {
  const BlochAngles checked = BlochAngles::make(angles.theta, angles.phi);
  return basis_observable(qubit_basis(checked.theta, checked.phi));
}

ProjectiveObservable from_hermitian(const ComplexMatrix& h,
                                    double degeneracy_tol) {
  const Spectrum spectrum = hermitian_eig(h);
  const int d = h.dim();
  std::vector<ComplexMatrix> projectors;
  std::vector<double> labels;
  std::size_t start = 0;
  while (start < spectrum.eigenvalues.size()) {
    std::size_t end = start + 1;
    while (end < spectrum.eigenvalues.size() &&
           spectrum.eigenvalues[end - 1] - spectrum.eigenvalues[end] <
               degeneracy_tol) {
      ++end;
    }
    ComplexMatrix p(d);
    double label = 0.0;
    for (std::size_t k = start; k < end; ++k) {
      p += ComplexMatrix::outer(spectrum.eigenvectors[k]);
      label += spectrum.eigenvalues[k];
    }
    projectors.push_back(std::move(p));
    labels.push_back(label / static_cast<double>(end - start));
    start = end;
  }
  return ProjectiveObservable(std::move(projectors), std::move(labels));
}

ProjectiveObservable mub_partner(const ProjectiveObservable& obs) {
  if (!obs.nondegenerate()) {
    throw Error(ErrorCode::InvalidArgument,
                "mub_partner requires a nondegenerate observable");
  }
  const int d = obs.dim();
  const std::vector<ComplexVector>& e = obs.basis();
  std::vector<ComplexVector> f;
  f.reserve(static_cast<std::size_t>(d));
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) {
    ComplexVector v(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      const Complex w =
          std::polar(norm, 2.0 * std::numbers::pi * j * k / static_cast<double>(d));
      for (int i = 0; i < d; ++i) v[i] += w * e[j][i];
    }
    f.push_back(std::move(v));
  }
  return basis_observable(f);
}

std::pair<ProjectiveObservable, ProjectiveObservable> schmidt_observables(
    const PureState& psi) {
  const SchmidtForm form = schmidt_decompose(psi);
  auto build = [](const std::vector<ComplexVector>& basis) {
    std::vector<ComplexMatrix> projectors;
    std::vector<double> labels;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      projectors.push_back(ComplexMatrix::outer(basis[i]));
      labels.push_back(static_cast<double>(i));
    }
    return ProjectiveObservable(std::move(projectors), std::move(labels));
  };
  return {build(form.basis_a), build(form.basis_b)};
}

int givens_parameter_count(int d) { return d * (d - 1); }

std::vector<ComplexVector> givens_basis(int d, std::span<const double> angles) {
  if (d < 1 || static_cast<int>(angles.size()) != givens_parameter_count(d)) {
    throw Error(ErrorCode::InvalidArgument,
                "givens_basis: expected d (d - 1) angles");
  }
  // Columns of U, updated as U <- U G_{jk} for each plane.
  std::vector<ComplexVector> cols(static_cast<std::size_t>(d),
                                  ComplexVector(static_cast<std::size_t>(d)));
  for (int k = 0; k < d; ++k) cols[k][k] = 1.0;

  std::size_t next = 0;
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      const double theta = angles[next++];
      const double phi = angles[next++];
      const double c = std::cos(0.5 * theta);
      const double s = std::sin(0.5 * theta);
      const Complex e = std::polar(1.0, phi);
      // G e_j = c e_j + e s e_k,  G e_k = -s e_j + e c e_k.
      for (int row = 0; row < d; ++row) {
        const Complex uj = cols[j][row];
        const Complex uk = cols[k][row];
        cols[j][row] = c * uj + e * s * uk;
        cols[k][row] = -s * uj + e * c * uk;
      }
    }
  }
  return cols;
}

ProjectiveObservable random_observable(int d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<ComplexVector> basis;
  while (static_cast<int>(basis.size()) < d) {
    ComplexVector v(static_cast<std::size_t>(d));
    for (Complex& z : v) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z = Complex(re, im);
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (const ComplexVector& u : basis) {
        const Complex overlap = inner(u, v);
        for (int i = 0; i < d; ++i) v[i] -= overlap * u[i];
      }
    }
    double norm = 0.0;
    for (const Complex& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 1e-8) continue;
    for (Complex& z : v) z /= norm;
    basis.push_back(std::move(v));
  }
  return basis_observable(basis);
}

}  // namespace rbn
