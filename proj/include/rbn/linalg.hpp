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

#ifndef RBN_LINALG_HPP
#define RBN_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rbn {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() : ComplexMatrix(1) {}
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::vector<Complex> entries);
  /// Row list; throws unless the rows form a square matrix.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(int dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix outer(std::span<const Complex> ket);

  int dim() const noexcept { return dim_; }

  Complex& operator()(int row, int col) { return data_[index(row, col)]; }
  const Complex& operator()(int row, int col) const {
    return data_[index(row, col)];
  }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs += rhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    return lhs -= rhs;
  }
  friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) {
    return lhs *= scale;
  }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) {
    return rhs *= scale;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

 private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(col);
  }

  int dim_;
  std::vector<Complex> data_;
};

/// Eigenvalues in descending order with matching orthonormal eigenvectors.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<ComplexVector> eigenvectors;
};

enum class Subsystem { A, B };

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |h - h^dagger| entrywise.
double hermiticity_violation(const ComplexMatrix& h);

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced matrix on the kept factor of a dA x dB bipartition.
ComplexMatrix partial_trace(const ComplexMatrix& m, int dA, int dB,
                            Subsystem keep);

/// Cyclic complex Jacobi rotations. Rejects input whose hermiticity violation
/// exceeds 1e-10. Each eigenvector has its first non-negligible component
/// made real positive so results are reproducible.
Spectrum hermitian_eig(const ComplexMatrix& h);

/// Same iteration as hermitian_eig without accumulating eigenvectors.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Half the trace norm of a - b.
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket);

/// <v| m |v>
Complex expectation(const ComplexMatrix& m, std::span<const Complex> v);

}  // namespace rbn

#endif  // RBN_LINALG_HPP
