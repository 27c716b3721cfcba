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

#include "rbn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rbn/error.hpp"

namespace rbn {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr int kMaxSweeps = 100;

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim()
        << ")";
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

double frobenius_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (const Complex& z : a.data()) sum += std::norm(z);
  return std::sqrt(sum);
}

// Runs cyclic sweeps in place. When `vectors` is non-null it accumulates the
// product of rotations, whose columns end up as eigenvectors.
void jacobi_diagonalize(ComplexMatrix& a, ComplexMatrix* vectors) {
  const int n = a.dim();
  const double threshold =
      1e-14 * static_cast<double>(n) * std::max(1.0, frobenius_norm(a));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) return;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g < 1e-300) continue;
        const Complex phase = apq / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();

        const double theta = (aqq - app) / (2.0 * g);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]] on the (p, q) plane.
        const Complex u_qp = -s * std::conj(phase);
        const Complex u_qq = c * std::conj(phase);

        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * c + akq * u_qp;
          a(k, q) = akp * s + akq * u_qq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + std::conj(u_qp) * aqk;
          a(q, k) = s * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (vectors != nullptr) {
          ComplexMatrix& v = *vectors;
          for (int k = 0; k < n; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * c + vkq * u_qp;
            v(k, q) = vkp * s + vkq * u_qq;
          }
        }
      }
    }
  }
}

ComplexMatrix checked_hermitian_copy(const ComplexMatrix& h) {
  const double violation = hermiticity_violation(h);
  if (!(violation <= kHermitianTol)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |h - h^dagger| = " << violation;
    throw Error(ErrorCode::NotHermitian, msg.str());
  }
  ComplexMatrix sym = h;
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = 0; j < h.dim(); ++j) {
      sym(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
    }
  }
  return sym;
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim < 1) {
    throw Error(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
  }
  data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim),
               Complex{});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim < 1 || data_.size() != static_cast<std::size_t>(dim) *
                                     static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::DimensionMismatch,
                "entry count does not match a square matrix of this dimension");
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(static_cast<int>(rows.size())) {
  if (dim_ < 1) {
    throw Error(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
  }
  data_.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw Error(ErrorCode::DimensionMismatch, "matrix rows are not square");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(static_cast<int>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    m(static_cast<int>(i), static_cast<int>(i)) = values[i];
  }
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
  const int n = static_cast<int>(ket.size());
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex sum{};
  for (int i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_dim(*this, other, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (Complex& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "matrix product");
  const int n = lhs.dim();
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const Complex lik = lhs(i, k);
      if (lik == Complex{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
  }
  return worst;
}

double hermiticity_violation(const ComplexMatrix& h) {
  double worst = 0.0;
  for (int i = 0; i < h.dim(); ++i) {
    for (int j = i; j < h.dim(); ++j) {
      const double d = std::abs(h(i, j) - std::conj(h(j, i)));
      if (std::isnan(d)) return d;
      worst = std::max(worst, d);
    }
  }
  return worst;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  ComplexMatrix out(da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (int k = 0; k < db; ++k) {
        for (int l = 0; l < db; ++l) {
          out(i * db + k, j * db + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int dA, int dB,
                            Subsystem keep) {
  if (dA < 1 || dB < 1 || m.dim() != dA * dB) {
    std::ostringstream msg;
    msg << "partial_trace: matrix of dimension " << m.dim()
        << " does not factor as " << dA << " x " << dB;
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out(dA);
    for (int i = 0; i < dA; ++i) {
      for (int j = 0; j < dA; ++j) {
        Complex sum{};
        for (int k = 0; k < dB; ++k) sum += m(i * dB + k, j * dB + k);
        out(i, j) = sum;
      }
    }
    return out;
  }
  ComplexMatrix out(dB);
  for (int k = 0; k < dB; ++k) {
    for (int l = 0; l < dB; ++l) {
      Complex sum{};
      for (int i = 0; i < dA; ++i) sum += m(i * dB + k, i * dB + l);
      out(k, l) = sum;
    }
  }
  return out;
}

Spectrum hermitian_eig(const ComplexMatrix& h) {
  ComplexMatrix a = checked_hermitian_copy(h);
  const int n = a.dim();
  ComplexMatrix v = ComplexMatrix::identity(n);
  jacobi_diagonalize(a, &v);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&a](int x, int y) {
    return a(x, x).real() > a(y, y).real();
  });

  Spectrum spectrum;
  spectrum.eigenvalues.reserve(order.size());
  spectrum.eigenvectors.reserve(order.size());
  for (int col : order) {
    spectrum.eigenvalues.push_back(a(col, col).real());
    ComplexVector vec(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) vec[k] = v(k, col);
    for (const Complex& z : vec) {
      const double mag = std::abs(z);
      if (mag > 1e-10) {
        const Complex fix = std::conj(z) / mag;
        for (Complex& w : vec) w *= fix;
        break;
      }
    }
    spectrum.eigenvectors.push_back(std::move(vec));
  }
  return spectrum;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  ComplexMatrix a = checked_hermitian_copy(h);
  jacobi_diagonalize(a, nullptr);
  std::vector<double> values(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) values[i] = a(i, i).real();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_distance");
  double sum = 0.0;
  for (double lambda : hermitian_eigenvalues(a - b)) sum += std::abs(lambda);
  return 0.5 * sum;
}

Complex inner(std::span<const Complex> bra, std::span<const Complex> ket) {
  if (bra.size() != ket.size()) {
    throw Error(ErrorCode::DimensionMismatch, "inner: length mismatch");
  }
  Complex sum{};
  for (std::size_t i = 0; i < bra.size(); ++i) sum += std::conj(bra[i]) * ket[i];
  return sum;
}

Complex expectation(const ComplexMatrix& m, std::span<const Complex> v) {
  if (static_cast<int>(v.size()) != m.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "expectation: length mismatch");
  }
  Complex sum{};
  for (int i = 0; i < m.dim(); ++i) {
    Complex row{};
    for (int j = 0; j < m.dim(); ++j) row += m(i, j) * v[j];
    sum += std::conj(v[i]) * row;
  }
  return sum;
}

}  // namespace rbn
