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

#include "rbn/states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "json.hpp"
#include "rbn/error.hpp"

namespace rbn {

namespace {

constexpr double kStateTol = 1e-10;

void check_bipartition(const ComplexMatrix& m, int dA, int dB) {
  if (dA < 1 || dB < 1 || m.dim() != dA * dB) {
    std::ostringstream msg;
    msg << "state of dimension " << m.dim() << " does not factor as " << dA
        << " x " << dB;
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
}

void check_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << name << " must lie in [0, 1], got " << value;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

// Gram-Schmidt completion of a partial orthonormal list to a basis of C^dim.
void complete_basis(std::vector<ComplexVector>& basis, int dim) {
  for (int e = 0; e < dim && static_cast<int>(basis.size()) < dim; ++e) {
    ComplexVector v(static_cast<std::size_t>(dim));
    v[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const ComplexVector& u : basis) {
        const Complex overlap = inner(u, v);
        for (int k = 0; k < dim; ++k) v[k] -= overlap * u[k];
      }
    }
    double norm = 0.0;
    for (const Complex& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    if (norm < 1e-6) continue;
    for (Complex& z : v) z /= norm;
    basis.push_back(std::move(v));
  }
}

}  // namespace

double density_violation(const ComplexMatrix& m) {
  const double herm = hermiticity_violation(m);
  if (!(herm <= kStateTol)) return herm;
  double worst = std::max(herm, std::abs(m.trace() - 1.0));
  const std::vector<double> values = hermitian_eigenvalues(m);
  worst = std::max(worst, -values.back());
  return worst;
}

void validate_density(const ComplexMatrix& m, const char* what) {
  const double herm = hermiticity_violation(m);
  if (!(herm <= kStateTol)) {
    std::ostringstream msg;
    msg << what << " is not Hermitian (violation " << herm << ")";
    throw Error(ErrorCode::NotHermitian, msg.str());
  }
  const double trace_err = std::abs(m.trace() - 1.0);
  if (!(trace_err <= kStateTol)) {
    std::ostringstream msg;
    msg << what << " does not have unit trace (|Tr - 1| = " << trace_err
        << ")";
    throw Error(ErrorCode::InvalidState, msg.str());
  }
  const double lowest = hermitian_eigenvalues(m).back();
  if (lowest < -kStateTol) {
    std::ostringstream msg;
    msg << what << " has a negative eigenvalue " << lowest;
    throw Error(ErrorCode::InvalidState, msg.str());
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, int dA, int dB)
    : matrix_(std::move(matrix)), dA_(dA), dB_(dB) {
  check_bipartition(matrix_, dA_, dB_);
  validate_density(matrix_, "density matrix");
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, int dA, int dB, NoCheck)
    : matrix_(std::move(matrix)), dA_(dA), dB_(dB) {
  check_bipartition(matrix_, dA_, dB_);
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix matrix, int dA, int dB) {
  return DensityMatrix(std::move(matrix), dA, dB, NoCheck{});
}

ComplexMatrix DensityMatrix::reduced(Subsystem keep) const {
  return partial_trace(matrix_, dA_, dB_, keep);
}

PureState::PureState(ComplexVector amplitudes, int dA, int dB)
    : amplitudes_(std::move(amplitudes)), dA_(dA), dB_(dB) {
  if (dA < 1 || dB < 1 ||
      amplitudes_.size() != static_cast<std::size_t>(dA * dB)) {
    throw Error(ErrorCode::DimensionMismatch,
                "pure state length does not match dA * dB");
  }
  double norm = 0.0;
  for (const Complex& z : amplitudes_) norm += std::norm(z);
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    std::ostringstream msg;
    msg << "pure state is not normalized (squared norm " << norm << ")";
    throw Error(ErrorCode::InvalidState, msg.str());
  }
}

DensityMatrix PureState::density() const {
  return DensityMatrix::unchecked(ComplexMatrix::outer(amplitudes_), dA_, dB_);
}

PureState psi_alpha(double alpha) {
  check_unit_interval(alpha, "alpha");
  ComplexVector amps(4);
  amps[1] = std::sqrt(alpha);
  amps[2] = -std::sqrt(1.0 - alpha);
  return PureState(std::move(amps), 2, 2);
}

DensityMatrix two_parameter_state(double alpha, double beta) {
  check_unit_interval(alpha, "alpha");
  check_unit_interval(beta, "beta");
  ComplexMatrix m = ComplexMatrix::identity(4) * Complex((1.0 - beta) / 4.0);
  m += ComplexMatrix::outer(psi_alpha(alpha).amplitudes()) * Complex(beta);
  return DensityMatrix(std::move(m), 2, 2);
}

DensityMatrix classical_classical_state(
    const std::vector<double>& probs, const std::vector<ComplexMatrix>& proj_a,
    const std::vector<ComplexMatrix>& proj_b) {
  if (probs.empty() || probs.size() != proj_a.size() ||
      probs.size() != proj_b.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "probabilities and projector families must have equal, "
                "nonzero length");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "probabilities must be >= 0");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kStateTol) {
    std::ostringstream msg;
    msg << "probabilities sum to " << total << ", not 1";
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }

  auto check_family = [](const std::vector<ComplexMatrix>& family,
                         const char* side) {
    const int d = family.front().dim();
    for (std::size_t i = 0; i < family.size(); ++i) {
      const ComplexMatrix& p = family[i];
      if (p.dim() != d) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string("projectors on side ") + side +
                        " have different dimensions");
      }
      const bool idempotent = max_abs_diff(p * p, p) <= kStateTol &&
                              hermiticity_violation(p) <= kStateTol;
      if (!idempotent || std::abs(p.trace() - 1.0) > kStateTol) {
        throw Error(ErrorCode::InvalidArgument,
                    std::string("side ") + side +
                        " contains a matrix that is not a rank-1 projector");
      }
      for (std::size_t j = 0; j < i; ++j) {
        const ComplexMatrix prod = p * family[j];
        if (max_abs_diff(prod, ComplexMatrix(d)) > kStateTol) {
          throw Error(ErrorCode::InvalidArgument,
                      std::string("projectors on side ") + side +
                          " are not mutually orthogonal");
        }
      }
    }
    return d;
  };
  const int dA = check_family(proj_a, "A");
  const int dB = check_family(proj_b, "B");
  if (static_cast<int>(probs.size()) > std::min(dA, dB)) {
    throw Error(ErrorCode::InvalidArgument,
                "more projectors than min(dA, dB)");
  }

  ComplexMatrix m(dA * dB);
  for (std::size_t l = 0; l < probs.size(); ++l) {
    m += tensor_product(proj_a[l], proj_b[l]) * Complex(probs[l]);
  }
  return DensityMatrix(std::move(m), dA, dB);
}

DensityMatrix product_state(const ComplexMatrix& rho_a,
                            const ComplexMatrix& rho_b) {
  validate_density(rho_a, "marginal on A");
  validate_density(rho_b, "marginal on B");
  return DensityMatrix(tensor_product(rho_a, rho_b), rho_a.dim(),
                       rho_b.dim());
}

DensityMatrix random_density(int dA, int dB, int rank, std::uint64_t seed) {
  const int n = dA * dB;
  if (dA < 1 || dB < 1 || rank < 1 || rank > n) {
    throw Error(ErrorCode::InvalidArgument,
                "random_density requires 1 <= rank <= dA * dB");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> g(static_cast<std::size_t>(n * rank));
  for (Complex& z : g) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
  }
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Complex sum{};
      for (int k = 0; k < rank; ++k) {
        sum += g[i * rank + k] * std::conj(g[j * rank + k]);
      }
      m(i, j) = sum;
    }
  }
  const double tr = m.trace().real();
  m *= Complex(1.0 / tr);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m(j, i) = std::conj(m(i, j));
    m(i, i) = m(i, i).real();
  }
  return DensityMatrix(std::move(m), dA, dB);
}

PureState random_pure_state(int dA, int dB, std::uint64_t seed) {
  if (dA < 1 || dB < 1) {
    throw Error(ErrorCode::InvalidArgument, "dimensions must be >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector amps(static_cast<std::size_t>(dA * dB));
  double norm = 0.0;
  for (Complex& z : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
    norm += std::norm(z);
  }
  norm = std::sqrt(norm);
  for (Complex& z : amps) z /= norm;
  return PureState(std::move(amps), dA, dB);
}

SchmidtForm schmidt_decompose(const PureState& psi) {
  const int dA = psi.dim_a();
  const int dB = psi.dim_b();
  const ComplexVector& amps = psi.amplitudes();
  const Spectrum reduced = hermitian_eig(
      partial_trace(ComplexMatrix::outer(amps), dA, dB, Subsystem::A));

  SchmidtForm form;
  form.basis_a = reduced.eigenvectors;
  const int rank = std::min(dA, dB);
  for (int i = 0; i < rank; ++i) {
    form.coefficients.push_back(std::max(0.0, reduced.eigenvalues[i]));
  }

  for (int i = 0; i < rank; ++i) {
    const double lambda = form.coefficients[i];
    if (lambda <= 1e-12) break;
    ComplexVector b(static_cast<std::size_t>(dB));
    const ComplexVector& a = form.basis_a[i];
    for (int k = 0; k < dB; ++k) {
      Complex sum{};
      for (int j = 0; j < dA; ++j) sum += std::conj(a[j]) * amps[j * dB + k];
      b[k] = sum / std::sqrt(lambda);
    }
    form.basis_b.push_back(std::move(b));
  }
  complete_basis(form.basis_b, dB);
  return form;
}

DensityMatrix swap_parties(const DensityMatrix& rho) {
  const int dA = rho.dim_a();
  const int dB = rho.dim_b();
  ComplexMatrix out(rho.dim());
  for (int i = 0; i < dA; ++i) {
    for (int k = 0; k < dB; ++k) {
      for (int j = 0; j < dA; ++j) {
        for (int l = 0; l < dB; ++l) {
          out(k * dA + i, l * dA + j) = rho.matrix()(i * dB + k, j * dB + l);
        }
      }
    }
  }
  return DensityMatrix::unchecked(std::move(out), dB, dA);
}

std::string to_json(const DensityMatrix& rho) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (int i = 0; i < rho.dim(); ++i) {
    nlohmann::json re_row = nlohmann::json::array();
    nlohmann::json im_row = nlohmann::json::array();
    for (int j = 0; j < rho.dim(); ++j) {
      re_row.push_back(rho.matrix()(i, j).real());
      im_row.push_back(rho.matrix()(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  nlohmann::json doc;
  doc["dA"] = rho.dim_a();
  doc["dB"] = rho.dim_b();
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  return doc.dump();
}

DensityMatrix density_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = std::min(e.byte, text.size() + 1);
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i + 1 < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    // Keep only the reason; the position is reported above.
    std::string reason = e.what();
    const auto column_at = reason.find("column");
    const auto colon = reason.find(": ", column_at == std::string::npos ? 0 : column_at);
    if (colon != std::string::npos) reason = reason.substr(colon + 2);
    std::ostringstream msg;
    msg << "malformed state JSON at line " << line << ", column " << column
        << ": " << reason;
    throw Error(ErrorCode::Parse, msg.str());
  }

  try {
    const int dA = doc.at("dA").get<int>();
    const int dB = doc.at("dB").get<int>();
    const auto& re = doc.at("re");
    const auto& im = doc.at("im");
    const int n = dA * dB;
    if (dA < 1 || dB < 1 || !re.is_array() || !im.is_array() ||
        static_cast<int>(re.size()) != n || static_cast<int>(im.size()) != n) {
      throw Error(ErrorCode::Parse,
                  "state JSON: re/im must be dA*dB rows of dA*dB numbers");
    }
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(re[i].size()) != n ||
          static_cast<int>(im[i].size()) != n) {
        throw Error(ErrorCode::Parse, "state JSON: ragged re/im rows");
      }
      for (int j = 0; j < n; ++j) {
        m(i, j) = Complex(re[i][j].get<double>(), im[i][j].get<double>());
      }
    }
    return DensityMatrix(std::move(m), dA, dB);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("state JSON: ") + e.what());
  }
}

}  // namespace rbn
