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

#ifndef RBN_NELDER_MEAD_HPP
#define RBN_NELDER_MEAD_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

namespace rbn::detail {

struct SimplexResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  long evaluations = 0;
  bool converged = false;
};

struct SimplexOptions {
  int max_iterations = 500;
  double f_tol = 1e-8;  // spread of objective values over the simplex
  double x_tol = 1e-6;  // max-norm distance of every vertex from the best
};

// Minimizes f from x0 with an axis-aligned initial simplex of the given
// per-coordinate steps. Standard coefficients: reflection 1, expansion 2,
// contraction 1/2, shrink 1/2.
inline SimplexResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, const std::vector<double>& steps,
    const SimplexOptions& options) {
  const std::size_t n = x0.size();
  std::vector<std::vector<double>> vertices(n + 1, x0);
  std::vector<double> values(n + 1);
  long evaluations = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evaluations;
    return f(x);
  };
  for (std::size_t i = 0; i < n; ++i) vertices[i + 1][i] += steps[i];
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(vertices[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n);
  std::vector<double> trial(n);
  auto point = [&](double t, const std::vector<double>& towards) {
    std::vector<double> p(n);
    for (std::size_t k = 0; k < n; ++k) {
      p[k] = centroid[k] + t * (towards[k] - centroid[k]);
    }
    return p;
  };

  SimplexResult result;
  int iteration = 0;
  for (;; ++iteration) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return values[a] < values[b];
    });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[n - 1];

    double spread = values[worst] - values[best];
    double diameter = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        diameter = std::max(diameter, std::abs(vertices[i][k] - vertices[best][k]));
      }
    }
    if (spread <= options.f_tol && diameter <= options.x_tol) {
      result.converged = true;
      break;
    }
    if (iteration >= options.max_iterations) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += vertices[i][k];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    const std::vector<double> reflected = point(-1.0, vertices[worst]);
    const double f_reflected = eval(reflected);
    if (f_reflected < values[best]) {
      const std::vector<double> expanded = point(-2.0, vertices[worst]);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        vertices[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        vertices[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      vertices[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const std::vector<double> contracted =
        outside ? point(-0.5, vertices[worst]) : point(0.5, vertices[worst]);
    const double f_contracted = eval(contracted);
    if (f_contracted < std::min(f_reflected, values[worst])) {
      vertices[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (std::size_t k = 0; k < n; ++k) {
        vertices[i][k] = vertices[best][k] + 0.5 * (vertices[i][k] - vertices[best][k]);
      }
      values[i] = eval(vertices[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const std::size_t best = static_cast<std::size_t>(best_it - values.begin());
  result.x = vertices[best];
  result.f = values[best];
  result.iterations = iteration;
  result.evaluations = evaluations;
  return result;
}

}  // namespace rbn::detail

#endif  // RBN_NELDER_MEAD_HPP
