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
#include "rbn/repro.hpp"
#include "rbn/verify.hpp"

using namespace rbn;

namespace {

const double kLn2 = std::numbers::ln2;
const double kTol = 1e-8 + OptimizerConfig{}.objective_tol;

}  // namespace

TEST_CASE("Werner sweep rows") {
  const std::vector<double> eps{0.1, 0.6};
  const std::vector<double> beta{0.0, 0.5, 1.0};
  const auto rows = sweep_werner(eps, beta, {}, 0, true);
  REQUIRE(rows.size() == 6);
  // eps-major order
  CHECK(rows[0].eps == 0.1);
  CHECK(rows[2].beta == 1.0);
  CHECK(rows[3].eps == 0.6);
  for (const WernerRow& r : rows) {
    CHECK(respects_bounds(r, kTol));
    CHECK(sides_agree(r, 1e-7));
    CHECK(std::abs(r.delta_b - r.closed_form) < 1e-6);
    if (r.beta == 0.0) {
      CHECK(std::abs(r.delta_b) < 1e-12);
      CHECK(std::abs(r.n) < 1e-12);
    }
  }
  CHECK(rows[5].delta_b == doctest::Approx(0.6108643020548935).epsilon(1e-8));
  CHECK(rows[5].n == doctest::Approx(kLn2).epsilon(1e-9));
}

TEST_CASE("pure sweep rows") {
  const auto rows = sweep_pure({0.6, 1.0}, {0.0, 0.5, 0.8}, {});
  REQUIRE(rows.size() == 6);
  for (const PureRow& r : rows) {
    CHECK(respects_bounds(r, kTol));
    CHECK(std::isnan(r.delta_a));
    CHECK(std::abs(r.delta_b - r.closed_form) < 1e-6);
  }
  CHECK(rows[4].delta_b == doctest::Approx(kLn2).epsilon(1e-8));
  CHECK(rows[4].entanglement == doctest::Approx(kLn2).epsilon(1e-14));
}

TEST_CASE("bilocal sweep rows") {
  const auto rows = sweep_bilocal({0.1, 0.6, 1.0}, {0.0, 1.0}, {});
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].beta == 0.0);  // beta-major order
  CHECK(rows[1].eps == 0.6);
  for (const BilocalRow& r : rows) {
    CHECK(respects_ordering(r, kTol));
    if (r.beta == 0.0) CHECK(std::abs(r.delta_bilocal) < 1e-12);
    if (r.eps == 1.0) CHECK(std::abs(r.delta_bilocal - r.n) < 1e-8);
  }
  CHECK(rows[4].delta_bilocal <= 0.6108643020548935 + 1e-8);
}

TEST_CASE("sweeps reject bad grids") {
  CHECK_THROWS_AS(sweep_werner({}, {0.5}, {}), Error);
  CHECK_THROWS_AS(sweep_werner({0.5}, {1.5}, {}), Error);
  CHECK_THROWS_AS(sweep_pure({-0.1}, {0.5}, {}), Error);
  CHECK_THROWS_AS(sweep_bilocal({0.5}, {}, {}), Error);
}

TEST_CASE("sweeps are deterministic across thread counts") {
  const auto one = sweep_werner({0.3}, {0.2, 0.7}, {}, 1);
  const auto many = sweep_werner({0.3}, {0.2, 0.7}, {}, 3);
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].delta_b == many[k].delta_b);
    CHECK(one[k].lb1 == many[k].lb1);
  }
}

TEST_CASE("hierarchy reports") {
  const HierarchyReport half = hierarchy_report({0.5, 0.5}, {});
  CHECK(half.eta_mub == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(half.passed);
  CHECK_FALSE(half.product);

  const HierarchyReport skew = hierarchy_report({0.75, 0.25}, {});
  CHECK(skew.eta_mub ==
        doctest::Approx(-0.75 * std::log(0.75) - 0.25 * std::log(0.25)).epsilon(1e-12));
  CHECK(skew.passed);

  const HierarchyReport trivial = hierarchy_report({1.0, 0.0}, {});
  CHECK(std::abs(trivial.eta_mub) < 1e-10);
  CHECK(trivial.product);
  CHECK(trivial.passed);

  CHECK_THROWS_AS(hierarchy_report({0.5, 0.6}, {}), Error);
  CHECK_THROWS_AS(hierarchy_report({}, {}), Error);
  CHECK(hierarchy_chain() == "s_BN < s_S < s_E < s_D < s_SD < s_RBN");
}

TEST_CASE("property suite passes and is deterministic") {
  const auto first = run_property_suite(20190917, 100);
  const auto second = run_property_suite(20190917, 100);
  REQUIRE(first.size() == second.size());
  for (std::size_t k = 0; k < first.size(); ++k) {
    INFO(first[k].name);
    CHECK(first[k].passed);
    CHECK(first[k].samples == 100);
    CHECK(first[k].max_violation == second[k].max_violation);
  }
  CHECK_THROWS_AS(run_property_suite(1, 0), Error);
}
