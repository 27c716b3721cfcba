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

// Exercises the shared library through its C interface only.

#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "rbn/rbn.h"

TEST_CASE("version and status names") {
  CHECK(std::string(rbn_version()).size() > 0);
  CHECK(std::string(rbn_status_name(RBN_ERR_PARSE)) == "parse error");
}

TEST_CASE("state lifecycle and JSON round trip") {
  rbn_state* s = nullptr;
  REQUIRE(rbn_state_two_parameter(0.5, 1.0, &s) == RBN_OK);
  int dA = 0;
  int dB = 0;
  CHECK(rbn_state_dims(s, &dA, &dB) == RBN_OK);
  CHECK(dA == 2);
  CHECK(dB == 2);

  char* json = nullptr;
  REQUIRE(rbn_state_to_json(s, &json) == RBN_OK);
  rbn_state* back = nullptr;
  CHECK(rbn_state_from_json(json, &back) == RBN_OK);
  rbn_string_free(json);

  rbn_observable* z = nullptr;
  REQUIRE(rbn_observable_qubit(0.0, 0.0, &z) == RBN_OK);
  rbn_context_report r;
  CHECK(rbn_evaluate_context(back, z, z, 1.0, 1.0, &r) == RBN_OK);
  CHECK(r.eta == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(r.delta == doctest::Approx(std::log(2.0)).epsilon(1e-12));

  rbn_observable_free(z);
  rbn_state_free(back);
  rbn_state_free(s);
}

TEST_CASE("errors map to status codes") {
  rbn_state* s = nullptr;
  CHECK(rbn_state_two_parameter(1.5, 0.5, &s) == RBN_ERR_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(std::strlen(rbn_last_error()) > 0);

  CHECK(rbn_state_from_json("{\"dA\": 2,", &s) == RBN_ERR_PARSE);
  CHECK(std::string(rbn_last_error()).find("line") != std::string::npos);
  CHECK(rbn_state_load("/nonexistent/state.json", &s) == RBN_ERR_IO);

  const char* skew =
      R"({"dA":1,"dB":2,"re":[[0.5,0.5],[0,0.5]],"im":[[0,0],[0,0]]})";
  CHECK(rbn_state_from_json(skew, &s) == RBN_ERR_NOT_HERMITIAN);

  rbn_state* w = nullptr;
  REQUIRE(rbn_state_two_parameter(0.5, 0.5, &w) == RBN_OK);
  rbn_observable* z = nullptr;
  REQUIRE(rbn_observable_qubit(0.0, 0.0, &z) == RBN_OK);
  rbn_context_report r;
  CHECK(rbn_evaluate_context(w, z, z, 1.5, 1.0, &r) == RBN_ERR_INVALID_ARGUMENT);
  rbn_observable* q3 = nullptr;
  REQUIRE(rbn_observable_computational(3, &q3) == RBN_OK);
  CHECK(rbn_evaluate_context(w, q3, z, 1.0, 1.0, &r) == RBN_ERR_DIMENSION_MISMATCH);
  CHECK(rbn_evaluate_context(nullptr, z, z, 1.0, 1.0, &r) == RBN_ERR_INVALID_ARGUMENT);
  rbn_observable_free(q3);
  rbn_observable_free(z);
  rbn_state_free(w);

  rbn_observable* degenerate_partner = nullptr;
  rbn_observable* one = nullptr;
  REQUIRE(rbn_observable_computational(1, &one) == RBN_OK);
  CHECK(rbn_observable_mub_partner(one, &degenerate_partner) == RBN_OK);
  rbn_observable_free(degenerate_partner);
  rbn_observable_free(one);
}

TEST_CASE("optimizer through the C interface") {
  rbn_optimizer_config config;
  rbn_optimizer_config_default(&config);
  CHECK(config.grid_theta == 24);
  CHECK(rbn_optimizer_config_set(&config, "grid_phi", "8") == RBN_OK);
  CHECK(config.grid_phi == 8);
  CHECK(rbn_optimizer_config_set(&config, "nope", "1") == RBN_ERR_INVALID_ARGUMENT);
  char* text = nullptr;
  REQUIRE(rbn_optimizer_config_describe(&config, &text) == RBN_OK);
  CHECK(std::string(text).find("grid_phi=8") != std::string::npos);
  rbn_string_free(text);

  rbn_state* s = nullptr;
  REQUIRE(rbn_state_two_parameter(0.5, 1.0, &s) == RBN_OK);
  rbn_suppression_report r;
  REQUIRE(rbn_local_suppression(s, 0.6, 0, nullptr, &r) == RBN_OK);
  CHECK(r.value == doctest::Approx(0.6108643020548935).epsilon(1e-8));
  CHECK(r.params_a == 2);
  CHECK(r.lb1 <= r.value + 1e-8);
  CHECK(r.value <= r.ub1 + 1e-8);
  double closed = 0.0;
  CHECK(rbn_closed_form_werner(1.0, 0.6, &closed) == RBN_OK);
  CHECK(std::abs(closed - r.value) < 1e-8);

  REQUIRE(rbn_max_context_rbn(s, &config, &r) == RBN_OK);
  CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  REQUIRE(rbn_bilocal_suppression(s, 1.0, 1.0, nullptr, &r) == RBN_OK);
  CHECK(r.value == doctest::Approx(std::log(2.0)).epsilon(1e-9));
  rbn_state_free(s);
}

TEST_CASE("sweeps, hierarchy and verification through the C interface") {
  const double eps[] = {0.6};
  const double grid[] = {0.0, 1.0};
  rbn_werner_row werner[2];
  REQUIRE(rbn_sweep_werner(eps, 1, grid, 2, nullptr, 0, 1, werner) == RBN_OK);
  CHECK(rbn_werner_row_ok(&werner[1], 1e-7));
  CHECK(werner[1].delta_b == doctest::Approx(0.6108643020548935).epsilon(1e-8));
  rbn_pure_row pure[2];
  REQUIRE(rbn_sweep_pure(eps, 1, grid, 2, nullptr, 0, 0, pure) == RBN_OK);
  CHECK(std::isnan(pure[0].delta_a));
  rbn_bilocal_row bilocal[2];
  REQUIRE(rbn_sweep_bilocal(eps, 1, grid, 2, nullptr, 0, bilocal) == RBN_OK);
  CHECK(rbn_bilocal_row_ok(&bilocal[1], 1e-7));
  const double bad[] = {1.5};
  CHECK(rbn_sweep_werner(bad, 1, grid, 2, nullptr, 0, 0, werner) ==
        RBN_ERR_INVALID_ARGUMENT);

  const double probs[] = {0.75, 0.25};
  rbn_hierarchy_report h;
  REQUIRE(rbn_hierarchy(probs, 2, nullptr, &h) == RBN_OK);
  CHECK(h.passed == 1);
  CHECK(std::string(rbn_hierarchy_chain()).find("s_RBN") != std::string::npos);

  rbn_property_result results[64];
  size_t count = 0;
  REQUIRE(rbn_verify(1, 5, results, 64, &count) == RBN_OK);
  CHECK(count > 10);
  for (size_t k = 0; k < count && k < 64; ++k) CHECK(results[k].passed == 1);
  CHECK(rbn_verify(1, 0, results, 64, &count) == RBN_ERR_INVALID_ARGUMENT);
}
