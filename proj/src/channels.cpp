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

#include "rbn/channels.hpp"

#include <cmath>
#include <sstream>

#include "rbn/error.hpp"

namespace rbn {

namespace {

int side_dim(const DensityMatrix& rho, Side side) {
  switch (side) {
    case Side::A:
      return rho.dim_a();
    case Side::B:
      return rho.dim_b();
    case Side::Global:
      return rho.dim();
  }
  return 0;
}

ComplexMatrix lift(const ComplexMatrix& p, const DensityMatrix& rho, Side side) {
  switch (side) {
    case Side::A:
      return tensor_product(p, ComplexMatrix::identity(rho.dim_b()));
    case Side::B:
      return tensor_product(ComplexMatrix::identity(rho.dim_a()), p);
    case Side::Global:
      return p;
  }
  return p;
}

void require_local(Side side) {
  if (side == Side::Global) {
    throw Error(ErrorCode::InvalidArgument,
                "monitoring acts on one side (A or B)");
  }
}

}  // namespace

MonitoringStrength::MonitoringStrength(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0)) {
    std::ostringstream msg;
    msg << "monitoring strength must lie in [0, 1], got " << value;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

DensityMatrix dephase(const DensityMatrix& rho, const ProjectiveObservable& obs,
                      Side side) {
  if (obs.dim() != side_dim(rho, side)) {
    std::ostringstream msg;
    msg << "dephase: observable of dimension " << obs.dim()
        << " does not act on the selected side of a " << rho.dim_a() << " x "
        << rho.dim_b() << " state";
    throw Error(ErrorCode::DimensionMismatch, msg.str());
  }
  ComplexMatrix out(rho.dim());
  for (const ComplexMatrix& p : obs.projectors()) {
    const ComplexMatrix k = lift(p, rho, side);
    out += k * rho.matrix() * k;
  }
  return DensityMatrix::unchecked(std::move(out), rho.dim_a(), rho.dim_b());
}

DensityMatrix dephase_both(const DensityMatrix& rho,
                           const ProjectiveObservable& obs_a,
                           const ProjectiveObservable& obs_b) {
  return dephase(dephase(rho, obs_b, Side::B), obs_a, Side::A);
}

DensityMatrix monitor(const DensityMatrix& rho, const ProjectiveObservable& obs,
                      MonitoringStrength eps, Side side) {
  require_local(side);
  const DensityMatrix dephased = dephase(rho, obs, side);
  ComplexMatrix out = rho.matrix() * Complex(1.0 - eps.value());
  out += dephased.matrix() * Complex(eps.value());
  return DensityMatrix::unchecked(std::move(out), rho.dim_a(), rho.dim_b());
}

DensityMatrix monitor_iterated(const DensityMatrix& rho,
                               const ProjectiveObservable& obs,
                               MonitoringStrength eps, Side side, int n) {
  require_local(side);
  if (n < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "monitor_iterated: n must be nonnegative");
  }
  const double keep = std::pow(1.0 - eps.value(), n);
  const DensityMatrix dephased = dephase(rho, obs, side);
  ComplexMatrix out = rho.matrix() * Complex(keep);
  out += dephased.matrix() * Complex(1.0 - keep);
  return DensityMatrix::unchecked(std::move(out), rho.dim_a(), rho.dim_b());
}

}  // namespace rbn
