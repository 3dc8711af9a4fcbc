// Copyright 2026 The unambig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef UNAMBIG_SURFACES_H_
#define UNAMBIG_SURFACES_H_

#include <string>
#include <string_view>
#include <vector>

#include "unambig/cases.h"

namespace unambig {

/// A named qubit surface over (beta, eta1). Case surfaces are the optimal
/// success probability of one regime; difference surfaces subtract two of
/// them (minuend - subtrahend).
struct SurfaceInfo {
  std::string name;
  bool difference = false;
  Regime regime = Regime::kA1;  // case surfaces only
  std::string minuend;          // difference surfaces only
  std::string subtrahend;
  std::string description;
};

/// All 15 surfaces: 8 case surfaces, then 7 differences.
const std::vector<SurfaceInfo>& surface_catalog();

/// Throws std::invalid_argument listing the valid names.
const SurfaceInfo& find_surface(std::string_view name);

/// Value of a case surface, or the difference for a difference surface.
double surface_value(const SurfaceInfo& s, double beta, double eta1);

struct SurfaceCell {
  double beta = 0.0;
  double eta1 = 0.0;
  double value = 0.0;
  double minuend = 0.0;     // difference surfaces only
  double subtrahend = 0.0;
};

/// Rows ordered eta1-major, then beta.
std::vector<SurfaceCell> sweep_surface(const SurfaceInfo& s,
                                       const std::vector<double>& betas,
                                       const std::vector<double>& etas);

}  // namespace unambig

#endif  // UNAMBIG_SURFACES_H_
