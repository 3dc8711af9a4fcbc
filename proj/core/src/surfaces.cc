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


#include "unambig/surfaces.h"

#include <stdexcept>

#include "unambig/strategies.h"

namespace unambig {

const std::vector<SurfaceInfo>& surface_catalog() {
  static const std::vector<SurfaceInfo> catalog = [] {
    std::vector<SurfaceInfo> c;
    auto add_case = [&](const char* name, Regime r, const char* desc) {
      SurfaceInfo s;
      s.name = name;
      s.regime = r;
      s.description = desc;
      c.push_back(s);
    };
    auto add_diff = [&](const char* name, const char* minuend,
                        const char* subtrahend, const char* desc) {
      SurfaceInfo s;
      s.name = name;
      s.difference = true;
      s.minuend = minuend;
      s.subtrahend = subtrahend;
      s.description = desc;
      c.push_back(s);
    };
    add_case("P0_opt", Regime::kA1, "A1: no state known, prior known");
    add_case("P1_wbeta", Regime::kA2, "A2: psi1 known, prior known, worst case over beta");
    add_case("P1p_opt", Regime::kA3, "A3: psi1 and beta known, prior known");
    add_case("P2_opt", Regime::kA4, "A4: both states known, prior known");
    add_case("P0_weta", Regime::kB1, "B1: no state known, prior unknown");
    add_case("P1_wbeta_eta", Regime::kB2, "B2: psi1 known, prior unknown");
    add_case("P1p_weta", Regime::kB3, "B3: psi1 and beta known, prior unknown (actual surface)");
    add_case("P2_weta", Regime::kB4, "B4: both states known, prior unknown");
    add_diff("P0_weta_to_eta", "P0_opt", "P0_weta", "gain from the prior, level 0");
    add_diff("P1_weta_to_eta", "P1_wbeta", "P1_wbeta_eta", "gain from the prior, level 1");
    add_diff("P1p_weta_to_eta", "P1p_opt", "P1p_weta", "gain from the prior, level 1+");
    add_diff("P2_weta_to_eta", "P2_opt", "P2_weta", "gain from the prior, level 2");
    add_diff("P0_to_1", "P1_wbeta", "P0_opt", "gain from knowing psi1");
    add_diff("P1_to_1p", "P1p_opt", "P1_wbeta", "gain from knowing beta");
    add_diff("P1p_to_2", "P2_opt", "P1p_opt", "gain from knowing psi2");
    return c;
  }();
  return catalog;
}

const SurfaceInfo& find_surface(std::string_view name) {
  for (const SurfaceInfo& s : surface_catalog())
    if (s.name == name) return s;
  std::string names;
  for (const SurfaceInfo& s : surface_catalog()) names += (names.empty() ? "" : ", ") + s.name;
  throw std::invalid_argument("unknown surface '" + std::string(name) +
                              "' (expected one of " + names + ")");
}

double surface_value(const SurfaceInfo& s, double beta, double eta1) {
  if (s.difference)
    return surface_value(find_surface(s.minuend), beta, eta1) -
           surface_value(find_surface(s.subtrahend), beta, eta1);
  return closed_form_probability(make_case(s.regime, 2), beta, eta1);
}

std::vector<SurfaceCell> sweep_surface(const SurfaceInfo& s,
                                       const std::vector<double>& betas,
                                       const std::vector<double>& etas) {
  std::vector<SurfaceCell> out;
  out.reserve(betas.size() * etas.size());
  for (double e : etas) {
    for (double b : betas) {
      SurfaceCell c;
      c.beta = b;
      c.eta1 = e;
      if (s.difference) {
        c.minuend = surface_value(find_surface(s.minuend), b, e);
        c.subtrahend = surface_value(find_surface(s.subtrahend), b, e);
        c.value = c.minuend - c.subtrahend;
      } else {
        c.value = surface_value(s, b, e);
      }
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace unambig
