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

#include <gtest/gtest.h>

#include "unambig/optimizer.h"

namespace unambig {
namespace {

TEST(Catalog, EightCaseAndSevenDifferenceSurfaces) {
  const auto& c = surface_catalog();
  ASSERT_EQ(c.size(), 15u);
  int diffs = 0;
  for (const SurfaceInfo& s : c) {
    EXPECT_EQ(&find_surface(s.name), &s);
    if (s.difference) {
      ++diffs;
      EXPECT_FALSE(find_surface(s.minuend).difference);
      EXPECT_FALSE(find_surface(s.subtrahend).difference);
    }
  }
  EXPECT_EQ(diffs, 7);
  EXPECT_THROW(find_surface("P3_opt"), std::invalid_argument);
}

TEST(Values, ReferencePoints) {
  EXPECT_NEAR(surface_value(find_surface("P2_opt"), 0.5, 0.5), 0.5, 1e-15);
  EXPECT_NEAR(surface_value(find_surface("P2_weta"), 0.3, 0.1), 0.7, 1e-15);
  EXPECT_NEAR(surface_value(find_surface("P0_weta_to_eta"), 0.0, 0.5), 0.0, 1e-15);
}

TEST(Sweep, RowOrderAndShape) {
  const auto g = unit_grid(0.01);
  const auto cells = sweep_surface(find_surface("P2_opt"), g, g);
  ASSERT_EQ(cells.size(), 101u * 101u);
  EXPECT_EQ(cells[1].beta, 0.01);
  EXPECT_EQ(cells[1].eta1, 0.0);
  EXPECT_EQ(cells[101].eta1, 0.01);
  EXPECT_NEAR(cells[50 * 101 + 50].value, 0.5, 1e-15);
}

TEST(Sweep, PriorUnknownLevelZeroIgnoresEta) {
  const auto g = unit_grid(0.05);
  const auto cells = sweep_surface(find_surface("P0_weta"), g, g);
  for (std::size_t i = 0; i < cells.size(); ++i)
    EXPECT_EQ(cells[i].value, cells[i % g.size()].value);
}

TEST(Sweep, DifferenceColumns) {
  const auto g = unit_grid(0.1);
  for (const auto& c : sweep_surface(find_surface("P1p_to_2"), g, g)) {
    EXPECT_EQ(c.value, c.minuend - c.subtrahend);
    EXPECT_GE(c.value, -1e-9) << c.beta << " " << c.eta1;
  }
}

}  // namespace
}  // namespace unambig
