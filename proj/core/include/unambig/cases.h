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


#ifndef UNAMBIG_CASES_H_
#define UNAMBIG_CASES_H_

#include <array>
#include <string>
#include <string_view>

namespace unambig {

/// Knowledge regimes. A-cases know the prior eta1, B-cases do not.
/// 1: neither state known. 2: psi1 known. 3: psi1 and beta known.
/// 4: both states known.
enum class Regime { kA1, kA2, kA3, kA4, kB1, kB2, kB3, kB4 };

inline constexpr std::array<Regime, 8> kAllRegimes = {
    Regime::kA1, Regime::kA2, Regime::kA3, Regime::kA4,
    Regime::kB1, Regime::kB2, Regime::kB3, Regime::kB4};

/// Measurement family used by a regime.
enum class Construction {
  kUnknownUnknown,  // program registers A, C and data register B
  kKnownUnknown,    // program register A and data register B
  kKnownKnown,      // data system only
};

struct KnowledgeCase {
  Regime regime = Regime::kA1;
  int dim = 2;
};

/// Validates dim in {2, 3}.
KnowledgeCase make_case(Regime regime, int dim);

Construction construction_of(Regime r);
/// Which decision inputs a regime receives.
bool uses_beta(Regime r);
bool uses_eta1(Regime r);
/// 1 for A1/B1 through 4 for A4/B4.
int knowledge_level(Regime r);
bool prior_known(Regime r);

/// "A1" ... "B4".
std::string to_string(Regime r);
std::string to_string(Construction c);
/// Case-insensitive. Throws std::invalid_argument on unknown names.
Regime parse_regime(std::string_view name);

}  // namespace unambig

#endif  // UNAMBIG_CASES_H_
