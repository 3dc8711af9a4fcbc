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


#include "unambig/cases.h"

#include <cctype>
#include <stdexcept>

namespace unambig {

KnowledgeCase make_case(Regime regime, int dim) {
  if (dim != 2 && dim != 3)
    throw std::invalid_argument("dim must be 2 or 3, got " + std::to_string(dim));
  return KnowledgeCase{regime, dim};
}

int knowledge_level(Regime r) { return static_cast<int>(r) % 4 + 1; }

bool prior_known(Regime r) { return static_cast<int>(r) < 4; }

Construction construction_of(Regime r) {
  switch (knowledge_level(r)) {
    case 1:
      return Construction::kUnknownUnknown;
    case 4:
      return Construction::kKnownKnown;
    default:
      return Construction::kKnownUnknown;
  }
}

bool uses_beta(Regime r) { return knowledge_level(r) >= 3; }

bool uses_eta1(Regime r) { return prior_known(r); }

std::string to_string(Regime r) {
  std::string s = prior_known(r) ? "A" : "B";
  return s + std::to_string(knowledge_level(r));
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::kUnknownUnknown:
      return "unknown-unknown";
    case Construction::kKnownUnknown:
      return "known-unknown";
    case Construction::kKnownKnown:
      return "known-known";
  }
  return "?";
}

Regime parse_regime(std::string_view name) {
  std::string up;
  for (char ch : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Regime r : kAllRegimes)
    if (to_string(r) == up) return r;
  throw std::invalid_argument("unknown case '" + std::string(name) +
                              "' (expected one of a1..a4, b1..b4)");
}

}  // namespace unambig
