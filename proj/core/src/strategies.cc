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


#include "unambig/strategies.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace unambig {

namespace {

constexpr double kFeasTol = 1e-12;
const double kSqrt5 = std::sqrt(5.0);

void check_unit(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

double need(const std::optional<double>& v, const char* name, Regime r) {
  if (!v)
    throw std::invalid_argument("case " + to_string(r) + " requires " + name);
  return *v;
}

bool qutrit_uu(const KnowledgeCase& kc) {
  return kc.dim == 3 && construction_of(kc.regime) == Construction::kUnknownUnknown;
}

double box_slack(const LambdaParams& lam) {
  double s = INFINITY;
  for (double v : lam.values) s = std::min({s, v, 1.0 - v});
  return s;
}

LambdaChoice make(const KnowledgeCase& kc, double l1, double l2, double l3,
                  std::string branch) {
  return {uniform_lambda(construction_of(kc.regime), kc.dim, l1, l2, l3),
          std::move(branch)};
}

// Regime-1 table, qubit form.
LambdaChoice a1_table(const KnowledgeCase& kc, double eta) {
  if (eta <= 0.2) return make(kc, 0.0, 1.0, 1.0, "eta1<=1/5");
  if (eta <= 0.8)
    return make(kc, (2.0 / 3.0) * (2.0 - std::sqrt((1.0 - eta) / eta)),
                (2.0 / 3.0) * (2.0 - std::sqrt(eta / (1.0 - eta))), 1.0,
                "1/5<eta1<=4/5");
  return make(kc, 1.0, 0.0, 1.0, "eta1>4/5");
}

}  // namespace

CaseInputs decision_inputs(Regime r, double beta, double eta1) {
  CaseInputs in;
  if (uses_beta(r)) in.beta = beta;
  if (uses_eta1(r)) in.eta1 = eta1;
  return in;
}

void check_inputs(Regime r, const CaseInputs& in) {
  const std::string c = to_string(r);
  if (uses_beta(r) && !in.beta)
    throw std::invalid_argument("case " + c + " requires beta");
  if (!uses_beta(r) && in.beta)
    throw std::invalid_argument("case " + c +
                                " must not receive beta (the decision has no "
                                "knowledge of the overlap)");
  if (uses_eta1(r) && !in.eta1)
    throw std::invalid_argument("case " + c + " requires eta1");
  if (!uses_eta1(r) && in.eta1)
    throw std::invalid_argument("case " + c +
                                " must not receive eta1 (the prior is unknown)");
  if (in.beta) check_unit("beta", *in.beta);
  if (in.eta1) check_unit("eta1", *in.eta1);
}

double feasibility_slack(const KnowledgeCase& kc, const LambdaParams& lam,
                         std::optional<double> beta) {
  const Construction c = construction_of(kc.regime);
  if (lam.size() != lambda_count(c, kc.dim))
    throw std::invalid_argument("feasibility_slack: wrong lambda component count");
  double s = box_slack(lam);
  switch (c) {
    case Construction::kUnknownUnknown:
      if (kc.dim == 2) {
        const double l1 = lam[0], l2 = lam[1];
        s = std::min({s, 2.0 - l1 - l2, 1.0 - l1 - l2 + 0.75 * l1 * l2});
      } else {
        double m1 = 0.0, m2 = 0.0;
        for (int i = 0; i < 3; ++i) {
          const double l1 = lam[i], l2 = lam[3 + i];
          s = std::min({s, 2.0 - l1 - l2, 1.0 - l1 - l2 + 0.75 * l1 * l2});
          m1 = std::max(m1, l1);
          m2 = std::max(m2, l2);
        }
        // The per-index inequalities miss the totally antisymmetric vector,
        // on which pi1 + pi2 reaches (sum of all six) / 3.
        s = std::min(s, 1.0 - m1 - m2);
      }
      break;
    case Construction::kKnownUnknown:
      if (kc.dim == 2) {
        s = std::min(s, 1.0 - lam[0] - lam[1] + 0.5 * lam[0] * lam[1]);
      } else {
        for (int i = 0; i < 2; ++i)
          s = std::min(s, 1.0 - lam[i] - lam[2 + i] + 0.5 * lam[i] * lam[2 + i]);
      }
      break;
    case Construction::kKnownKnown: {
      if (!beta)
        throw std::invalid_argument("known-known feasibility requires beta");
      const double b2 = *beta * *beta;
      const double l1 = lam[0], l2 = lam[1];
      s = std::min({s, 1.0 - l1 - l2 * b2,
                    1.0 - l1 - l2 + (1.0 - b2) * l1 * l2});
      break;
    }
  }
  return s;
}

bool feasible(const KnowledgeCase& kc, const LambdaParams& lam,
              std::optional<double> beta) {
  return feasibility_slack(kc, lam, beta) >= -kFeasTol;
}

LambdaChoice published_lambda(const KnowledgeCase& kc, const CaseInputs& in) {
  if (construction_of(kc.regime) == Construction::kUnknownUnknown) {
    check_inputs(kc.regime, in);
    if (kc.regime == Regime::kA1) return a1_table(kc, *in.eta1);
    return make(kc, 2.0 / 3.0, 2.0 / 3.0, 1.0, "equalizer");
  }
  return optimal_lambda(kc, in);
}

LambdaChoice optimal_lambda(const KnowledgeCase& kc, const CaseInputs& in) {
  check_inputs(kc.regime, in);
  const Regime r = kc.regime;
  switch (r) {
    case Regime::kA1: {
      const double eta = need(in.eta1, "eta1", r);
      if (qutrit_uu(kc)) {
        if (eta <= 0.5) return make(kc, 0.0, 1.0, 1.0, "eta1<=1/2");
        return make(kc, 1.0, 0.0, 1.0, "eta1>1/2");
      }
      return a1_table(kc, eta);
    }
    case Regime::kA2: {
      const double eta = need(in.eta1, "eta1", r);
      if (eta <= 0.5) return make(kc, 0.0, 1.0, 1.0, "eta1<=1/2");
      if (eta <= 0.8)
        return make(kc, 2.0 * (1.0 - std::sqrt((1.0 - eta) / eta)),
                    2.0 - std::sqrt(eta / (1.0 - eta)), 1.0, "1/2<eta1<=4/5");
      return make(kc, 1.0, 0.0, 1.0, "eta1>4/5");
    }
    case Regime::kA3: {
      const double b = need(in.beta, "beta", r);
      const double eta = need(in.eta1, "eta1", r);
      const double b2 = b * b;
      if (eta <= b2 / (1.0 + b2)) return make(kc, 0.0, 1.0, 1.0, "eta1<=b^2/(1+b^2)");
      if (eta <= 4.0 * b2 / (1.0 + 4.0 * b2))
        return make(kc, 2.0 * (1.0 - b * std::sqrt((1.0 - eta) / eta)),
                    2.0 - std::sqrt(eta / (1.0 - eta)) / b, 1.0,
                    "b^2/(1+b^2)<eta1<=4b^2/(1+4b^2)");
      return make(kc, 1.0, 0.0, 1.0, "eta1>4b^2/(1+4b^2)");
    }
    case Regime::kA4: {
      const double b = need(in.beta, "beta", r);
      const double eta = need(in.eta1, "eta1", r);
      const double b2 = b * b;
      if (eta <= b2 / (1.0 + b2)) return make(kc, 0.0, 1.0, 1.0, "eta1<=b^2/(1+b^2)");
      if (eta <= 1.0 / (1.0 + b2)) {
        const char* label = "b^2/(1+b^2)<eta1<=1/(1+b^2)";
        if (b == 0.0) return make(kc, 1.0, 1.0, 1.0, label);
        const double k = 1.0 / (1.0 - b2);
        return make(kc, k * (1.0 - b * std::sqrt((1.0 - eta) / eta)),
                    k * (1.0 - b * std::sqrt(eta / (1.0 - eta))), 1.0, label);
      }
      return make(kc, 1.0, 0.0, 1.0, "eta1>1/(1+b^2)");
    }
    case Regime::kB1:
      if (qutrit_uu(kc)) return make(kc, 0.5, 0.5, 1.0, "equalizer");
      return make(kc, 2.0 / 3.0, 2.0 / 3.0, 1.0, "equalizer");
    case Regime::kB2:
      return make(kc, 3.0 - kSqrt5, (3.0 - kSqrt5) / 2.0, 1.0, "equalizer");
    case Regime::kB3: {
      const double b = need(in.beta, "beta", r);
      if (b <= std::sqrt(0.5)) return make(kc, 1.0, 0.0, 1.0, "beta<=sqrt2/2");
      const double b2 = b * b;
      return make(kc, b2 + 2.0 - std::sqrt(b2 * b2 + 4.0 * b2),
                  1.5 - std::sqrt(0.25 + 1.0 / b2), 1.0, "beta>sqrt2/2");
    }
    case Regime::kB4: {
      const double b = need(in.beta, "beta", r);
      return make(kc, 1.0 / (1.0 + b), 1.0 / (1.0 + b), 1.0, "equalizer");
    }
  }
  throw std::logic_error("optimal_lambda: unreachable");
}

double closed_form_probability(const KnowledgeCase& kc, double beta,
                               double eta) {
  check_unit("beta", beta);
  check_unit("eta1", eta);
  const double b2 = beta * beta;
  const double q = 1.0 - b2;
  const double g = std::sqrt(eta * (1.0 - eta));
  switch (kc.regime) {
    case Regime::kA1:
      if (qutrit_uu(kc)) return 0.5 * std::max(eta, 1.0 - eta) * q;
      if (eta <= 0.2) return 0.5 * (1.0 - eta) * q;
      if (eta <= 0.8) return (2.0 / 3.0) * (1.0 - g) * q;
      return 0.5 * eta * q;
    case Regime::kA2:
      if (eta <= 0.5) return (1.0 - eta) * q;
      if (eta <= 0.8) return (1.0 + b2 * (1.0 - eta) - (1.0 + b2) * g) * q;
      return (1.0 - 0.5 * eta - b2 * (1.0 - eta)) * q;
    case Regime::kA3:
      if (eta <= b2 / (1.0 + b2)) return (1.0 - eta) * q;
      if (eta <= 4.0 * b2 / (1.0 + 4.0 * b2))
        return (1.0 + b2 * (1.0 - eta) - 2.0 * beta * g) * q;
      return (1.0 - 0.5 * eta - b2 * (1.0 - eta)) * q;
    case Regime::kA4:
      if (eta <= b2 / (1.0 + b2)) return (1.0 - eta) * q;
      if (eta <= 1.0 / (1.0 + b2)) return 1.0 - 2.0 * beta * g;
      return eta * q;
    case Regime::kB1:
      return (qutrit_uu(kc) ? 0.25 : 1.0 / 3.0) * q;
    case Regime::kB2:
      return ((3.0 - kSqrt5) / 2.0 + ((kSqrt5 - 1.0) / 2.0) * q * (1.0 - eta)) * q;
    case Regime::kB3:
      if (beta <= std::sqrt(0.5)) return (0.5 + (0.5 - b2) * (1.0 - eta)) * q;
      return (1.0 + 0.5 * b2 - 0.5 * std::sqrt(b2 * b2 + 4.0 * b2)) * q;
    case Regime::kB4:
      return 1.0 - beta;
  }
  throw std::logic_error("closed_form_probability: unreachable");
}

double worst_case_closed_form(const KnowledgeCase& kc, double beta) {
  check_unit("beta", beta);
  const double b2 = beta * beta;
  switch (kc.regime) {
    case Regime::kB1:
      return closed_form_probability(kc, beta, 0.5);
    case Regime::kB3:
      if (beta <= std::sqrt(0.5)) return 0.5 * (1.0 - b2);
      return (1.0 + 0.5 * b2 - 0.5 * std::sqrt(b2 * b2 + 4.0 * b2)) * (1.0 - b2);
    case Regime::kB4:
      return 1.0 - beta;
    default:
      throw std::invalid_argument("worst_case_closed_form: case " +
                                  to_string(kc.regime) +
                                  " has no eta1-worst-case surface");
  }
}

std::array<double, 2> analytic_success_pair(Construction c,
                                            const LambdaParams& lam,
                                            double beta) {
  const double q = 1.0 - beta * beta;
  const bool qubit_layout = lam.size() == lambda_count(c, 2);
  // Qutrit layouts collapse to the qubit one when uniform.
  double l1 = lam[0], l2, l3 = 1.0;
  switch (c) {
    case Construction::kUnknownUnknown:
      l2 = qubit_layout ? lam[1] : lam[3];
      return {0.5 * l1 * q, 0.5 * l2 * q};
    case Construction::kKnownUnknown:
      l2 = qubit_layout ? lam[1] : lam[2];
      l3 = qubit_layout ? lam[2] : lam[4];
      return {0.5 * l1 * q, l2 * beta * beta * q + l3 * q * q};
    case Construction::kKnownKnown:
      return {lam[0] * q, lam[1] * q};
  }
  throw std::logic_error("analytic_success_pair: unreachable");
}

StrategyResult success_probability(const KnowledgeCase& kc, double beta,
                                   double eta1) {
  check_unit("beta", beta);
  check_unit("eta1", eta1);
  const LambdaChoice choice =
      optimal_lambda(kc, decision_inputs(kc.regime, beta, eta1));
  StrategyResult r;
  r.lam = choice.lam;
  r.branch = choice.branch;
  r.p_analytic = closed_form_probability(kc, beta, eta1);

  const Construction c = construction_of(kc.regime);
  const auto [p1, p2] = analytic_success_pair(c, r.lam, beta);
  const double l1 = r.lam[0];
  switch (kc.regime) {
    case Regime::kB1:
    case Regime::kB3:
    case Regime::kB4:
      r.worst_case_value = std::min(p1, p2);
      break;
    case Regime::kA2:
    case Regime::kB2: {
      // Normalized: p1 / (1 - b^2) = l1 / 2, p2 / (1 - b^2) = l2 b^2 +
      // l3 (1 - b^2), minimized over b at an endpoint.
      const bool q3 = kc.dim == 3;
      const double lo = std::min(r.lam[q3 ? 2 : 1], r.lam[q3 ? 4 : 2]);
      r.worst_case_value = kc.regime == Regime::kA2
                               ? 0.5 * l1 * eta1 + (1.0 - eta1) * lo
                               : std::min(0.5 * l1, lo);
      break;
    }
    default:
      break;
  }

  if (!(c == Construction::kKnownKnown && beta >= 1.0 - 1e-12)) {
    const StatePair pair = canonical_pair(static_cast<std::size_t>(kc.dim), beta, eta1);
    const auto ps = success_pair(kc, pair, r.lam);
    r.p_numeric = eta1 * ps[0] + (1.0 - eta1) * ps[1];
  }
  return r;
}

}  // namespace unambig
