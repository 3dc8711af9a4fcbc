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


#include "unambig/optimizer.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "unambig/parallel.h"
#include "unambig/states.h"

namespace unambig {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kBetaCap = 1.0 - 1e-6;

double round12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

struct Incumbent {
  double value = kNegInf;
  std::vector<double> x;
  std::size_t warm = 0;
  std::size_t evaluations = 0;
};

// Exhaustive lexicographic scan of the product grid. Work is split on the
// first axis and merged in axis order, so the result matches a serial scan.
Incumbent scan(const MaximinProblem& p, const std::vector<std::vector<double>>& axes,
               std::size_t warm) {
  const std::size_t d = axes.size();
  const std::size_t m = p.adversary.size();
  std::vector<Incumbent> chunks(axes[0].size());
  parallel_for(axes[0].size(), [&](std::size_t i0) {
    Incumbent& best = chunks[i0];
    best.warm = warm;
    std::vector<std::size_t> idx(d, 0);
    idx[0] = i0;
    std::vector<double> x(d);
    for (;;) {
      for (std::size_t j = 0; j < d; ++j) x[j] = axes[j][idx[j]];
      if (p.feasible(x)) {
        double lo = std::numeric_limits<double>::infinity();
        std::size_t arg = best.warm;
        bool pruned = false;
        for (std::size_t t = 0; t < m; ++t) {
          const std::size_t a = (best.warm + t) % m;
          const double v = p.objective(x, a);
          ++best.evaluations;
          if (v < lo) {
            lo = v;
            arg = a;
          }
          if (lo <= best.value) {
            pruned = true;
            break;
          }
        }
        best.warm = arg;
        if (!pruned) {
          best.value = lo;
          best.x = x;
        }
      }
      // odometer over axes 1..d-1
      bool done = true;
      for (std::size_t j = d; j > 1;) {
        --j;
        if (++idx[j] < axes[j].size()) {
          done = false;
          break;
        }
        idx[j] = 0;
      }
      if (done) break;
    }
  });
  Incumbent out;
  for (const Incumbent& c : chunks) {
    out.evaluations += c.evaluations;
    if (!c.x.empty() && c.value > out.value) {
      out.value = c.value;
      out.x = c.x;
      out.warm = c.warm;
    }
  }
  return out;
}

std::vector<double> coarse_axis(double h) {
  std::vector<double> a;
  const long n = static_cast<long>(std::floor(1.0 / h + 1e-9));
  for (long i = 0; i <= n; ++i) a.push_back(std::min(1.0, i * h));
  if (a.back() < 1.0) a.push_back(1.0);
  return a;
}

std::vector<double> window_axis(double c, double h, long k) {
  std::vector<double> a;
  if (c - k * h < 0.0) a.push_back(0.0);
  for (long i = -k; i <= k; ++i) {
    const double v = c + i * h;
    if (v >= 0.0 && v <= 1.0) a.push_back(v);
  }
  if (c + k * h > 1.0) a.push_back(1.0);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

bool is_normalized(Regime r) {
  return knowledge_level(r) <= 2;
}

}  // namespace

std::vector<double> unit_grid(double step) {
  if (!(step > 0.0 && step <= 0.5))
    throw std::invalid_argument("grid step must lie in (0, 0.5]");
  std::vector<double> g;
  const long n = static_cast<long>(std::floor(1.0 / step + 1e-9));
  for (long i = 0; i <= n; ++i) g.push_back(round12(std::min(1.0, i * step)));
  if (g.back() < 1.0) g.push_back(1.0);
  return g;
}

MaximinResult solve_maximin(const MaximinProblem& p, double resolution) {
  MaximinOptions opt;
  opt.resolution = resolution;
  return solve_maximin(p, opt);
}

MaximinResult solve_maximin(const MaximinProblem& p, const MaximinOptions& opt) {
  if (!(opt.resolution > 0.0 && opt.resolution <= 1e-2))
    throw std::invalid_argument("solve_maximin: resolution must lie in (0, 1e-2]");
  if (p.dims == 0 || p.adversary.empty() || !p.objective || !p.feasible)
    throw std::invalid_argument("solve_maximin: incomplete problem");
  double h = opt.coarse_step.value_or(10.0 * opt.resolution);
  std::vector<std::vector<double>> axes(p.dims, coarse_axis(h));
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  if (total > opt.max_points * 8)
    throw std::invalid_argument("solve_maximin: coarse grid too large");

  MaximinResult r;
  Incumbent best = scan(p, axes, 0);
  r.evaluations = best.evaluations;
  if (best.x.empty())
    throw std::runtime_error("solve_maximin: no feasible grid point for " + p.label);

  const double stop = opt.resolution / 100.0 * (1.0 + 1e-9);
  while (opt.refine && h > stop) {
    const double hn = h / 10.0;
    const double w = std::max(10.0 * h, 2.0 * std::pow(h, 2.0 / 3.0));
    long k = static_cast<long>(std::ceil(w / hn - 1e-9));
    const double per_axis = std::pow(static_cast<double>(opt.max_points),
                                     1.0 / static_cast<double>(p.dims));
    k = std::min(k, std::max(1L, static_cast<long>((per_axis - 1.0) / 2.0)));
    for (std::size_t j = 0; j < p.dims; ++j) axes[j] = window_axis(best.x[j], hn, k);
    Incumbent next = scan(p, axes, best.warm);
    r.evaluations += next.evaluations;
    if (!next.x.empty() && next.value >= best.value) best = next;
    h = hn;
    ++r.passes;
  }

  r.lambda_star = best.x;
  r.final_step = h;
  r.certificate.resize(p.adversary.size());
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < p.adversary.size(); ++a) {
    r.certificate[a] = p.objective(best.x, a);
    if (r.certificate[a] < lo) {
      lo = r.certificate[a];
      r.worst_adversary = a;
    }
  }
  r.value = lo;
  return r;
}

std::vector<std::string> oracle_coordinates(const KnowledgeCase& kc,
                                            const OracleOptions& opt) {
  const Construction c = construction_of(kc.regime);
  if (opt.full_dimension) return lambda_names(c, kc.dim);
  if (c == Construction::kKnownUnknown && opt.free_lambda3) return {"l1", "l2", "l3"};
  return {"l1", "l2"};
}

LambdaParams expand_lambda(const KnowledgeCase& kc, std::span<const double> x,
                           const OracleOptions& opt) {
  const Construction c = construction_of(kc.regime);
  if (x.size() != oracle_coordinates(kc, opt).size())
    throw std::invalid_argument("expand_lambda: wrong coordinate count");
  if (opt.full_dimension) return LambdaParams{{x.begin(), x.end()}};
  const double l3 = x.size() == 3 ? x[2] : 1.0;
  return uniform_lambda(c, kc.dim, x[0], x[1], l3);
}

double evaluate_surface(const KnowledgeCase& kc, const LambdaParams& lam,
                        double beta, double eta1) {
  if (construction_of(kc.regime) == Construction::kKnownKnown &&
      beta >= 1.0 - 1e-12)
    return 0.0;
  const StatePair pair = canonical_pair(static_cast<std::size_t>(kc.dim), beta, eta1);
  const auto ps = success_pair(kc, pair, lam);
  return eta1 * ps[0] + (1.0 - eta1) * ps[1];
}

MaximinProblem make_problem(const KnowledgeCase& kc, const CaseInputs& in,
                            const OracleOptions& opt) {
  check_inputs(kc.regime, in);
  const Regime r = kc.regime;
  const std::vector<double> grid = unit_grid(opt.adversary_step);

  MaximinProblem p;
  p.label = to_string(r) + (kc.dim == 3 ? " qutrit" : " qubit");
  p.dims = oracle_coordinates(kc, opt).size();
  switch (r) {
    case Regime::kA1:
      p.adversary = {{0.0, *in.eta1}};
      break;
    case Regime::kB1:
      for (double e : grid) p.adversary.push_back({0.0, e});
      break;
    case Regime::kA2:
      for (double b : grid) p.adversary.push_back({b, *in.eta1});
      break;
    case Regime::kB2:
      for (double e : grid)
        for (double b : grid) p.adversary.push_back({b, e});
      break;
    case Regime::kA3:
    case Regime::kA4:
      p.adversary = {{*in.beta, *in.eta1}};
      break;
    case Regime::kB3:
    case Regime::kB4:
      for (double e : grid) p.adversary.push_back({*in.beta, e});
      break;
  }

  // The objective is affine in lambda: tabulate p1, p2 at the origin and at
  // each unit coordinate, once per distinct beta.
  const bool normalized = is_normalized(r);
  const bool kk = construction_of(r) == Construction::kKnownKnown;
  const std::size_t d = p.dims;
  std::vector<double> betas;
  for (const auto& a : p.adversary) betas.push_back(a.beta);
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());

  // per beta: (d + 1) x 2 values of (p1, p2); row 0 is the origin
  std::vector<std::vector<std::array<double, 2>>> pv(betas.size());
  for (std::size_t bi = 0; bi < betas.size(); ++bi) {
    double b = betas[bi];
    if (normalized) b = std::min(b, kBetaCap);
    const double q = normalized ? 1.0 - b * b : 1.0;
    pv[bi].assign(d + 1, {0.0, 0.0});
    if (kk && b >= 1.0 - 1e-12) continue;
    const StatePair pair = canonical_pair(static_cast<std::size_t>(kc.dim), b, 0.5);
    std::vector<double> x(d, 0.0);
    const auto origin = success_pair(kc, pair, expand_lambda(kc, x, opt));
    pv[bi][0] = {origin[0] / q, origin[1] / q};
    for (std::size_t j = 0; j < d; ++j) {
      x.assign(d, 0.0);
      x[j] = 1.0;
      const auto unit = success_pair(kc, pair, expand_lambda(kc, x, opt));
      pv[bi][j + 1] = {(unit[0] - origin[0]) / q, (unit[1] - origin[1]) / q};
    }
  }

  auto coef = std::make_shared<std::vector<double>>();
  coef->reserve(p.adversary.size() * (d + 1));
  for (const auto& a : p.adversary) {
    const std::size_t bi =
        std::lower_bound(betas.begin(), betas.end(), a.beta) - betas.begin();
    for (std::size_t j = 0; j <= d; ++j)
      coef->push_back(a.eta1 * pv[bi][j][0] + (1.0 - a.eta1) * pv[bi][j][1]);
  }
  p.objective = [coef, d](std::span<const double> x, std::size_t a) {
    const double* c = coef->data() + a * (d + 1);
    double v = c[0];
    for (std::size_t j = 0; j < d; ++j) v += c[j + 1] * x[j];
    return v;
  };

  const std::optional<double> beta = in.beta;
  p.feasible = [kc, opt, beta](std::span<const double> x) {
    thread_local LambdaParams lam;
    if (opt.full_dimension) {
      lam.values.assign(x.begin(), x.end());
    } else {
      const Construction c = construction_of(kc.regime);
      const double l3 = x.size() == 3 ? x[2] : 1.0;
      if (kc.dim == 2 || c == Construction::kKnownKnown) {
        lam.values.assign({x[0], x[1]});
        if (c == Construction::kKnownUnknown) lam.values.push_back(l3);
      } else if (c == Construction::kUnknownUnknown) {
        lam.values.assign({x[0], x[0], x[0], x[1], x[1], x[1]});
      } else {
        lam.values.assign({x[0], x[0], x[1], x[1], l3, l3, l3, l3});
      }
    }
    return feasible(kc, lam, beta);
  };
  return p;
}

double VerifyPoint::deviation() const {
  return std::max(std::abs(p_closed - p_oracle), std::abs(p_table - p_oracle));
}

VerifyReport verify_case(const KnowledgeCase& kc, const VerifyOptions& opt) {
  const Regime r = kc.regime;
  const std::vector<double> grid = unit_grid(opt.grid_step);
  VerifyReport rep;
  rep.kc = kc;
  rep.options = opt;

  std::vector<CaseInputs> inputs;
  if (uses_beta(r) && uses_eta1(r)) {
    for (double e : grid)
      for (double b : grid) inputs.push_back({b, e});
  } else if (uses_eta1(r)) {
    for (double e : grid) inputs.push_back({std::nullopt, e});
  } else if (uses_beta(r)) {
    for (double b : grid) inputs.push_back({b, std::nullopt});
  } else {
    inputs.push_back({});
  }

  const bool kk = construction_of(r) == Construction::kKnownKnown;
  bool noted_published = false;
  for (const CaseInputs& in : inputs) {
    OracleSolve s;
    s.inputs = in;
    const MaximinProblem prob = make_problem(kc, in, opt.oracle);
    s.result = solve_maximin(prob, opt.resolution);
    s.lambda = expand_lambda(kc, s.result.lambda_star, opt.oracle);
    const LambdaChoice choice =
        opt.published_table ? published_lambda(kc, in) : optimal_lambda(kc, in);
    s.table_lambda = choice.lam;
    for (double& v : s.table_lambda.values) v *= opt.lambda_scale;
    s.branch = choice.branch;

    const double build_beta = in.beta.value_or(0.5);
    if (!(kk && build_beta >= 1.0 - 1e-12)) {
      const StatePair pair =
          canonical_pair(static_cast<std::size_t>(kc.dim), build_beta, 0.5);
      const ValidationReport v = validate(build_povm(kc, pair, s.lambda));
      s.min_eig_pi0 = v.min_eigenvalues[2];
      s.povm_ok = v.ok();
      if (!opt.published_table && !noted_published &&
          construction_of(r) == Construction::kUnknownUnknown && kc.dim == 3) {
        const LambdaParams pub = published_lambda(kc, in).lam;
        const double m = validate(build_povm(kc, pair, pub)).min_eigenvalues[2];
        if (m < -kPsdTol) {
          char buf[160];
          std::snprintf(buf, sizeof buf,
                        "published qutrit %s coefficients are not a valid "
                        "measurement: min eigenvalue of pi0 = %.6g",
                        to_string(r).c_str(), m);
          rep.notes.emplace_back(buf);
          noted_published = true;
        }
      }
    } else {
      s.min_eig_pi0 = NAN;
    }
    rep.povm_ok = rep.povm_ok && s.povm_ok;

    auto add_point = [&](double b, double e) {
      VerifyPoint pt;
      pt.beta = b;
      pt.eta1 = e;
      pt.p_closed = closed_form_probability(kc, b, e);
      pt.p_table = evaluate_surface(kc, s.table_lambda, b, e);
      pt.p_oracle = evaluate_surface(kc, s.lambda, b, e);
      rep.points.push_back(pt);
    };
    switch (r) {
      case Regime::kA1:
      case Regime::kA2:
        for (double b : grid) add_point(b, *in.eta1);
        break;
      case Regime::kA3:
      case Regime::kA4:
        add_point(*in.beta, *in.eta1);
        break;
      case Regime::kB1:
      case Regime::kB2:
        for (double e : grid)
          for (double b : grid) add_point(b, e);
        break;
      case Regime::kB4:
        for (double e : grid) add_point(*in.beta, e);
        break;
      case Regime::kB3: {
        const double b = *in.beta;
        VerifyPoint pt;
        pt.beta = b;
        pt.eta1 = NAN;
        pt.p_closed = worst_case_closed_form(kc, b);
        pt.p_table = std::min(evaluate_surface(kc, s.table_lambda, b, 0.0),
                              evaluate_surface(kc, s.table_lambda, b, 1.0));
        pt.p_oracle = std::min(evaluate_surface(kc, s.lambda, b, 0.0),
                               evaluate_surface(kc, s.lambda, b, 1.0));
        rep.points.push_back(pt);
        break;
      }
    }
    rep.solves.push_back(std::move(s));
  }

  rep.worst = rep.points.front();
  for (const VerifyPoint& pt : rep.points) {
    if (pt.deviation() > rep.max_deviation) {
      rep.max_deviation = pt.deviation();
      rep.worst = pt;
    }
  }
  rep.passed = rep.povm_ok && rep.max_deviation <= opt.tolerance;
  return rep;
}

}  // namespace unambig
