// Copyright 2026 The Authors.
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

#include "ys/criteria.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <stdexcept>

#include "ys/exact.hpp"

namespace ys {

namespace {

int sign_of(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

unsigned long long to_exponent(const BigInt& e) {
  if (e < 0 || e > 1000000)
    throw std::invalid_argument("weight exponent out of supported range");
  return e.convert_to<unsigned long long>();
}

std::vector<int> effective_priority(const Criterion& c, std::size_t n) {
  if (!c.priority.empty()) {
    if (c.priority.size() != n)
      throw std::invalid_argument("priority size mismatch");
    return c.priority;
  }
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  return pi;
}

const std::vector<Rational>& require_shares(const Criterion& c,
                                            std::size_t n) {
  if (c.shares.size() != n)
    throw std::invalid_argument("fair_share criterion requires one share per agent");
  return c.shares;
}

void require_p(const Rational& p) {
  if (p == 0)
    throw std::invalid_argument(
        "p = 0 is not supported; use the nash criterion (the p -> 0 limit)");
  if (p > 1) throw std::invalid_argument("p must be at most 1");
}

int compare_sorted_lex(std::vector<Rational> a, std::vector<Rational> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a.size() != b.size())
    throw std::invalid_argument("utility vectors of different length");
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
  return 0;
}

// sign(p) * w * ((u+1)^p - u^p) as a canonical radical sum; requires u > 0.
RadicalSum pmean_gain_sum(const Rational& w, int u, const Rational& p) {
  long long a = numerator(p).convert_to<long long>();
  unsigned b = denominator(p).convert_to<unsigned>();
  Rational s = p > 0 ? w : -w;
  RadicalSum sum(b);
  sum.add(s, BigInt(u + 1), a);
  sum.add(-s, BigInt(u), a);
  return sum;
}

int compare_nash_finite(const Gain& a, const Gain& b) {
  // ((u_a+1)/u_a)^{w_a} vs ((u_b+1)/u_b)^{w_b}, both sides raised to the
  // product of the weight denominators to clear fractional exponents.
  auto ea = to_exponent(numerator(a.weight) * denominator(b.weight));
  auto eb = to_exponent(numerator(b.weight) * denominator(a.weight));
  BigInt lhs = pow(BigInt(a.utility + 1), static_cast<unsigned>(ea)) *
               pow(BigInt(b.utility), static_cast<unsigned>(eb));
  BigInt rhs = pow(BigInt(b.utility + 1), static_cast<unsigned>(eb)) *
               pow(BigInt(a.utility), static_cast<unsigned>(ea));
  return lhs == rhs ? 0 : (lhs > rhs ? 1 : -1);
}

}  // namespace

std::string criterion_name(CriterionKind kind) {
  switch (kind) {
    case CriterionKind::kLorenz: return "lorenz";
    case CriterionKind::kLeximin: return "leximin";
    case CriterionKind::kFairShare: return "fair_share";
    case CriterionKind::kNash: return "nash";
    case CriterionKind::kPMean: return "pmean";
    case CriterionKind::kHarmonic: return "harmonic";
  }
  return "?";
}

std::optional<CriterionKind> criterion_from_name(const std::string& name) {
  for (auto kind : {CriterionKind::kLorenz, CriterionKind::kLeximin,
                    CriterionKind::kFairShare, CriterionKind::kNash,
                    CriterionKind::kPMean, CriterionKind::kHarmonic})
    if (criterion_name(kind) == name) return kind;
  return std::nullopt;
}

Rational harmonic_number(int u) {
  Rational h = 0;
  for (int t = 1; t <= u; ++t) h += Rational(1, t);
  return h;
}

Gain gain(const Criterion& c, const UtilityVector& u,
          const std::vector<Rational>& weights, int agent) {
  const std::size_t n = u.size();
  if (agent < 1 || static_cast<std::size_t>(agent) > n)
    throw std::invalid_argument("unknown agent");
  const std::size_t idx = static_cast<std::size_t>(agent) - 1;
  const int ui = u[idx];
  Gain g;
  g.kind = c.kind;
  switch (c.kind) {
    case CriterionKind::kLorenz: {
      auto pi = effective_priority(c, n);
      g.lex = {Rational(-ui), Rational(-pi[idx])};
      break;
    }
    case CriterionKind::kLeximin:
      g.lex = {-Rational(ui) / weights[idx], -weights[idx]};
      break;
    case CriterionKind::kFairShare: {
      const auto& shares = require_shares(c, n);
      if (shares[idx] == 0)
        g.cls = Gain::Class::kBottom;
      else
        g.lex = {-Rational(ui) / shares[idx], -shares[idx]};
      break;
    }
    case CriterionKind::kNash:
      g.utility = ui;
      g.weight = weights[idx];
      if (ui == 0) g.cls = Gain::Class::kTop;
      break;
    case CriterionKind::kPMean:
      require_p(c.p);
      g.utility = ui;
      g.weight = weights[idx];
      g.p = c.p;
      if (ui == 0) g.cls = Gain::Class::kTop;  // M * w_i, payload kept
      break;
    case CriterionKind::kHarmonic:
      g.lex = {weights[idx] / Rational(ui + 1)};
      break;
  }
  return g;
}

int compare(const Gain& a, const Gain& b) {
  if (a.kind != b.kind)
    throw std::invalid_argument("comparing gains of different criteria");
  if (a.cls != b.cls) {
    auto rank = [](Gain::Class c) {
      return c == Gain::Class::kBottom ? 0 : (c == Gain::Class::kFinite ? 1 : 2);
    };
    return rank(a.cls) < rank(b.cls) ? -1 : 1;
  }
  if (a.cls == Gain::Class::kBottom) return 0;
  if (a.cls == Gain::Class::kTop) {
    if (a.kind == CriterionKind::kPMean) {
      // M*w sentinels. For p > 0 the welfare sum gains w_i from a newly
      // positive agent, so heavier first; for p < 0 the sum (under the 1/p
      // root) is minimized, so lighter first.
      int s = sign_of(a.weight - b.weight);
      return a.p > 0 ? s : -s;
    }
    return 0;
  }
  switch (a.kind) {
    case CriterionKind::kLorenz:
    case CriterionKind::kLeximin:
    case CriterionKind::kFairShare:
    case CriterionKind::kHarmonic:
      for (std::size_t k = 0; k < a.lex.size(); ++k)
        if (a.lex[k] != b.lex[k]) return a.lex[k] > b.lex[k] ? 1 : -1;
      return 0;
    case CriterionKind::kNash:
      return compare_nash_finite(a, b);
    case CriterionKind::kPMean: {
      RadicalSum diff = pmean_gain_sum(a.weight, a.utility, a.p);
      diff.subtract(pmean_gain_sum(b.weight, b.utility, b.p));
      return diff.sign();
    }
  }
  return 0;
}

std::string render_gain(const Gain& g) {
  auto approx = [](const Rational& r) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", r.convert_to<double>());
    return std::string(buf);
  };
  switch (g.cls) {
    case Gain::Class::kBottom:
      return "bottom";
    case Gain::Class::kTop:
      if (g.kind == CriterionKind::kPMean)
        return "M*" + rational_to_string(g.weight);
      return "M";
    case Gain::Class::kFinite:
      break;
  }
  if (g.kind == CriterionKind::kNash) {
    std::string s = "(1+1/" + std::to_string(g.utility) + ")^" +
                    rational_to_string(g.weight);
    double v = std::pow(1.0 + 1.0 / g.utility,
                        g.weight.convert_to<double>());
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return s + "~" + buf;
  }
  if (g.kind == CriterionKind::kPMean) {
    double p = g.p.convert_to<double>();
    double v = (p > 0 ? 1.0 : -1.0) * g.weight.convert_to<double>() *
               (std::pow(g.utility + 1, p) - std::pow(g.utility, p));
    std::string s = rational_to_string(g.weight) + "*d((u=" +
                    std::to_string(g.utility) + ")^" +
                    rational_to_string(g.p) + ")";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return s + "~" + buf;
  }
  std::string s = "(";
  for (std::size_t k = 0; k < g.lex.size(); ++k) {
    if (k) s += ",";
    s += rational_to_string(g.lex[k]);
  }
  s += ")~(";
  for (std::size_t k = 0; k < g.lex.size(); ++k) {
    if (k) s += ",";
    s += approx(g.lex[k]);
  }
  return s + ")";
}

int select_agent(const std::vector<int>& active, const UtilityVector& u,
                 const Criterion& c, const std::vector<Rational>& weights) {
  if (active.empty()) throw std::invalid_argument("empty active set");
  int best = active[0];
  Gain best_gain = gain(c, u, weights, best);
  for (std::size_t k = 1; k < active.size(); ++k) {
    Gain g = gain(c, u, weights, active[k]);
    if (compare(g, best_gain) > 0) {  // strict: ties keep the least index
      best = active[k];
      best_gain = g;
    }
  }
  return best;
}

int lex_compare(const UtilityVector& u1, const UtilityVector& u2) {
  for (std::size_t k = 0; k < u1.size(); ++k)
    if (u1[k] != u2[k]) return u1[k] > u2[k] ? 1 : -1;
  return 0;
}

int psi_compare(const Criterion& c, const UtilityVector& u1,
                const UtilityVector& u2,
                const std::vector<Rational>& weights) {
  const std::size_t n = u1.size();
  if (u2.size() != n)
    throw std::invalid_argument("utility vectors of different length");
  switch (c.kind) {
    case CriterionKind::kLorenz: {
      auto pi = effective_priority(c, n);
      Rational nn(static_cast<long long>(n) * static_cast<long long>(n));
      std::vector<Rational> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = Rational(u1[i]) + Rational(pi[i]) / nn;
        b[i] = Rational(u2[i]) + Rational(pi[i]) / nn;
      }
      return compare_sorted_lex(std::move(a), std::move(b));
    }
    case CriterionKind::kLeximin: {
      std::vector<Rational> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        a[i] = Rational(u1[i]) / weights[i];
        b[i] = Rational(u2[i]) / weights[i];
      }
      return compare_sorted_lex(std::move(a), std::move(b));
    }
    case CriterionKind::kFairShare: {
      const auto& shares = require_shares(c, n);
      std::vector<Rational> a, b;
      for (std::size_t i = 0; i < n; ++i)
        if (shares[i] > 0) {
          a.push_back(Rational(u1[i]) / shares[i]);
          b.push_back(Rational(u2[i]) / shares[i]);
        }
      return compare_sorted_lex(std::move(a), std::move(b));
    }
    case CriterionKind::kNash: {
      int p1 = 0, p2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        p1 += u1[i] > 0;
        p2 += u2[i] > 0;
      }
      if (p1 != p2) return p1 > p2 ? 1 : -1;
      BigInt lcm_den = 1;
      for (std::size_t i = 0; i < n; ++i)
        lcm_den = lcm(lcm_den, denominator(weights[i]));
      BigInt prod1 = 1, prod2 = 1;
      for (std::size_t i = 0; i < n; ++i) {
        auto e = to_exponent(numerator(weights[i]) *
                             (lcm_den / denominator(weights[i])));
        if (u1[i] > 0) prod1 *= pow(BigInt(u1[i]), static_cast<unsigned>(e));
        if (u2[i] > 0) prod2 *= pow(BigInt(u2[i]), static_cast<unsigned>(e));
      }
      return prod1 == prod2 ? 0 : (prod1 > prod2 ? 1 : -1);
    }
    case CriterionKind::kPMean: {
      require_p(c.p);
      int p1 = 0, p2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        p1 += u1[i] > 0;
        p2 += u2[i] > 0;
      }
      if (p1 != p2) return p1 > p2 ? 1 : -1;
      long long a = numerator(c.p).convert_to<long long>();
      unsigned b = denominator(c.p).convert_to<unsigned>();
      Rational s = c.p > 0 ? Rational(1) : Rational(-1);
      RadicalSum diff(b);
      for (std::size_t i = 0; i < n; ++i) {
        if (u1[i] > 0) diff.add(s * weights[i], BigInt(u1[i]), a);
        if (u2[i] > 0) diff.add(-s * weights[i], BigInt(u2[i]), a);
      }
      return diff.sign();
    }
    case CriterionKind::kHarmonic: {
      Rational s1 = 0, s2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        s1 += weights[i] * harmonic_number(u1[i]);
        s2 += weights[i] * harmonic_number(u2[i]);
      }
      return sign_of(s1 - s2);
    }
  }
  return 0;
}

std::optional<std::string> check_gain_conditions(
    const Criterion& c, int n, int umax, const std::vector<Rational>& weights,
    const GainFn& custom) {
  if (n > 4 || umax > 6)
    throw std::invalid_argument("enumeration bound exceeded");
  auto gain_of = [&](const UtilityVector& u, int i) {
    return custom ? custom(u, i) : gain(c, u, weights, i);
  };
  auto describe = [](const UtilityVector& u) {
    std::string s = "(";
    for (std::size_t k = 0; k < u.size(); ++k)
      s += (k ? "," : "") + std::to_string(u[k]);
    return s + ")";
  };

  UtilityVector x(static_cast<std::size_t>(n), 0);
  bool done = false;
  while (!done) {
    // (C1) along single decrements; Pareto dominance over the whole box
    // follows by chaining since psi is a total order.
    for (int i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      UtilityVector y = x;
      --y[i];
      if (psi_compare(c, x, y, weights) <= 0)
        return "C1 violated: psi does not strictly prefer " + describe(x) +
               " over " + describe(y);
    }
    if (psi_compare(c, x, x, weights) != 0)
      return "C1 violated: psi not reflexive at " + describe(x);

    // (G1) with the iff-equality branch.
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Gain gi = gain_of(x, i), gj = gain_of(x, j);
        UtilityVector y = x, z = x;
        ++y[i - 1];
        ++z[j - 1];
        int cg = compare(gi, gj);
        int cpsi = psi_compare(c, y, z, weights);
        if (cg != cpsi)
          return "G1 violated at " + describe(x) + " agents (" +
                 std::to_string(i) + "," + std::to_string(j) +
                 "): gain order " + std::to_string(cg) + " vs psi order " +
                 std::to_string(cpsi);
      }
    }

    // (G2): gain decreases in the agent's own utility and ignores others.
    for (int i = 1; i <= n; ++i) {
      if (x[i - 1] < umax) {
        UtilityVector y = x;
        ++y[i - 1];
        if (compare(gain_of(x, i), gain_of(y, i)) < 0)
          return "G2 violated: gain increases with utility of agent " +
                 std::to_string(i) + " at " + describe(x);
      }
      UtilityVector other = x;
      for (int k = 0; k < n; ++k)
        if (k != i - 1) other[k] = umax - x[k];
      if (compare(gain_of(x, i), gain_of(other, i)) != 0)
        return "G2 violated: gain of agent " + std::to_string(i) +
               " depends on other agents' utilities at " + describe(x);
    }

    done = true;
    for (int i = 0; i < n; ++i) {
      if (x[i] < umax) {
        ++x[i];
        std::fill(x.begin(), x.begin() + i, 0);
        done = false;
        break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace ys
