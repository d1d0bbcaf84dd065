#include "sumfree/interval_ap.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sumfree/errors.hpp"

namespace sumfree {

namespace {

// x / 2, where x must be even.
Int exact_half(Int x, const char* what) {
  if (x % 2 != 0) throw ParameterError(std::string(what) + " = " + std::to_string(x) + " is odd");
  return x / 2;
}

Int floor_half(Int n) { return n / 2; }
Int ceil_half(Int n) { return (n + 1) / 2; }

std::string describe(const IntervalAPParameters& p) {
  return "(t=" + std::to_string(p.t) + ", d=" + std::to_string(p.d) + ", k=" + std::to_string(p.k) +
         ", a=" + std::to_string(p.a) + ", n=" + std::to_string(p.n) + ")";
}

Int isqrt(Int n) {
  Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

IntervalAPParameters IntervalAPParameters::make(Int t, Int d, Int k, Int a) {
  if (t < 1) throw ParameterError("t must be >= 1, got " + std::to_string(t));
  if (d < 2) throw ParameterError("d must be >= 2, got " + std::to_string(d));
  if (k < 4) throw ParameterError("k must be >= 4, got " + std::to_string(k));
  if (a != 11 && a != 14) throw ParameterError("variant offset must be 11 or 14, got " + std::to_string(a));
  IntervalAPParameters p;
  p.t = t;
  p.d = d;
  p.k = k;
  p.a = a;
  p.n = 4 * d * k + 6 * t - a;
  if ((p.n % 2 != 0) != (a == 11)) throw ParameterError("parity of n does not match the variant " + describe(p));
  exact_half(ceil_half(p.n) + t + 1, "ceil(n/2) + t + 1");
  return p;
}

Int IntervalAPParameters::a_start() const { return exact_half(ceil_half(n) + t + 1, "ceil(n/2) + t + 1"); }

ComponentSets component_sets(const IntervalAPParameters& p) {
  const Int n = p.n;
  const Int a0 = p.a_start();
  ComponentSets out{interval(n, a0, a0 + p.d - 2), CyclicSet(n), interval(n, floor_half(n) - p.t, ceil_half(n) + p.t)};
  for (Int i = 0; i <= p.k - 4; ++i) out.b.insert(a0 + 2 * p.d - 2 + i * p.d);

  const Int b_last = a0 + 2 * p.d - 2 + (p.k - 4) * p.d;
  if (b_last != floor_half(n) - p.t - 2 * p.d + 2)
    throw ParameterError("last element of B does not match floor(n/2) - t - 2d + 2 for " + describe(p));

  const CyclicSet parts[] = {out.a, negate(out.a), out.b, negate(out.b), out.c};
  std::size_t total = 0;
  CyclicSet all(n);
  for (const auto& part : parts) {
    total += part.size();
    all |= part;
  }
  if (all.size() != total) throw ParameterError("±A, ±B, C are not pairwise disjoint for " + describe(p));
  return out;
}

CyclicSet build_small(const IntervalAPParameters& p, bool checked) {
  if (!p.hypothesis_holds())
    throw HypothesisError("|C| = " + std::to_string(p.c_size()) + " < d = " + std::to_string(p.d) + " for " +
                          describe(p));
  const ComponentSets parts = component_sets(p);
  CyclicSet s = parts.a | negate(parts.a) | parts.b | negate(parts.b) | parts.c;
  if (checked) {
    const Properties props = classify(s);
    if (!props.symmetric_complete_sum_free() || static_cast<Int>(props.size) != p.expected_size())
      throw VerificationError("construction failed re-verification for " + describe(p));
  }
  return s;
}

bool gap_fill_check(const IntervalAPParameters& p) {
  const ComponentSets parts = component_sets(p);
  const CyclicSet minus_b = negate(parts.b);
  const CyclicSet a_plus_b = sumset(parts.a, parts.b);
  if (minus_b.bits().intersects(a_plus_b.bits())) return false;
  const Int lo = ceil_half(p.n) + p.t + 2 * p.d - 2;
  const Int hi = exact_half(p.n * 3 / 2 - p.t - 1, "floor(3n/2) - t - 1") - p.d + 1;
  return (minus_b | a_plus_b) == interval(p.n, lo, hi);
}

bool bc_interval_check(const IntervalAPParameters& p) {
  if (!p.hypothesis_holds())
    throw HypothesisError("B+C interval check needs |C| >= d for " + describe(p));
  const ComponentSets parts = component_sets(p);
  const Int lo = exact_half(p.n * 3 / 2 - p.t + 1, "floor(3n/2) - t + 1") + 2 * p.d - 2;
  const Int hi = p.n - 2 * p.d + 2;
  return sumset(parts.b, parts.c) == interval(p.n, lo, hi);
}

IntervalAPParameters solve_parameters(Int n) {
  auto below = [n](const std::string& constraint) {
    return ParameterError("n = " + std::to_string(n) + " below construction threshold (" +
                          std::to_string(kConstructionThreshold) + "): " + constraint);
  };
  if (n < 16) throw below("n too small for d0 >= 2");
  const Int root = isqrt(n);
  Int d0 = root;
  while (d0 % 3 != 1) --d0;
  const Int a = n % 2 != 0 ? 11 : 14;
  const Int m = (n + a) / 2;
  const Int m_res = m % (2 * d0);
  Int three_t0 = m_res + 2 * d0;
  while (three_t0 % 3 != 0) three_t0 += 2 * d0;
  const Int t0 = three_t0 / 3;
  const Int k0 = (m - three_t0) / (2 * d0);

  if (d0 < 2) throw below("d0 = " + std::to_string(d0) + " < 2");
  if (t0 < 1) throw below("t0 = " + std::to_string(t0) + " < 1");
  if ((m - three_t0) % (2 * d0) != 0 || m - three_t0 < 0) throw below("m - 3t0 is not a non-negative multiple of 2d0");
  if (k0 < 4) throw below("k0 = " + std::to_string(k0) + " < 4");
  if (d0 > 2 * t0 + 1) throw below("d0 > 2t0 + 1");
  if (!(2 * d0 <= three_t0 && three_t0 <= 8 * d0)) throw below("2d0 <= 3t0 <= 8d0 violated");
  IntervalAPParameters p = IntervalAPParameters::make(t0, d0, k0, a);
  if (p.n != n) throw below("reconstruction 4 d0 k0 + 6 t0 - a != n");
  return p;
}

SizeLadder size_ladder(Int n) {
  const IntervalAPParameters base = solve_parameters(n);
  SizeLadder ladder;
  ladder.n = n;
  ladder.base_size = base.expected_size();
  ladder.difference = 2 * (2 * base.d - 3);
  const Int b = (base.k - 4) / 3;
  for (Int i = 0; i <= b; ++i) {
    const IntervalAPParameters p = IntervalAPParameters::make(base.t + 2 * base.d * i, base.d, base.k - 3 * i, base.a);
    if (p.n != n || !p.hypothesis_holds())
      throw ParameterError("ladder rung " + std::to_string(i) + " invalid: " + describe(p));
    const Int size = p.expected_size();
    if (size != ladder.base_size + i * ladder.difference)
      throw ParameterError("ladder rung " + std::to_string(i) + " breaks the arithmetic progression");
    ladder.rungs.push_back({p, size});
  }
  return ladder;
}

LadderRung largest_construction(Int n) {
  const Int a = n % 2 != 0 ? 11 : 14;
  bool found = false;
  LadderRung best;
  for (Int d = 2; 16 * d <= n + a; ++d) {
    for (Int k = 4; 4 * d * k < n + a; ++k) {
      const Int rest = n + a - 4 * d * k;
      if (rest % 6 != 0) continue;
      const Int t = rest / 6;
      if (t < 1) continue;
      const IntervalAPParameters p = IntervalAPParameters::make(t, d, k, a);
      if (!p.hypothesis_holds()) continue;
      if (!found || p.expected_size() > best.size) {
        best = {p, p.expected_size()};
        found = true;
      }
    }
  }
  if (!found) throw ParameterError("no valid construction parameters for n = " + std::to_string(n));
  return best;
}

DensityChoice nearest_density_set(Int n, double alpha, bool checked) {
  if (!(alpha >= 0.0) || alpha > 1.0 / 3.0 + 1e-12)
    throw DomainError("alpha must lie in [0, 1/3], got " + std::to_string(alpha));
  const SizeLadder ladder = size_ladder(n);
  const double target = alpha * static_cast<double>(n);

  DensityChoice choice;
  double best_gap = std::numeric_limits<double>::infinity();
  auto consider = [&](const LadderRung& rung, Int index) {
    const double gap = std::abs(static_cast<double>(rung.size) - target);
    if (gap < best_gap || (gap == best_gap && rung.size < choice.rung.size)) {
      best_gap = gap;
      choice.rung = rung;
      choice.ladder_index = index;
    }
  };
  for (std::size_t i = 0; i < ladder.rungs.size(); ++i) consider(ladder.rungs[i], static_cast<Int>(i));
  const LadderRung top = largest_construction(n);
  if (top.size > ladder.rungs.back().size) consider(top, -1);

  choice.set = build_small(choice.rung.params, checked);
  return choice;
}

CyclicSet smallest_set(Int n, bool checked) { return build_small(size_ladder(n).rungs.front().params, checked); }

}  // namespace sumfree
