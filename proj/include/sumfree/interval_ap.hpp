#pragma once

#include <cstddef>
#include <vector>

#include "sumfree/cyclic_set.hpp"

namespace sumfree {

/// Parameters of the interval / arithmetic-progression construction
/// S = (±A) ∪ (±B) ∪ C in Z_n with n = 4dk + 6t - a.
struct IntervalAPParameters {
  Int t = 0;
  Int d = 0;
  Int k = 0;
  /// Variant offset: 11 (n odd) or 14 (n even).
  Int a = 0;
  Int n = 0;

  /// Throws ParameterError unless t >= 1, d >= 2, k >= 4, a ∈ {11, 14}.
  static IntervalAPParameters make(Int t, Int d, Int k, Int a);

  /// |C| = 2t + 2 for odd n, 2t + 1 for even n.
  Int c_size() const { return n % 2 != 0 ? 2 * t + 2 : 2 * t + 1; }
  /// The construction theorem needs |C| >= d.
  bool hypothesis_holds() const { return c_size() >= d; }
  /// 2(d + k - 4) + |C|.
  Int expected_size() const { return 2 * (d + k - 4) + c_size(); }
  /// (⌈n/2⌉ + t + 1) / 2, the first element of A.
  Int a_start() const;

  friend bool operator==(const IntervalAPParameters&, const IntervalAPParameters&) = default;
};

struct ComponentSets {
  CyclicSet a;
  CyclicSet b;
  CyclicSet c;
};

/// A = [a0, a0+d-2], B = {a0 + 2d - 2 + i·d : 0 <= i <= k-4},
/// C = [⌊n/2⌋ - t, ⌈n/2⌉ + t]. Also asserts the closed form of the last
/// element of B and pairwise disjointness of ±A, ±B, C.
ComponentSets component_sets(const IntervalAPParameters& params);

/// (±A) ∪ (±B) ∪ C. Throws HypothesisError if |C| < d. In checked mode the
/// result is re-verified with the Z_n predicates and a VerificationError is
/// thrown on any failure.
CyclicSet build_small(const IntervalAPParameters& params, bool checked = true);

/// -B and A+B are disjoint and their union is
/// [⌈n/2⌉+t+2d-2, (⌊3n/2⌋-t-1)/2 - d + 1].
bool gap_fill_check(const IntervalAPParameters& params);

/// B+C = [(⌊3n/2⌋-t+1)/2 + 2d - 2, n - 2d + 2]. Requires |C| >= d.
bool bc_interval_check(const IntervalAPParameters& params);

/// Least n from which the parameter recipe succeeds for every n' in
/// [n, n + 1000]; determined by exhaustive scan (see tests).
inline constexpr Int kConstructionThreshold = 686;

/// The recipe d0 ≡ 1 (mod 3) near ⌊√n⌋, a by parity, m = (n + a)/2,
/// 3t0 ≡ m (mod 2d0) in [2d0, 8d0], k0 = (m - 3t0)/(2d0). Throws
/// ParameterError naming the violated postcondition when n is too small.
IntervalAPParameters solve_parameters(Int n);

struct LadderRung {
  IntervalAPParameters params;
  Int size = 0;
};

struct SizeLadder {
  Int n = 0;
  Int base_size = 0;
  /// 2(2d0 - 3).
  Int difference = 0;
  /// Rung i uses k_i = k0 - 3i and t_i = t0 + 2 d0 i, for 0 <= i <= ⌊(k0-4)/3⌋.
  std::vector<LadderRung> rungs;
};

SizeLadder size_ladder(Int n);

/// The valid parameter triple with the largest construction size for n
/// (ties broken towards smaller d, then smaller k).
LadderRung largest_construction(Int n);

struct DensityChoice {
  LadderRung rung;
  /// Index into the ladder, or -1 for the largest construction.
  Int ladder_index = -1;
  CyclicSet set;
};

/// Among the ladder rungs and the largest construction, the one whose size
/// is closest to alpha·n (ties towards the smaller size). alpha ∈ [0, 1/3].
DensityChoice nearest_density_set(Int n, double alpha, bool checked = true);

/// The first ladder rung.
CyclicSet smallest_set(Int n, bool checked = true);

}  // namespace sumfree
