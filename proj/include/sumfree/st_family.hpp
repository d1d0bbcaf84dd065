#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sumfree/bit_vector.hpp"
#include "sumfree/cyclic_set.hpp"
#include "sumfree/parallel.hpp"

namespace sumfree {

/// A set of integers T ⊆ [0, 2t-1]. Arithmetic on members is over the
/// integers, not modular.
class TCandidate {
 public:
  TCandidate(Int t, std::span<const Int> members);
  TCandidate(Int t, std::initializer_list<Int> members)
      : TCandidate(t, std::span<const Int>(members.begin(), members.size())) {}

  /// Bit i of `mask` is member i; requires 2t <= 64.
  static TCandidate from_mask(Int t, std::uint64_t mask);

  Int t() const noexcept { return t_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Int x) const { return x >= 0 && x < 2 * t_ && bits_.test(static_cast<std::size_t>(x)); }
  /// Smallest member; the set must be nonempty.
  Int min() const;
  std::vector<Int> members() const;
  const BitVector& bits() const noexcept { return bits_; }
  /// Members as a bitmask; requires 2t <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const TCandidate&, const TCandidate&) = default;

 private:
  Int t_ = 0;
  BitVector bits_;
};

/// {x + y : x in A, y in B} over the integers, for bit-vectors indexed from 0.
/// The result is truncated to `limit` bits when limit > 0.
BitVector integer_sumset(const BitVector& a, const BitVector& b, std::size_t limit = 0);

/// (n, s) with t = (n - 3s + 1) / 2.
struct STParameters {
  Int n = 0;
  Int s = 0;
  Int t = 0;
  /// n <= 4s - 3: the set S_T is defined and the sum-freeness criterion applies.
  bool definition_valid = false;
  /// n <= 7s/2 - 1: the completeness criterion and the t-special equivalence apply.
  bool theorem_valid = false;

  /// Throws ParameterError unless t is a positive integer.
  static STParameters make(Int n, Int s);
};

/// S_T = [n-2s+1, 2s-1] ∪ (s+T) ∪ -(s+T) in Z_n.
CyclicSet build_st(const STParameters& params, const TCandidate& t_set);

/// 2t-1 ∉ T+T+T (integers, repetition allowed).
bool st_sum_free_condition(const TCandidate& t_set);

/// [0, 2t-1+min T] \ (2t-1-T) ⊆ T+T. Throws DomainError for empty T.
bool st_completeness_condition(const TCandidate& t_set);

struct EquivalenceReport {
  STParameters params;
  std::uint64_t candidates = 0;
  std::uint64_t special_count = 0;
  /// Masks of T where t-specialness and the direct check on S_T disagree, ascending.
  std::vector<std::uint64_t> counterexamples;
};

/// Default budget: 2^24 candidates (t <= 12).
inline constexpr std::uint64_t kDefaultEquivalenceBudget = std::uint64_t{1} << 24;

/// Compares is_t_special(T) with "S_T complete, sum-free, of size s" for
/// every T ⊆ [0, 2t-1]. Requires theorem-valid parameters.
EquivalenceReport verify_st_equivalence(Int n, Int s, const SearchOptions& options = {});

}  // namespace sumfree
