#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/parallel.hpp"
#include "sumfree/st_family.hpp"

namespace sumfree {

/// |T| = t, 2t-1 ∉ T+T+T, and [0, 2t-1+min T] \ (2t-1-T) ⊆ T+T.
bool is_t_special(const TCandidate& t_set);

/// For T containing 0 the completeness condition is implied by the other
/// two; throws DomainError("fast path inapplicable") when 0 ∉ T.
bool is_t_special_zero_fast(const TCandidate& t_set);

/// Mask kernel equivalent to is_t_special for t <= 16 (T+T fits a word).
bool is_t_special_mask(int t, std::uint64_t mask);

struct SpecialEnumeration {
  Int t = 0;
  /// Ascending as 2t-bit masks.
  std::vector<TCandidate> sets;
  std::uint64_t g = 0;
};

/// C(2t, t) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Default budget: C(28, 14) candidates, i.e. t <= 14.
inline constexpr std::uint64_t kDefaultSpecialBudget = 40116600;

/// Every t-special set, in canonical order. Streams only the size-t
/// subsets of [0, 2t-1], sharded by the pattern of the top bits.
SpecialEnumeration enumerate_special(Int t, const SearchOptions& options = {});

/// The set T_I = {0} ∪ I ∪ {2t-1-i : i ∈ [⌈2t/3⌉, t-1] \ I} ∪ [2t-⌈2t/3⌉, 2t-2].
/// Throws DomainError if I ⊄ [⌈2t/3⌉, t-1].
TCandidate lower_bound_family(Int t, const std::vector<Int>& index_set);

/// All 2^⌊t/3⌋ members T_I of the family, ordered by the bitmask of I.
std::vector<TCandidate> lower_bound_family_all(Int t);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

struct ScsfPrediction {
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  /// 1 for p = 3k+1, 2 for p = 3k+2.
  int residue = 0;
  Int r = 0;
  Int t = 0;
  /// k - 2r or k - 2r + 1.
  Int size = 0;
  std::uint64_t g = 0;
  /// (p-1)/2 * g(t).
  std::uint64_t count = 0;
  /// The count formula is only claimed for sufficiently large p.
  bool asymptotic_claim = true;
  bool size_nonpositive = false;
};

/// Evaluates the counting formula for symmetric complete sum-free subsets
/// of Z_p. `g_value` supplies g(t) when already known; otherwise it is
/// enumerated. Throws DomainError for composite p or p ≡ 0 (mod 3).
ScsfPrediction predicted_scsf_count(std::uint64_t p, Int r, std::optional<std::uint64_t> g_value = std::nullopt,
                                    const SearchOptions& options = {});

/// On-disk table of computed g(t) values. Advisory only: entries are a
/// shortcut for callers, and every entry is recomputable by enumerate_special.
class GCache {
 public:
  GCache() = default;
  /// Loads `path`; a missing file yields an empty cache.
  static GCache load(const std::string& path);
  void save(const std::string& path) const;

  std::optional<std::uint64_t> lookup(Int t) const;
  void store(Int t, std::uint64_t g) { table_[t] = g; }
  const std::map<Int, std::uint64_t>& entries() const noexcept { return table_; }

 private:
  std::map<Int, std::uint64_t> table_;
};

}  // namespace sumfree
