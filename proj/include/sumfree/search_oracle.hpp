#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumfree/cyclic_set.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/special_sets.hpp"

namespace sumfree {

struct DilationClass {
  /// Lexicographically least member of the class.
  CyclicSet representative;
  /// Number of catalog members in the class.
  std::size_t orbit_size = 0;
};

struct Catalog {
  Int n = 0;
  std::optional<Int> size_filter;
  /// Lexicographic bit order.
  std::vector<CyclicSet> sets;
  /// Ordered by representative.
  std::vector<DilationClass> classes;
};

/// Groups `sets` into dilation classes.
std::vector<DilationClass> dilation_classes(const std::vector<CyclicSet>& sets);

/// 2^(number of pair orbits {x, -x}, x != 0), saturating.
std::uint64_t symmetric_candidate_count(Int n);

/// Default: the candidate count for n = 44, i.e. 2^22.
inline constexpr std::uint64_t kDefaultCatalogBudget = std::uint64_t{1} << 22;

/// Every symmetric complete sum-free subset of Z_n (optionally of one size).
/// Candidates are unions of pair orbits; the depth-first walk abandons a
/// branch as soon as it stops being sum-free.
Catalog exhaustive_scsf(Int n, std::optional<Int> size_filter = std::nullopt, const SearchOptions& options = {});

/// Default: 2^16 subsets, i.e. t <= 8.
inline constexpr std::uint64_t kDefaultBruteSpecialBudget = std::uint64_t{1} << 16;

/// Literal evaluation of the three t-special conditions on all 2^(2t)
/// subsets with plain integer loops. Shares no code with enumerate_special.
SpecialEnumeration brute_special(Int t, const SearchOptions& options = {});

/// Default: 2^42 subsets of Z_p \ {0}, i.e. p <= 43.
inline constexpr std::uint64_t kDefaultMaxSumFreeBudget = std::uint64_t{1} << 42;

/// All sum-free subsets of Z_p of maximum size, with their dilation classes.
Catalog exhaustive_max_sum_free(std::uint64_t p, const SearchOptions& options = {});

struct ProbeReport {
  std::uint64_t p = 0;
  Int s = 0;
  bool t_integer = false;
  Int t = 0;
  bool definition_valid = false;
  bool theorem_valid = false;
  /// The characterization is only claimed for sufficiently large p, which
  /// no exhaustive run can certify; always true.
  bool asymptotic_claim = true;
  /// Set when the (n, s) hypotheses of the S_T equivalence do not hold.
  bool hypotheses_unmet = false;
  std::uint64_t special_count = 0;
  std::size_t catalog_count = 0;
  std::size_t construction_count = 0;
  std::size_t matched = 0;
  std::vector<CyclicSet> catalog_extra;
  std::vector<CyclicSet> construction_extra;
  /// "match" when both sides coincide, otherwise "mismatch".
  const char* classification = "match";
  /// Counting-formula value when s = k - 2r (p = 3k+1) or k - 2r + 1 (p = 3k+2) for some r >= 1.
  std::optional<ScsfPrediction> prediction;
  /// The prediction was skipped because g(t) exceeds the enumeration budget.
  bool prediction_budget_exceeded = false;
};

/// Compares the exhaustive catalog of size-s sets in Z_p with all dilations
/// of S_T over t-special T. Mismatches are reported, never raised.
ProbeReport characterization_probe(std::uint64_t p, Int s, const SearchOptions& options = {});

}  // namespace sumfree
