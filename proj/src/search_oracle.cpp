#include "sumfree/search_oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "sumfree/errors.hpp"
#include "sumfree/st_family.hpp"

namespace sumfree {

namespace {

using Mask = std::uint64_t;

// Word-sized Z_n arithmetic for n <= 64; independent of CyclicSet.
struct SmallGroup {
  int n;
  Mask full;

  explicit SmallGroup(int modulus)
      : n(modulus), full(modulus == 64 ? ~Mask{0} : (Mask{1} << modulus) - 1) {}

  Mask rotate(Mask m, int x) const {
    if (x == 0) return m;
    return ((m << x) | (m >> (n - x))) & full;
  }
  Mask sumset(Mask a, Mask b) const {
    Mask out = 0;
    for (Mask m = a; m; m &= m - 1) out |= rotate(b, std::countr_zero(m));
    return out;
  }
  Mask negate(Mask a) const {
    Mask out = 0;
    for (Mask m = a; m; m &= m - 1) out |= Mask{1} << ((n - std::countr_zero(m)) % n);
    return out;
  }
  bool sum_free(Mask a) const { return (sumset(a, a) & a) == 0; }
  bool complete(Mask a) const { return (sumset(a, a) | a) == full; }
};

CyclicSet to_set(Int n, Mask m) {
  CyclicSet s(n);
  for (; m; m &= m - 1) s.insert(std::countr_zero(m));
  return s;
}

// Pair orbits of Z_n \ {0} under negation, ascending by smaller element.
std::vector<std::vector<Int>> pair_orbits(Int n) {
  std::vector<std::vector<Int>> orbits;
  for (Int x = 1; 2 * x < n; ++x) orbits.push_back({x, n - x});
  if (n % 2 == 0 && n >= 2) orbits.push_back({n / 2});
  return orbits;
}

void sort_sets(std::vector<CyclicSet>& sets) {
  std::sort(sets.begin(), sets.end(), lex_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<CyclicSet> catalog_small(Int n, std::optional<Int> size_filter, const SearchOptions& options) {
  const SmallGroup group(static_cast<int>(n));
  const auto orbits = pair_orbits(n);
  std::vector<Mask> orbit_masks;
  for (const auto& orbit : orbits) {
    Mask m = 0;
    for (Int x : orbit) m |= Mask{1} << x;
    orbit_masks.push_back(m);
  }
  const int count = static_cast<int>(orbit_masks.size());
  const int high = std::min(count, 6);
  const int low = count - high;

  std::vector<std::vector<Mask>> found(std::size_t{1} << high);
  parallel_for(found.size(), options.threads, [&](std::size_t prefix) {
    Mask fixed = 0;
    for (int j = 0; j < high; ++j)
      if ((prefix >> j) & 1u) fixed |= orbit_masks[static_cast<std::size_t>(low + j)];
    if (!group.sum_free(fixed)) return;
    auto& out = found[prefix];
    // Depth-first over orbits [0, low), deciding orbit i at depth i.
    auto visit = [&](auto&& self, int index, Mask current) -> void {
      const int size = std::popcount(current);
      if (size_filter && size > *size_filter) return;
      if (index == low) {
        if ((!size_filter || size == *size_filter) && group.complete(current)) out.push_back(current);
        return;
      }
      self(self, index + 1, current);
      const Mask next = current | orbit_masks[static_cast<std::size_t>(index)];
      if (group.sum_free(next)) self(self, index + 1, next);
    };
    visit(visit, 0, fixed);
  });

  std::vector<CyclicSet> sets;
  for (const auto& shard : found)
    for (Mask m : shard) sets.push_back(to_set(n, m));
  return sets;
}

std::vector<CyclicSet> catalog_general(Int n, std::optional<Int> size_filter) {
  const auto orbits = pair_orbits(n);
  std::vector<CyclicSet> sets;
  auto visit = [&](auto&& self, std::size_t index, const CyclicSet& current) -> void {
    const Int size = static_cast<Int>(current.size());
    if (size_filter && size > *size_filter) return;
    if (index == orbits.size()) {
      if ((!size_filter || size == *size_filter) && is_complete(current)) sets.push_back(current);
      return;
    }
    self(self, index + 1, current);
    CyclicSet next = current;
    for (Int x : orbits[index]) next.insert(x);
    if (is_sum_free(next)) self(self, index + 1, next);
  };
  visit(visit, 0, CyclicSet(n));
  return sets;
}

}  // namespace

std::vector<DilationClass> dilation_classes(const std::vector<CyclicSet>& sets) {
  std::vector<DilationClass> classes;
  std::vector<CyclicSet> keys;
  for (const auto& s : sets) {
    CyclicSet key = canonical_dilation_class(s);
    auto it = std::find(keys.begin(), keys.end(), key);
    if (it == keys.end()) {
      keys.push_back(key);
      classes.push_back({std::move(key), 1});
    } else {
      ++classes[static_cast<std::size_t>(it - keys.begin())].orbit_size;
    }
  }
  std::sort(classes.begin(), classes.end(),
            [](const DilationClass& a, const DilationClass& b) { return lex_less(a.representative, b.representative); });
  return classes;
}

std::uint64_t symmetric_candidate_count(Int n) {
  const std::size_t orbits = pair_orbits(n).size();
  return orbits >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << orbits;
}

Catalog exhaustive_scsf(Int n, std::optional<Int> size_filter, const SearchOptions& options) {
  if (n < 1) throw DomainError("modulus must be >= 1");
  const std::uint64_t budget = options.budget ? options.budget : kDefaultCatalogBudget;
  const std::uint64_t required = symmetric_candidate_count(n);
  if (required > budget)
    throw BudgetError("Z_" + std::to_string(n) + " has " + std::to_string(required) +
                          " symmetric candidates, budget " + std::to_string(budget),
                      required, budget);
  Catalog catalog;
  catalog.n = n;
  catalog.size_filter = size_filter;
  catalog.sets = n <= 64 ? catalog_small(n, size_filter, options) : catalog_general(n, size_filter);
  sort_sets(catalog.sets);
  catalog.classes = dilation_classes(catalog.sets);
  return catalog;
}

SpecialEnumeration brute_special(Int t, const SearchOptions& options) {
  if (t < 1) throw DomainError("t must be >= 1");
  const std::uint64_t budget = options.budget ? options.budget : kDefaultBruteSpecialBudget;
  const std::uint64_t required = 2 * t >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << (2 * t);
  if (required > budget)
    throw BudgetError("2^" + std::to_string(2 * t) + " subsets exceed budget " + std::to_string(budget), required,
                      budget);

  const Int top = 2 * t - 1;
  SpecialEnumeration result;
  result.t = t;
  for (std::uint64_t mask = 0; mask < required; ++mask) {
    std::vector<Int> members;
    for (Int x = 0; x < 2 * t; ++x)
      if ((mask >> x) & 1u) members.push_back(x);
    auto member = [&](Int x) { return std::find(members.begin(), members.end(), x) != members.end(); };

    if (static_cast<Int>(members.size()) != t) continue;

    bool triple = false;
    for (Int a : members)
      for (Int b : members)
        for (Int c : members)
          if (a + b + c == top) triple = true;
    if (triple) continue;

    bool covered = true;
    for (Int i = 0; i <= top + members.front() && covered; ++i) {
      if (member(top - i)) continue;
      bool is_pair_sum = false;
      for (Int a : members)
        for (Int b : members)
          if (a + b == i) is_pair_sum = true;
      covered = is_pair_sum;
    }
    if (!covered) continue;
    result.sets.emplace_back(t, members);
  }
  result.g = result.sets.size();
  return result;
}

Catalog exhaustive_max_sum_free(std::uint64_t p, const SearchOptions& options) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p > 63) throw DomainError("maximum sum-free search supports p <= 63");
  const std::uint64_t budget = options.budget ? options.budget : kDefaultMaxSumFreeBudget;
  const std::uint64_t required = std::uint64_t{1} << (p - 1);
  if (required > budget)
    throw BudgetError("2^" + std::to_string(p - 1) + " subsets exceed budget " + std::to_string(budget), required,
                      budget);

  const int n = static_cast<int>(p);
  const SmallGroup group(n);
  // x is addable to a sum-free S iff x ∉ S+S, x ∉ S-S and 2x ∉ S.
  auto blocked_by = [&](Mask s) {
    Mask halves = 0;
    for (int x = 1; x < n; ++x)
      if ((s >> ((2 * x) % n)) & 1u) halves |= Mask{1} << x;
    return group.sumset(s, s) | group.sumset(s, group.negate(s)) | halves | s | Mask{1};
  };

  // Every nonempty set has a dilation containing 1, so search those only.
  int best = 0;
  std::vector<Mask> found;
  auto visit = [&](auto&& self, int next, Mask current, Mask open) -> void {
    const int size = std::popcount(current);
    const Mask ahead = next >= n ? 0 : open & (group.full & ~((Mask{1} << next) - 1));
    if (size + std::popcount(ahead) < best) return;
    if (size > best) {
      best = size;
      found.clear();
    }
    if (size == best) found.push_back(current);
    for (Mask m = ahead; m; m &= m - 1) {
      const int x = std::countr_zero(m);
      const Mask grown = current | (Mask{1} << x);
      if (!group.sum_free(grown)) continue;
      self(self, x + 1, grown, open & ~blocked_by(grown));
    }
  };
  const Mask start = Mask{1} << 1;
  visit(visit, 2, start, group.full & ~blocked_by(start));

  std::vector<CyclicSet> all;
  for (Mask m : found) {
    if (std::popcount(m) != best) continue;
    for (auto& d : dilation_orbit(to_set(n, m))) all.push_back(std::move(d));
  }
  sort_sets(all);

  Catalog catalog;
  catalog.n = n;
  catalog.size_filter = best;
  catalog.sets = std::move(all);
  catalog.classes = dilation_classes(catalog.sets);
  return catalog;
}

ProbeReport characterization_probe(std::uint64_t p, Int s, const SearchOptions& options) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (s < 1) throw DomainError("s must be >= 1");
  const Int n = static_cast<Int>(p);
  ProbeReport report;
  report.p = p;
  report.s = s;

  const Catalog catalog = exhaustive_scsf(n, s, options);
  report.catalog_count = catalog.sets.size();

  std::vector<CyclicSet> constructed;
  const Int twice_t = n - 3 * s + 1;
  report.t_integer = twice_t > 0 && twice_t % 2 == 0;
  if (report.t_integer) {
    const STParameters params = STParameters::make(n, s);
    report.t = params.t;
    report.definition_valid = params.definition_valid;
    report.theorem_valid = params.theorem_valid;
    if (params.definition_valid) {
      const SpecialEnumeration specials = enumerate_special(params.t, options);
      report.special_count = specials.g;
      for (const auto& t_set : specials.sets)
        for (auto& d : dilation_orbit(build_st(params, t_set))) constructed.push_back(std::move(d));
      sort_sets(constructed);
    }
  }
  report.hypotheses_unmet = !report.theorem_valid;
  report.construction_count = constructed.size();

  std::set_difference(catalog.sets.begin(), catalog.sets.end(), constructed.begin(), constructed.end(),
                      std::back_inserter(report.catalog_extra), lex_less);
  std::set_difference(constructed.begin(), constructed.end(), catalog.sets.begin(), catalog.sets.end(),
                      std::back_inserter(report.construction_extra), lex_less);
  report.matched = catalog.sets.size() - report.catalog_extra.size();
  report.classification = report.catalog_extra.empty() && report.construction_extra.empty() ? "match" : "mismatch";

  const Int k = n / 3;
  const Int shift = p % 3 == 1 ? k - s : k + 1 - s;
  if (p % 3 != 0 && shift >= 2 && shift % 2 == 0) {
    const Int r = shift / 2;
    const Int t = p % 3 == 1 ? 3 * r + 1 : 3 * r;
    std::optional<std::uint64_t> g;
    if (report.t_integer && report.t == t && report.definition_valid) g = report.special_count;
    try {
      report.prediction = predicted_scsf_count(p, r, g, options);
    } catch (const BudgetError&) {
      report.prediction_budget_exceeded = true;
    }
  }
  return report;
}

}  // namespace sumfree
