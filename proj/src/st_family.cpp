#include "sumfree/st_family.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sumfree/errors.hpp"
#include "sumfree/special_sets.hpp"

namespace sumfree {

TCandidate::TCandidate(Int t, std::span<const Int> members) : t_(t) {
  if (t < 1) throw DomainError("t must be >= 1, got " + std::to_string(t));
  bits_ = BitVector(static_cast<std::size_t>(2 * t));
  for (Int x : members) {
    if (x < 0 || x > 2 * t - 1)
      throw DomainError("member " + std::to_string(x) + " outside [0, " + std::to_string(2 * t - 1) + "]");
    bits_.set(static_cast<std::size_t>(x));
  }
}

TCandidate TCandidate::from_mask(Int t, std::uint64_t mask) {
  if (t < 1 || 2 * t > 64) throw DomainError("from_mask requires 1 <= t <= 32");
  if (2 * t < 64 && (mask >> (2 * t)) != 0) throw DomainError("mask has bits outside [0, 2t-1]");
  std::vector<Int> members;
  for (std::uint64_t m = mask; m; m &= m - 1) members.push_back(std::countr_zero(m));
  return TCandidate(t, members);
}

Int TCandidate::min() const {
  if (empty()) throw DomainError("min of empty T");
  return static_cast<Int>(bits_.find_first());
}

std::vector<Int> TCandidate::members() const {
  std::vector<Int> out;
  bits_.for_each([&](std::size_t i) { out.push_back(static_cast<Int>(i)); });
  return out;
}

std::uint64_t TCandidate::mask() const {
  if (2 * t_ > 64) throw DomainError("mask requires t <= 32");
  return bits_.words().empty() ? 0 : bits_.words()[0];
}

BitVector integer_sumset(const BitVector& a, const BitVector& b, std::size_t limit) {
  if (a.size() == 0 || b.size() == 0) return BitVector(limit);
  const std::size_t full = a.size() + b.size() - 1;
  BitVector out(limit > 0 ? std::min(limit, full) : full);
  const bool a_smaller = a.count() <= b.count();
  const BitVector& outer = a_smaller ? a : b;
  const BitVector& inner = a_smaller ? b : a;
  outer.for_each([&](std::size_t i) { out.or_shifted_left(inner, i); });
  return out;
}

STParameters STParameters::make(Int n, Int s) {
  const Int twice_t = n - 3 * s + 1;
  if (n < 1 || s < 1) throw ParameterError("n and s must be positive");
  if (twice_t <= 0 || twice_t % 2 != 0)
    throw ParameterError("t = (n - 3s + 1)/2 = (" + std::to_string(n) + " - " + std::to_string(3 * s) +
                         " + 1)/2 is not a positive integer");
  STParameters p;
  p.n = n;
  p.s = s;
  p.t = twice_t / 2;
  p.definition_valid = n <= 4 * s - 3;
  p.theorem_valid = p.definition_valid && 2 * n <= 7 * s - 2;
  return p;
}

CyclicSet build_st(const STParameters& params, const TCandidate& t_set) {
  if (!params.definition_valid)
    throw ParameterError("S_T undefined: n = " + std::to_string(params.n) + " > 4s - 3 = " +
                         std::to_string(4 * params.s - 3));
  if (t_set.t() != params.t)
    throw DomainError("T is a subset of [0, " + std::to_string(2 * t_set.t() - 1) + "] but t = " +
                      std::to_string(params.t));
  const Int n = params.n;
  const Int s = params.s;
  CyclicSet out = interval(n, n - 2 * s + 1, 2 * s - 1);
  t_set.bits().for_each([&](std::size_t x) {
    out.insert(s + static_cast<Int>(x));
    out.insert(-(s + static_cast<Int>(x)));
  });
  return out;
}

bool st_sum_free_condition(const TCandidate& t_set) {
  if (t_set.empty()) return true;
  const std::size_t target = static_cast<std::size_t>(2 * t_set.t() - 1);
  const BitVector twice = integer_sumset(t_set.bits(), t_set.bits(), target + 1);
  const BitVector thrice = integer_sumset(twice, t_set.bits(), target + 1);
  return !thrice.test(target);
}

bool st_completeness_condition(const TCandidate& t_set) {
  if (t_set.empty()) throw DomainError("completeness condition requires a nonempty T");
  const Int t = t_set.t();
  const Int top = 2 * t - 1 + t_set.min();
  const BitVector twice = integer_sumset(t_set.bits(), t_set.bits());
  for (Int i = 0; i <= top; ++i) {
    const Int reflected = 2 * t - 1 - i;
    if (reflected >= 0 && t_set.contains(reflected)) continue;
    if (!twice.test(static_cast<std::size_t>(i))) return false;
  }
  return true;
}

EquivalenceReport verify_st_equivalence(Int n, Int s, const SearchOptions& options) {
  const STParameters params = STParameters::make(n, s);
  if (!params.theorem_valid)
    throw HypothesisError("(n, s) = (" + std::to_string(n) + ", " + std::to_string(s) +
                          ") violates n <= 7s/2 - 1");
  const std::uint64_t budget = options.budget ? options.budget : kDefaultEquivalenceBudget;
  if (params.t > 31 || (std::uint64_t{1} << (2 * params.t)) > budget) {
    const std::uint64_t required = params.t > 31 ? ~std::uint64_t{0} : std::uint64_t{1} << (2 * params.t);
    throw BudgetError("2^(2t) = 2^" + std::to_string(2 * params.t) + " candidates exceed budget " +
                          std::to_string(budget),
                      required, budget);
  }

  const std::uint64_t total = std::uint64_t{1} << (2 * params.t);
  const std::uint64_t chunk = 1024;
  const std::size_t shards = static_cast<std::size_t>((total + chunk - 1) / chunk);
  struct Partial {
    std::uint64_t special = 0;
    std::vector<std::uint64_t> mismatches;
  };
  std::vector<Partial> partials(shards);

  parallel_for(shards, options.threads, [&](std::size_t shard) {
    Partial& part = partials[shard];
    const std::uint64_t lo = shard * chunk;
    const std::uint64_t hi = std::min(total, lo + chunk);
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const TCandidate t_set = TCandidate::from_mask(params.t, mask);
      const bool special = is_t_special(t_set);
      const Properties props = classify(build_st(params, t_set));
      const bool direct = props.sum_free && props.complete && static_cast<Int>(props.size) == params.s;
      if (special) ++part.special;
      if (special != direct) part.mismatches.push_back(mask);
    }
  });

  EquivalenceReport report;
  report.params = params;
  report.candidates = total;
  for (auto& part : partials) {
    report.special_count += part.special;
    report.counterexamples.insert(report.counterexamples.end(), part.mismatches.begin(), part.mismatches.end());
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end());
  return report;
}

}  // namespace sumfree
