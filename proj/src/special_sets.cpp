#include "sumfree/special_sets.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <string>

#include <json.hpp>

#include "sumfree/errors.hpp"

namespace sumfree {

bool is_t_special(const TCandidate& t_set) {
  if (static_cast<Int>(t_set.size()) != t_set.t()) return false;
  if (!st_sum_free_condition(t_set)) return false;
  return st_completeness_condition(t_set);
}

bool is_t_special_zero_fast(const TCandidate& t_set) {
  if (!t_set.contains(0)) throw DomainError("fast path inapplicable: 0 is not in T");
  return static_cast<Int>(t_set.size()) == t_set.t() && st_sum_free_condition(t_set);
}

bool is_t_special_mask(int t, std::uint64_t mask) {
  if (std::popcount(mask) != t) return false;
  const int top = 2 * t - 1;
  std::uint64_t twice = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) twice |= mask << std::countr_zero(m);
  for (std::uint64_t m = mask; m; m &= m - 1)
    if ((twice >> (top - std::countr_zero(m))) & 1u) return false;

  const int lowest = std::countr_zero(mask);
  std::uint64_t reflected = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) reflected |= std::uint64_t{1} << (top - std::countr_zero(m));
  const int width = top + lowest + 1;
  const std::uint64_t range = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  return (range & ~reflected & ~twice) == 0;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

// Next mask with the same popcount (Gosper's hack).
std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

SpecialEnumeration enumerate_special(Int t, const SearchOptions& options) {
  if (t < 1) throw DomainError("t must be >= 1");
  const std::uint64_t budget = options.budget ? options.budget : kDefaultSpecialBudget;
  const std::uint64_t required = binomial(static_cast<std::uint64_t>(2 * t), static_cast<std::uint64_t>(t));
  if (required > budget)
    throw BudgetError("C(" + std::to_string(2 * t) + ", " + std::to_string(t) + ") = " + std::to_string(required) +
                          " candidates exceed budget " + std::to_string(budget),
                      required, budget);

  SpecialEnumeration result;
  result.t = t;
  if (t > 16) throw DomainError("enumeration supports t <= 16 (word kernel), got t = " + std::to_string(t));

  const int width = static_cast<int>(2 * t);
  const int prefix_bits = std::min(width, 8);
  const int low_bits = width - prefix_bits;
  const std::size_t shards = std::size_t{1} << prefix_bits;
  std::vector<std::vector<std::uint64_t>> found(shards);

  parallel_for(shards, options.threads, [&](std::size_t prefix) {
    const int need = static_cast<int>(t) - std::popcount(prefix);
    if (need < 0 || need > low_bits) return;
    const std::uint64_t high = static_cast<std::uint64_t>(prefix) << low_bits;
    auto& out = found[prefix];
    if (need == 0) {
      if (is_t_special_mask(static_cast<int>(t), high)) out.push_back(high);
      return;
    }
    const std::uint64_t last = ((std::uint64_t{1} << need) - 1) << (low_bits - need);
    for (std::uint64_t low = (std::uint64_t{1} << need) - 1;; low = next_combination(low)) {
      const std::uint64_t mask = high | low;
      if (is_t_special_mask(static_cast<int>(t), mask)) out.push_back(mask);
      if (low == last) break;
    }
  });

  std::vector<std::uint64_t> masks;
  for (auto& shard : found) masks.insert(masks.end(), shard.begin(), shard.end());
  std::sort(masks.begin(), masks.end());
  for (std::uint64_t m : masks) result.sets.push_back(TCandidate::from_mask(t, m));
  result.g = result.sets.size();
  return result;
}

TCandidate lower_bound_family(Int t, const std::vector<Int>& index_set) {
  if (t < 1) throw DomainError("t must be >= 1");
  const Int lo = (2 * t + 2) / 3;  // ⌈2t/3⌉
  std::vector<bool> chosen(static_cast<std::size_t>(t), false);
  for (Int i : index_set) {
    if (i < lo || i > t - 1)
      throw DomainError("index " + std::to_string(i) + " outside [" + std::to_string(lo) + ", " +
                        std::to_string(t - 1) + "]");
    chosen[static_cast<std::size_t>(i)] = true;
  }
  std::vector<Int> members{0};
  for (Int i = lo; i <= t - 1; ++i) members.push_back(chosen[static_cast<std::size_t>(i)] ? i : 2 * t - 1 - i);
  for (Int x = 2 * t - lo; x <= 2 * t - 2; ++x) members.push_back(x);
  return TCandidate(t, members);
}

std::vector<TCandidate> lower_bound_family_all(Int t) {
  if (t < 1) throw DomainError("t must be >= 1");
  const Int lo = (2 * t + 2) / 3;
  const Int free_count = t - lo;
  std::vector<TCandidate> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << free_count); ++bits) {
    std::vector<Int> index_set;
    for (Int j = 0; j < free_count; ++j)
      if ((bits >> j) & 1u) index_set.push_back(lo + j);
    out.push_back(lower_bound_family(t, index_set));
  }
  return out;
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  for (; e; e >>= 1) {
    if (e & 1u) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ScsfPrediction predicted_scsf_count(std::uint64_t p, Int r, std::optional<std::uint64_t> g_value,
                                    const SearchOptions& options) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p % 3 == 0) throw DomainError("p = 3 is excluded (p ≡ 0 mod 3)");
  if (r < 1) throw DomainError("r must be >= 1");

  ScsfPrediction out;
  out.p = p;
  out.k = p / 3;
  out.residue = static_cast<int>(p % 3);
  out.r = r;
  const Int k = static_cast<Int>(out.k);
  if (out.residue == 1) {
    out.t = 3 * r + 1;
    out.size = k - 2 * r;
  } else {
    out.t = 3 * r;
    out.size = k - 2 * r + 1;
  }
  out.size_nonpositive = out.size <= 0;
  out.g = g_value ? *g_value : enumerate_special(out.t, options).g;
  const unsigned __int128 count = static_cast<unsigned __int128>((p - 1) / 2) * out.g;
  if (count > ~std::uint64_t{0}) throw DomainError("predicted count overflows 64 bits");
  out.count = static_cast<std::uint64_t>(count);
  return out;
}

GCache GCache::load(const std::string& path) {
  GCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  const auto doc = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.contains("g") || !doc["g"].is_object()) return cache;
  for (const auto& [key, value] : doc["g"].items()) {
    if (value.is_number_unsigned()) cache.store(std::stoll(key), value.get<std::uint64_t>());
  }
  return cache;
}

void GCache::save(const std::string& path) const {
  nlohmann::json doc;
  doc["g"] = nlohmann::json::object();
  for (const auto& [t, g] : table_) doc["g"][std::to_string(t)] = g;
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write g cache to " + path);
  out << doc.dump(2) << '\n';
}

std::optional<std::uint64_t> GCache::lookup(Int t) const {
  const auto it = table_.find(t);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

}  // namespace sumfree
