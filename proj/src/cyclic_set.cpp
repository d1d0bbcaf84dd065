#include "sumfree/cyclic_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "sumfree/errors.hpp"

namespace sumfree {

namespace {

void require_same_modulus(const CyclicSet& a, const CyclicSet& b, const char* op) {
  if (a.modulus() != b.modulus())
    throw DomainError(std::string(op) + ": modulus mismatch (" + std::to_string(a.modulus()) + " vs " +
                      std::to_string(b.modulus()) + ")");
}

// dst |= src rotated up by x, 0 <= x < n.
void or_rotated(BitVector& dst, const BitVector& src, std::size_t x) {
  dst.or_shifted_left(src, x);
  if (x != 0) dst.or_shifted_right(src, src.size() - x);
}

// Maximal runs of consecutive members in [0, n), as (start, length).
std::vector<std::pair<std::size_t, std::size_t>> runs_of(const BitVector& bits) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  bits.for_each([&](std::size_t i) {
    if (!runs.empty() && runs.back().first + runs.back().second == i)
      ++runs.back().second;
    else
      runs.emplace_back(i, 1);
  });
  return runs;
}

}  // namespace

CyclicSet::CyclicSet(Int n) : n_(n) {
  if (n < 1) throw DomainError("modulus must be >= 1, got " + std::to_string(n));
  bits_ = BitVector(static_cast<std::size_t>(n));
}

CyclicSet CyclicSet::from_elements(Int n, std::span<const Int> elements) {
  CyclicSet s(n);
  for (Int x : elements) {
    if (x < 0 || x >= n)
      throw DomainError("element " + std::to_string(x) + " outside [0, " + std::to_string(n - 1) + "]");
    s.bits_.set(static_cast<std::size_t>(x));
  }
  return s;
}

CyclicSet CyclicSet::full(Int n) {
  CyclicSet s(n);
  s.bits_.set_all();
  return s;
}

std::vector<Int> CyclicSet::elements() const {
  std::vector<Int> out;
  out.reserve(size());
  for_each([&](Int x) { out.push_back(x); });
  return out;
}

CyclicSet& CyclicSet::operator|=(const CyclicSet& o) {
  require_same_modulus(*this, o, "union");
  bits_ |= o.bits_;
  return *this;
}

CyclicSet& CyclicSet::operator&=(const CyclicSet& o) {
  require_same_modulus(*this, o, "intersection");
  bits_ &= o.bits_;
  return *this;
}

CyclicSet& CyclicSet::operator-=(const CyclicSet& o) {
  require_same_modulus(*this, o, "difference");
  bits_.and_not(o.bits_);
  return *this;
}

CyclicSet operator|(CyclicSet a, const CyclicSet& b) { return a |= b; }
CyclicSet operator&(CyclicSet a, const CyclicSet& b) { return a &= b; }
CyclicSet operator-(CyclicSet a, const CyclicSet& b) { return a -= b; }

CyclicSet interval(Int n, Int a, Int b) {
  if (a > b) throw DomainError("interval: empty range [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  if (b - a >= n)
    throw DomainError("interval covers group: [" + std::to_string(a) + ", " + std::to_string(b) + "] in Z_" +
                      std::to_string(n));
  CyclicSet s(n);
  const Int lo = mod(a, n);
  const Int hi = lo + (b - a);
  auto& bits = s.mutable_bits();
  if (hi < n) {
    bits.set_range(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
  } else {
    bits.set_range(static_cast<std::size_t>(lo), static_cast<std::size_t>(n - 1));
    bits.set_range(0, static_cast<std::size_t>(hi - n));
  }
  return s;
}

CyclicSet complement(const CyclicSet& a) {
  CyclicSet c = a;
  c.mutable_bits().flip();
  return c;
}

CyclicSet translate(const CyclicSet& a, Int x) {
  CyclicSet out(a.modulus());
  or_rotated(out.mutable_bits(), a.bits(), static_cast<std::size_t>(mod(x, a.modulus())));
  return out;
}

CyclicSet sumset(const CyclicSet& a, const CyclicSet& b) {
  require_same_modulus(a, b, "sumset");
  CyclicSet out(a.modulus());
  if (a.empty() || b.empty()) return out;

  auto runs_a = runs_of(a.bits());
  auto runs_b = runs_of(b.bits());
  const bool swap = runs_b.size() < runs_a.size();
  const auto& outer_runs = swap ? runs_b : runs_a;
  const BitVector& inner = swap ? a.bits() : b.bits();

  // inner + [0, len-1], keyed by len
  std::map<std::size_t, BitVector> widened;
  auto widen = [&](std::size_t len) -> const BitVector& {
    auto it = widened.find(len);
    if (it != widened.end()) return it->second;
    BitVector cur = inner;
    for (std::size_t covered = 1; covered < len;) {
      const std::size_t step = std::min(covered, len - covered);
      const BitVector prev = cur;
      or_rotated(cur, prev, step);
      covered += step;
    }
    return widened.emplace(len, std::move(cur)).first->second;
  };

  auto& dst = out.mutable_bits();
  for (auto [start, len] : outer_runs) or_rotated(dst, widen(len), start);
  return out;
}

CyclicSet negate(const CyclicSet& a) {
  const Int n = a.modulus();
  CyclicSet out(n);
  a.for_each([&](Int x) { out.insert(n - x); });
  return out;
}

bool is_symmetric(const CyclicSet& a) { return a == negate(a); }

bool is_sum_free(const CyclicSet& a) { return !a.bits().intersects(sumset(a, a).bits()); }

bool is_complete(const CyclicSet& a) { return (a | sumset(a, a)).bits().all(); }

Properties classify(const CyclicSet& a) {
  const CyclicSet doubled = sumset(a, a);
  Properties p;
  p.symmetric = is_symmetric(a);
  p.sum_free = !a.bits().intersects(doubled.bits());
  p.complete = (a | doubled).bits().all();
  p.size = a.size();
  return p;
}

namespace {

void require_half_cover(const CyclicSet& a, const CyclicSet& half) {
  require_same_modulus(a, half, "half-range predicate");
  if (!is_symmetric(a)) throw DomainError("half-range predicate requires a symmetric set");
  if (!(half | negate(half)).bits().all()) throw DomainError("half-range set G1 does not satisfy G1 ∪ -G1 = Z_n");
}

}  // namespace

bool half_range_sum_free(const CyclicSet& a, const CyclicSet& half) {
  require_half_cover(a, half);
  const CyclicSet h = a & half;
  return !sumset(h, h).bits().intersects(a.bits());
}

bool half_range_complete(const CyclicSet& a, const CyclicSet& half) {
  require_half_cover(a, half);
  return (half - a).bits().is_subset_of(sumset(a, a).bits());
}

Int gcd(Int a, Int b) { return std::gcd(a, b); }

std::vector<Int> units(Int n) {
  if (n < 1) throw DomainError("modulus must be >= 1");
  std::vector<Int> out;
  for (Int u = 0; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  return out;
}

Int unit_inverse(Int u, Int n) {
  Int old_r = mod(u, n), r = n, old_s = 1, s = 0;
  while (r != 0) {
    const Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1 && n != 1) throw DomainError(std::to_string(u) + " is not a unit mod " + std::to_string(n));
  return mod(old_s, n);
}

CyclicSet dilate(const CyclicSet& a, Int d) {
  const Int n = a.modulus();
  if (std::gcd(mod(d, n), n) != 1)
    throw DomainError("not a unit: gcd(" + std::to_string(d) + ", " + std::to_string(n) + ") != 1");
  const Int m = mod(d, n);
  CyclicSet out(n);
  a.for_each([&](Int x) { out.insert(static_cast<Int>((static_cast<__int128>(x) * m) % n)); });
  return out;
}

bool lex_less(const CyclicSet& a, const CyclicSet& b) {
  require_same_modulus(a, b, "lex_less");
  return a.bits().lex_less(b.bits());
}

std::vector<CyclicSet> dilation_orbit(const CyclicSet& a) {
  std::vector<CyclicSet> orbit;
  for (Int u : units(a.modulus())) orbit.push_back(dilate(a, u));
  std::sort(orbit.begin(), orbit.end(), lex_less);
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

CyclicSet canonical_dilation_class(const CyclicSet& a) {
  CyclicSet best = a;
  for (Int u : units(a.modulus())) {
    CyclicSet d = dilate(a, u);
    if (lex_less(d, best)) best = std::move(d);
  }
  return best;
}

}  // namespace sumfree
