#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sumfree/bit_vector.hpp"

namespace sumfree {

using Int = std::int64_t;

/// Least non-negative residue of x modulo n (n >= 1).
constexpr Int mod(Int x, Int n) {
  const Int r = x % n;
  return r < 0 ? r + n : r;
}

/// A subset of the cyclic group Z_n, stored as an n-bit vector
/// (bit i set iff i is a member).
class CyclicSet {
 public:
  CyclicSet() = default;

  /// The empty subset of Z_n. Throws DomainError unless n >= 1.
  explicit CyclicSet(Int n);

  /// Builds a set from residues in [0, n-1]; anything else is a DomainError.
  static CyclicSet from_elements(Int n, std::span<const Int> elements);
  static CyclicSet from_elements(Int n, std::initializer_list<Int> elements) {
    return from_elements(n, std::span<const Int>(elements.begin(), elements.size()));
  }
  static CyclicSet full(Int n);

  Int modulus() const noexcept { return n_; }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Membership of x mod n.
  bool contains(Int x) const { return bits_.test(static_cast<std::size_t>(mod(x, n_))); }
  void insert(Int x) { bits_.set(static_cast<std::size_t>(mod(x, n_))); }
  void erase(Int x) { bits_.reset(static_cast<std::size_t>(mod(x, n_))); }

  /// Members in ascending order.
  std::vector<Int> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    bits_.for_each([&](std::size_t i) { f(static_cast<Int>(i)); });
  }

  const BitVector& bits() const noexcept { return bits_; }
  BitVector& mutable_bits() noexcept { return bits_; }

  CyclicSet& operator|=(const CyclicSet& o);
  CyclicSet& operator&=(const CyclicSet& o);
  CyclicSet& operator-=(const CyclicSet& o);

  friend bool operator==(const CyclicSet&, const CyclicSet&) = default;

 private:
  Int n_ = 0;
  BitVector bits_;
};

CyclicSet operator|(CyclicSet a, const CyclicSet& b);
CyclicSet operator&(CyclicSet a, const CyclicSet& b);
/// Set difference.
CyclicSet operator-(CyclicSet a, const CyclicSet& b);

/// {a mod n, ..., b mod n}. Requires a <= b and b - a < n; an interval
/// covering the whole group must be requested with CyclicSet::full.
CyclicSet interval(Int n, Int a, Int b);

CyclicSet complement(const CyclicSet& a);

/// x + A.
CyclicSet translate(const CyclicSet& a, Int x);

/// A + B = {x + y : x in A, y in B}. Moduli must agree.
///
/// Word-parallel shift-OR over the maximal runs of the operand with fewer
/// runs; each run [r, r+L-1] contributes B + [0, L-1] (built by doubling)
/// rotated by r.
CyclicSet sumset(const CyclicSet& a, const CyclicSet& b);
inline CyclicSet operator+(const CyclicSet& a, const CyclicSet& b) { return sumset(a, b); }

/// -A = {-x : x in A}.
CyclicSet negate(const CyclicSet& a);
inline CyclicSet operator-(const CyclicSet& a) { return negate(a); }

bool is_symmetric(const CyclicSet& a);
bool is_sum_free(const CyclicSet& a);
bool is_complete(const CyclicSet& a);

struct Properties {
  bool symmetric = false;
  bool sum_free = false;
  bool complete = false;
  std::size_t size = 0;

  bool symmetric_complete_sum_free() const { return symmetric && sum_free && complete; }
  friend bool operator==(const Properties&, const Properties&) = default;
};

/// All three predicates from a single sumset evaluation.
Properties classify(const CyclicSet& a);

/// Sum-freeness of a symmetric A checked only on pairs from G1 ∩ A, where
/// G1 ∪ -G1 covers the group. Throws DomainError if either precondition fails.
bool half_range_sum_free(const CyclicSet& a, const CyclicSet& half);

/// Completeness of a symmetric A checked only on G1 \ A.
bool half_range_complete(const CyclicSet& a, const CyclicSet& half);

Int gcd(Int a, Int b);

/// Units of Z_n in ascending order.
std::vector<Int> units(Int n);

/// Multiplicative inverse of a unit u modulo n.
Int unit_inverse(Int u, Int n);

/// d * A. Throws DomainError if gcd(d, n) != 1.
CyclicSet dilate(const CyclicSet& a, Int d);

/// Lexicographic order on bit-strings read from index 0 upward.
bool lex_less(const CyclicSet& a, const CyclicSet& b);

/// Distinct dilations of A by units, in lexicographic bit order.
std::vector<CyclicSet> dilation_orbit(const CyclicSet& a);

/// Lexicographically least dilation of A.
CyclicSet canonical_dilation_class(const CyclicSet& a);

}  // namespace sumfree
