#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumfree/cyclic_set.hpp"

namespace sumfree {

/// Cay(Z_n, S): vertices Z_n, u ~ v iff u - v ∈ S.
class CayleyGraph {
 public:
  /// Throws DomainError unless S is symmetric and 0 ∉ S.
  explicit CayleyGraph(CyclicSet generators);

  Int vertex_count() const noexcept { return generators_.modulus(); }
  const CyclicSet& generators() const noexcept { return generators_; }
  CyclicSet neighbors(Int u) const { return translate(generators_, u); }

  /// Edges (u, v) with u < v, ordered lexicographically.
  std::vector<std::pair<Int, Int>> edges() const;

 private:
  CyclicSet generators_;
};

inline CayleyGraph cayley_graph(const CyclicSet& s) { return CayleyGraph(s); }

struct GraphProperties {
  /// Common degree, or -1 if the graph is not regular.
  Int degree = -1;
  bool triangle_free = false;
  /// -1 if disconnected.
  Int diameter = -1;
  /// True when the diameter is the maximum eccentricity over sampled sources only.
  bool diameter_sampled = false;
  Int diameter_sources = 0;
};

struct DiameterSampling {
  Int sources = 0;
  std::uint64_t seed = 0;
};

/// Largest vertex count for which the exact (all-sources) diameter is computed.
inline constexpr Int kExactDiameterLimit = 10000;

/// Degree by neighbourhood popcount, triangles by common-neighbour bitmask
/// on every edge, diameter by BFS from every vertex (or from a seeded
/// sample of sources when `sampling` is given). Throws DomainError for
/// n > kExactDiameterLimit without sampling.
GraphProperties graph_properties(const CayleyGraph& g, std::optional<DiameterSampling> sampling = std::nullopt);

std::string to_dot(const CayleyGraph& g);
/// One "u v" line per edge with u < v.
std::string to_edge_list(const CayleyGraph& g);

struct PartitionReport {
  Int p = 0;
  /// {0}, S, (S+S) \ {0}.
  std::vector<CyclicSet> parts;
  /// Every setwise sum of two parts is a union of parts.
  bool products_are_unions = false;
  /// {0} + P = P for every part P.
  bool identity_part = false;
  /// -P is a part for every part P.
  bool closed_under_inverse = false;
  bool parts_partition_group = false;

  bool all_axioms() const { return products_are_unions && identity_part && closed_under_inverse && parts_partition_group; }
};

/// The 3-part partition {{0}, S, (S+S) \ {0}} of Z_p with each axiom checked
/// by explicit sumsets. Throws DomainError unless p >= 5 is prime and S is
/// symmetric, complete and sum-free.
PartitionReport dioid_partition(const CyclicSet& s);

struct ProcessConfig {
  Int horizon = 1;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  /// Membership set M_S is all positive integers congruent to an element of S.
  std::optional<CyclicSet> conditioning;
  unsigned threads = 0;
};

struct SimulationReport {
  Int horizon = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t contained = 0;
  double containment_frequency = 0.0;
  /// Wilson score interval, 95%.
  double containment_low = 0.0;
  double containment_high = 0.0;
  /// Mean of |R ∩ [1, N]| / N over contained trials.
  double conditional_density = 0.0;
  double conditional_density_stderr = 0.0;
  /// |S| / (2n) when conditioning on S ⊆ Z_n.
  std::optional<double> reference_density;
};

/// Random sum-free process: scan z = 1..N; z is free iff z ∉ R + R; free z
/// joins R with probability 1/2. The coin for (trial, z) is bit z mod 128
/// of Philox4x32-10 at counter (z / 128, trial) under key `seed`. A trial
/// stops at the first joined element outside M_S.
SimulationReport simulate_random_sumfree(const ProcessConfig& config);

/// The coin used for step z of a trial.
bool process_coin(std::uint64_t seed, std::uint64_t trial, Int z);

}  // namespace sumfree
