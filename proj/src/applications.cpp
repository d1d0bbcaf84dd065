#include "sumfree/applications.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "sumfree/errors.hpp"
#include "sumfree/parallel.hpp"
#include "sumfree/philox.hpp"
#include "sumfree/special_sets.hpp"

namespace sumfree {

CayleyGraph::CayleyGraph(CyclicSet generators) : generators_(std::move(generators)) {
  if (generators_.contains(0)) throw DomainError("Cayley generators must not contain 0");
  if (!is_symmetric(generators_)) throw DomainError("Cayley generators must be symmetric");
}

std::vector<std::pair<Int, Int>> CayleyGraph::edges() const {
  std::vector<std::pair<Int, Int>> out;
  const Int n = vertex_count();
  for (Int u = 0; u < n; ++u)
    neighbors(u).for_each([&](Int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

namespace {

// Eccentricity of `source` by level-synchronous BFS; the next frontier is
// (frontier + S) \ visited. Returns -1 if some vertex is unreachable.
Int eccentricity(const CayleyGraph& g, Int source) {
  const Int n = g.vertex_count();
  CyclicSet visited(n);
  visited.insert(source);
  CyclicSet frontier = visited;
  Int level = 0;
  for (;;) {
    CyclicSet next = sumset(frontier, g.generators()) - visited;
    if (next.empty()) break;
    ++level;
    visited |= next;
    frontier = std::move(next);
  }
  return visited.size() == static_cast<std::size_t>(n) ? level : -1;
}

}  // namespace

GraphProperties graph_properties(const CayleyGraph& g, std::optional<DiameterSampling> sampling) {
  const Int n = g.vertex_count();
  if (n > kExactDiameterLimit && !sampling)
    throw DomainError("exact diameter is limited to n <= " + std::to_string(kExactDiameterLimit) +
                      "; use diameter sampling");
  GraphProperties props;

  std::vector<CyclicSet> adjacency;
  adjacency.reserve(static_cast<std::size_t>(n));
  for (Int u = 0; u < n; ++u) adjacency.push_back(g.neighbors(u));

  props.degree = static_cast<Int>(adjacency.front().size());
  for (const auto& row : adjacency)
    if (static_cast<Int>(row.size()) != props.degree) props.degree = -1;

  props.triangle_free = true;
  for (Int u = 0; u < n && props.triangle_free; ++u) {
    const auto& row = adjacency[static_cast<std::size_t>(u)];
    row.for_each([&](Int v) {
      if (v > u && row.bits().intersects(adjacency[static_cast<std::size_t>(v)].bits())) props.triangle_free = false;
    });
  }

  std::vector<Int> sources;
  if (sampling && sampling->sources < n) {
    props.diameter_sampled = true;
    for (Int i = 0; i < sampling->sources; ++i) {
      const auto word = Philox4x32::generate({static_cast<std::uint32_t>(i), 0, 0, 0xD1A7u},
                                             {static_cast<std::uint32_t>(sampling->seed),
                                              static_cast<std::uint32_t>(sampling->seed >> 32)});
      sources.push_back(static_cast<Int>(((std::uint64_t{word[1]} << 32) | word[0]) % static_cast<std::uint64_t>(n)));
    }
  } else {
    sources.resize(static_cast<std::size_t>(n));
    std::iota(sources.begin(), sources.end(), Int{0});
  }
  props.diameter_sources = static_cast<Int>(sources.size());
  props.diameter = 0;
  for (Int source : sources) {
    const Int ecc = eccentricity(g, source);
    if (ecc < 0) {
      props.diameter = -1;
      break;
    }
    props.diameter = std::max(props.diameter, ecc);
  }
  return props;
}

std::string to_dot(const CayleyGraph& g) {
  std::ostringstream out;
  out << "graph cayley_Z" << g.vertex_count() << " {\n";
  for (Int u = 0; u < g.vertex_count(); ++u) out << "  " << u << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const CayleyGraph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

PartitionReport dioid_partition(const CyclicSet& s) {
  const Int p = s.modulus();
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p)))
    throw DomainError("dioid partition needs a prime p >= 5, got " + std::to_string(p));
  if (!classify(s).symmetric_complete_sum_free())
    throw DomainError("set is not symmetric complete sum-free in Z_" + std::to_string(p));

  PartitionReport report;
  report.p = p;
  CyclicSet zero(p);
  zero.insert(0);
  CyclicSet rest = sumset(s, s);
  rest.erase(0);
  report.parts = {zero, s, rest};

  std::size_t total = 0;
  CyclicSet cover(p);
  for (const auto& part : report.parts) {
    total += part.size();
    cover |= part;
  }
  report.parts_partition_group = total == static_cast<std::size_t>(p) && cover.bits().all();

  auto is_union_of_parts = [&](const CyclicSet& x) {
    for (const auto& part : report.parts) {
      const CyclicSet common = x & part;
      if (!common.empty() && common != part) return false;
    }
    return true;
  };
  report.products_are_unions = true;
  for (const auto& a : report.parts)
    for (const auto& b : report.parts)
      if (!is_union_of_parts(sumset(a, b))) report.products_are_unions = false;

  report.identity_part = true;
  for (const auto& part : report.parts)
    if (sumset(zero, part) != part || sumset(part, zero) != part) report.identity_part = false;

  report.closed_under_inverse = true;
  for (const auto& part : report.parts) {
    const CyclicSet inverse = negate(part);
    bool found = false;
    for (const auto& other : report.parts) found = found || inverse == other;
    report.closed_under_inverse = report.closed_under_inverse && found;
  }
  return report;
}

bool process_coin(std::uint64_t seed, std::uint64_t trial, Int z) {
  const auto block = static_cast<std::uint64_t>(z) / 128;
  const auto out = Philox4x32::generate(
      {static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32), static_cast<std::uint32_t>(trial),
       static_cast<std::uint32_t>(trial >> 32)},
      {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)});
  const auto bit = static_cast<unsigned>(z % 128);
  return (out[bit / 32] >> (bit % 32)) & 1u;
}

namespace {

struct TrialOutcome {
  bool contained = true;
  std::uint64_t joined = 0;
};

TrialOutcome run_trial(const ProcessConfig& config, std::uint64_t trial) {
  const auto horizon = static_cast<std::size_t>(config.horizon);
  BitVector members(horizon + 1);
  BitVector sums(horizon + 1);
  TrialOutcome outcome;

  const std::uint32_t key[2] = {static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32)};
  Philox4x32::Counter block{};
  std::uint64_t block_index = ~std::uint64_t{0};

  for (std::size_t z = 1; z <= horizon; ++z) {
    if (sums.test(z)) continue;
    const std::uint64_t wanted = z / 128;
    if (wanted != block_index) {
      block_index = wanted;
      block = Philox4x32::generate({static_cast<std::uint32_t>(wanted), static_cast<std::uint32_t>(wanted >> 32),
                                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)},
                                   {key[0], key[1]});
    }
    const auto bit = static_cast<unsigned>(z % 128);
    if (((block[bit / 32] >> (bit % 32)) & 1u) == 0) continue;
    if (config.conditioning && !config.conditioning->contains(static_cast<Int>(z))) {
      outcome.contained = false;
      return outcome;
    }
    members.set(z);
    ++outcome.joined;
    sums.or_shifted_left(members, z);
  }
  return outcome;
}

}  // namespace

SimulationReport simulate_random_sumfree(const ProcessConfig& config) {
  if (config.horizon < 1) throw DomainError("horizon must be >= 1");
  if (config.trials < 1) throw DomainError("trials must be >= 1");

  std::vector<TrialOutcome> outcomes(config.trials);
  const std::size_t chunk = 64;
  const std::size_t shards = (outcomes.size() + chunk - 1) / chunk;
  parallel_for(shards, config.threads, [&](std::size_t shard) {
    const std::size_t end = std::min(outcomes.size(), (shard + 1) * chunk);
    for (std::size_t i = shard * chunk; i < end; ++i) outcomes[i] = run_trial(config, i);
  });

  SimulationReport report;
  report.horizon = config.horizon;
  report.trials = config.trials;
  report.seed = config.seed;
  std::uint64_t joined_sum = 0;
  unsigned __int128 joined_sq = 0;
  for (const auto& o : outcomes) {
    if (!o.contained) continue;
    ++report.contained;
    joined_sum += o.joined;
    joined_sq += static_cast<unsigned __int128>(o.joined) * o.joined;
  }

  const double trials = static_cast<double>(config.trials);
  const double freq = static_cast<double>(report.contained) / trials;
  report.containment_frequency = freq;
  const double z = 1.959963984540054;
  const double denom = 1.0 + z * z / trials;
  const double centre = (freq + z * z / (2 * trials)) / denom;
  const double half = z * std::sqrt(freq * (1 - freq) / trials + z * z / (4 * trials * trials)) / denom;
  report.containment_low = centre - half;
  report.containment_high = centre + half;

  const double horizon = static_cast<double>(config.horizon);
  if (report.contained > 0) {
    const double c = static_cast<double>(report.contained);
    const double mean_joined = static_cast<double>(joined_sum) / c;
    report.conditional_density = mean_joined / horizon;
    if (report.contained > 1) {
      const double var = (static_cast<double>(joined_sq) - static_cast<double>(joined_sum) * mean_joined) / (c - 1);
      report.conditional_density_stderr = std::sqrt(std::max(0.0, var) / c) / horizon;
    }
  }
  if (config.conditioning)
    report.reference_density =
        static_cast<double>(config.conditioning->size()) / (2.0 * static_cast<double>(config.conditioning->modulus()));
  return report;
}

}  // namespace sumfree
