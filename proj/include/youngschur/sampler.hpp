#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <vector>

#include "youngschur/measures.hpp"

namespace youngschur {

/// Independent pseudo-random stream for sample `index` of a run seeded with `seed`:
/// mt19937_64 keyed through seed_seq on both words, so results do not depend on scheduling.
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index);

/// Cumulative row over exact probabilities. A 64-bit draw u selects the first
/// outcome i with u <= floor(C_i * 2^64), C_i the i-th cumulative probability;
/// a draw sitting exactly on a boundary therefore resolves to the lower interval.
class CumulativeRow {
 public:
  explicit CumulativeRow(const std::vector<ExactRational>& probabilities);

  std::size_t pick(std::uint64_t draw) const noexcept;
  std::size_t size() const noexcept { return thresholds_.size(); }

 private:
  std::vector<std::uint64_t> thresholds_;
};

template <class Diagram>
struct GrowthTrace {
  std::vector<Diagram> diagrams;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  const Diagram& final_diagram() const { return diagrams.back(); }
};

using YoungTrace = GrowthTrace<Partition>;
using SchurTrace = GrowthTrace<StrictPartition>;

/// Growth on the Young graph by the up kernel (Plancherel or z-measure).
class YoungGrowthSampler {
 public:
  explicit YoungGrowthSampler(YoungKernel kernel, int cap = kDefaultYoungCap);
  ~YoungGrowthSampler();

  YoungTrace sample(int n, std::uint64_t seed, std::uint64_t index = 0) const;

 private:
  struct Cache;
  YoungKernel kernel_;
  int cap_;
  std::unique_ptr<Cache> cache_;
};

/// Growth on the Schur graph by the up kernel (shifted Plancherel or alpha).
class SchurGrowthSampler {
 public:
  explicit SchurGrowthSampler(SchurKernel kernel, int cap = kDefaultSchurCap);
  ~SchurGrowthSampler();

  SchurTrace sample(int n, std::uint64_t seed, std::uint64_t index = 0) const;

 private:
  struct Cache;
  SchurKernel kernel_;
  int cap_;
  std::unique_ptr<Cache> cache_;
};

/// Growth on the Young graph along D-symmetric diagrams: from a D-symmetric diagram
/// add a box by the z(alpha), z'(alpha) up kernel, then add the unique box restoring
/// D-symmetry. The trace has 2n+1 diagrams; even indices hold D(lambda^(m)).
class ForcedDSymSampler {
 public:
  explicit ForcedDSymSampler(AlphaParam alpha, int cap = kDefaultSchurCap);
  ~ForcedDSymSampler();

  /// Throws Error(completion_failure) if some addition from a D-symmetric diagram
  /// cannot be completed.
  YoungTrace sample(int n, std::uint64_t seed, std::uint64_t index = 0) const;

 private:
  struct Cache;
  ZParams zparams_;
  int cap_;
  std::unique_ptr<Cache> cache_;
};

enum class SampleMethod { direct, forced_sym };

// Single-trace conveniences; each builds a fresh sampler.
YoungTrace sample_growth(const MeasureSpec& spec, int n, std::uint64_t seed);
SchurTrace sample_growth_schur(const MeasureSpec& spec, int n, std::uint64_t seed);
YoungTrace sample_forced_dsym(int n, const AlphaParam& a, std::uint64_t seed);

/// Traces for indices 0..count-1, split across `threads` workers; output is in index order.
template <class Sampler>
auto sample_many(const Sampler& sampler, int n, std::uint64_t seed, std::size_t count, unsigned threads = 1)
    -> std::vector<decltype(sampler.sample(n, seed, 0))>;

template <class Diagram>
struct EmpiricalTable {
  int level = 0;
  std::map<Diagram, std::uint64_t, std::greater<>> counts;
  std::uint64_t total = 0;

  void add(const Diagram& d) {
    ++counts[d];
    ++total;
  }
};

/// Throws Error(level_mismatch) when traces end at different levels.
template <class Diagram>
EmpiricalTable<Diagram> empirical_distribution(const std::vector<GrowthTrace<Diagram>>& traces);
template <class Diagram>
EmpiricalTable<Diagram> empirical_from_finals(const std::vector<Diagram>& finals);

/// Final diagrams of forced traces, undoubled to strict partitions.
std::vector<StrictPartition> undoubled_finals(const std::vector<YoungTrace>& traces);

/// 1/2 sum |count/N - p|, exact. Throws Error(level_mismatch).
template <class Diagram>
ExactRational tv_distance(const EmpiricalTable<Diagram>& e, const DistributionTable<Diagram>& d);

/// 1/2 sum |p - q| over the union of supports.
template <class Diagram>
ExactRational tv_distance(const DistributionTable<Diagram>& a, const DistributionTable<Diagram>& b);

}  // namespace youngschur

#include "youngschur/sampler_impl.hpp"
