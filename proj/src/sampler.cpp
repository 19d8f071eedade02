#include "youngschur/sampler.hpp"

#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace youngschur {

std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

CumulativeRow::CumulativeRow(const std::vector<ExactRational>& probabilities) {
  BigInt two64;
  mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
  const BigInt max_draw = two64 - 1;
  ExactRational cumulative = 0;
  for (const auto& q : probabilities) {
    cumulative += q;
    ExactRational scaled = cumulative * ExactRational(two64);
    BigInt t;
    mpz_fdiv_q(t.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    // floor(C * 2^64) == 2^64 only at C == 1, where every draw qualifies.
    if (t > max_draw) t = max_draw;
    thresholds_.push_back(std::stoull(t.get_str()));
  }
  if (cumulative != 1) throw std::logic_error("row probabilities sum to " + to_string(cumulative));
}

std::size_t CumulativeRow::pick(std::uint64_t draw) const noexcept {
  for (std::size_t i = 0; i + 1 < thresholds_.size(); ++i)
    if (draw <= thresholds_[i]) return i;
  return thresholds_.size() - 1;
}

namespace {

template <class Key, class Row>
class RowCache {
 public:
  template <class Build>
  const Row& get(const Key& key, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = rows_.find(key); it != rows_.end()) return *it->second;
    }
    auto row = std::make_unique<Row>(build());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = rows_.try_emplace(key, std::move(row));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<Key, std::unique_ptr<Row>> rows_;
};

template <class Diagram>
struct SampledRow {
  std::vector<Diagram> targets;
  CumulativeRow cumulative;
};

template <class Diagram>
std::vector<ExactRational> probabilities_of(const std::vector<Transition<Diagram>>& row) {
  std::vector<ExactRational> out;
  for (const auto& t : row) out.push_back(t.probability);
  return out;
}

template <class Diagram, class Kernel>
SampledRow<Diagram> make_row(const Kernel& kernel, const Diagram& source) {
  auto row = kernel.row(source);
  std::vector<Diagram> targets;
  for (auto& t : row) targets.push_back(t.target);
  return {std::move(targets), CumulativeRow(probabilities_of(row))};
}

void check_level(int n, int cap) {
  if (n < 0) throw std::invalid_argument("negative level");
  if (n > cap)
    throw Error(Errc::cap_exceeded, "level " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

struct YoungGrowthSampler::Cache {
  RowCache<Partition, SampledRow<Partition>> rows;
};

YoungGrowthSampler::YoungGrowthSampler(YoungKernel kernel, int cap)
    : kernel_(std::move(kernel)), cap_(cap), cache_(std::make_unique<Cache>()) {
  if (kernel_.z) ZParams::make(kernel_.z->s, kernel_.z->p);
}

YoungGrowthSampler::~YoungGrowthSampler() = default;

YoungTrace YoungGrowthSampler::sample(int n, std::uint64_t seed, std::uint64_t index) const {
  check_level(n, cap_);
  auto rng = sample_stream(seed, index);
  YoungTrace trace{{Partition{}}, seed, index};
  for (int step = 0; step < n; ++step) {
    const Partition& current = trace.diagrams.back();
    const auto& row = cache_->rows.get(current, [&] { return make_row(kernel_, current); });
    trace.diagrams.push_back(row.targets[row.cumulative.pick(rng())]);
  }
  return trace;
}

struct SchurGrowthSampler::Cache {
  RowCache<StrictPartition, SampledRow<StrictPartition>> rows;
};

SchurGrowthSampler::SchurGrowthSampler(SchurKernel kernel, int cap)
    : kernel_(std::move(kernel)), cap_(cap), cache_(std::make_unique<Cache>()) {
  if (kernel_.alpha) AlphaParam::make(kernel_.alpha->alpha);
}

SchurGrowthSampler::~SchurGrowthSampler() = default;

SchurTrace SchurGrowthSampler::sample(int n, std::uint64_t seed, std::uint64_t index) const {
  check_level(n, cap_);
  auto rng = sample_stream(seed, index);
  SchurTrace trace{{StrictPartition{}}, seed, index};
  for (int step = 0; step < n; ++step) {
    const StrictPartition& current = trace.diagrams.back();
    const auto& row = cache_->rows.get(current, [&] { return make_row(kernel_, current); });
    trace.diagrams.push_back(row.targets[row.cumulative.pick(rng())]);
  }
  return trace;
}

namespace {

struct ForcedRow {
  std::vector<Partition> odd;   // D(mu) plus the sampled box
  std::vector<Partition> even;  // the forced completion of each
  CumulativeRow cumulative;
};

ForcedRow make_forced_row(const ZParams& zp, const Partition& symmetric) {
  auto row = YoungKernel{zp}.row(symmetric);
  ForcedRow out{{}, {}, CumulativeRow(probabilities_of(row))};
  ExactRational completable = 0;
  for (const auto& t : row) {
    Box b;
    try {
      b = forced_completion(t.target);
    } catch (const Error& e) {
      throw Error(Errc::completion_failure, "from " + symmetric.to_string() + ": " + e.what());
    }
    completable += t.probability;
    out.odd.push_back(t.target);
    out.even.push_back(t.target.with_box(b));
  }
  if (completable != 1)
    throw Error(Errc::completion_failure, "completable mass " + to_string(completable) + " at " + symmetric.to_string());
  return out;
}

}  // namespace

struct ForcedDSymSampler::Cache {
  RowCache<Partition, ForcedRow> rows;
};

ForcedDSymSampler::ForcedDSymSampler(AlphaParam alpha, int cap)
    : zparams_(alpha_to_zparams(AlphaParam::make(alpha.alpha))), cap_(cap), cache_(std::make_unique<Cache>()) {}

ForcedDSymSampler::~ForcedDSymSampler() = default;

YoungTrace ForcedDSymSampler::sample(int n, std::uint64_t seed, std::uint64_t index) const {
  check_level(n, cap_);
  auto rng = sample_stream(seed, index);
  YoungTrace trace{{Partition{}}, seed, index};
  trace.diagrams.reserve(static_cast<std::size_t>(2 * n + 1));
  for (int step = 0; step < n; ++step) {
    const Partition& current = trace.diagrams.back();
    const auto& row = cache_->rows.get(current, [&] { return make_forced_row(zparams_, current); });
    const std::size_t k = row.cumulative.pick(rng());
    trace.diagrams.push_back(row.odd[k]);
    trace.diagrams.push_back(row.even[k]);
  }
  return trace;
}

YoungTrace sample_growth(const MeasureSpec& spec, int n, std::uint64_t seed) {
  return YoungGrowthSampler(spec.young_kernel()).sample(n, seed);
}

SchurTrace sample_growth_schur(const MeasureSpec& spec, int n, std::uint64_t seed) {
  return SchurGrowthSampler(spec.schur_kernel()).sample(n, seed);
}

YoungTrace sample_forced_dsym(int n, const AlphaParam& a, std::uint64_t seed) {
  return ForcedDSymSampler(a).sample(n, seed);
}

std::vector<StrictPartition> undoubled_finals(const std::vector<YoungTrace>& traces) {
  std::vector<StrictPartition> out;
  out.reserve(traces.size());
  for (const auto& t : traces) {
    auto lambda = undouble(t.final_diagram());
    if (!lambda) throw Error(Errc::completion_failure, "final diagram " + t.final_diagram().to_string() + " is not D-symmetric");
    out.push_back(std::move(*lambda));
  }
  return out;
}

}  // namespace youngschur
