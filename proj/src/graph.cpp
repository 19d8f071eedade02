#include "youngschur/graph.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "youngschur/error.hpp"

namespace youngschur {

namespace {

void generate_partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    generate_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void generate_strict(int remaining, int max_part, std::vector<int>& prefix, std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // The remaining weight must fit in distinct parts below `part`.
    if (part * (part + 1) / 2 < remaining) break;
    prefix.push_back(part);
    generate_strict(remaining - part, part - 1, prefix, out);
    prefix.pop_back();
  }
}

template <class Diagram>
class LayerCache {
 public:
  template <class Build>
  const GraphLayer<Diagram>& get(int n, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = layers_.find(n); it != layers_.end()) return *it->second;
    }
    auto layer = std::make_unique<GraphLayer<Diagram>>(build());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = layers_.try_emplace(n, std::move(layer));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, std::unique_ptr<GraphLayer<Diagram>>> layers_;
};

void check_cap(int n, int cap, const char* what) {
  if (n < 0) throw Error(Errc::invalid_diagram, "negative level");
  if (n > cap)
    throw Error(Errc::cap_exceeded,
                std::string(what) + " level " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate_partitions(n, n, prefix, out);
  return out;
}

std::vector<StrictPartition> enumerate_strict_partitions(int n) {
  std::vector<StrictPartition> out;
  std::vector<int> prefix;
  generate_strict(n, n, prefix, out);
  return out;
}

const YoungLayer& young_layer(int n, int cap) {
  check_cap(n, cap, "Young graph");
  static LayerCache<Partition> cache;
  return cache.get(n, [n] {
    YoungLayer layer;
    layer.level = n;
    layer.vertices = enumerate_partitions(n);
    for (const auto& v : layer.vertices) layer.dims.push_back(dim_f(v));
    return layer;
  });
}

const SchurLayer& schur_layer(int n, int cap) {
  check_cap(n, cap, "Schur graph");
  static LayerCache<StrictPartition> cache;
  return cache.get(n, [n] {
    SchurLayer layer;
    layer.level = n;
    layer.vertices = enumerate_strict_partitions(n);
    for (const auto& v : layer.vertices) layer.dims.push_back(dim_g(v));
    return layer;
  });
}

std::vector<Partition> covers_up(const Partition& p) {
  std::vector<Partition> out;
  for (Box b : addable_boxes(p)) out.push_back(p.with_box(b));
  return out;
}

std::vector<Partition> covers_down(const Partition& p) {
  std::vector<Partition> out;
  for (Box b : removable_boxes(p)) out.push_back(p.without_box(b));
  return out;
}

std::vector<StrictPartition> covers_up(const StrictPartition& s) {
  std::vector<StrictPartition> out;
  for (Box b : shifted_addable_boxes(s)) out.push_back(s.with_box(b));
  return out;
}

std::vector<StrictPartition> covers_down(const StrictPartition& s) {
  std::vector<StrictPartition> out;
  for (Box b : shifted_removable_boxes(s)) out.push_back(s.without_box(b));
  return out;
}

namespace {

// Returns the single row where upper exceeds lower by one box, or 0.
template <class Diagram>
int differing_row(const Diagram& lower, const Diagram& upper) {
  if (upper.weight() != lower.weight() + 1 || upper.length() > lower.length() + 1) return 0;
  int row = 0;
  for (int i = 1; i <= upper.length(); ++i) {
    const int diff = upper.row(i) - lower.row(i);
    if (diff == 0) continue;
    if (diff != 1 || row != 0) return 0;
    row = i;
  }
  return row;
}

}  // namespace

bool is_cover(const Partition& lower, const Partition& upper) { return differing_row(lower, upper) != 0; }
bool is_cover(const StrictPartition& lower, const StrictPartition& upper) {
  return differing_row(lower, upper) != 0;
}

Box added_box(const Partition& lower, const Partition& upper) {
  const int row = differing_row(lower, upper);
  if (row == 0) throw Error(Errc::not_cover, lower.to_string() + " -> " + upper.to_string());
  return {row, upper.row(row)};
}

Box added_box(const StrictPartition& lower, const StrictPartition& upper) {
  const int row = differing_row(lower, upper);
  if (row == 0) throw Error(Errc::not_cover, lower.to_string() + " => " + upper.to_string());
  return {row, row + upper.row(row) - 1};
}

BigInt dim_f(const Partition& p) {
  BigInt hooks = 1;
  for (int h : hook_lengths(p)) hooks *= h;
  return factorial(static_cast<unsigned>(p.weight())) / hooks;
}

BigInt dim_g(const StrictPartition& s) {
  const auto parts = s.parts();
  ExactRational value(factorial(static_cast<unsigned>(s.weight())));
  for (int part : parts) value /= ExactRational(factorial(static_cast<unsigned>(part)));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) value *= make_rational(parts[i] - parts[j], parts[i] + parts[j]);
  if (value.get_den() != 1)
    throw std::logic_error("shifted hook product is not integral for " + s.to_string());
  return value.get_num();
}

std::vector<Partition> intermediates(const StrictPartition& mu, const StrictPartition& lambda) {
  if (!is_cover(mu, lambda)) throw Error(Errc::not_cover, mu.to_string() + " => " + lambda.to_string());
  const Partition lower = double_diagram(mu);
  const Partition upper = double_diagram(lambda);
  std::vector<Partition> out;
  for (Partition& rho : covers_up(lower))
    if (upper.contains(rho)) out.push_back(std::move(rho));
  const std::size_t expected = lambda.length() == mu.length() ? 2 : 1;
  if (out.size() != expected)
    throw std::logic_error("intermediate count " + std::to_string(out.size()) + " for " + mu.to_string() +
                           " => " + lambda.to_string());
  return out;
}

BigInt count_d_paths(const StrictPartition& lambda) {
  return pow2(static_cast<unsigned>(lambda.weight() - lambda.length())) * dim_g(lambda);
}

namespace {

BigInt walk_d_paths(const Partition& current, int depth, const Partition& target) {
  if (depth % 2 == 0 && !is_d_symmetric(current)) return 0;
  if (current == target) return 1;
  BigInt total = 0;
  for (const Partition& next : covers_up(current))
    if (target.contains(next)) total += walk_d_paths(next, depth + 1, target);
  return total;
}

}  // namespace

BigInt count_d_paths_brute_force(const StrictPartition& lambda) {
  if (lambda.weight() > kBruteForceDPathCap)
    throw Error(Errc::cap_exceeded, "brute-force D-path walker is capped at weight " +
                                        std::to_string(kBruteForceDPathCap));
  return walk_d_paths(Partition{}, 0, double_diagram(lambda));
}

Box forced_completion(const Partition& p) {
  std::optional<Box> found;
  for (Box b : addable_boxes(p)) {
    if (!is_d_symmetric(p.with_box(b))) continue;
    if (found) throw Error(Errc::no_completion, "completion of " + p.to_string() + " is not unique");
    found = b;
  }
  if (!found) throw Error(Errc::no_completion, "no D-symmetric cover of " + p.to_string());
  return *found;
}

}  // namespace youngschur
