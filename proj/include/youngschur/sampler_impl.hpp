#pragma once

// Template definitions for sampler.hpp.

#include <set>
#include <thread>

#include "youngschur/error.hpp"

namespace youngschur {

template <class Sampler>
auto sample_many(const Sampler& sampler, int n, std::uint64_t seed, std::size_t count, unsigned threads)
    -> std::vector<decltype(sampler.sample(n, seed, 0))> {
  std::vector<decltype(sampler.sample(n, seed, 0))> out(count);
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = sampler.sample(n, seed, i);
    return out;
  }
  std::vector<std::jthread> workers;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += threads) out[i] = sampler.sample(n, seed, i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  workers.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

template <class Diagram>
EmpiricalTable<Diagram> empirical_from_finals(const std::vector<Diagram>& finals) {
  EmpiricalTable<Diagram> table;
  if (!finals.empty()) table.level = finals.front().weight();
  for (const Diagram& d : finals) {
    if (d.weight() != table.level) throw Error(Errc::level_mismatch, "samples end at different levels");
    table.add(d);
  }
  return table;
}

template <class Diagram>
EmpiricalTable<Diagram> empirical_distribution(const std::vector<GrowthTrace<Diagram>>& traces) {
  std::vector<Diagram> finals;
  finals.reserve(traces.size());
  for (const auto& t : traces) finals.push_back(t.final_diagram());
  return empirical_from_finals(finals);
}

template <class Diagram>
ExactRational tv_distance(const EmpiricalTable<Diagram>& e, const DistributionTable<Diagram>& d) {
  if (e.level != d.level())
    throw Error(Errc::level_mismatch,
                "empirical level " + std::to_string(e.level) + " vs exact level " + std::to_string(d.level()));
  if (e.total == 0) throw Error(Errc::level_mismatch, "empty empirical table");
  const BigInt total(std::to_string(e.total));
  ExactRational sum = 0;
  for (const auto& [diagram, p] : d.entries()) {
    auto it = e.counts.find(diagram);
    ExactRational freq(BigInt(std::to_string(it == e.counts.end() ? 0 : it->second)), total);
    freq.canonicalize();
    sum += abs(freq - p);
  }
  for (const auto& [diagram, count] : e.counts) {
    if (d.entries().count(diagram)) continue;
    ExactRational freq(BigInt(std::to_string(count)), total);
    freq.canonicalize();
    sum += freq;
  }
  return sum / 2;
}

template <class Diagram>
ExactRational tv_distance(const DistributionTable<Diagram>& a, const DistributionTable<Diagram>& b) {
  if (a.level() != b.level()) throw Error(Errc::level_mismatch, "tables at different levels");
  std::set<Diagram, std::greater<>> keys;
  for (const auto& [d, q] : a.entries()) keys.insert(d);
  for (const auto& [d, q] : b.entries()) keys.insert(d);
  ExactRational sum = 0;
  for (const auto& d : keys) sum += abs(a.at(d) - b.at(d));
  return sum / 2;
}

}  // namespace youngschur
