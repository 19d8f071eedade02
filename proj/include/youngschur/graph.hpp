#pragma once

#include <vector>

#include "youngschur/partition.hpp"
#include "youngschur/rational.hpp"

namespace youngschur {

enum class Kind { ordinary, strict };

template <class Diagram>
struct diagram_kind;
template <>
struct diagram_kind<Partition> {
  static constexpr Kind value = Kind::ordinary;
};
template <>
struct diagram_kind<StrictPartition> {
  static constexpr Kind value = Kind::strict;
};

inline constexpr int kDefaultYoungCap = 24;
inline constexpr int kDefaultSchurCap = 40;

/// All diagrams of one weight, reverse lexicographic, with their path counts from the empty diagram.
template <class Diagram>
struct GraphLayer {
  static constexpr Kind kind = diagram_kind<Diagram>::value;
  int level = 0;
  std::vector<Diagram> vertices;
  std::vector<BigInt> dims;
};

using YoungLayer = GraphLayer<Partition>;
using SchurLayer = GraphLayer<StrictPartition>;

/// Memoized, thread-safe. Throws Error(cap_exceeded) when n > cap.
const YoungLayer& young_layer(int n, int cap = kDefaultYoungCap);
const SchurLayer& schur_layer(int n, int cap = kDefaultSchurCap);

/// Uncached enumeration in the same order as the layers above.
std::vector<Partition> enumerate_partitions(int n);
std::vector<StrictPartition> enumerate_strict_partitions(int n);

std::vector<Partition> covers_up(const Partition& p);
std::vector<Partition> covers_down(const Partition& p);
std::vector<StrictPartition> covers_up(const StrictPartition& s);
std::vector<StrictPartition> covers_down(const StrictPartition& s);

bool is_cover(const Partition& lower, const Partition& upper);
bool is_cover(const StrictPartition& lower, const StrictPartition& upper);

/// The box by which `upper` exceeds `lower`; requires is_cover.
Box added_box(const Partition& lower, const Partition& upper);
Box added_box(const StrictPartition& lower, const StrictPartition& upper);

/// Number of standard tableaux: n! / prod(hooks).
BigInt dim_f(const Partition& p);
/// Number of shifted standard tableaux: n!/prod(l_i!) * prod_{i<j} (l_i-l_j)/(l_i+l_j), asserted integral.
BigInt dim_g(const StrictPartition& s);

/// Ordinary rho with D(mu) -> rho -> D(lambda). Two when lengths agree, one otherwise.
/// Throws Error(not_cover) unless mu -> lambda in the Schur graph.
std::vector<Partition> intermediates(const StrictPartition& mu, const StrictPartition& lambda);

/// 2^{|lambda|-l(lambda)} g_lambda.
BigInt count_d_paths(const StrictPartition& lambda);

inline constexpr int kBruteForceDPathCap = 10;
/// Exhaustive depth-first count of paths from the empty diagram to D(lambda) whose
/// every even-level diagram is D-symmetric. Throws Error(cap_exceeded) past the cap.
BigInt count_d_paths_brute_force(const StrictPartition& lambda);

/// The unique addable box making p D-symmetric again. Throws Error(no_completion).
Box forced_completion(const Partition& p);

}  // namespace youngschur
