#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "youngschur/graph.hpp"
#include "youngschur/partition.hpp"
#include "youngschur/rational.hpp"

namespace youngschur {

/// z-measure parameters through their symmetric functions s = z + z', p = z z'.
/// (z + c)(z' + c) = c^2 + s c + p, so every quantity stays rational even for
/// complex-conjugate or irrational real pairs.
struct ZParams {
  ExactRational s;
  ExactRational p;

  /// Throws Error(inadmissible_params) naming the violated condition.
  static ZParams make(ExactRational s, ExactRational p);

  /// c^2 + s c + p
  ExactRational weight(int c) const;

  bool operator==(const ZParams&) const = default;
};

/// nullopt when admissible, otherwise a one-line description of the failed condition.
std::optional<std::string> z_admissibility_violation(const ExactRational& s, const ExactRational& p);

struct AlphaParam {
  ExactRational alpha;

  static AlphaParam make(ExactRational alpha);

  /// nu^2 = (1 - 4 alpha) / 4
  ExactRational nu_squared() const;
  /// nu when nu^2 is the square of a rational (so alpha <= 1/4).
  std::optional<ExactRational> nu() const;

  bool operator==(const AlphaParam&) const = default;
};

/// Exact probability table over one graph layer, keys in reverse lexicographic order.
template <class Diagram>
class DistributionTable {
 public:
  using Map = std::map<Diagram, ExactRational, std::greater<>>;
  static constexpr Kind kind = diagram_kind<Diagram>::value;

  DistributionTable() = default;
  DistributionTable(int level, Map entries) : level_(level), entries_(std::move(entries)) {}

  int level() const noexcept { return level_; }
  const Map& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Zero for diagrams outside the support.
  ExactRational at(const Diagram& d) const {
    auto it = entries_.find(d);
    return it == entries_.end() ? ExactRational(0) : it->second;
  }
  ExactRational total() const {
    ExactRational t = 0;
    for (const auto& [d, q] : entries_) t += q;
    return t;
  }

  bool operator==(const DistributionTable&) const = default;

 private:
  int level_ = 0;
  Map entries_;
};

using YoungTable = DistributionTable<Partition>;
using SchurTable = DistributionTable<StrictPartition>;

/// Throws std::logic_error unless entries are positive, sum to one and cover the whole layer.
void validate_table(const YoungTable& t, int cap = kDefaultYoungCap);
void validate_table(const SchurTable& t, int cap = kDefaultSchurCap);

// Down kernels; zero when not a cover.
ExactRational p_down(const Partition& rho, const Partition& sigma);
ExactRational p_down_shifted(const StrictPartition& lambda, const StrictPartition& mu);

// Up kernels; Error(not_cover) when the pair is not an edge.
ExactRational p_up_pl(const Partition& sigma, const Partition& rho);
ExactRational p_up_pl_shifted(const StrictPartition& mu, const StrictPartition& lambda);
ExactRational p_up_z(const Partition& sigma, const Partition& rho, const ZParams& zp);
ExactRational p_up_alpha(const StrictPartition& mu, const StrictPartition& lambda, const AlphaParam& a);

template <class Diagram>
struct Transition {
  Diagram target;
  Box box;
  ExactRational probability;
};

/// Up kernel on the Young graph: Plancherel, or the z-measure kernel when `z` is set.
struct YoungKernel {
  std::optional<ZParams> z;

  ExactRational operator()(const Partition& sigma, const Partition& rho) const;
  /// All transitions out of sigma in addable-box order; the row sum is checked to be exactly 1.
  std::vector<Transition<Partition>> row(const Partition& sigma) const;
};

/// Up kernel on the Schur graph: shifted Plancherel, or the alpha kernel when `alpha` is set.
struct SchurKernel {
  std::optional<AlphaParam> alpha;

  ExactRational operator()(const StrictPartition& mu, const StrictPartition& lambda) const;
  std::vector<Transition<StrictPartition>> row(const StrictPartition& mu) const;
};

enum class Family { plancherel, plancherel_shifted, z, alpha };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

struct MeasureSpec {
  Family family = Family::plancherel;
  std::optional<ZParams> z;
  std::optional<AlphaParam> alpha;

  static MeasureSpec plancherel() { return {Family::plancherel, std::nullopt, std::nullopt}; }
  static MeasureSpec plancherel_shifted() { return {Family::plancherel_shifted, std::nullopt, std::nullopt}; }
  static MeasureSpec z_measure(ZParams zp) { return {Family::z, zp, std::nullopt}; }
  static MeasureSpec alpha_measure(AlphaParam a) { return {Family::alpha, std::nullopt, a}; }

  Kind kind() const noexcept {
    return family == Family::plancherel || family == Family::z ? Kind::ordinary : Kind::strict;
  }
  /// Throws Error(inadmissible_params) when the family's parameter is missing.
  void require_params() const;
  YoungKernel young_kernel() const;
  SchurKernel schur_kernel() const;
  /// Parameter map rendered exactly, e.g. {"alpha": "3/16"}.
  std::map<std::string, std::string> params() const;
};

using AnyTable = std::variant<YoungTable, SchurTable>;

/// Levels 0..n obtained by iterating the up kernel from the delta measure at the empty diagram.
std::vector<YoungTable> iterate_young_measures(int n, const YoungKernel& kernel, int cap = kDefaultYoungCap);
std::vector<SchurTable> iterate_schur_measures(int n, const SchurKernel& kernel, int cap = kDefaultSchurCap);

/// Throws Error(cap_exceeded) or Error(inadmissible_params). Plancherel tables are
/// cross-checked against their closed forms before being returned.
AnyTable build_measure(const MeasureSpec& spec, int n, int cap = -1);

/// f^2 / n!
YoungTable plancherel_closed_table(int n, int cap = kDefaultYoungCap);
/// 2^{n-l} g^2 / n!
SchurTable plancherel_shifted_closed_table(int n, int cap = kDefaultSchurCap);

/// M_n composed with the down kernel equals M_{n-1}, exactly.
bool coherence_check(const MeasureSpec& spec, int n);

struct IdentitySides {
  ExactRational lhs;
  ExactRational rhs;
};

/// Down kernel of lambda => mu against the Young down kernel from D(lambda) to the intermediates.
bool verify_prop1(const StrictPartition& lambda, const StrictPartition& mu);
IdentitySides prop1_sides(const StrictPartition& lambda, const StrictPartition& mu);

/// (s, p) = (-1, alpha): z(alpha) + z'(alpha) = -1 and z(alpha) z'(alpha) = 1/4 - nu^2 = alpha.
ZParams alpha_to_zparams(const AlphaParam& a);

/// Alpha up kernel of mu => lambda against the z(alpha) up kernel from D(mu) to the intermediates.
bool verify_prop3(const StrictPartition& mu, const StrictPartition& lambda, const AlphaParam& a);
IdentitySides prop3_sides(const StrictPartition& mu, const StrictPartition& lambda, const AlphaParam& a);

/// s_rho(1^t) as the content/hook product prod (t + c) / prod h, a polynomial in t.
ExactRational schur_principal(const Partition& rho, const ExactRational& t);

/// Rising factorial x (x+1) ... (x+n-1).
ExactRational pochhammer(const ExactRational& x, int n);

/// n!/(zz')_n s_rho(1^z) s_rho(1^z'), expressed through (s, p).
ExactRational z_measure_closed(const Partition& rho, const ZParams& zp);

/// (-1)^n n!/(alpha/2)_n s_{D lambda}(1^{nu - 1/2}). Error(irrational_nu) when nu is not rational.
ExactRational alpha_measure_closed(const StrictPartition& lambda, const AlphaParam& a);

struct ProportionalityResult {
  bool constant = false;
  /// alpha-measure squared over the z(alpha)-measure of the doubled diagram, per strict lambda.
  std::vector<std::pair<StrictPartition, ExactRational>> ratios;
  /// Common value when constant.
  std::optional<ExactRational> ratio;
};

ProportionalityResult proportionality_check(int n, const AlphaParam& a);

}  // namespace youngschur
