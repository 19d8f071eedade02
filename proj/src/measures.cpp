#include "youngschur/measures.hpp"

#include <stdexcept>

#include "youngschur/error.hpp"

namespace youngschur {

namespace {

ExactRational quadratic_at(const ExactRational& s, const ExactRational& p, const BigInt& c) {
  const ExactRational x(c);
  return x * x + s * x + p;
}

BigInt floor_of(const ExactRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

ExactRational rat(const BigInt& v) { return ExactRational(v); }

}  // namespace

std::optional<std::string> z_admissibility_violation(const ExactRational& s, const ExactRational& p) {
  if (p <= 0) return "z*z' = p must be positive (got p = " + to_string(p) + ")";
  // Q(c) = c^2 + s c + p is minimal at c = -s/2; positivity at the two bracketing integers
  // gives positivity at every integer: a non-real conjugate pair, or both roots in one gap (m, m+1).
  const ExactRational vertex = -s / 2;
  const BigInt lo = floor_of(vertex);
  const BigInt hi = vertex.get_den() == 1 ? lo : BigInt(lo + 1);
  for (const BigInt& c : {lo, hi}) {
    if (quadratic_at(s, p, c) <= 0)
      return "(z+c)(z'+c) = c^2 + s*c + p must be positive at every integer c; fails at c = " + c.get_str() +
             " (s = " + to_string(s) + ", p = " + to_string(p) + ")";
  }
  return std::nullopt;
}

ZParams ZParams::make(ExactRational s, ExactRational p) {
  if (auto why = z_admissibility_violation(s, p)) throw Error(Errc::inadmissible_params, *why);
  return {std::move(s), std::move(p)};
}

ExactRational ZParams::weight(int c) const { return quadratic_at(s, p, BigInt(c)); }

AlphaParam AlphaParam::make(ExactRational alpha) {
  if (alpha <= 0) throw Error(Errc::inadmissible_params, "alpha must be positive (got " + to_string(alpha) + ")");
  return {std::move(alpha)};
}

ExactRational AlphaParam::nu_squared() const { return (1 - 4 * alpha) / 4; }

std::optional<ExactRational> AlphaParam::nu() const { return rational_sqrt(nu_squared()); }

namespace {

template <class Diagram, class Layer>
void validate_against_layer(const DistributionTable<Diagram>& t, const Layer& layer) {
  if (t.size() != layer.vertices.size())
    throw std::logic_error("table at level " + std::to_string(t.level()) + " does not cover its layer");
  ExactRational sum = 0;
  for (const Diagram& v : layer.vertices) {
    auto it = t.entries().find(v);
    if (it == t.entries().end()) throw std::logic_error("table is missing " + v.to_string());
    if (it->second <= 0) throw std::logic_error("table entry for " + v.to_string() + " is not positive");
    sum += it->second;
  }
  if (sum != 1) throw std::logic_error("table at level " + std::to_string(t.level()) + " sums to " + to_string(sum));
}

}  // namespace

void validate_table(const YoungTable& t, int cap) { validate_against_layer(t, young_layer(t.level(), cap)); }
void validate_table(const SchurTable& t, int cap) { validate_against_layer(t, schur_layer(t.level(), cap)); }

ExactRational p_down(const Partition& rho, const Partition& sigma) {
  if (!is_cover(sigma, rho)) return 0;
  ExactRational q(dim_f(sigma), dim_f(rho));
  q.canonicalize();
  return q;
}

ExactRational p_down_shifted(const StrictPartition& lambda, const StrictPartition& mu) {
  if (!is_cover(mu, lambda)) return 0;
  ExactRational q(dim_g(mu), dim_g(lambda));
  q.canonicalize();
  return q;
}

ExactRational p_up_pl(const Partition& sigma, const Partition& rho) {
  if (!is_cover(sigma, rho)) throw Error(Errc::not_cover, sigma.to_string() + " -> " + rho.to_string());
  ExactRational q(dim_f(rho), BigInt((sigma.weight() + 1) * dim_f(sigma)));
  q.canonicalize();
  return q;
}

ExactRational p_up_pl_shifted(const StrictPartition& mu, const StrictPartition& lambda) {
  if (!is_cover(mu, lambda)) throw Error(Errc::not_cover, mu.to_string() + " => " + lambda.to_string());
  ExactRational q(dim_g(lambda), BigInt((mu.weight() + 1) * dim_g(mu)));
  q.canonicalize();
  // 2^{l(mu) - l(lambda) + 1} is 2 when the lengths agree and 1 when a row is added.
  if (mu.length() == lambda.length()) q *= 2;
  return q;
}

ExactRational p_up_z(const Partition& sigma, const Partition& rho, const ZParams& zp) {
  const int c = content(added_box(sigma, rho));
  return zp.weight(c) / (zp.p + sigma.weight()) * p_up_pl(sigma, rho);
}

ExactRational p_up_alpha(const StrictPartition& mu, const StrictPartition& lambda, const AlphaParam& a) {
  const int c = content(added_box(mu, lambda));
  const ExactRational factor = (ExactRational(c * (c + 1)) + a.alpha) / (2 * mu.weight() + a.alpha);
  return factor * p_up_pl_shifted(mu, lambda);
}

ExactRational YoungKernel::operator()(const Partition& sigma, const Partition& rho) const {
  return z ? p_up_z(sigma, rho, *z) : p_up_pl(sigma, rho);
}

std::vector<Transition<Partition>> YoungKernel::row(const Partition& sigma) const {
  std::vector<Transition<Partition>> out;
  ExactRational sum = 0;
  for (Box b : addable_boxes(sigma)) {
    Partition rho = sigma.with_box(b);
    ExactRational q = (*this)(sigma, rho);
    sum += q;
    out.push_back({std::move(rho), b, std::move(q)});
  }
  if (sum != 1) throw std::logic_error("up kernel row of " + sigma.to_string() + " sums to " + to_string(sum));
  return out;
}

ExactRational SchurKernel::operator()(const StrictPartition& mu, const StrictPartition& lambda) const {
  return alpha ? p_up_alpha(mu, lambda, *alpha) : p_up_pl_shifted(mu, lambda);
}

std::vector<Transition<StrictPartition>> SchurKernel::row(const StrictPartition& mu) const {
  std::vector<Transition<StrictPartition>> out;
  ExactRational sum = 0;
  for (Box b : shifted_addable_boxes(mu)) {
    StrictPartition lambda = mu.with_box(b);
    ExactRational q = (*this)(mu, lambda);
    sum += q;
    out.push_back({std::move(lambda), b, std::move(q)});
  }
  if (sum != 1) throw std::logic_error("up kernel row of " + mu.to_string() + " sums to " + to_string(sum));
  return out;
}

Family parse_family(std::string_view name) {
  if (name == "plancherel") return Family::plancherel;
  if (name == "plancherel-shifted") return Family::plancherel_shifted;
  if (name == "z") return Family::z;
  if (name == "alpha") return Family::alpha;
  throw Error(Errc::parse_error, "unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::plancherel: return "plancherel";
    case Family::plancherel_shifted: return "plancherel-shifted";
    case Family::z: return "z";
    case Family::alpha: return "alpha";
  }
  return "?";
}

void MeasureSpec::require_params() const {
  if (family == Family::z && !z) throw Error(Errc::inadmissible_params, "family z needs --s and --p");
  if (family == Family::alpha && !alpha) throw Error(Errc::inadmissible_params, "family alpha needs --alpha");
}

YoungKernel MeasureSpec::young_kernel() const {
  require_params();
  if (kind() != Kind::ordinary) throw std::invalid_argument("not a Young graph family");
  return {family == Family::z ? z : std::nullopt};
}

SchurKernel MeasureSpec::schur_kernel() const {
  require_params();
  if (kind() != Kind::strict) throw std::invalid_argument("not a Schur graph family");
  return {family == Family::alpha ? alpha : std::nullopt};
}

std::map<std::string, std::string> MeasureSpec::params() const {
  std::map<std::string, std::string> out;
  if (family == Family::z && z) {
    out["s"] = to_string(z->s);
    out["p"] = to_string(z->p);
  }
  if (family == Family::alpha && alpha) out["alpha"] = to_string(alpha->alpha);
  return out;
}

namespace {

template <class Diagram, class Layer, class Kernel>
std::vector<DistributionTable<Diagram>> iterate_measures(int n, const Kernel& kernel, Layer (*layer_of)(int, int),
                                                         int cap) {
  layer_of(n, cap);  // cap check up front
  std::vector<DistributionTable<Diagram>> out;
  typename DistributionTable<Diagram>::Map current;
  current.emplace(Diagram{}, ExactRational(1));
  out.emplace_back(0, current);
  for (int level = 1; level <= n; ++level) {
    typename DistributionTable<Diagram>::Map next;
    for (const auto& [source, mass] : current)
      for (auto& t : kernel.row(source)) next[t.target] += mass * t.probability;
    current = std::move(next);
    out.emplace_back(level, current);
  }
  return out;
}

const YoungLayer& young_layer_fn(int n, int cap) { return young_layer(n, cap); }
const SchurLayer& schur_layer_fn(int n, int cap) { return schur_layer(n, cap); }

}  // namespace

std::vector<YoungTable> iterate_young_measures(int n, const YoungKernel& kernel, int cap) {
  return iterate_measures<Partition, const YoungLayer&>(n, kernel, &young_layer_fn, cap);
}

std::vector<SchurTable> iterate_schur_measures(int n, const SchurKernel& kernel, int cap) {
  return iterate_measures<StrictPartition, const SchurLayer&>(n, kernel, &schur_layer_fn, cap);
}

YoungTable plancherel_closed_table(int n, int cap) {
  const YoungLayer& layer = young_layer(n, cap);
  const BigInt nfact = factorial(static_cast<unsigned>(n));
  YoungTable::Map entries;
  for (std::size_t i = 0; i < layer.vertices.size(); ++i) {
    ExactRational q(layer.dims[i] * layer.dims[i], nfact);
    q.canonicalize();
    entries.emplace(layer.vertices[i], q);
  }
  return {n, std::move(entries)};
}

SchurTable plancherel_shifted_closed_table(int n, int cap) {
  const SchurLayer& layer = schur_layer(n, cap);
  const BigInt nfact = factorial(static_cast<unsigned>(n));
  SchurTable::Map entries;
  for (std::size_t i = 0; i < layer.vertices.size(); ++i) {
    const auto& v = layer.vertices[i];
    ExactRational q(pow2(static_cast<unsigned>(n - v.length())) * layer.dims[i] * layer.dims[i], nfact);
    q.canonicalize();
    entries.emplace(v, q);
  }
  return {n, std::move(entries)};
}

AnyTable build_measure(const MeasureSpec& spec, int n, int cap) {
  spec.require_params();
  if (spec.kind() == Kind::ordinary) {
    if (cap < 0) cap = kDefaultYoungCap;
    YoungTable t = iterate_young_measures(n, spec.young_kernel(), cap).back();
    validate_table(t, cap);
    if (spec.family == Family::plancherel && t != plancherel_closed_table(n, cap))
      throw std::logic_error("Plancherel kernel iteration disagrees with f^2/n!");
    return t;
  }
  if (cap < 0) cap = kDefaultSchurCap;
  SchurTable t = iterate_schur_measures(n, spec.schur_kernel(), cap).back();
  validate_table(t, cap);
  if (spec.family == Family::plancherel_shifted && t != plancherel_shifted_closed_table(n, cap))
    throw std::logic_error("shifted Plancherel kernel iteration disagrees with 2^{n-l} g^2/n!");
  return t;
}

namespace {

template <class Table, class Layer, class Down>
bool coherent(const Table& upper, const Table& lower, const Layer& lower_layer, Down down) {
  for (const auto& sigma : lower_layer.vertices) {
    ExactRational pushed = 0;
    for (const auto& rho : covers_up(sigma)) pushed += upper.at(rho) * down(rho, sigma);
    if (pushed != lower.at(sigma)) return false;
  }
  return true;
}

}  // namespace

bool coherence_check(const MeasureSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("coherence needs n >= 1");
  if (spec.kind() == Kind::ordinary) {
    const auto tables = iterate_young_measures(n, spec.young_kernel());
    return coherent(tables[static_cast<std::size_t>(n)], tables[static_cast<std::size_t>(n - 1)],
                    young_layer(n - 1), [](const Partition& r, const Partition& s) { return p_down(r, s); });
  }
  const auto tables = iterate_schur_measures(n, spec.schur_kernel());
  return coherent(tables[static_cast<std::size_t>(n)], tables[static_cast<std::size_t>(n - 1)], schur_layer(n - 1),
                  [](const StrictPartition& l, const StrictPartition& m) { return p_down_shifted(l, m); });
}

IdentitySides prop1_sides(const StrictPartition& lambda, const StrictPartition& mu) {
  const Partition top = double_diagram(lambda);
  ExactRational sum = 0;
  for (const Partition& rho : intermediates(mu, lambda)) sum += p_down(top, rho);
  return {p_down_shifted(lambda, mu), sum};
}

bool verify_prop1(const StrictPartition& lambda, const StrictPartition& mu) {
  const auto [lhs, rhs] = prop1_sides(lambda, mu);
  return lhs == rhs;
}

ZParams alpha_to_zparams(const AlphaParam& a) { return ZParams::make(ExactRational(-1), a.alpha); }

IdentitySides prop3_sides(const StrictPartition& mu, const StrictPartition& lambda, const AlphaParam& a) {
  const ZParams zp = alpha_to_zparams(a);
  const Partition bottom = double_diagram(mu);
  ExactRational sum = 0;
  for (const Partition& rho : intermediates(mu, lambda)) sum += p_up_z(bottom, rho, zp);
  return {p_up_alpha(mu, lambda, a), sum};
}

bool verify_prop3(const StrictPartition& mu, const StrictPartition& lambda, const AlphaParam& a) {
  const auto [lhs, rhs] = prop3_sides(mu, lambda, a);
  return lhs == rhs;
}

ExactRational schur_principal(const Partition& rho, const ExactRational& t) {
  ExactRational value = 1;
  for (Box b : boxes(rho)) value *= t + content(b);
  BigInt hooks = 1;
  for (int h : hook_lengths(rho)) hooks *= h;
  return value / rat(hooks);
}

ExactRational pochhammer(const ExactRational& x, int n) {
  if (n < 0) throw std::invalid_argument("negative Pochhammer length");
  ExactRational value = 1;
  for (int k = 0; k < n; ++k) value *= x + k;
  return value;
}

ExactRational z_measure_closed(const Partition& rho, const ZParams& zp) {
  if (auto why = z_admissibility_violation(zp.s, zp.p)) throw Error(Errc::inadmissible_params, *why);
  const int n = rho.weight();
  ExactRational contents = 1;
  for (Box b : boxes(rho)) contents *= zp.weight(content(b));
  BigInt hooks = 1;
  for (int h : hook_lengths(rho)) hooks *= h;
  return rat(factorial(static_cast<unsigned>(n))) / pochhammer(zp.p, n) * contents / rat(hooks * hooks);
}

ExactRational alpha_measure_closed(const StrictPartition& lambda, const AlphaParam& a) {
  const auto nu = a.nu();
  if (!nu)
    throw Error(Errc::irrational_nu, "1 - 4*alpha = " + to_string(1 - 4 * a.alpha) + " is not a rational square");
  const int n = lambda.weight();
  const ExactRational t = *nu - ExactRational(1, 2);
  ExactRational value = rat(factorial(static_cast<unsigned>(n))) / pochhammer(a.alpha / 2, n) *
                        schur_principal(double_diagram(lambda), t);
  return n % 2 == 0 ? value : ExactRational(-value);
}

ProportionalityResult proportionality_check(int n, const AlphaParam& a) {
  const SchurTable shifted = iterate_schur_measures(n, SchurKernel{a}).back();
  const YoungTable doubled = iterate_young_measures(2 * n, YoungKernel{alpha_to_zparams(a)}).back();
  ProportionalityResult result;
  result.constant = true;
  for (const auto& [lambda, mass] : shifted.entries()) {
    ExactRational r = mass * mass / doubled.at(double_diagram(lambda));
    if (result.ratios.empty())
      result.ratio = r;
    else if (r != *result.ratio)
      result.constant = false;
    result.ratios.emplace_back(lambda, std::move(r));
  }
  if (!result.constant) result.ratio.reset();
  return result;
}

}  // namespace youngschur
