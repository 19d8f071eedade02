// One PASS/FAIL line per acceptance criterion; exit status 0 only if all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracles.hpp"
#include "youngschur/graph.hpp"
#include "youngschur/kerov.hpp"
#include "youngschur/measures.hpp"
#include "youngschur/sampler.hpp"
#include "youngschur/table_io.hpp"

using namespace youngschur;

namespace {

ExactRational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<int> raw(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }
std::vector<int> raw(const StrictPartition& s) { return {s.parts().begin(), s.parts().end()}; }

mpz_class two_to(int k) {
  mpz_class w;
  mpz_ui_pow_ui(w.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return w;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome dimension_oracles() {
  Outcome o;
  for (int n = 0; n <= 15; ++n) {
    mpz_class sf = 0, sg = 0;
    const auto& yl = young_layer(n);
    for (std::size_t i = 0; i < yl.vertices.size(); ++i) {
      if (yl.dims[i] != oracle::f_recurrence(raw(yl.vertices[i]))) o.fail("f mismatch at " + yl.vertices[i].to_string());
      sf += yl.dims[i] * yl.dims[i];
    }
    const auto& sl = schur_layer(n);
    for (std::size_t i = 0; i < sl.vertices.size(); ++i) {
      if (sl.dims[i] != oracle::g_recurrence(raw(sl.vertices[i]))) o.fail("g mismatch at " + sl.vertices[i].to_string());
      sg += two_to(n - sl.vertices[i].length()) * sl.dims[i] * sl.dims[i];
    }
    if (sf != oracle::factorial(n)) o.fail("sum f^2 != n! at n=" + std::to_string(n));
    if (sg != oracle::factorial(n)) o.fail("sum 2^(n-l) g^2 != n! at n=" + std::to_string(n));
  }
  o.detail = o.pass ? "n <= 15, f and g against their recurrences, both normalizations exact" : o.detail;
  return o;
}

Outcome d_paths_and_intermediates() {
  Outcome o;
  std::size_t covers = 0;
  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : schur_layer(n).vertices)
      if (count_d_paths_brute_force(lambda) != two_to(n - lambda.length()) * oracle::g_recurrence(raw(lambda)))
        o.fail("D-path count at " + lambda.to_string());
  for (int n = 1; n <= 12; ++n)
    for (const auto& lambda : schur_layer(n).vertices)
      for (const auto& mu : covers_down(lambda)) {
        ++covers;
        const std::size_t expected = mu.length() == lambda.length() ? 2 : 1;
        if (intermediates(mu, lambda).size() != expected) o.fail("intermediates " + mu.to_string() + " => " + lambda.to_string());
      }
  if (o.pass) o.detail = "brute-force D-paths for |lambda| <= 8; " + std::to_string(covers) + " covers with |lambda| <= 12";
  return o;
}

Outcome down_identity() {
  Outcome o;
  std::size_t covers = 0;
  for (int n = 1; n <= 12; ++n)
    for (const auto& lambda : schur_layer(n).vertices)
      for (const auto& mu : covers_down(lambda)) {
        ++covers;
        const auto [lhs, rhs] = prop1_sides(lambda, mu);
        // the shifted side again from the path-count oracle
        ExactRational direct(oracle::g_recurrence(raw(mu)), oracle::g_recurrence(raw(lambda)));
        direct.canonicalize();
        if (lhs != rhs || lhs != direct) o.fail(mu.to_string() + " => " + lambda.to_string());
      }
  if (o.pass) o.detail = std::to_string(covers) + " strict covers with |lambda| <= 12, exact equality";
  return o;
}

Outcome kerov_identity() {
  Outcome o;
  for (int n = 0; n <= 10; ++n)
    for (const auto& lambda : schur_layer(n).vertices)
      if (!compose_and_check_prop2(lambda)) o.fail("identity fails at " + lambda.to_string());
  for (int n = 0; n <= 12; ++n) {
    for (const auto& p : young_layer(n).vertices) {
      const auto residues = partial_fractions(r_up(p));
      for (const auto& rho : covers_up(p)) {
        const ExactRational c = content(added_box(p, rho));
        ExactRational expected(oracle::f_recurrence(raw(rho)), oracle::f_recurrence(raw(p)) * (n + 1));
        expected.canonicalize();
        bool hit = false;
        for (const auto& r : residues) hit = hit || (r.pole == c && r.residue == expected);
        if (!hit) o.fail("ordinary residue at " + p.to_string());
      }
    }
    for (const auto& s : schur_layer(n).vertices) {
      const auto residues = partial_fractions(r_up_shifted(s));
      for (const auto& lambda : covers_up(s)) {
        const long x = content(added_box(s, lambda));
        const int shrink = s.length() == lambda.length() ? 1 : 0;
        ExactRational expected(oracle::g_recurrence(raw(lambda)) * two_to(shrink),
                               oracle::g_recurrence(raw(s)) * (n + 1));
        expected.canonicalize();
        bool hit = false;
        for (const auto& r : residues) hit = hit || (r.pole == x * (x + 1) && r.residue == expected);
        if (!hit) o.fail("shifted residue at " + s.to_string());
      }
    }
  }
  if (kerov_coords(Partition{4, 4, 1}) != KerovCoordsOrdinary{{-3, -1, 4}, {-2, 2}}) o.fail("coordinates of (4,4,1)");
  if (shifted_kerov_coords(StrictPartition{5, 3, 2}) != KerovCoordsShifted{{3, 5}, {1, 4}}) o.fail("coordinates of (5,3,2)");
  if (o.pass)
    o.detail = "identity for |lambda| <= 10; residues for |diagram| <= 12; (4,4,1) and (5,3,2) coordinates";
  return o;
}

Outcome alpha_identity() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& alpha : {q(3, 16), q(1, 4), q(5)}) {
    const auto a = AlphaParam::make(alpha);
    for (int n = 1; n <= 10; ++n)
      for (const auto& lambda : schur_layer(n).vertices)
        for (const auto& mu : covers_down(lambda)) {
          ++checks;
          if (!verify_prop3(mu, lambda, a)) o.fail(mu.to_string() + " => " + lambda.to_string() + " at alpha=" + to_string(alpha));
        }
  }
  const auto spot = prop3_sides(StrictPartition{2}, StrictPartition{2, 1}, AlphaParam::make(q(3, 16)));
  if (spot.lhs != q(1, 67) || spot.rhs != q(1, 67)) o.fail("spot value (2) => (2,1)");
  if (o.pass) o.detail = std::to_string(checks) + " checks, alpha in {3/16, 1/4, 5}; spot value 1/67 on both sides";
  return o;
}

Outcome coherence_and_closed_forms() {
  Outcome o;
  std::vector<MeasureSpec> specs{MeasureSpec::plancherel(), MeasureSpec::plancherel_shifted()};
  const std::vector<ZParams> zs{ZParams::make(q(-1), q(3, 16)), ZParams::make(q(0), q(1)), ZParams::make(q(-1), q(5))};
  for (const auto& z : zs) specs.push_back(MeasureSpec::z_measure(z));
  for (const auto& a : {q(3, 16), q(1, 4), q(5)}) specs.push_back(MeasureSpec::alpha_measure(AlphaParam::make(a)));
  for (const auto& spec : specs)
    for (int n = 1; n <= 12; ++n)
      if (!coherence_check(spec, n)) o.fail(std::string(family_name(spec.family)) + " incoherent at n=" + std::to_string(n));

  const auto a316 = AlphaParam::make(q(3, 16));
  for (int n = 0; n <= 12; ++n) {
    if (std::get<YoungTable>(build_measure(MeasureSpec::plancherel(), n)) != plancherel_closed_table(n))
      o.fail("Plancherel closed form at n=" + std::to_string(n));
    if (std::get<SchurTable>(build_measure(MeasureSpec::plancherel_shifted(), n)) != plancherel_shifted_closed_table(n))
      o.fail("shifted Plancherel closed form at n=" + std::to_string(n));
    for (const auto& z : zs) {
      const auto table = std::get<YoungTable>(build_measure(MeasureSpec::z_measure(z), n));
      for (const auto& [p, v] : table.entries())
        if (v != z_measure_closed(p, z) || v != oracle::z_measure(raw(p), z.s, z.p))
          o.fail("z closed form at " + p.to_string());
    }
    const auto alpha_table = std::get<SchurTable>(build_measure(MeasureSpec::alpha_measure(a316), n));
    for (const auto& [s, v] : alpha_table.entries())
      if (v != alpha_measure_closed(s, a316)) o.fail("alpha closed form at " + s.to_string());
  }
  if (o.pass) o.detail = "four families, n <= 12; closed forms entrywise, alpha formula at nu = 1/4";
  return o;
}

Outcome proportionality() {
  Outcome o;
  for (const auto& alpha : {q(3, 16), q(5)})
    for (int n = 0; n <= 8; ++n) {
      const auto r = proportionality_check(n, AlphaParam::make(alpha));
      if (!r.constant) o.fail("ratio not constant at n=" + std::to_string(n) + ", alpha=" + to_string(alpha));
    }
  if (o.pass) o.detail = "n <= 8, alpha in {3/16, 5}, exact ratios";
  return o;
}

Outcome samplers() {
  Outcome o;
  const auto a = AlphaParam::make(q(3, 16));
  const int n = 8;
  const std::size_t samples = 100000;
  const auto exact = std::get<SchurTable>(build_measure(MeasureSpec::alpha_measure(a), n));

  const SchurGrowthSampler direct(SchurKernel{a});
  const ExactRational tv_direct = tv_distance(empirical_distribution(sample_many(direct, n, 1, samples, 2)), exact);

  const ForcedDSymSampler forced(a);
  const auto traces = sample_many(forced, n, 2, samples, 2);
  for (const auto& t : traces)
    for (std::size_t k = 0; k < t.diagrams.size(); k += 2)
      if (!is_d_symmetric(t.diagrams[k])) o.fail("even-index diagram not D-symmetric in trace " + std::to_string(t.index));
  const ExactRational tv_forced = tv_distance(empirical_from_finals(undoubled_finals(traces)), exact);

  if (tv_direct >= q(1, 50)) o.fail("direct TV " + to_decimal(tv_direct, 5));
  if (tv_forced >= q(1, 50)) o.fail("forced TV " + to_decimal(tv_forced, 5));
  std::ostringstream d;
  d << "N=1e5, n=8, alpha=3/16: TV direct " << to_decimal(tv_direct, 5) << ", forced " << to_decimal(tv_forced, 5)
    << " (< 0.02)";
  if (o.pass) o.detail = d.str();
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs{
      {"sample", "--kind", "schur", "--family", "alpha", "--alpha", "3/16", "--n", "8", "--count", "5000", "--seed", "31"},
      {"sample", "--kind", "schur", "--family", "alpha", "--alpha", "5", "--n", "6", "--count", "500", "--seed", "32",
       "--method", "forced-sym", "--emit", "traces"},
      {"sample", "--kind", "young", "--family", "z", "--s", "-1", "--p", "3/16", "--n", "10", "--count", "2000",
       "--seed", "33", "--format", "csv"}};
  for (const auto& args : runs) {
    std::ostringstream first, second, err;
    const int c1 = cli::run(args, first, err);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "2"});
    const int c2 = cli::run(args, second, err);
    std::ostringstream third;
    const int c3 = cli::run(threaded, third, err);
    if (c1 != 0 || c2 != 0 || c3 != 0) o.fail("sampling run failed: " + err.str());
    if (first.str() != second.str() || first.str() != third.str() || first.str().empty())
      o.fail("output differs for " + args[2] + "/" + args[4]);
  }
  if (o.pass) o.detail = "three CLI sampling runs repeated (and re-threaded) give byte-identical output";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"dimension oracles", dimension_oracles},
      {"D-paths and intermediates", d_paths_and_intermediates},
      {"shifted down kernel via doubling", down_identity},
      {"Kerov function identity and residues", kerov_identity},
      {"alpha up kernel via z up kernels", alpha_identity},
      {"coherence and closed forms", coherence_and_closed_forms},
      {"alpha / z proportionality", proportionality},
      {"samplers against the exact table", samplers},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
