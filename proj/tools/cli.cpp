#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "youngschur/error.hpp"
#include "youngschur/graph.hpp"
#include "youngschur/kerov.hpp"
#include "youngschur/measures.hpp"
#include "youngschur/sampler.hpp"
#include "youngschur/table_io.hpp"
#include "youngschur/verify.hpp"

namespace youngschur::cli {

namespace {

using nlohmann::json;

constexpr const char* kSeedVariable = "YOUNGSCHUR_SEED";

struct Caps {
  int young = kDefaultYoungCap;
  int schur = kDefaultSchurCap;
};

struct ParamOptions {
  std::string s;
  std::string p;
  std::string alpha;
};

MeasureSpec make_spec(const std::string& family_text, const ParamOptions& po) {
  MeasureSpec spec;
  spec.family = parse_family(family_text);
  if (spec.family == Family::z) {
    if (po.s.empty() || po.p.empty()) throw Error(Errc::inadmissible_params, "family z needs --s and --p");
    spec.z = ZParams::make(parse_rational(po.s), parse_rational(po.p));
  }
  if (spec.family == Family::alpha) {
    if (po.alpha.empty()) throw Error(Errc::inadmissible_params, "family alpha needs --alpha");
    spec.alpha = AlphaParam::make(parse_rational(po.alpha));
  }
  return spec;
}

void add_param_options(CLI::App* sub, ParamOptions& po) {
  sub->add_option("--s", po.s, "z + z' as a rational, e.g. -1");
  sub->add_option("--p", po.p, "z * z' as a rational, e.g. 3/16");
  sub->add_option("--alpha", po.alpha, "alpha > 0 as a rational, e.g. 3/16");
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv(kSeedVariable); env && *env) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::parse_error, std::string(kSeedVariable) + " is not an unsigned integer");
    }
  }
  return 0;
}

int check_level(int n, int cap, const char* what) {
  if (n < 0) throw Error(Errc::parse_error, "--n must be nonnegative");
  if (n > cap)
    throw Error(Errc::cap_exceeded, std::string(what) + " level " + std::to_string(n) + " exceeds cap " +
                                        std::to_string(cap) + " (raise it with --cap-young/--cap-schur)");
  return n;
}

// enum ---------------------------------------------------------------------

struct EnumOptions {
  std::string kind;
  int n = 0;
  bool dims = false;
  std::string format = "text";
};

int run_enum(const EnumOptions& o, const Caps& caps, std::ostream& out) {
  const Kind kind = parse_kind(o.kind);
  json doc = json::array();
  auto emit = [&](const std::string& parts, const BigInt& dim) {
    if (o.format == "json") {
      json row = {{"parts", parts}};
      if (o.dims) row["dim"] = dim.get_str();
      doc.push_back(std::move(row));
    } else {
      out << parts;
      if (o.dims) out << '\t' << dim.get_str();
      out << '\n';
    }
  };
  if (kind == Kind::ordinary) {
    const auto& layer = young_layer(check_level(o.n, caps.young, "Young graph"), caps.young);
    for (std::size_t i = 0; i < layer.vertices.size(); ++i) emit(layer.vertices[i].to_string(), layer.dims[i]);
  } else {
    const auto& layer = schur_layer(check_level(o.n, caps.schur, "Schur graph"), caps.schur);
    for (std::size_t i = 0; i < layer.vertices.size(); ++i) emit(layer.vertices[i].to_string(), layer.dims[i]);
  }
  if (o.format == "json") out << doc.dump(2) << '\n';
  return 0;
}

// kerov --------------------------------------------------------------------

struct KerovOptions {
  std::string kind;
  std::string parts;
  std::string format = "text";
};

int run_kerov(const KerovOptions& o, std::ostream& out) {
  const Kind kind = parse_kind(o.kind);
  json doc;
  std::vector<PoleResidue> residues;
  std::string function;
  if (kind == Kind::ordinary) {
    const Partition p = Partition::parse(o.parts);
    const KerovCoordsOrdinary c = kerov_coords(p);
    const RationalFunction f = r_up(p);
    function = f.to_string("u");
    residues = partial_fractions(f);
    doc = {{"kind", "young"}, {"parts", p.to_string()}, {"maxima", c.maxima}, {"minima", c.minima}};
    if (o.format != "json")
      out << "parts: " << p.to_string() << "\nmaxima: " << join(c.maxima) << "\nminima: " << join(c.minima) << '\n';
  } else {
    const StrictPartition s = StrictPartition::parse(o.parts);
    const KerovCoordsShifted c = shifted_kerov_coords(s);
    const RationalFunction f = r_up_shifted(s);
    function = f.to_string("v");
    residues = partial_fractions(f);
    doc = {{"kind", "schur"}, {"parts", s.to_string()}, {"addable", c.addable}, {"removable", c.removable}};
    if (o.format != "json")
      out << "parts: " << s.to_string() << "\naddable: " << join(c.addable) << "\nremovable: " << join(c.removable)
          << '\n';
  }
  if (o.format == "json") {
    doc["function"] = function;
    json rs = json::array();
    for (const auto& pr : residues) rs.push_back({{"pole", to_string(pr.pole)}, {"residue", to_string(pr.residue)}});
    doc["residues"] = rs;
    out << doc.dump(2) << '\n';
  } else {
    out << "function: " << function << '\n';
    for (const auto& pr : residues) out << "residue " << to_string(pr.pole) << ": " << to_string(pr.residue) << '\n';
  }
  return 0;
}

// measure ------------------------------------------------------------------

struct MeasureOptions {
  std::string family;
  int n = 0;
  ParamOptions params;
  std::string format = "exact";
  int digits = 12;
};

AnyTable build_checked(const MeasureSpec& spec, int n, const Caps& caps) {
  const bool young = spec.kind() == Kind::ordinary;
  const int cap = young ? caps.young : caps.schur;
  return build_measure(spec, check_level(n, cap, young ? "Young graph" : "Schur graph"), cap);
}

int run_measure(const MeasureOptions& o, const Caps& caps, std::ostream& out) {
  const MeasureSpec spec = make_spec(o.family, o.params);
  const TableFormat format = parse_table_format(o.format);
  out << render_table(build_checked(spec, o.n, caps), format, spec.params(), o.digits);
  return 0;
}

// verify -------------------------------------------------------------------

struct VerifyOptions {
  std::string prop;
  int max_n = 0;
  std::vector<std::string> alphas;
  std::vector<std::string> s_values;
  std::vector<std::string> p_values;
};

int run_verify(const VerifyOptions& o, const Caps& caps, std::ostream& out) {
  SweepParams params;
  if (!o.alphas.empty()) {
    params.alphas.clear();
    for (const auto& a : o.alphas) params.alphas.push_back(AlphaParam::make(parse_rational(a)));
  }
  if (o.s_values.size() != o.p_values.size())
    throw Error(Errc::parse_error, "--s and --p must be given the same number of times");
  if (!o.s_values.empty()) {
    params.z_params.clear();
    for (std::size_t i = 0; i < o.s_values.size(); ++i)
      params.z_params.push_back(ZParams::make(parse_rational(o.s_values[i]), parse_rational(o.p_values[i])));
  }
  const int young_need = o.prop == "proportionality" || o.prop == "all" ? 2 * o.max_n : o.max_n;
  check_level(young_need, caps.young, "Young graph");
  check_level(o.max_n, caps.schur, "Schur graph");

  std::vector<std::string> props = o.prop == "all" ? verification_names() : std::vector<std::string>{o.prop};
  bool pass = true;
  json reports = json::array();
  for (const auto& prop : props) {
    const VerificationReport r = run_verification(prop, o.max_n, params);
    pass = pass && r.pass();
    reports.push_back(report_to_json(r));
  }
  out << (props.size() == 1 ? reports.front() : reports).dump(2) << '\n';
  return pass ? 0 : 1;
}

// sample -------------------------------------------------------------------

struct SampleOptions {
  std::string kind;
  std::string family;
  int n = 0;
  std::uint64_t count = 1;
  std::optional<std::uint64_t> seed;
  std::string method = "direct";
  std::string emit = "hist";
  std::string format = "json";
  unsigned threads = 1;
  ParamOptions params;
};

template <class Trace>
void emit_traces(const std::vector<Trace>& traces, std::ostream& out) {
  for (const auto& t : traces) out << trace_to_json(t).dump() << '\n';
}

int run_sample(const SampleOptions& o, const Caps& caps, std::ostream& out) {
  const Kind kind = parse_kind(o.kind);
  const MeasureSpec spec = make_spec(o.family, o.params);
  const std::uint64_t seed = o.seed ? *o.seed : default_seed();
  const TableFormat format = parse_table_format(o.format);
  if (o.emit != "traces" && o.emit != "hist") throw Error(Errc::parse_error, "--emit must be traces or hist");
  auto params = spec.params();
  params["seed"] = std::to_string(seed);
  params["method"] = o.method;

  if (o.method == "forced-sym") {
    if (spec.family != Family::alpha) throw Error(Errc::parse_error, "forced-sym sampling needs --family alpha");
    check_level(o.n, caps.schur, "Schur graph");
    check_level(2 * o.n, std::max(caps.young, 2 * caps.schur), "Young graph");
    const ForcedDSymSampler sampler(*spec.alpha, caps.schur);
    const auto traces = sample_many(sampler, o.n, seed, o.count, o.threads);
    if (o.emit == "traces") {
      emit_traces(traces, out);
    } else if (kind == Kind::strict) {
      out << render_histogram(empirical_from_finals(undoubled_finals(traces)), format, params);
    } else {
      out << render_histogram(empirical_distribution(traces), format, params);
    }
    return 0;
  }
  if (o.method != "direct") throw Error(Errc::parse_error, "--method must be direct or forced-sym");
  if (spec.kind() != kind)
    throw Error(Errc::parse_error, "family " + std::string(family_name(spec.family)) + " does not live on the " +
                                       std::string(kind_name(kind)) + " graph");
  if (kind == Kind::ordinary) {
    const YoungGrowthSampler sampler(spec.young_kernel(), caps.young);
    const auto traces = sample_many(sampler, check_level(o.n, caps.young, "Young graph"), seed, o.count, o.threads);
    if (o.emit == "traces")
      emit_traces(traces, out);
    else
      out << render_histogram(empirical_distribution(traces), format, params);
  } else {
    const SchurGrowthSampler sampler(spec.schur_kernel(), caps.schur);
    const auto traces = sample_many(sampler, check_level(o.n, caps.schur, "Schur graph"), seed, o.count, o.threads);
    if (o.emit == "traces")
      emit_traces(traces, out);
    else
      out << render_histogram(empirical_distribution(traces), format, params);
  }
  return 0;
}

// tv -----------------------------------------------------------------------

struct TvOptions {
  std::string against;
  std::string table;
  std::string family;
  int n = -1;
  ParamOptions params;
  std::string format = "exact";
  int digits = 12;
};

LoadedTable load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_table_json(buffer.str());
}

int run_tv(const TvOptions& o, const Caps& caps, std::ostream& out) {
  const LoadedTable against = load_file(o.against);
  LoadedTable reference;
  if (!o.table.empty()) {
    reference = load_file(o.table);
  } else {
    if (o.family.empty()) throw Error(Errc::parse_error, "tv needs --table FILE or --family with parameters");
    const MeasureSpec spec = make_spec(o.family, o.params);
    reference = to_loaded(build_checked(spec, o.n < 0 ? against.n : o.n, caps));
  }
  const ExactRational tv = tv_distance(against, reference);
  if (o.format == "json")
    out << json{{"tv", to_fraction_string(tv)}, {"tv_decimal", to_decimal(tv, o.digits)}}.dump(2) << '\n';
  else
    out << to_fraction_string(tv) << '\t' << to_decimal(tv, o.digits) << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact combinatorics of the Young and Schur graphs: coherent measures, doubling, verification, sampling",
               "youngschur"};
  app.require_subcommand(1);
  app.fallthrough();
  Caps caps;
  app.add_option("--cap-young", caps.young, "largest Young graph level any command may touch")->capture_default_str();
  app.add_option("--cap-schur", caps.schur, "largest Schur graph level any command may touch")->capture_default_str();

  const std::vector<std::string> kinds{"young", "schur"};
  const std::vector<std::string> families{"plancherel", "plancherel-shifted", "z", "alpha"};
  const std::vector<std::string> table_formats{"json", "csv", "exact"};

  EnumOptions enum_opts;
  auto* enum_cmd = app.add_subcommand("enum", "list one layer of the Young or Schur graph");
  enum_cmd->add_option("--kind", enum_opts.kind)->required()->check(CLI::IsMember(kinds));
  enum_cmd->add_option("--n", enum_opts.n)->required();
  enum_cmd->add_flag("--dims", enum_opts.dims, "include f (Young) or g (Schur)");
  enum_cmd->add_option("--format", enum_opts.format)->check(CLI::IsMember({"text", "json"}));

  KerovOptions kerov_opts;
  auto* kerov_cmd = app.add_subcommand("kerov", "interlacing coordinates and the up-transition rational function");
  kerov_cmd->add_option("--kind", kerov_opts.kind)->required()->check(CLI::IsMember(kinds));
  kerov_cmd->add_option("--parts", kerov_opts.parts)->required();
  kerov_cmd->add_option("--format", kerov_opts.format)->check(CLI::IsMember({"text", "json"}));

  std::string double_parts;
  auto* double_cmd = app.add_subcommand("double", "doubling of a strict partition");
  double_cmd->add_option("--parts", double_parts)->required();

  std::string undouble_parts;
  auto* undouble_cmd = app.add_subcommand("undouble", "inverse doubling of a D-symmetric partition");
  undouble_cmd->add_option("--parts", undouble_parts)->required();

  MeasureOptions measure_opts;
  auto* measure_cmd = app.add_subcommand("measure", "exact distribution table at one level");
  measure_cmd->add_option("--family", measure_opts.family)->required()->check(CLI::IsMember(families));
  measure_cmd->add_option("--n", measure_opts.n)->required();
  add_param_options(measure_cmd, measure_opts.params);
  measure_cmd->add_option("--format", measure_opts.format)->check(CLI::IsMember(table_formats));
  measure_cmd->add_option("--digits", measure_opts.digits, "decimal digits for csv output");

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "exact verification sweep");
  std::vector<std::string> props = verification_names();
  props.push_back("all");
  verify_cmd->add_option("--prop", verify_opts.prop)->required()->check(CLI::IsMember(props));
  verify_cmd->add_option("--max-n", verify_opts.max_n)->required();
  verify_cmd->add_option("--alpha", verify_opts.alphas, "alpha values (repeatable)");
  verify_cmd->add_option("--s", verify_opts.s_values, "z-measure s values (repeatable, paired with --p)");
  verify_cmd->add_option("--p", verify_opts.p_values, "z-measure p values (repeatable, paired with --s)");

  SampleOptions sample_opts;
  auto* sample_cmd = app.add_subcommand("sample", "seeded Monte Carlo growth");
  sample_cmd->add_option("--kind", sample_opts.kind)->required()->check(CLI::IsMember(kinds));
  sample_cmd->add_option("--family", sample_opts.family)->required()->check(CLI::IsMember(families));
  sample_cmd->add_option("--n", sample_opts.n)->required();
  sample_cmd->add_option("--count", sample_opts.count)->capture_default_str();
  sample_cmd->add_option("--seed", sample_opts.seed, std::string("master seed (default: $") + kSeedVariable + " or 0)");
  sample_cmd->add_option("--method", sample_opts.method)->check(CLI::IsMember({"direct", "forced-sym"}));
  sample_cmd->add_option("--emit", sample_opts.emit)->check(CLI::IsMember({"traces", "hist"}));
  sample_cmd->add_option("--format", sample_opts.format)->check(CLI::IsMember(table_formats));
  sample_cmd->add_option("--threads", sample_opts.threads)->capture_default_str();
  add_param_options(sample_cmd, sample_opts.params);

  TvOptions tv_opts;
  auto* tv_cmd = app.add_subcommand("tv", "total variation distance between a JSON table and a reference");
  tv_cmd->add_option("--against", tv_opts.against, "distribution or histogram JSON")->required();
  tv_cmd->add_option("--table", tv_opts.table, "reference JSON (otherwise built from --family)");
  tv_cmd->add_option("--family", tv_opts.family)->check(CLI::IsMember(families));
  tv_cmd->add_option("--n", tv_opts.n, "level (default: that of --against)");
  add_param_options(tv_cmd, tv_opts.params);
  tv_cmd->add_option("--format", tv_opts.format)->check(CLI::IsMember({"json", "exact"}));
  tv_cmd->add_option("--digits", tv_opts.digits);

  std::vector<const char*> argv{"youngschur"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*enum_cmd) return run_enum(enum_opts, caps, out);
    if (*kerov_cmd) return run_kerov(kerov_opts, out);
    if (*double_cmd) {
      out << double_diagram(StrictPartition::parse(double_parts)).to_string() << '\n';
      return 0;
    }
    if (*undouble_cmd) {
      const auto lambda = undouble(Partition::parse(undouble_parts));
      if (!lambda) {
        err << "NotSymmetric: (" << undouble_parts << ") is not a doubled diagram\n";
        return 1;
      }
      out << lambda->to_string() << '\n';
      return 0;
    }
    if (*measure_cmd) return run_measure(measure_opts, caps, out);
    if (*verify_cmd) return run_verify(verify_opts, caps, out);
    if (*sample_cmd) return run_sample(sample_opts, caps, out);
    if (*tv_cmd) return run_tv(tv_opts, caps, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == Errc::completion_failure ? 1 : 2;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace youngschur::cli
