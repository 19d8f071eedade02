#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "youngschur/error.hpp"
#include "youngschur/graph.hpp"
#include "youngschur/kerov.hpp"
#include "youngschur/measures.hpp"
#include "youngschur/sampler.hpp"
#include "youngschur/table_io.hpp"
#include "youngschur/verify.hpp"

namespace py = pybind11;
using namespace youngschur;

namespace {

using Parts = std::vector<int>;

py::object fraction(const ExactRational& q) {
  static const py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_fraction_string(q));
}

py::int_ big(const BigInt& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

ExactRational rational_arg(const py::handle& h) {
  // ints, Fractions and strings all render to something parse_rational accepts
  return parse_rational(py::str(h).cast<std::string>());
}

Parts to_parts(std::span<const int> s) { return {s.begin(), s.end()}; }

py::tuple key(std::span<const int> s) { return py::tuple(py::cast(to_parts(s))); }

MeasureSpec make_spec(const std::string& family, const py::object& s, const py::object& p, const py::object& alpha) {
  MeasureSpec spec;
  spec.family = parse_family(family);
  if (spec.family == Family::z) {
    if (s.is_none() || p.is_none()) throw Error(Errc::inadmissible_params, "family z needs s and p");
    spec.z = ZParams::make(rational_arg(s), rational_arg(p));
  } else if (spec.family == Family::alpha) {
    if (alpha.is_none()) throw Error(Errc::inadmissible_params, "family alpha needs alpha");
    spec.alpha = AlphaParam::make(rational_arg(alpha));
  }
  return spec;
}

template <class Diagram>
py::dict table_dict(const DistributionTable<Diagram>& t) {
  py::dict out;
  for (const auto& [d, v] : t.entries()) out[key(d.parts())] = fraction(v);
  return out;
}

template <class Diagram>
py::dict count_dict(const EmpiricalTable<Diagram>& e) {
  py::dict out;
  for (const auto& [d, c] : e.counts) out[key(d.parts())] = c;
  return out;
}

py::list residues_list(const std::vector<PoleResidue>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(py::make_tuple(fraction(r.pole), fraction(r.residue)));
  return out;
}

py::object parse_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_youngschur, m) {
  m.doc() = "Exact combinatorics of the Young and Schur graphs";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("double", [](const Parts& s) { return to_parts(double_diagram(StrictPartition(s)).parts()); },
        py::arg("parts"), "Doubled diagram of a strict partition.");
  m.def(
      "undouble",
      [](const Parts& p) -> std::optional<Parts> {
        const auto s = undouble(Partition(p));
        if (!s) return std::nullopt;
        return to_parts(s->parts());
      },
      py::arg("parts"), "Inverse of double, or None when the diagram is not a doubled one.");
  m.def("is_d_symmetric", [](const Parts& p) { return is_d_symmetric(Partition(p)); }, py::arg("parts"));
  m.def("hook_lengths", [](const Parts& p) { return hook_lengths(Partition(p)); }, py::arg("parts"));
  m.def(
      "frobenius",
      [](const Parts& p) {
        const auto f = to_frobenius(Partition(p));
        return py::make_tuple(f.arms, f.legs);
      },
      py::arg("parts"));

  m.def("partitions", [](int n) {
    std::vector<Parts> out;
    for (const auto& p : young_layer(n).vertices) out.push_back(to_parts(p.parts()));
    return out;
  });
  m.def("strict_partitions", [](int n) {
    std::vector<Parts> out;
    for (const auto& s : schur_layer(n).vertices) out.push_back(to_parts(s.parts()));
    return out;
  });
  m.def("dim_f", [](const Parts& p) { return big(dim_f(Partition(p))); }, py::arg("parts"));
  m.def("dim_g", [](const Parts& s) { return big(dim_g(StrictPartition(s))); }, py::arg("parts"));
  m.def("count_d_paths", [](const Parts& s) { return big(count_d_paths(StrictPartition(s))); }, py::arg("parts"));

  m.def(
      "kerov_coords",
      [](const Parts& p) {
        const auto c = kerov_coords(Partition(p));
        return py::make_tuple(c.maxima, c.minima);
      },
      py::arg("parts"));
  m.def(
      "shifted_kerov_coords",
      [](const Parts& s) {
        const auto c = shifted_kerov_coords(StrictPartition(s));
        return py::make_tuple(c.addable, c.removable);
      },
      py::arg("parts"));
  m.def("r_up", [](const Parts& p) { return r_up(Partition(p)).to_string("u"); }, py::arg("parts"));
  m.def("r_up_shifted", [](const Parts& s) { return r_up_shifted(StrictPartition(s)).to_string("v"); },
        py::arg("parts"));
  m.def("up_residues", [](const Parts& p) { return residues_list(partial_fractions(r_up(Partition(p)))); },
        py::arg("parts"), "(pole, residue) pairs of the ordinary up function.");
  m.def("up_residues_shifted",
        [](const Parts& s) { return residues_list(partial_fractions(r_up_shifted(StrictPartition(s)))); },
        py::arg("parts"));

  m.def(
      "measure",
      [](const std::string& family, int n, py::object s, py::object p, py::object alpha) -> py::dict {
        const AnyTable t = build_measure(make_spec(family, s, p, alpha), n);
        return std::visit([](const auto& table) { return table_dict(table); }, t);
      },
      py::arg("family"), py::arg("n"), py::arg("s") = py::none(), py::arg("p") = py::none(),
      py::arg("alpha") = py::none(), "Exact distribution {parts tuple: Fraction} at level n.");

  m.def(
      "verify",
      [](const std::string& prop, int max_n) { return parse_json(report_to_json(run_verification(prop, max_n))); },
      py::arg("prop"), py::arg("max_n"), "Run one verification sweep; returns the report as a dict.");
  m.def("verification_names", &verification_names);

  m.def(
      "sample",
      [](const std::string& kind, const std::string& family, int n, std::size_t count, std::uint64_t seed,
         const std::string& method, py::object s, py::object p, py::object alpha, unsigned threads) -> py::dict {
        const MeasureSpec spec = make_spec(family, s, p, alpha);
        const Kind k = parse_kind(kind);
        std::variant<EmpiricalTable<Partition>, EmpiricalTable<StrictPartition>> hist;
        {
          py::gil_scoped_release release;
          if (method == "forced-sym") {
            if (spec.family != Family::alpha) throw Error(Errc::parse_error, "forced-sym needs family alpha");
            const auto traces = sample_many(ForcedDSymSampler(*spec.alpha), n, seed, count, threads);
            if (k == Kind::strict)
              hist = empirical_from_finals(undoubled_finals(traces));
            else
              hist = empirical_distribution(traces);
          } else if (method != "direct") {
            throw Error(Errc::parse_error, "method must be direct or forced-sym");
          } else if (spec.kind() != k) {
            throw Error(Errc::parse_error, "family does not live on this graph");
          } else if (k == Kind::ordinary) {
            hist = empirical_distribution(sample_many(YoungGrowthSampler(spec.young_kernel()), n, seed, count, threads));
          } else {
            hist = empirical_distribution(sample_many(SchurGrowthSampler(spec.schur_kernel()), n, seed, count, threads));
          }
        }
        return std::visit([](const auto& e) { return count_dict(e); }, hist);
      },
      py::arg("kind"), py::arg("family"), py::arg("n"), py::arg("count"), py::arg("seed") = 0,
      py::arg("method") = "direct", py::arg("s") = py::none(), py::arg("p") = py::none(),
      py::arg("alpha") = py::none(), py::arg("threads") = 1, "Histogram {parts tuple: count} of final diagrams.");

  m.def(
      "forced_trace",
      [](int n, py::object alpha, std::uint64_t seed, std::uint64_t index) {
        const auto t = ForcedDSymSampler(AlphaParam::make(rational_arg(alpha))).sample(n, seed, index);
        std::vector<Parts> out;
        for (const auto& d : t.diagrams) out.push_back(to_parts(d.parts()));
        return out;
      },
      py::arg("n"), py::arg("alpha"), py::arg("seed") = 0, py::arg("index") = 0);
}
