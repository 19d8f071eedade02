#include "youngschur/table_io.hpp"

#include <map>
#include <sstream>

#include "youngschur/error.hpp"

namespace youngschur {

using nlohmann::json;

TableFormat parse_table_format(std::string_view name) {
  if (name == "json") return TableFormat::json;
  if (name == "csv") return TableFormat::csv;
  if (name == "exact") return TableFormat::exact;
  throw Error(Errc::parse_error, "unknown format '" + std::string(name) + "'");
}

std::string_view kind_name(Kind k) { return k == Kind::ordinary ? "young" : "schur"; }

Kind parse_kind(std::string_view name) {
  if (name == "young") return Kind::ordinary;
  if (name == "schur") return Kind::strict;
  throw Error(Errc::parse_error, "unknown kind '" + std::string(name) + "'");
}

namespace {

json entry_json(const std::string& parts, const ExactRational& q) {
  return {{"parts", parts}, {"prob_num", q.get_num().get_str()}, {"prob_den", q.get_den().get_str()}};
}

json params_json(const std::map<std::string, std::string>& params) {
  json out = json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

template <class Diagram>
json distribution_json(const DistributionTable<Diagram>& t, const std::map<std::string, std::string>& params) {
  json entries = json::array();
  for (const auto& [d, q] : t.entries()) entries.push_back(entry_json(d.to_string(), q));
  return {{"kind", kind_name(DistributionTable<Diagram>::kind)}, {"n", t.level()}, {"params", params_json(params)},
          {"entries", entries}};
}

ExactRational frequency(std::uint64_t count, std::uint64_t total) {
  ExactRational q(BigInt(std::to_string(count)), BigInt(std::to_string(total)));
  q.canonicalize();
  return q;
}

std::string render_rows(const std::vector<std::pair<std::string, ExactRational>>& rows,
                        const std::vector<std::uint64_t>* counts, TableFormat format, int digits) {
  std::ostringstream out;
  if (format == TableFormat::csv) {
    out << "parts,prob_num,prob_den,prob" << (counts ? ",count" : "") << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& [parts, q] = rows[i];
      out << '"' << parts << "\"," << q.get_num().get_str() << ',' << q.get_den().get_str() << ','
          << to_decimal(q, digits);
      if (counts) out << ',' << (*counts)[i];
      out << "\n";
    }
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& [parts, q] = rows[i];
      out << parts << '\t' << to_fraction_string(q);
      if (counts) out << '\t' << (*counts)[i];
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace

json table_to_json(const AnyTable& table, const std::map<std::string, std::string>& params) {
  return std::visit([&](const auto& t) { return distribution_json(t, params); }, table);
}

template <class Diagram>
json histogram_to_json(const EmpiricalTable<Diagram>& e, const std::map<std::string, std::string>& params) {
  json entries = json::array();
  for (const auto& [d, count] : e.counts) {
    json entry = entry_json(d.to_string(), frequency(count, e.total));
    entry["count"] = count;
    entries.push_back(std::move(entry));
  }
  return {{"kind", kind_name(diagram_kind<Diagram>::value)}, {"n", e.level},       {"params", params_json(params)},
          {"samples", e.total},                              {"entries", entries}};
}

template json histogram_to_json(const EmpiricalTable<Partition>&, const std::map<std::string, std::string>&);
template json histogram_to_json(const EmpiricalTable<StrictPartition>&, const std::map<std::string, std::string>&);

std::string render_table(const AnyTable& table, TableFormat format, const std::map<std::string, std::string>& params,
                         int digits) {
  if (format == TableFormat::json) return table_to_json(table, params).dump(2) + "\n";
  std::vector<std::pair<std::string, ExactRational>> rows;
  std::visit(
      [&](const auto& t) {
        for (const auto& [d, q] : t.entries()) rows.emplace_back(d.to_string(), q);
      },
      table);
  return render_rows(rows, nullptr, format, digits);
}

template <class Diagram>
std::string render_histogram(const EmpiricalTable<Diagram>& e, TableFormat format,
                             const std::map<std::string, std::string>& params, int digits) {
  if (format == TableFormat::json) return histogram_to_json(e, params).dump(2) + "\n";
  std::vector<std::pair<std::string, ExactRational>> rows;
  std::vector<std::uint64_t> counts;
  for (const auto& [d, count] : e.counts) {
    rows.emplace_back(d.to_string(), frequency(count, e.total));
    counts.push_back(count);
  }
  return render_rows(rows, &counts, format, digits);
}

template std::string render_histogram(const EmpiricalTable<Partition>&, TableFormat,
                                      const std::map<std::string, std::string>&, int);
template std::string render_histogram(const EmpiricalTable<StrictPartition>&, TableFormat,
                                      const std::map<std::string, std::string>&, int);

LoadedTable parse_table_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  try {
    LoadedTable t;
    t.kind = parse_kind(doc.at("kind").get<std::string>());
    t.n = doc.at("n").get<int>();
    if (doc.contains("params"))
      for (const auto& [k, v] : doc.at("params").items()) t.params[k] = v.get<std::string>();
    if (doc.contains("samples")) t.samples = doc.at("samples").get<std::uint64_t>();
    for (const auto& entry : doc.at("entries")) {
      std::string parts = entry.at("parts").get<std::string>();
      // Canonicalize the encoding and check it against the declared kind and level.
      int weight = 0;
      if (t.kind == Kind::ordinary) {
        const Partition p = Partition::parse(parts);
        parts = p.to_string();
        weight = p.weight();
      } else {
        const StrictPartition s = StrictPartition::parse(parts);
        parts = s.to_string();
        weight = s.weight();
      }
      if (weight != t.n) throw Error(Errc::level_mismatch, "entry (" + parts + ") is not at level " + std::to_string(t.n));
      ExactRational q;
      if (t.samples && entry.contains("count")) {
        q = frequency(entry.at("count").get<std::uint64_t>(), *t.samples);
      } else {
        q = parse_rational(entry.at("prob_num").get<std::string>() + "/" + entry.at("prob_den").get<std::string>());
      }
      t.entries.emplace_back(std::move(parts), std::move(q));
    }
    return t;
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("distribution schema: ") + e.what());
  }
}

ExactRational tv_distance(const LoadedTable& a, const LoadedTable& b) {
  if (a.kind != b.kind) throw Error(Errc::level_mismatch, "tables of different kinds");
  if (a.n != b.n)
    throw Error(Errc::level_mismatch, "levels " + std::to_string(a.n) + " and " + std::to_string(b.n) + " differ");
  std::map<std::string, ExactRational> diff;
  for (const auto& [parts, q] : a.entries) diff[parts] += q;
  for (const auto& [parts, q] : b.entries) diff[parts] -= q;
  ExactRational sum = 0;
  for (const auto& [parts, d] : diff) sum += abs(d);
  return sum / 2;
}

LoadedTable to_loaded(const AnyTable& table) {
  LoadedTable out;
  std::visit(
      [&](const auto& t) {
        out.kind = std::decay_t<decltype(t)>::kind;
        out.n = t.level();
        for (const auto& [d, q] : t.entries()) out.entries.emplace_back(d.to_string(), q);
      },
      table);
  return out;
}

json report_to_json(const VerificationReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"input", w.input}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  json out = {{"prop", r.prop},      {"n", r.max_n},           {"params", params_json(r.params)},
              {"status", r.status()}, {"checked", r.checked}, {"witnesses", witnesses}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

template <class Diagram>
json trace_to_json(const GrowthTrace<Diagram>& t) {
  json diagrams = json::array();
  for (const auto& d : t.diagrams) diagrams.push_back(d.to_string());
  return {{"seed", t.seed}, {"index", t.index}, {"trace", diagrams}};
}

template json trace_to_json(const GrowthTrace<Partition>&);
template json trace_to_json(const GrowthTrace<StrictPartition>&);

}  // namespace youngschur
