#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "youngschur/measures.hpp"
#include "youngschur/sampler.hpp"
#include "youngschur/verify.hpp"

namespace youngschur {

enum class TableFormat { json, csv, exact };

TableFormat parse_table_format(std::string_view name);
std::string_view kind_name(Kind k);  // "young" / "schur"
Kind parse_kind(std::string_view name);

/// {"kind", "n", "params", "entries": [{"parts", "prob_num", "prob_den"}]}
nlohmann::json table_to_json(const AnyTable& table, const std::map<std::string, std::string>& params);

/// The same schema with a "count" per entry and a top-level "samples".
template <class Diagram>
nlohmann::json histogram_to_json(const EmpiricalTable<Diagram>& e, const std::map<std::string, std::string>& params);

/// json: one document; csv: header "parts,prob_num,prob_den,prob"; exact: "parts<TAB>num/den" lines.
std::string render_table(const AnyTable& table, TableFormat format, const std::map<std::string, std::string>& params,
                         int digits = 12);

template <class Diagram>
std::string render_histogram(const EmpiricalTable<Diagram>& e, TableFormat format,
                             const std::map<std::string, std::string>& params, int digits = 12);

/// Distribution or histogram document read back from JSON. For histograms the
/// probabilities are count/samples.
struct LoadedTable {
  Kind kind = Kind::ordinary;
  int n = 0;
  std::map<std::string, std::string> params;
  std::optional<std::uint64_t> samples;
  std::vector<std::pair<std::string, ExactRational>> entries;
};

/// Throws Error(parse_error) on schema violations.
LoadedTable parse_table_json(std::string_view text);

/// Total variation between two loaded tables of the same kind and level.
ExactRational tv_distance(const LoadedTable& a, const LoadedTable& b);

LoadedTable to_loaded(const AnyTable& table);

nlohmann::json report_to_json(const VerificationReport& r);

template <class Diagram>
nlohmann::json trace_to_json(const GrowthTrace<Diagram>& t);

}  // namespace youngschur
