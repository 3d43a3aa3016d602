#include "dihedra/serialization.hpp"

#include <nlohmann/json.hpp>

#include "dihedra/error.hpp"
#include "dihedra/notation.hpp"

namespace dihedra {
namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

template <typename F>
auto parse_guarded(const std::string& text, F&& body) {
  try {
    return body(ordered_json::parse(text));
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace

SpectrumReport spectrum_report(const ConnectionSet& set) {
  return {spectrum_lines(set), fingerprint(set)};
}

std::string class_table_to_json(const ClassTable& table) {
  ordered_json classes = ordered_json::array();
  for (const auto& c : table.classes) {
    classes.push_back({{"representative", c.representative},
                       {"members", c.members},
                       {"size", c.size()}});
  }
  ordered_json j;
  j["p"] = table.p;
  j["classes"] = std::move(classes);
  j["n_tilde"] = table.n_tilde();
  j["N_tilde"] = table.N_tilde();
  return dump(j);
}

ClassTable class_table_from_json(const std::string& text) {
  return parse_guarded(text, [](const ordered_json& j) {
    ClassTable table;
    table.p = j.at("p").get<std::int64_t>();
    for (const auto& c : j.at("classes")) {
      EquivalenceClass cls;
      cls.representative = c.at("representative").get<std::int64_t>();
      cls.members = c.at("members").get<std::vector<std::int64_t>>();
      if (c.at("size").get<std::size_t>() != cls.members.size()) {
        throw Error(ErrorCode::kParseError, "class size does not match members");
      }
      table.classes.push_back(std::move(cls));
    }
    if (j.at("n_tilde").get<std::int64_t>() != table.n_tilde() ||
        j.at("N_tilde").get<std::int64_t>() != table.N_tilde()) {
      throw Error(ErrorCode::kParseError, "class counts do not match class list");
    }
    return table;
  });
}

std::string spectrum_to_json(const SpectrumReport& report) {
  ordered_json lines = ordered_json::array();
  for (const auto& line : report.lines) {
    lines.push_back({{"expr", line.expr},
                     {"value", line.value},
                     {"multiplicity", line.multiplicity}});
  }
  ordered_json j;
  j["lines"] = std::move(lines);
  j["fingerprint"] = report.fingerprint.to_decimal_strings();
  return dump(j);
}

SpectrumReport spectrum_from_json(const std::string& text) {
  return parse_guarded(text, [](const ordered_json& j) {
    SpectrumReport report;
    for (const auto& line : j.at("lines")) {
      report.lines.push_back({line.at("expr").get<std::string>(),
                              line.at("value").get<double>(),
                              line.at("multiplicity").get<int>()});
    }
    report.fingerprint = SpectrumFingerprint::from_decimal_strings(
        j.at("fingerprint").get<std::vector<std::string>>());
    return report;
  });
}

std::string count_report_to_json(const CountReport& report) {
  ordered_json j;
  j["p"] = report.p;
  j["n_tilde"] = report.n_tilde;
  j["N_tilde"] = report.N_tilde;
  j["branch"] = to_string(report.branch);
  return dump(j);
}

std::string graph_to_json(const CayleyGraph& graph) {
  const ConnectionSet& set = graph.connection_set();
  ordered_json elements = ordered_json::array();
  for (const auto& x : set.elements()) elements.push_back(format_element(x));
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : graph.graph().edges()) edges.push_back({u, v});
  ordered_json j;
  j["n"] = set.n();
  j["set"] = std::move(elements);
  j["type"] = set.cubic_type() ? ordered_json(type_name(*set.cubic_type())) : ordered_json();
  j["edges"] = std::move(edges);
  return dump(j);
}

}  // namespace dihedra
