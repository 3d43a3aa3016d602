#pragma once

#include <string>
#include <vector>

#include "dihedra/cayley.hpp"
#include "dihedra/char_poly.hpp"
#include "dihedra/classify.hpp"
#include "dihedra/number_theory.hpp"
#include "dihedra/spectra.hpp"

namespace dihedra {

/// Everything printed for one spectrum.
struct SpectrumReport {
  std::vector<SpectrumLine> lines;
  SpectrumFingerprint fingerprint;

  bool operator==(const SpectrumReport&) const = default;
};

SpectrumReport spectrum_report(const ConnectionSet& set);

/// Emitters produce 2-space indented JSON with a trailing
/// newline; key order is fixed. Parsers throw Error{kParseError}.

/// {"p", "classes": [{"representative", "members", "size"}], "n_tilde", "N_tilde"}
std::string class_table_to_json(const ClassTable& table);
ClassTable class_table_from_json(const std::string& text);

/// {"lines": [{"expr", "value", "multiplicity"}], "fingerprint": [decimal, ...]}
std::string spectrum_to_json(const SpectrumReport& report);
SpectrumReport spectrum_from_json(const std::string& text);

/// {"p", "n_tilde", "N_tilde", "branch"}
std::string count_report_to_json(const CountReport& report);

/// {"n", "set": [element, ...], "type", "edges": [[u, v], ...]}; type is
/// "I", "II", "III" or null for non-cubic sets.
std::string graph_to_json(const CayleyGraph& graph);

}  // namespace dihedra
