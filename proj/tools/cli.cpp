#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>

#include "dihedra/cayley.hpp"
#include "dihedra/classify.hpp"
#include "dihedra/error.hpp"
#include "dihedra/graph_io.hpp"
#include "dihedra/notation.hpp"
#include "dihedra/serialization.hpp"
#include "dihedra/spectra.hpp"

namespace dihedra::cli {
namespace {

ConnectionSet parse_set(std::int64_t n, const std::string& text) {
  return validate_connection_set(n, parse_elements(text, n));
}

std::string braced(const ConnectionSet& set) {
  return "{" + format_elements(set.elements()) + "}";
}

std::string format_class(const EquivalenceClass& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c.members[i]);
  }
  return out + "}";
}

std::string format_automorphism(const DihedralAutomorphism& sigma) {
  return "sigma(lambda=" + std::to_string(sigma.lambda().value()) +
         ", k=" + std::to_string(sigma.shift().value()) + ")";
}

std::string fixed(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(9) << (v == 0.0 ? 0.0 : v);
  return s.str();
}

void print_class_table(const ClassTable& table, std::ostream& out) {
  out << "classes of Z_" << table.p << " \\ {0,1}\n";
  for (const auto& c : table.classes) {
    out << "  [" << c.representative << "] = " << format_class(c) << "\n";
  }
  out << "n_tilde = " << table.n_tilde() << ", N_tilde = " << table.N_tilde() << "\n";
}

}  // namespace

int cmd_enumerate(std::int64_t p, const std::string& format, std::ostream& out) {
  require_odd_prime(p);
  const ClassTable table = enumerate_classes(p);
  if (format == "json") {
    out << class_table_to_json(table);
    return kExitOk;
  }
  const auto sets = enumerate_cubic_sets(p);
  out << "cubic connection sets of D_" << 2 * p << ": " << sets.size() << "\n";
  out << std::left << std::setw(24) << "set" << std::setw(6) << "type" << std::setw(6)
      << "s" << "class\n";
  for (const auto& set : sets) {
    const CubicType& type = set.require_cubic();
    out << std::setw(24) << braced(set) << std::setw(6) << type_name(type);
    if (const auto* t2 = std::get_if<TypeII>(&type)) {
      const std::int64_t s = canonicalize_type2(*t2, p).s.value();
      out << std::setw(6) << s << "[" << class_of(s, p).representative << "]\n";
    } else {
      out << std::setw(6) << "-" << "prism\n";
    }
  }
  out << std::right;
  print_class_table(table, out);
  return kExitOk;
}

int cmd_classify(std::int64_t p, const std::string& set_text, const std::string& with,
                 std::ostream& out) {
  require_odd_prime(p);
  if (set_text.empty()) {
    if (!with.empty()) {
      throw Error(ErrorCode::kParseError, "--with needs --set");
    }
    for (const auto& c : classify_all(p)) {
      out << braced(c.representative) << "  members=" << c.member_count;
      if (c.parameters) out << "  s in " << format_class(*c.parameters);
      out << "\n";
    }
    return kExitOk;
  }

  auto describe = [&](const ConnectionSet& set) {
    const CubicType& type = set.require_cubic();
    out << braced(set) << "  type " << type_name(type);
    if (const auto* t2 = std::get_if<TypeII>(&type)) {
      const auto canon = canonicalize_type2(*t2, p);
      const auto cls = class_of(canon.s.value(), p);
      out << "  s=" << canon.s.value() << " via " << format_automorphism(canon.map)
          << "  class [" << cls.representative << "] = " << format_class(cls);
    } else if (std::holds_alternative<TypeI>(type)) {
      out << "  class prism";
    }
    out << "\n";
  };

  const ConnectionSet s = parse_set(p, set_text);
  s.require_cubic();
  describe(s);
  if (with.empty()) return kExitOk;

  const ConnectionSet t = parse_set(p, with);
  t.require_cubic();
  describe(t);
  const bool iso = isomorphic(s, t, p);
  out << "isomorphic: " << (iso ? "yes" : "no") << "\n";
  out << "cospectral: " << (cospectral(s, t) ? "yes" : "no") << "\n";
  if (const auto sigma = find_cayley_isomorphism(s, t)) {
    out << "witness: " << format_automorphism(*sigma) << "\n";
  } else {
    out << "witness: none\n";
  }
  return kExitOk;
}

int cmd_spectrum(std::int64_t n, const std::string& set_text, const std::string& format,
                 std::ostream& out) {
  const ConnectionSet set = parse_set(n, set_text);
  const SpectrumReport report = spectrum_report(set);
  if (format == "json") {
    out << spectrum_to_json(report);
    return kExitOk;
  }
  out << "X(D_" << 2 * n << ", " << braced(set) << ")";
  if (set.cubic_type()) out << "  type " << type_name(*set.cubic_type());
  out << "\n";
  if (set.cubic_type()) {
    if (const auto* t2 = std::get_if<TypeII>(&*set.cubic_type())) {
      for (std::int64_t h = 1; 2 * h < n; ++h) {
        out << "  a_" << h << "(S) = " << fixed(a_h(*t2, n, h)) << "\n";
      }
    }
  }
  out << std::left << std::setw(44) << "expr" << std::setw(16) << "value" << "mult\n";
  for (const auto& line : report.lines) {
    out << std::setw(44) << line.expr << std::setw(16) << fixed(line.value)
        << line.multiplicity << "\n";
  }
  out << std::right << "char poly (ascending):";
  for (const auto& c : report.fingerprint.to_decimal_strings()) out << " " << c;
  out << "\n";
  return kExitOk;
}

int report_count_check(std::int64_t p, std::int64_t formula, std::int64_t enumerated,
                       std::ostream& out) {
  if (formula != enumerated) {
    out << "MISMATCH p=" << p << ": formula " << formula << " != enumerated "
        << enumerated << "\n";
    return kExitVerification;
  }
  out << "formula " << formula << " = enumerated " << enumerated << ", OK\n";
  return kExitOk;
}

int cmd_count(std::int64_t p, bool verify, const std::string& format, std::ostream& out) {
  const CountReport report = count_classes(p);
  if (format == "json") {
    out << count_report_to_json(report);
  } else {
    out << "p = " << report.p << " (" << to_string(report.branch) << ")\n"
        << "n_tilde = " << report.n_tilde << "\n"
        << "N_tilde = " << report.N_tilde << "\n";
  }
  if (!verify) return kExitOk;
  return report_count_check(p, report.n_tilde, enumerate_classes(p).n_tilde(), out);
}

int cmd_export(std::int64_t n, const std::string& set_text, const std::string& format,
               std::ostream& out) {
  const ConnectionSet set = parse_set(n, set_text);
  const CayleyGraph graph = build_graph(set);
  if (format == "dot") {
    out << to_dot(graph.graph(), vertex_labels(n), "X(D_" + std::to_string(2 * n) + ")");
  } else if (format == "graph6") {
    out << to_graph6(graph.graph()) << "\n";
  } else {
    out << graph_to_json(graph);
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graphs on dihedral groups: spectra, classification, counts"};
  app.name("dihedra");
  app.require_subcommand(1);

  std::int64_t p = 0;
  std::int64_t n = 0;
  std::string set;
  std::string with;
  std::string format = "table";
  bool verify = false;
  VerifyOptions vopts;

  auto* enumerate = app.add_subcommand("enumerate", "List cubic sets and the class table");
  enumerate->add_option("--p", p, "odd prime")->required();
  enumerate->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* classify = app.add_subcommand("classify", "Isomorphism classes of cubic sets");
  classify->add_option("--p", p, "odd prime")->required();
  classify->add_option("--set", set, "connection set, e.g. \"b,b*a^1,b*a^3\"");
  classify->add_option("--with", with, "second set to compare against --set");

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form spectrum of X(D_2n, S)");
  spectrum->add_option("--n", n)->required();
  spectrum->add_option("--set", set)->required();
  spectrum->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* count = app.add_subcommand("count", "Class counts from the closed formula");
  count->add_option("--p", p, "odd prime")->required();
  count->add_flag("--verify", verify, "recount by enumeration");
  count->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the cross-check suites");
  verify_cmd->add_option("--p-max", vopts.p_max)->required();
  verify_cmd->add_option("--oracle-ceiling", vopts.oracle_ceiling,
                         "largest p for the brute-force isomorphism suite")
      ->capture_default_str();
  verify_cmd->add_option("--formula-ceiling", vopts.formula_ceiling,
                         "largest accepted --p-max")
      ->capture_default_str();

  auto* export_cmd = app.add_subcommand("export", "Write X(D_2n, S) as DOT, graph6 or JSON");
  export_cmd->add_option("--n", n)->required();
  export_cmd->add_option("--set", set)->required();
  export_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"dot", "graph6", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(p, format, out);
    if (classify->parsed()) return cmd_classify(p, set, with, out);
    if (spectrum->parsed()) return cmd_spectrum(n, set, format, out);
    if (count->parsed()) return cmd_count(p, verify, format, out);
    if (verify_cmd->parsed()) return cmd_verify(vopts, out);
    if (export_cmd->parsed()) {
      return cmd_export(n, set, format == "table" ? "json" : format, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dihedra::cli
