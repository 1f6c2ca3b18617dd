// aqcross: build augmented cubes and their layered drawings, verify every
// closed-form crossing count against brute force, emit tables and SVG.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "aqcross/aqcube.hpp"
#include "aqcross/blacklayout.hpp"
#include "aqcross/formulas.hpp"
#include "aqcross/partition.hpp"
#include "aqcross/seqtables.hpp"
#include "aqcross/svg.hpp"
#include "aqcross/verify.hpp"

namespace {

using namespace aqcross;

// writes to the named file, or stdout for "-"
struct OutStream {
  explicit OutStream(const std::string& path) {
    if (path != "-") {
      file.open(path);
      if (!file) throw CLI::RuntimeError("cannot open output file: " + path, 4);
    }
  }
  std::ostream& get() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

void emit_report_text(std::ostream& os, const std::string& scope,
                      const VerifyReport& rep, double elapsed_ms) {
  for (const auto& c : rep.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.expected.empty()) os << ": expected " << c.expected << ", got " << c.computed;
    if (!c.pass && !c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  os << "scope " << scope << ": " << (rep.checks.size() - rep.fail_count()) << "/"
     << rep.checks.size() << " checks passed";
  if (rep.fail_count()) os << ", " << rep.fail_count() << " FAILED";
  os << " [" << elapsed_ms << " ms]\n";
}

void emit_report_json(std::ostream& os, const std::string& scope,
                      const VerifyReport& rep, double elapsed_ms) {
  os << "{\"scope\":\"" << scope << "\",\"checks\":[";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    os << (i ? "," : "") << "{\"name\":\"" << json_escape(c.name) << "\",\"pass\":"
       << (c.pass ? "true" : "false") << ",\"expected\":\"" << json_escape(c.expected)
       << "\",\"computed\":\"" << json_escape(c.computed) << "\"";
    if (!c.detail.empty()) os << ",\"detail\":\"" << json_escape(c.detail) << "\"";
    os << "}";
  }
  os << "],\"passed\":" << (rep.checks.size() - rep.fail_count())
     << ",\"failed\":" << rep.fail_count() << ",\"elapsed_ms\":" << elapsed_ms
     << "}\n";
}

int run_verify(const std::string& scope, int m_lo, int m_hi, int n_lo, int n_hi,
               const std::string& format, const std::string& out) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  const bool all = scope == "all";

  if (all) {
    // conservative ranges per layer; the geometric layers stay desk-scale
    rep.merge(verify_graph_scope(1, std::min(n_hi, 9)));
    rep.merge(verify_partition_scope(5, std::min(n_hi, 9)));
    rep.merge(verify_upsilon_scope(m_lo, m_hi));
    rep.merge(verify_black_scope(n_lo, std::min(n_hi, 13)));
    rep.merge(verify_sequences_scope(n_lo, std::min(n_hi, 14)));
    rep.merge(verify_formulas_scope(n_lo, 64));
  } else if (scope == "upsilon") {
    rep.merge(verify_upsilon_scope(m_lo, m_hi));
  } else if (scope == "black") {
    rep.merge(verify_black_scope(n_lo, n_hi));
  } else if (scope == "sequences") {
    rep.merge(verify_sequences_scope(n_lo, n_hi));
  } else if (scope == "formulas") {
    rep.merge(verify_formulas_scope(n_lo, n_hi));
  }

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  OutStream os(out);
  if (format == "json")
    emit_report_json(os.get(), scope, rep, ms);
  else
    emit_report_text(os.get(), scope, rep, ms);
  return rep.all_pass() ? 0 : 1;
}

int run_table(int n_lo, int n_hi, const std::string& format, const std::string& out) {
  OutStream os_holder(out);
  std::ostream& os = os_holder.get();
  constexpr Component kOrder[] = {Component::Blue,     Component::Red,
                                  Component::Black,    Component::RedBlack,
                                  Component::BlueRed,  Component::BlueBlack};
  if (format == "json") {
    os << "[";
    for (int n = n_lo; n <= n_hi; ++n) {
      const Int tot = total(n);
      const Rational ub = upper_bound(n);
      os << (n > n_lo ? "," : "") << "\n{\"n\":" << n;
      for (Component c : kOrder)
        os << ",\"" << component_name(c) << "\":\"" << component(n, c).str() << "\"";
      os << ",\"total\":\"" << tot.str() << "\"";
      os << ",\"upper_bound\":\"" << to_integer(ub).str() << "\"";
      os << ",\"slack\":\"" << to_integer(ub - tot).str() << "\"";
      os << ",\"lower_bound\":\"" << lower_bound(n).str() << "\"}";
    }
    os << "\n]\n";
  } else {
    os << "n,blue,red,black,red_black,blue_red,blue_black,total,upper_bound,slack,"
          "lower_bound\n";
    for (int n = n_lo; n <= n_hi; ++n) {
      const Int tot = total(n);
      const Rational ub = upper_bound(n);
      os << n;
      for (Component c : kOrder) os << ',' << component(n, c).str();
      os << ',' << tot.str() << ',' << to_integer(ub).str() << ','
         << to_integer(ub - tot).str() << ',' << lower_bound(n).str() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact crossing-count engine for augmented cubes"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "write the edge list of AQ_n");
  int gen_n = 3;
  std::string gen_out = "-";
  gen->add_option("-n,--n", gen_n, "cube dimension")->required()->check(CLI::Range(1, 20));
  gen->add_option("-o,--out", gen_out, "output file, - for stdout");

  // verify
  auto* ver = app.add_subcommand("verify", "run a verification scope");
  std::string scope = "all", ver_format = "text", ver_out = "-";
  int m_lo = 0, m_hi = 8, n_lo = 8, n_hi = 12;
  ver->add_option("-s,--scope", scope, "upsilon|black|sequences|formulas|all")
      ->check(CLI::IsMember({"upsilon", "black", "sequences", "formulas", "all"}));
  ver->add_option("--m-min", m_lo, "lowest diagram level")->check(CLI::Range(0, 12));
  ver->add_option("--m-max", m_hi, "highest diagram level")->check(CLI::Range(0, 12));
  ver->add_option("--n-min", n_lo, "lowest cube dimension")->check(CLI::Range(8, 64));
  ver->add_option("--n-max", n_hi, "highest cube dimension")->check(CLI::Range(8, 64));
  ver->add_option("-f,--format", ver_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  ver->add_option("-o,--out", ver_out, "output file, - for stdout");

  // table
  auto* tab = app.add_subcommand("table", "emit the component/bound table");
  std::string tab_format = "csv", tab_out = "-";
  int tab_lo = 8, tab_hi = 16;
  tab->add_option("--n-min", tab_lo, "lowest cube dimension")->check(CLI::Range(8, 64));
  tab->add_option("--n-max", tab_hi, "highest cube dimension")->check(CLI::Range(8, 64));
  tab->add_option("-f,--format", tab_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  tab->add_option("-o,--out", tab_out, "output file, - for stdout");

  // parts
  auto* parts = app.add_subcommand("parts", "export the eight vertex parts as JSON");
  int parts_n = 8;
  std::string parts_out = "-";
  bool parts_names = false;
  parts->add_option("-n,--n", parts_n, "cube dimension")->check(CLI::Range(5, 16));
  parts->add_flag("--names", parts_names, "export the canonical u/v naming instead");
  parts->add_option("-o,--out", parts_out, "output file, - for stdout");

  // sequences
  auto* seq = app.add_subcommand("sequences", "export the s/t/t' tables as CSV");
  int seq_n = 8;
  std::string seq_out = "-";
  seq->add_option("-n,--n", seq_n, "cube dimension")->check(CLI::Range(8, 20));
  seq->add_option("-o,--out", seq_out, "output file, - for stdout");

  // svg
  auto* svg = app.add_subcommand("svg", "render a drawing");
  std::string svg_target, svg_out = "-";
  int svg_m = 2, svg_n = 8;
  svg->add_option("target", svg_target, "upsilon|black")
      ->required()
      ->check(CLI::IsMember({"upsilon", "black"}));
  svg->add_option("-m,--m", svg_m, "diagram level (upsilon)")->check(CLI::Range(0, 8));
  svg->add_option("-n,--n", svg_n, "cube dimension (black)")->check(CLI::Range(5, 11));
  svg->add_option("-o,--out", svg_out, "output file, - for stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      OutStream os(gen_out);
      write_edge_list(os.get(), AugmentedCube(gen_n));
      return 0;
    }
    if (*ver) return run_verify(scope, m_lo, m_hi, n_lo, n_hi, ver_format, ver_out);
    if (*tab) return run_table(tab_lo, tab_hi, tab_format, tab_out);
    if (*parts) {
      OutStream os(parts_out);
      if (parts_names)
        write_canonical_names_json(os.get(), CanonicalNames(parts_n));
      else
        write_eight_parts_json(os.get(), eight_parts(parts_n));
      return 0;
    }
    if (*seq) {
      OutStream os(seq_out);
      write_cover_sequences_csv(os.get(), cover_sequences(seq_n));
      return 0;
    }
    if (*svg) {
      OutStream os(svg_out);
      if (svg_target == "upsilon")
        write_upsilon_svg(os.get(), ArcDiagram::upsilon(svg_m));
      else
        write_black_svg(os.get(), BlackLayout(svg_n));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
