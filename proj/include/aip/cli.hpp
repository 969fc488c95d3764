#pragma once

// Command-line front end. `execute` takes the arguments after the program
// name and writes results to `out`, diagnostics to `err`.
//
// Exit codes: 0 ok, 1 usage, 2 parse/validation, 3 uncolorable, 4 internal.

#include <aip/biquandle.hpp>
#include <aip/coloring.hpp>
#include <aip/diagram_ops.hpp>
#include <aip/errors.hpp>
#include <aip/gauss_code.hpp>
#include <aip/invariant.hpp>
#include <aip/laurent.hpp>
#include <aip/moves.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace aip::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalid = 2, kUncolorable = 3, kInternal = 4 };

enum class Format { json, csv, text };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (auto item : aip::detail::split(aip::detail::trim(text), ',')) {
    const std::string s(aip::detail::trim(item));
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(s, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size()) throw ParseError("bad integer '" + s + "'");
  }
  return out;
}

inline std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> ids;
  for (auto v : parse_int_list(text)) ids.push_back(static_cast<int>(v));
  return ids;
}

inline Json labels_json(const ChengColoring& coloring) {
  Json j = Json::array();
  for (const auto& comp : coloring.labels) j.push_back(comp);
  return j;
}

inline Json weights_json(const WeightTable& table) {
  Json j = Json::array();
  for (const auto& cw : table) {
    j.push_back({{"id", cw.id}, {"sign", cw.sign}, {"Wplus", cw.w_plus}, {"Wminus", cw.w_minus}, {"W", cw.weight}});
  }
  return j;
}

struct InvariantRow {
  Json json;
  std::string csv;
  std::string text;
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline const char* kCsvHeader = "code,writhe,polynomial,v2,v3,v4";

inline InvariantRow invariant_row(const std::string& text) {
  const auto code = parse_signed(text);
  require_valid(code);
  const auto coloring = default_coloring(code);
  const auto table = crossing_weights(code, coloring);
  const auto poly = polynomial_from_weights(table);
  Json vass = Json::object();
  std::vector<std::string> v(5);
  for (unsigned n = 1; n <= 4; ++n) {
    v[n] = to_string(vassiliev_invariant(table, n));
    vass[std::to_string(n)] = v[n];
  }
  InvariantRow row;
  row.json = {{"code", serialize(code)},
              {"canonical", serialize(canonicalize(code))},
              {"writhe", writhe(code)},
              {"coloring", labels_json(coloring)},
              {"weights", weights_json(table)},
              {"polynomial", poly.str()},
              {"vassiliev", vass}};
  row.csv = csv_field(serialize(code)) + "," + std::to_string(writhe(code)) + "," + csv_field(poly.str()) + "," +
            v[2] + "," + v[3] + "," + v[4];
  row.text = serialize(code) + "\n  writhe " + std::to_string(writhe(code)) + "\n  coloring " + serialize(coloring) +
             "\n  P = " + poly.str() + "\n  v2 = " + v[2] + ", v3 = " + v[3] + ", v4 = " + v[4];
  return row;
}

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const UncolorableError*>(&e)) return kUncolorable;
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ValidationError*>(&e)) return kInvalid;
  return kInternal;
}

// The code corpus used by `verify` when no codes are given.
inline std::vector<std::string> default_verify_corpus() {
  return {"O1+ O2+ U1+ U2+", "O1- O2- U1- U2-", "O1+ U2+ O3+ U1+ O2+ U3+", "O1+ O2+ U1+ O3+ U2+ U3+",
          "O1+ O2- U1+ U2-"};
}

// Reads a biquandle from either a table file or a single "N r s k p q l" line.
inline FiniteFlatBiquandle load_biquandle(const std::string& path) {
  const auto text = read_file(path);
  const auto lines = aip::detail::split(aip::detail::trim(text), '\n');
  if (lines.size() == 1 && aip::detail::split_ws(lines.front()).size() == 7) {
    return make_affine(parse_affine_params(lines.front()));
  }
  return parse_biquandle(text);
}

inline Json axiom_json(const std::optional<AxiomFailure>& f) {
  if (!f) return {{"ok", true}};
  return {{"ok", false}, {"elements", f->elements}, {"what", f->what}};
}

}  // namespace detail

/// Runs one command line. `args` excludes the program name.
inline int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Affine index polynomial toolkit", "aip"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  std::string code_text;
  std::string offsets_text;
  std::string ids_text;
  std::string file_path;
  unsigned max_order = 4;
  std::size_t steps = 10;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
  bool flag_mirror = false, flag_reverse = false, flag_smooth = false, flag_certificate = false;
  std::string switch_ids, virtualize_ids;
  int scan_crossings = -1;
  int carrier = 0;
  std::vector<std::string> verify_codes;

  auto* parse_cmd = app.add_subcommand("parse", "Validate and canonicalize a signed or flat Gauss code");
  parse_cmd->add_option("code", code_text)->required();

  auto* inv_cmd = app.add_subcommand("invariant", "Coloring, weights, polynomial and finite-type invariants");
  inv_cmd->add_option("code", code_text)->required();

  auto* link_cmd = app.add_subcommand("link-invariant", "Polynomial of a link paired with a coloring");
  link_cmd->add_option("code", code_text)->required();
  link_cmd->add_option("--offsets", offsets_text, "Comma-separated seam offsets, one per component")->required();

  auto* sym_cmd = app.add_subcommand("symbolic-weights", "Link weights as functions of component offsets");
  sym_cmd->add_option("code", code_text)->required();

  auto* vass_cmd = app.add_subcommand("vassiliev", "Finite-type invariants v_1..v_N");
  vass_cmd->add_option("code", code_text)->required();
  vass_cmd->add_option("--max-order", max_order)->check(CLI::Range(1u, 64u))->capture_default_str();

  auto* tr_cmd = app.add_subcommand("transform", "Structural transforms");
  tr_cmd->add_option("code", code_text)->required();
  tr_cmd->add_flag("--mirror", flag_mirror);
  tr_cmd->add_flag("--reverse", flag_reverse);
  tr_cmd->add_option("--switch", switch_ids, "Comma-separated crossing ids");
  tr_cmd->add_option("--virtualize", virtualize_ids, "Comma-separated crossing ids");
  tr_cmd->add_flag("--smooth-zero", flag_smooth);

  auto* moves_cmd = app.add_subcommand("moves", "Random Reidemeister walk");
  moves_cmd->add_option("code", code_text)->required();
  moves_cmd->add_option("--walk", steps)->required();
  moves_cmd->add_option("--seed", seed)->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Check polynomial invariance under random walks");
  verify_cmd->add_option("codes", verify_codes, "Seed knots (a built-in corpus when omitted)");
  verify_cmd->add_option("--trials", trials)->capture_default_str();
  verify_cmd->add_option("--steps", steps)->capture_default_str();
  verify_cmd->add_option("--seed", seed)->capture_default_str();

  auto* flat_cmd = app.add_subcommand("flat", "Flat knot nontriviality certificate");
  flat_cmd->add_option("code", code_text);
  flat_cmd->add_flag("--certificate", flag_certificate);
  flat_cmd->add_option("--scan", scan_crossings, "Certify every flat knot with this many crossings");

  auto* graph_cmd = app.add_subcommand("graph", "Polynomial of a singular diagram");
  graph_cmd->add_option("code", code_text)->required();
  graph_cmd->add_option("--singular", ids_text)->required();

  auto* bq_cmd = app.add_subcommand("biquandle", "Finite flat biquandles");
  bq_cmd->require_subcommand(1);
  auto* bq_search = bq_cmd->add_subcommand("search", "Affine flat biquandles over Z/N");
  bq_search->add_option("N", carrier)->required()->check(CLI::Range(1, 64));
  auto* bq_check = bq_cmd->add_subcommand("check", "Check the axioms of a table or affine parameter file");
  bq_check->add_option("file", file_path)->required();
  auto* bq_color = bq_cmd->add_subcommand("color", "Enumerate colorings of a flat code");
  bq_color->add_option("code", code_text)->required();
  bq_color->add_option("file", file_path)->required();
  auto* bq_doodle = bq_cmd->add_subcommand("doodle", "Doodle pre-invariant summed over colorings");
  bq_doodle->add_option("code", code_text)->required();
  bq_doodle->add_option("file", file_path)->required();

  auto* batch_cmd = app.add_subcommand("batch", "Run `invariant` on every line of a file");
  batch_cmd->add_option("--input", file_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  const Format format = format_name == "csv" ? Format::csv : format_name == "text" ? Format::text : Format::json;
  auto emit = [&](const Json& j, const std::string& text) {
    if (format == Format::text) {
      out << text << "\n";
    } else {
      out << j.dump() << "\n";
    }
  };
  auto csv_unsupported = [&]() {
    if (format == Format::csv) throw CLI::ValidationError("--format csv is only available for invariant and batch");
  };

  try {
    if (*parse_cmd) {
      csv_unsupported();
      Json j;
      const auto trimmed = aip::detail::trim(code_text);
      const bool flat = !trimmed.empty() && (trimmed.front() == 'L' || trimmed.front() == 'R');
      std::string canonical;
      if (flat) {
        const auto f = parse_flat(code_text);
        require_valid(f);
        canonical = serialize(canonicalize(f));
        j = {{"kind", "flat"}, {"code", serialize(f)}, {"canonical", canonical},
             {"components", f.components.size()}, {"crossings", crossing_ids(f).size()}};
      } else {
        const auto s = parse_signed(code_text);
        require_valid(s);
        canonical = serialize(canonicalize(s));
        j = {{"kind", "signed"}, {"code", serialize(s)}, {"canonical", canonical},
             {"components", s.components.size()}, {"crossings", crossing_ids(s).size()},
             {"flat", serialize(forget(s))}};
      }
      emit(j, canonical);
    } else if (*inv_cmd) {
      const auto row = detail::invariant_row(code_text);
      if (format == Format::csv) {
        out << detail::kCsvHeader << "\n" << row.csv << "\n";
      } else {
        emit(row.json, row.text);
      }
    } else if (*link_cmd) {
      csv_unsupported();
      const auto code = parse_signed(code_text);
      require_valid(code);
      const auto offsets = detail::parse_int_list(offsets_text);
      const auto coloring = propagate_coloring(code, offsets);
      const auto table = crossing_weights(code, coloring);
      const auto poly = polynomial_from_weights(table);
      emit({{"code", serialize(code)},
            {"offsets", offsets},
            {"coloring", detail::labels_json(coloring)},
            {"weights", detail::weights_json(table)},
            {"polynomial", poly.str()}},
           "P = " + poly.str());
    } else if (*sym_cmd) {
      csv_unsupported();
      const auto code = parse_signed(code_text);
      require_valid(code);
      Json weights = Json::array();
      std::string text;
      for (const auto& w : symbolic_link_weights(code)) {
        weights.push_back({{"id", w.id}, {"sign", w.sign}, {"weight", w.str()}});
        text += "c" + std::to_string(w.id) + " (" + (w.sign > 0 ? "+" : "-") + "): " + w.str() + "\n";
      }
      if (!text.empty()) text.pop_back();
      emit({{"code", serialize(code)}, {"weights", weights}}, text);
    } else if (*vass_cmd) {
      csv_unsupported();
      const auto code = parse_signed(code_text);
      require_valid(code);
      const auto table = crossing_weights(code);
      Json v = Json::object();
      std::string text;
      for (unsigned n = 1; n <= max_order; ++n) {
        const auto value = to_string(vassiliev_invariant(table, n));
        v[std::to_string(n)] = value;
        text += (n > 1 ? "\n" : "") + std::string("v") + std::to_string(n) + " = " + value;
      }
      emit({{"code", serialize(code)}, {"vassiliev", v}}, text);
    } else if (*tr_cmd) {
      csv_unsupported();
      const int chosen = int(flag_mirror) + int(flag_reverse) + int(flag_smooth) + int(!switch_ids.empty()) +
                         int(!virtualize_ids.empty());
      if (chosen != 1) throw CLI::ValidationError("transform needs exactly one operation");
      const auto code = parse_signed(code_text);
      require_valid(code);
      Json j = {{"code", serialize(code)}};
      std::string result;
      if (flag_smooth) {
        const auto smoothed = smooth_zero_weight(code, default_coloring(code));
        result = serialize(smoothed.code);
        j["operation"] = "smooth-zero";
        j["result"] = result;
        j["coloring"] = detail::labels_json(smoothed.coloring);
      } else {
        SignedGaussCode t;
        if (flag_mirror) {
          t = mirror(code);
          j["operation"] = "mirror";
        } else if (flag_reverse) {
          t = reverse(code);
          j["operation"] = "reverse";
        } else if (!switch_ids.empty()) {
          t = switch_crossings(code, detail::parse_ids(switch_ids));
          j["operation"] = "switch";
        } else {
          t = virtualize(code, detail::parse_ids(virtualize_ids));
          j["operation"] = "virtualize";
        }
        result = serialize(t);
        j["result"] = result;
      }
      emit(j, result);
    } else if (*moves_cmd) {
      csv_unsupported();
      const auto code = parse_signed(code_text);
      require_valid(code);
      const auto walk = random_walk(code, steps, seed);
      Json trace = Json::array();
      std::string text = serialize(walk.start);
      for (const auto& site : walk.trace) {
        trace.push_back(to_string(site));
        text += "\n  " + to_string(site);
      }
      text += "\n" + serialize(walk.code);
      Json j = {{"start", serialize(walk.start)}, {"seed", seed}, {"steps", steps},
                {"trace", trace}, {"result", serialize(walk.code)}};
      if (code.components.size() == 1) {
        j["polynomial_before"] = affine_index_polynomial(walk.start).str();
        j["polynomial_after"] = affine_index_polynomial(walk.code).str();
      }
      emit(j, text);
    } else if (*verify_cmd) {
      csv_unsupported();
      if (verify_codes.empty()) verify_codes = detail::default_verify_corpus();
      std::vector<SignedGaussCode> seeds;
      for (const auto& c : verify_codes) {
        seeds.push_back(parse_signed(c));
        require_valid(seeds.back());
      }
      const auto report = invariance_report(seeds, steps, trials, seed);
      Json failures = Json::array();
      for (const auto& f : report.failures) {
        failures.push_back({{"seed_index", f.seed_index}, {"trial", f.trial}, {"start", serialize(f.start)},
                            {"end", serialize(f.end)}, {"before", f.before.str()}, {"after", f.after.str()}});
      }
      emit({{"checks", report.checks}, {"passed", report.passed}, {"failures", failures}},
           std::to_string(report.passed) + "/" + std::to_string(report.checks) + " walks preserved the polynomial");
      if (!report.ok()) {
        err << "invariance failed in " << report.failures.size() << " walks\n";
        return kInternal;
      }
    } else if (*flat_cmd) {
      csv_unsupported();
      if (scan_crossings >= 0) {
        if (scan_crossings > 6) throw CLI::ValidationError("--scan is limited to 6 crossings");
        Json rows = Json::array();
        std::string text;
        for (const auto& f : flat_knot_codes(scan_crossings)) {
          const auto cert = flat_nontriviality_certificate(f);
          rows.push_back({{"code", serialize(f)}, {"certified", cert.certified}});
          text += serialize(f) + (cert.certified ? "  certified\n" : "  -\n");
        }
        if (!text.empty()) text.pop_back();
        emit(rows, text);
      } else {
        if (!flag_certificate || code_text.empty()) {
          throw CLI::ValidationError("flat needs CODE --certificate or --scan N");
        }
        const auto f = parse_flat(code_text);
        const auto cert = flat_nontriviality_certificate(f);
        Json j = {{"code", serialize(f)}, {"certified", cert.certified}};
        std::string text = cert.certified ? "certified nontrivial" : "not certified";
        if (cert.witness) {
          j["witness"] = serialize(*cert.witness);
          text += "; witness " + serialize(*cert.witness);
        } else {
          Json polys = Json::array();
          for (const auto& p : cert.polynomials) polys.push_back(p.str());
          j["polynomials"] = polys;
        }
        emit(j, text);
      }
    } else if (*graph_cmd) {
      csv_unsupported();
      SingularCode g{parse_signed(code_text), detail::parse_ids(ids_text)};
      const auto poly = graph_polynomial(g);
      emit({{"code", serialize(g.base)}, {"singular", g.singular}, {"polynomial", poly.str()}}, "P = " + poly.str());
    } else if (*bq_search) {
      csv_unsupported();
      Json params = Json::array();
      std::string text;
      for (const auto& a : search_affine(carrier)) {
        params.push_back(to_string(a));
        text += to_string(a) + "\n";
      }
      if (!text.empty()) text.pop_back();
      emit({{"n", carrier}, {"count", params.size()}, {"params", params}}, text);
    } else if (*bq_check) {
      csv_unsupported();
      const auto b = detail::load_biquandle(file_path);
      const auto report = check_axioms(b);
      const auto wc = weight_condition(b);
      Json j = {{"n", b.size()},
                {"axiom1", detail::axiom_json(report.axiom1)},
                {"axiom2", detail::axiom_json(report.axiom2)},
                {"axiom3", detail::axiom_json(report.axiom3)},
                {"preflat", report.is_preflat()},
                {"flat_biquandle", report.is_flat_biquandle()},
                {"weight_condition", !wc.has_value()}};
      if (wc) j["weight_witness"] = {wc->first, wc->second};
      std::string text = std::string("preflat ") + (report.is_preflat() ? "yes" : "no") + ", flat biquandle " +
                         (report.is_flat_biquandle() ? "yes" : "no") + ", weight condition " +
                         (wc ? "fails" : "holds");
      emit(j, text);
    } else if (*bq_color) {
      csv_unsupported();
      const auto f = parse_flat(code_text);
      require_valid(f);
      const auto b = detail::load_biquandle(file_path);
      const auto colorings = enumerate_colorings(f, b);
      emit({{"code", serialize(f)}, {"count", colorings.size()}, {"colorings", colorings}},
           std::to_string(colorings.size()) + " colorings");
    } else if (*bq_doodle) {
      csv_unsupported();
      const auto code = parse_signed(code_text);
      require_valid(code);
      const auto b = detail::load_biquandle(file_path);
      const auto total = doodle_aggregate(code, b);
      std::string text;
      for (std::size_t i = 0; i < total.size(); ++i) text += (i ? " " : "") + std::to_string(total[i]);
      emit({{"code", serialize(code)}, {"n", b.size()}, {"coefficients", total}}, text);
    } else if (*batch_cmd) {
      const auto text = detail::read_file(file_path);
      std::istringstream lines(text);
      std::string line;
      std::size_t number = 0;
      int worst = kOk;
      if (format == Format::csv) out << detail::kCsvHeader << "\n";
      while (std::getline(lines, line)) {
        ++number;
        const auto trimmed = aip::detail::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;
        const std::string code(trimmed);
        try {
          const auto row = detail::invariant_row(code);
          if (format == Format::csv) {
            out << row.csv << "\n";
          } else if (format == Format::text) {
            out << row.text << "\n";
          } else {
            out << Json{{"line", number}, {"code", code}, {"result", row.json}}.dump() << "\n";
          }
        } catch (const std::exception& e) {
          const int rc = detail::exit_code_for(e);
          worst = std::max(worst, rc);
          err << "line " << number << ": " << e.what() << "\n";
          if (format == Format::json) {
            out << Json{{"line", number}, {"code", code}, {"error", e.what()}}.dump() << "\n";
          }
        }
      }
      return worst;
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return detail::exit_code_for(e);
  }
  return kOk;
}

}  // namespace aip::cli
