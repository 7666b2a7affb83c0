#pragma once

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classify.hpp"
#include "generate.hpp"
#include "io.hpp"
#include "metrics.hpp"
#include "transform.hpp"
#include "verify.hpp"

namespace bfg {

namespace cli_detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  out << content;
  if (!out) throw error("cannot write '" + path + "'");
}

inline json pair_json(bivalue v) {
  return json{{"pos", v.pos.str()}, {"neg", v.neg.str()}};
}

inline json optional_pair_json(const std::optional<bivalue>& v) {
  return v ? pair_json(*v) : json(nullptr);
}

inline json witness_json(const std::optional<verify_witness>& w) {
  if (!w) return json(nullptr);
  json values = json::object();
  for (const auto& [k, v] : w->values) values[k] = v;
  return json{{"vertices", w->vertices}, {"values", values}};
}

inline json verdict_json(const verdict& v) {
  return json{{"theorem", v.theorem},
              {"holds", v.holds},
              {"vacuous", v.vacuous},
              {"note", v.note},
              {"witness", witness_json(v.witness)}};
}

inline std::string verdict_line(const verdict& v) {
  std::string line = v.theorem + ": ";
  line += !v.holds ? "FAILS" : (v.vacuous ? "vacuous" : "holds");
  if (!v.note.empty()) line += " (" + v.note + ")";
  if (v.witness) {
    line += " witness";
    for (const auto& id : v.witness->vertices) line += " " + id;
    for (const auto& [k, val] : v.witness->values) line += " " + k + "=" + val;
  }
  return line;
}

inline std::vector<bipolar> parse_grid(const std::string& text) {
  std::vector<bipolar> grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string entry = comma == std::string::npos
                            ? text.substr(start)
                            : text.substr(start, comma - start);
    std::size_t colon = entry.find(':');
    if (colon == std::string::npos)
      throw invalid_grid("grid entry '" + entry + "' is not '<pos>:<neg>'");
    grid.push_back(
        make_bipolar(entry.substr(0, colon), entry.substr(colon + 1)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (grid.empty()) throw invalid_grid("empty grid");
  return grid;
}

inline void print_metrics(const graph& g, bool as_json, std::ostream& out) {
  auto seq = degree_sequence(g);
  if (as_json) {
    json degrees = json::array();
    for (const auto& [id, d] : seq)
      degrees.push_back(json{{"vertex", id},
                             {"degree", pair_json(d)},
                             {"total_degree", pair_json(total_degree(g, id))}});
    json doc{{"order", pair_json(order(g))},
             {"size", pair_json(size(g))},
             {"degrees", degrees},
             {"min_degree", nullptr},
             {"max_degree", nullptr}};
    if (!g.vertices().empty()) {
      auto ext = degree_extremes(g);
      doc["min_degree"] = pair_json(ext.min);
      doc["max_degree"] = pair_json(ext.max);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "order " << to_string(order(g)) << '\n';
  out << "size " << to_string(size(g)) << '\n';
  for (const auto& [id, d] : seq)
    out << "vertex " << id << " degree " << to_string(d) << " total "
        << to_string(total_degree(g, id)) << '\n';
  if (!g.vertices().empty()) {
    auto ext = degree_extremes(g);
    out << "min degree " << to_string(ext.min) << '\n';
    out << "max degree " << to_string(ext.max) << '\n';
  }
}

inline void print_classification(const classification_report& r, bool as_json,
                                 std::ostream& out) {
  if (as_json) {
    json doc{{"complete", r.complete},
             {"strong", r.strong},
             {"connected", r.connected},
             {"regularity",
              json{{"regular", optional_pair_json(r.regularity.regular)},
                   {"totally_regular",
                    optional_pair_json(r.regularity.totally_regular)}}},
             {"irregular", r.irregular},
             {"neighbourly_irregular", r.neighbourly_irregular},
             {"totally_irregular", r.totally_irregular},
             {"neighbourly_totally_irregular",
              r.neighbourly_totally_irregular},
             {"highly_irregular", r.highly_irregular}};
    out << doc.dump(2) << '\n';
    return;
  }
  auto b = [](bool x) { return x ? "true" : "false"; };
  out << "complete " << b(r.complete) << '\n';
  out << "strong " << b(r.strong) << '\n';
  out << "connected " << b(r.connected) << '\n';
  out << "regular "
      << (r.regularity.regular ? to_string(*r.regularity.regular) : "none")
      << '\n';
  out << "totally_regular "
      << (r.regularity.totally_regular
              ? to_string(*r.regularity.totally_regular)
              : "none")
      << '\n';
  out << "irregular " << b(r.irregular) << '\n';
  out << "neighbourly_irregular " << b(r.neighbourly_irregular) << '\n';
  out << "totally_irregular " << b(r.totally_irregular) << '\n';
  out << "neighbourly_totally_irregular " << b(r.neighbourly_totally_irregular)
      << '\n';
  out << "highly_irregular " << b(r.highly_irregular) << '\n';
}

inline std::vector<verdict> verdicts_for(const graph& g,
                                         const std::string& theorem) {
  if (theorem == "all") return check_all(g);
  if (theorem == "thm4") {
    auto r = check_thm4(g);
    return {r.forward, r.converse};
  }
  return {run_check(g, theorem)};
}

}  // namespace cli_detail

/// Runs one toolkit command. `args` excludes the program name. Returns 0 on
/// success, 1 on domain errors (bad file, invalid graph), 2 on usage errors.
/// With --json, stdout is one well-formed JSON document.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  using cli_detail::json;

  CLI::App app{"bipolar fuzzy graph toolkit"};
  app.require_subcommand(1);

  std::string file, out_path, theorem, kind, pattern = "constant";
  std::string grid_text = "0.1:-0.1,0.2:-0.2,0.3:-0.3,0.4:-0.4";
  std::string fixture_name, probability = "0.5";
  bool as_json = false;
  int n = 0, max_n = 0;
  std::uint64_t seed = 0, budget = 0;

  auto* metrics_cmd =
      app.add_subcommand("metrics", "order, size, degrees and extremes");
  metrics_cmd->add_option("file", file)->required();
  metrics_cmd->add_flag("--json", as_json);

  auto* classify_cmd =
      app.add_subcommand("classify", "all classification predicates");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_flag("--json", as_json);

  auto* complement_cmd =
      app.add_subcommand("complement", "write the complement graph");
  complement_cmd->add_option("file", file)->required();
  complement_cmd->add_option("-o,--output", out_path)->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "run theorem checks on a graph");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"handshake", "thm1", "thm2", "thm3", "thm4",
                             "thm5", "thm6", "complement-remark", "all"}));
  verify_cmd->add_flag("--json", as_json);

  auto* generate_cmd =
      app.add_subcommand("generate", "write a deterministically generated graph");
  generate_cmd->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember({"random", "even-cycle", "constant-vertex"}));
  generate_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", seed)->required();
  generate_cmd->add_option("--p", probability);
  generate_cmd->add_option("--pattern", pattern)
      ->check(CLI::IsMember({"constant", "alternating"}));
  generate_cmd->add_option("--grid", grid_text);
  generate_cmd->add_option("-o,--output", out_path)->required();

  auto* search_cmd =
      app.add_subcommand("search", "search generated graphs for counterexamples");
  search_cmd->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(
          known_theorems().begin(), known_theorems().end())));
  search_cmd->add_option("--max-n", max_n)
      ->required()
      ->check(CLI::Range(1, 8));
  search_cmd->add_option("--seed", seed)->required();
  search_cmd->add_option("--budget", budget)
      ->required()
      ->check(CLI::PositiveNumber);
  search_cmd->add_flag("--json", as_json);

  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "write one of the reference graphs");
  fixtures_cmd->add_option("--name", fixture_name)
      ->required()
      ->check(CLI::IsMember({"F1", "F2", "F3", "F4", "F5"}));
  fixtures_cmd->add_option("-o,--output", out_path)->required();

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bfg");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*metrics_cmd) {
      cli_detail::print_metrics(parse_graph(cli_detail::read_file(file)),
                                as_json, out);
      return 0;
    }
    if (*classify_cmd) {
      cli_detail::print_classification(
          classify(parse_graph(cli_detail::read_file(file))), as_json, out);
      return 0;
    }
    if (*complement_cmd) {
      cli_detail::write_file(
          out_path,
          write_graph(complement(parse_graph(cli_detail::read_file(file)))));
      return 0;
    }
    if (*verify_cmd) {
      graph g = parse_graph(cli_detail::read_file(file));
      auto verdicts = cli_detail::verdicts_for(g, theorem);
      if (as_json) {
        json list = json::array();
        for (const auto& v : verdicts) list.push_back(cli_detail::verdict_json(v));
        out << json{{"verdicts", list}}.dump(2) << '\n';
      } else {
        for (const auto& v : verdicts)
          out << cli_detail::verdict_line(v) << '\n';
      }
      return 0;
    }
    if (*generate_cmd) {
      std::vector<bipolar> grid;
      scalar p{};
      try {
        grid = cli_detail::parse_grid(grid_text);
        p = scalar::parse(probability);
        if (p < scalar{} || p > scalar::from_raw(scalar::scale))
          throw invalid_spec("probability outside [0,1]");
      } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
      }
      gen_spec spec;
      spec.n = n;
      spec.seed = seed;
      spec.value_grid = grid;
      spec.edge_probability = p;
      spec.pattern = pattern == "alternating" ? gen_pattern::alternating
                                              : gen_pattern::constant;
      if (kind == "random") {
        spec.kind = gen_kind::random_graph;
      } else if (kind == "even-cycle") {
        spec.kind = gen_kind::even_cycle;
      } else {
        auto base = std::make_shared<gen_spec>(spec);
        base->kind = gen_kind::random_graph;
        spec.kind = gen_kind::constant_vertex;
        spec.base = std::move(base);
      }
      cli_detail::write_file(out_path, write_graph(generate(spec)));
      return 0;
    }
    if (*search_cmd) {
      const std::vector<scalar> grid = {scalar::parse("0.1"),
                                        scalar::parse("0.2"),
                                        scalar::parse("0.3")};
      auto found = search_counterexamples(theorem, max_n, grid, seed, budget);
      constexpr std::size_t max_shown = 3;
      if (as_json) {
        json witnesses = json::array();
        for (std::size_t i = 0; i < found.size() && i < max_shown; ++i)
          witnesses.push_back(
              json{{"graph", write_graph(found[i].first)},
                   {"verdict", cli_detail::verdict_json(found[i].second)}});
        out << json{{"theorem", theorem},
                    {"examined", budget},
                    {"failures", found.size()},
                    {"witnesses", witnesses}}
                   .dump(2)
            << '\n';
      } else {
        out << "theorem " << theorem << '\n';
        out << "examined " << budget << '\n';
        out << "failures " << found.size() << '\n';
        for (std::size_t i = 0; i < found.size() && i < max_shown; ++i) {
          out << "witness " << (i + 1) << ":\n";
          out << write_graph(found[i].first);
          out << cli_detail::verdict_line(found[i].second) << '\n';
        }
      }
      return 0;
    }
    if (*fixtures_cmd) {
      cli_detail::write_file(out_path,
                             write_graph(fixtures().at(fixture_name)));
      return 0;
    }
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace bfg
