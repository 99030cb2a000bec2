#pragma once

/**
 * Command-line front end. run() is callable in-process: data goes to `out`
 * (or the --out file), the one-line human summary to `err`.
 *
 * Exit codes: 0 ok, 1 discrepancy or violation found, 2 usage error,
 * 3 bad input, 4 scale limit exceeded, 5 internal error.
 */

#include "sachs/coefficients.hpp"
#include "sachs/compression.hpp"
#include "sachs/difference_graph.hpp"
#include "sachs/extremal_search.hpp"
#include "sachs/fuzz.hpp"
#include "sachs/graph.hpp"
#include "sachs/partition.hpp"
#include "sachs/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace sachs::cli {

enum exit_code : int {
  ok = 0,
  discrepancy = 1,
  usage = 2,
  bad_input = 3,
  too_large = 4,
  internal = 5,
};

/// SACHS_MAX_N, when set to a positive integer, replaces the default limit.
inline auto exhaustive_limit() -> int {
  const char *env = std::getenv("SACHS_MAX_N");
  if (env == nullptr || *env == '\0')
    return default_exhaustive_max_order;
  std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1)
    throw input_error("SACHS_MAX_N must be a positive integer");
  return std::min(value, max_vertices);
}

namespace detail {

inline auto read_file(const std::string &path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw input_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline auto load(const std::string &path, const std::string &format) -> Graph {
  auto text = read_file(path);
  if (format == "graph6")
    return read_graph6(text);
  return load_graph(text);
}

inline auto mode_of(const std::string &name) -> SearchMode {
  static const std::map<std::string, SearchMode> modes{
      {"brute", SearchMode::brute},
      {"difference", SearchMode::difference},
      {"partition", SearchMode::partition},
      {"all", SearchMode::all}};
  return modes.at(name);
}

inline auto emit(const std::string &data, const std::string &path,
                 std::ostream &out) -> void {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw input_error("cannot write " + path);
  file << data;
}

inline auto json_text(const Json &j) -> std::string { return j.dump(2) + "\n"; }

}  // namespace detail

/// Parses and runs one command line (without the program name).
inline auto run(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err) -> int {
  CLI::App app{"Sachs coefficients, difference graphs and minimal a4 search",
               "sachs"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string format = "edgelist";
  std::string ev_text;
  std::string rows_text;
  int n = 0;
  std::int64_t m = 0;
  int n_min = 0;
  int n_max = 0;
  std::string mode = "all";
  int k = -1;
  int from = -1;
  int to = -1;
  std::string out_path;
  bool as_csv = false;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool timing = false;
  double time_limit = 0;
  bool audit = false;
  std::string target = "compression";
  int count = 1000;

  auto graph_options = [&](CLI::App *cmd) {
    cmd->add_option("--graph", graph_path, "edge-list or graph6 file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}));
  };
  auto output_options = [&](CLI::App *cmd, bool csv) {
    cmd->add_option("--out", out_path, "write data here instead of stdout");
    cmd->add_flag("--json", "JSON output (default)");
    if (csv)
      cmd->add_flag("--csv", as_csv, "CSV summary instead of JSON");
  };
  auto search_options = [&](CLI::App *cmd) {
    cmd->add_option("--mode", mode)->check(
        CLI::IsMember({"brute", "difference", "partition", "all"}));
    cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    cmd->add_flag("--timing", timing, "include timing_ms in each cell");
  };

  auto *coeffs = app.add_subcommand("coeffs", "adjacency coefficients a_0..a_n");
  graph_options(coeffs);
  output_options(coeffs, false);

  auto *a4 = app.add_subcommand("a4", "a_4 with its 2-matching and C4 parts");
  graph_options(a4);
  output_options(a4, false);

  auto *matchings = app.add_subcommand("matchings", "r-matching counts");
  graph_options(matchings);
  matchings->add_option("--k", k, "only this r")->check(CLI::NonNegativeNumber);
  output_options(matchings, false);

  auto *difference = app.add_subcommand(
      "difference", "difference-graph representations and the three a_4 formulas");
  auto *ev_opt = difference->add_option("--ev", ev_text, "x1,..,xk;y1,..,yk");
  auto *rows_opt = difference->add_option("--rows", rows_text, "Young row sums");
  auto *dgraph_opt = difference->add_option("--graph", graph_path)->check(CLI::ExistingFile);
  difference->add_option("--format", format)->check(
      CLI::IsMember({"edgelist", "graph6"}));
  ev_opt->excludes(rows_opt)->excludes(dgraph_opt);
  rows_opt->excludes(dgraph_opt);
  output_options(difference, false);

  auto *compress_cmd = app.add_subcommand("compress", "vertex compression u -> v");
  graph_options(compress_cmd);
  compress_cmd->add_option("--from", from, "u")->required();
  compress_cmd->add_option("--to", to, "v")->required();
  compress_cmd->add_option("--k", k, "largest matching size compared")
      ->check(CLI::Range(1, 32));
  output_options(compress_cmd, false);

  auto *corners = app.add_subcommand("corners", "corner moves on a Young matrix");
  auto *corner_rows = corners->add_option("--rows", rows_text);
  auto *audit_flag = corners->add_flag("--audit", audit,
                                       "every legal move up to --n-max vertices");
  corners->add_option("--n-max", n_max)->check(CLI::Range(2, 12));
  corner_rows->excludes(audit_flag);
  output_options(corners, false);

  auto *search_cmd = app.add_subcommand("search", "minimal a_4 for one (n, m)");
  search_cmd->add_option("--n", n)->required()->check(CLI::Range(2, 64));
  search_cmd->add_option("--m", m)->required()->check(CLI::NonNegativeNumber);
  search_options(search_cmd);
  output_options(search_cmd, true);

  auto *partition_cmd = app.add_subcommand("partition", "row-sum program for one (n, m)");
  auto *pn = partition_cmd->add_option("--n", n)->check(CLI::Range(2, 64));
  auto *pm = partition_cmd->add_option("--m", m)->check(CLI::NonNegativeNumber);
  auto *prows = partition_cmd->add_option("--rows", rows_text, "evaluate one vector");
  pn->needs(pm);
  pm->needs(pn);
  prows->excludes(pn)->excludes(pm);
  output_options(partition_cmd, false);

  auto *verify = app.add_subcommand("verify", "every feasible cell in a range of n");
  verify->add_option("--n-min", n_min)->required()->check(CLI::Range(2, 64));
  verify->add_option("--n-max", n_max)->required()->check(CLI::Range(2, 64));
  verify->add_option("--time-limit", time_limit, "seconds; 0 means none")
      ->check(CLI::NonNegativeNumber);
  search_options(verify);
  output_options(verify, true);

  auto *fuzz = app.add_subcommand("fuzz", "seeded property checks");
  fuzz->add_option("--seed", seed)->required();
  fuzz->add_option("--target", target)->check(
      CLI::IsMember({"compression", "coefficients"}));
  fuzz->add_option("--count", count)->check(CLI::Range(1, 10000000));
  output_options(fuzz, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (coeffs->parsed()) {
      Graph g = detail::load(graph_path, format);
      auto poly = charpoly_coefficients(g);
      Json j{{"n", g.order()}, {"m", g.size()}, {"coeffs", poly.coeffs}};
      if (g.order() <= sachs_oracle_max_order) {
        bool agree = true;
        for (int i = 0; i <= g.order(); ++i)
          agree &= sachs_coefficient(g, i) == poly[i];
        j["sachs_agrees"] = agree;
      } else {
        j["sachs_agrees"] = nullptr;
      }
      detail::emit(detail::json_text(j), out_path, out);
      err << "coeffs: n=" << g.order() << " m=" << g.size() << "\n";
      return ok;
    }

    if (a4->parsed()) {
      Graph g = detail::load(graph_path, format);
      auto m2 = count_two_matchings(g);
      auto c4 = count_short_cycles(g).c4;
      Json j{{"a4", m2 - 2 * c4}, {"m2", m2}, {"c4", c4}};
      detail::emit(detail::json_text(j), out_path, out);
      err << "a4 = " << m2 - 2 * c4 << "\n";
      return ok;
    }

    if (matchings->parsed()) {
      Graph g = detail::load(graph_path, format);
      Json j;
      if (k >= 0) {
        j = Json{{"k", k}, {"count", count_matchings(g, k)}};
      } else {
        std::vector<std::int64_t> counts;
        for (int r = 0; 2 * r <= g.order(); ++r)
          counts.push_back(count_matchings(g, r));
        j = Json{{"matchings", counts}};
      }
      detail::emit(detail::json_text(j), out_path, out);
      err << "matchings: n=" << g.order() << "\n";
      return ok;
    }

    if (difference->parsed()) {
      VertexEigenvector ev = [&] {
        if (!ev_text.empty())
          return parse_eigenvector(ev_text);
        if (!rows_text.empty())
          return eigenvector_of(parse_rows(rows_text));
        if (!graph_path.empty()) {
          Graph g = detail::load(graph_path, format);
          if (!is_difference(g))
            throw domain_error("graph is not a difference graph");
          return eigenvector_of(g);
        }
        throw input_error("difference needs one of --ev, --rows, --graph");
      }();
      auto t = characteristic_matrix(ev);
      Json complements = Json::array();
      for (int i = 1; i < ev.character(); ++i)
        complements.push_back(to_string(difference_complement(ev, i)));
      std::int64_t blocks = a4_by_blocks(ev);
      std::int64_t matrix = a4_by_char_matrix(ev);
      std::int64_t rows = a4_by_row_sums(young_matrix(ev));
      std::int64_t direct = a4_fast(realize(ev));
      bool agree = blocks == matrix && matrix == rows && rows == direct;
      Json j{{"eigenvector", to_string(ev)},
             {"character", ev.character()},
             {"n", ev.order()},
             {"m", ev.size()},
             {"young_rows", young_matrix(ev).rows()},
             {"characteristic_matrix", t.to_rows()},
             {"difference_complements", complements},
             {"a4",
              Json{{"blocks", blocks},
                   {"characteristic_matrix", matrix},
                   {"row_sums", rows},
                   {"direct", direct}}},
             {"agree", agree}};
      detail::emit(detail::json_text(j), out_path, out);
      err << "difference " << to_string(ev) << ": a4 = " << direct
          << (agree ? "" : " (formulas disagree)") << "\n";
      return agree ? ok : discrepancy;
    }

    if (compress_cmd->parsed()) {
      Graph g = detail::load(graph_path, format);
      int k_max = k > 0 ? k : 4;
      auto report = audit_vertex_compression(g, from, to, k_max);
      Json j = to_json(report);
      j["result"] = to_edge_list(compress(g, from, to));
      detail::emit(detail::json_text(j), out_path, out);
      err << "compress " << from << "->" << to << ": a4 " << report.a4_before
          << " -> " << report.a4_after << "\n";
      return report.violated() ? discrepancy : ok;
    }

    if (corners->parsed()) {
      if (audit) {
        int order = n_max > 0 ? n_max : 10;
        auto result = audit_corner_theorem(order);
        detail::emit(detail::json_text(to_json(result)), out_path, out);
        err << "corner audit up to order " << order << ": " << result.moves.size()
            << " moves on " << result.instances << " instances\n";
        return ok;
      }
      if (rows_text.empty())
        throw input_error("corners needs --rows or --audit");
      auto y = parse_rows(rows_text);
      auto sets = corner_sets(y);
      auto positions = [](const std::vector<Position> &ps) {
        Json a = Json::array();
        for (auto p : ps)
          a.push_back(sachs::detail::position_json(p));
        return a;
      };
      Json moves = Json::array();
      std::int64_t before = a4_by_row_sums(y);
      for (auto [o, i] : legal_moves(y)) {
        auto next = young_compress(y, o, i);
        moves.push_back(to_json(
            CornerMoveRecord{y, o, i, next, before, a4_by_row_sums(next)}));
      }
      Json counts = Json::array();
      for (auto p : sets.out_corners)
        counts.push_back(Json{{"out", sachs::detail::position_json(p)},
                              {"two_matchings_avoiding_c4",
                               corner_matching_count(y, p)}});
      Json j{{"rows", y.rows()},
             {"a4", before},
             {"out_corners", positions(sets.out_corners)},
             {"in_corners", positions(sets.in_corners)},
             {"corner_counts", counts},
             {"moves", moves}};
      detail::emit(detail::json_text(j), out_path, out);
      err << "corners: " << sets.out_corners.size() << " out, "
          << sets.in_corners.size() << " in\n";
      return ok;
    }

    SearchOptions options{jobs, exhaustive_limit()};

    if (search_cmd->parsed()) {
      auto report = search(n, m, detail::mode_of(mode), options);
      if (as_csv)
        detail::emit(csv_header() + to_csv_row(report), out_path, out);
      else
        detail::emit(detail::json_text(to_json(report, timing)), out_path, out);
      err << "search n=" << n << " m=" << m << ": min a4 = "
          << (report.min_a4 ? std::to_string(*report.min_a4) : "none")
          << (report.discrepancy ? " (discrepancy)" : "") << "\n";
      return report.discrepancy ? discrepancy : ok;
    }

    if (partition_cmd->parsed()) {
      if (!rows_text.empty()) {
        auto r = parse_rows(rows_text);
        Json j{{"rows", r.rows()}, {"objective", objective(r)}};
        detail::emit(detail::json_text(j), out_path, out);
        err << "objective = " << objective(r) << "\n";
        return ok;
      }
      if (n == 0)
        throw input_error("partition needs --n and --m, or --rows");
      auto solution = solve(n, m);
      Json j{{"n", n}, {"m", m}, {"partition", to_json(solution)}};
      detail::emit(detail::json_text(j), out_path, out);
      err << "partition n=" << n << " m=" << m << ": min = "
          << (solution.min ? std::to_string(*solution.min) : "infeasible") << "\n";
      return ok;
    }

    if (verify->parsed()) {
      VerifyOptions vo{detail::mode_of(mode), options, std::nullopt};
      if (time_limit > 0)
        vo.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(time_limit));
      auto result = verify_range(n_min, n_max, vo);
      if (as_csv)
        detail::emit(to_csv(result), out_path, out);
      else
        detail::emit(detail::json_text(to_json(result, timing)), out_path, out);
      err << "verify " << n_min << ".." << n_max << ": " << result.cells.size()
          << " cells, " << result.discrepancies() << " with discrepancies, "
          << result.bound.counterexamples.size() << " bound violations"
          << (result.truncated ? ", truncated" : "") << "\n";
      return result.discrepancies() > 0 ? discrepancy : ok;
    }

    if (fuzz->parsed()) {
      if (target == "coefficients") {
        auto result = fuzz_coefficients(seed, count);
        Json bad = Json::array();
        for (const auto &g : result.mismatches)
          bad.push_back(to_edge_list(g));
        Json j{{"target", target},
               {"seed", seed},
               {"trials", result.trials},
               {"mismatches", bad}};
        detail::emit(detail::json_text(j), out_path, out);
        err << "fuzz coefficients: " << result.mismatches.size()
            << " mismatches in " << result.trials << " trials\n";
        return result.mismatches.empty() ? ok : discrepancy;
      }
      auto result = fuzz_compression(seed, count);
      Json bad = Json::array();
      for (std::size_t i = 0; i < result.violations.size(); ++i) {
        Json entry = to_json(result.violations[i]);
        entry["graph"] = to_edge_list(result.graphs[i]);
        bad.push_back(entry);
      }
      Json j{{"target", target},
             {"seed", seed},
             {"trials", result.trials},
             {"same_part_pairs", result.same_part_pairs},
             {"bipartite_after_same_part", result.bipartite_after_same_part},
             {"violations", bad}};
      detail::emit(detail::json_text(j), out_path, out);
      err << "fuzz compression: " << result.violations.size()
          << " violations in " << result.trials << " trials\n";
      return result.violations.empty() ? ok : discrepancy;
    }
  } catch (const input_error &e) {
    err << "error: " << e.what() << "\n";
    return bad_input;
  } catch (const scale_error &e) {
    err << "error: " << e.what() << "\n";
    return too_large;
  } catch (const overflow_error &e) {
    err << "error: " << e.what() << "\n";
    return too_large;
  } catch (const error &e) {
    err << "internal error: " << e.what() << "\n";
    return internal;
  }
  return usage;
}

}  // namespace sachs::cli
