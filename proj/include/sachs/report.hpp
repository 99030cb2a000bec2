#pragma once

/**
 * JSON and CSV renderings of search, verification and audit results. Key
 * order is fixed and nothing time-dependent is written unless asked for, so
 * identical inputs give byte-identical output.
 */

#include "sachs/compression.hpp"
#include "sachs/extremal_search.hpp"

#include "json.hpp"

#include <sstream>
#include <string>

namespace sachs {

using Json = nlohmann::ordered_json;

namespace detail {

template <class T>
auto optional_json(const std::optional<T> &v) -> Json {
  return v ? Json(*v) : Json(nullptr);
}

inline auto position_json(Position p) -> Json { return Json::array({p.row, p.col}); }

}  // namespace detail

inline auto to_json(const PartitionSolution &s) -> Json {
  Json argmin = Json::array();
  for (const auto &r : s.argmin)
    argmin.push_back(to_string(r));
  return Json{{"min", detail::optional_json(s.min)}, {"argmin", argmin}};
}

inline auto to_json(const SearchReport &r, bool with_timing = false) -> Json {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["min_a4"] = detail::optional_json(r.min_a4);
  j["brute_min"] = detail::optional_json(r.brute_min);
  j["difference_min"] = detail::optional_json(r.difference_min);

  Json witnesses = Json::array();
  for (const auto &g : r.witnesses)
    witnesses.push_back(to_edge_list(g));
  j["witnesses"] = witnesses;
  Json evs = Json::array();
  for (const auto &ev : r.difference_witnesses)
    evs.push_back(to_string(ev));
  j["difference_witnesses"] = evs;

  if (r.prediction) {
    const auto &p = *r.prediction;
    j["paper_case"] = to_string(p.kind);
    j["paper_value"] = p.value;
    Json stated = Json::array();
    for (const auto &b : p.eigenvectors)
      stated.push_back(to_string(b));
    j["paper_eigenvectors"] = stated;
    j["paper_eigenvectors_attain_min"] =
        detail::optional_json(r.prediction_eigenvectors_optimal);
    j["derived_value"] = detail::optional_json(p.derived_value);
    j["derived_eigenvector"] =
        p.derived_eigenvector ? Json(to_string(*p.derived_eigenvector)) : Json(nullptr);
    j["derived_eigenvector_attains_min"] =
        detail::optional_json(r.derived_eigenvector_optimal);
    j["claims_unique"] = p.claims_unique;
  } else {
    j["paper_case"] = nullptr;
    j["paper_value"] = nullptr;
    j["paper_eigenvectors"] = Json::array();
    j["paper_eigenvectors_attain_min"] = nullptr;
    j["derived_value"] = nullptr;
    j["derived_eigenvector"] = nullptr;
    j["derived_eigenvector_attains_min"] = nullptr;
    j["claims_unique"] = false;
  }
  j["unique_claim_holds"] = detail::optional_json(r.unique_claim_holds);
  j["discrepancy"] = r.discrepancy;

  auto summary = r.structural_summary();
  j["structural"] = Json{{"t46", summary.first_block_dominates},
                         {"t47", summary.first_block_covers_two}};
  j["difference_optimum_attained"] =
      detail::optional_json(r.difference_optimum_attained());
  j["non_difference_witnesses"] = r.non_difference_witnesses;
  j["partition"] = r.partition ? to_json(*r.partition) : Json(nullptr);
  if (with_timing)
    j["timing_ms"] = r.timing_ms;
  return j;
}

inline auto to_json(const QuadraticBoundCheck &c) -> Json {
  Json counter = Json::array();
  for (const auto &t : c.counterexamples)
    counter.push_back(Json::array({t[0], t[1], t[2]}));
  return Json{{"n_max", c.n_max},
              {"checked", c.checked},
              {"violations", c.counterexamples.size()},
              {"counterexamples", counter}};
}

inline auto to_json(const VerifyResult &v, bool with_timing = false) -> Json {
  Json cells = Json::array();
  for (const auto &c : v.cells)
    cells.push_back(to_json(c, with_timing));
  return Json{{"cells", cells},
              {"discrepancies", v.discrepancies()},
              {"quadratic_bound", to_json(v.bound)},
              {"truncated", v.truncated}};
}

inline auto csv_header() -> std::string {
  return "n,m,min_a4,brute_min,difference_min,partition_min,paper_case,"
         "paper_value,derived_value,discrepancy,t46,t47,"
         "difference_optimum_attained\n";
}

inline auto to_csv_row(const SearchReport &r) -> std::string {
  auto opt = [](const auto &v) { return v ? std::to_string(*v) : std::string(); };
  auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  std::ostringstream out;
  auto summary = r.structural_summary();
  auto attained = r.difference_optimum_attained();
  out << r.n << ',' << r.m << ',' << opt(r.min_a4) << ',' << opt(r.brute_min)
      << ',' << opt(r.difference_min) << ','
      << (r.partition ? opt(r.partition->min) : std::string()) << ','
      << (r.prediction ? to_string(r.prediction->kind) : std::string()) << ','
      << (r.prediction ? std::to_string(r.prediction->value) : std::string())
      << ','
      << (r.prediction ? opt(r.prediction->derived_value) : std::string())
      << ',' << flag(r.discrepancy) << ','
      << flag(summary.first_block_dominates) << ','
      << flag(summary.first_block_covers_two) << ','
      << (attained ? flag(*attained) : std::string()) << '\n';
  return out.str();
}

inline auto to_csv(const VerifyResult &v) -> std::string {
  std::string out = csv_header();
  for (const auto &c : v.cells)
    out += to_csv_row(c);
  return out;
}

inline auto to_json(const VertexCompressionAudit &a) -> Json {
  Json rows = Json::array();
  for (const auto &c : a.matchings)
    rows.push_back(Json{{"k", c.k}, {"before", c.before}, {"after", c.after}});
  return Json{
      {"u", a.u},
      {"v", a.v},
      {"distance", detail::optional_json(a.distance)},
      {"connected_after", a.connected_after},
      {"common", vertices_of(a.split.common)},
      {"u_only", vertices_of(a.split.u_only)},
      {"v_only", vertices_of(a.split.v_only)},
      {"matchings", rows},
      {"a4_before", a.a4_before},
      {"a4_after", a.a4_after},
      {"violations",
       Json{{"matching_increase", a.matching_increase},
            {"strict_without_exchange", a.strict_without_exchange},
            {"a4_increase", a.a4_increase}}}};
}

inline auto to_json(const CornerMoveRecord &r) -> Json {
  return Json{{"instance", to_string(r.instance)},
              {"move",
               Json{{"out", detail::position_json(r.from)},
                    {"in", detail::position_json(r.to)},
                    {"ij", r.out_product()},
                    {"pq", r.in_product()},
                    {"result", to_string(r.result)}}},
              {"before", r.before},
              {"after", r.after},
              {"verdict",
               Json{{"forward", r.forward_holds()},
                    {"converse", r.converse_holds()},
                    {"strict", r.strict_holds()},
                    {"difference_identity", r.identity_holds()}}}};
}

inline auto to_json(const CornerSequenceRecord &r) -> Json {
  return Json{{"instance", to_string(r.instance)},
              {"move",
               Json{{"out", Json::array({detail::position_json(r.from[0]),
                                         detail::position_json(r.from[1])})},
                    {"in", Json::array({detail::position_json(r.to[0]),
                                        detail::position_json(r.to[1])})},
                    {"out_total", r.out_total()},
                    {"in_total", r.in_total()},
                    {"result", to_string(r.result)}}},
              {"before", r.before},
              {"after", r.after},
              {"verdict", Json{{"holds", r.holds()}}}};
}

/// The coefficient audited is a_4 throughout; the header says so explicitly.
inline auto to_json(const CornerAudit &a) -> Json {
  Json records = Json::array();
  for (const auto &r : a.moves)
    records.push_back(to_json(r));
  Json sequences = Json::array();
  for (const auto &r : a.sequence_counterexamples)
    sequences.push_back(to_json(r));
  std::int64_t moves = static_cast<std::int64_t>(a.moves.size());
  return Json{
      {"coefficient", "a4"},
      {"max_order", a.max_order},
      {"instances", a.instances},
      {"moves", moves},
      {"summary",
       Json{{"forward",
             Json{{"holds", a.forward_failures() == 0},
                  {"counterexamples", a.forward_failures()}}},
            {"converse",
             Json{{"holds", a.converse_failures() == 0},
                  {"counterexamples", a.converse_failures()}}},
            {"strict",
             Json{{"holds", a.strict_failures() == 0},
                  {"counterexamples", a.strict_failures()}}},
            {"difference_identity",
             Json{{"holds", a.identity_failures() == 0},
                  {"counterexamples", a.identity_failures()}}},
            {"sequence_claim",
             Json{{"single_move_counterexamples", a.single_move_claim_failures},
                  {"two_move_sequences", a.sequences},
                  {"two_move_counterexamples",
                   a.sequence_counterexamples.size()},
                  {"reversed_two_move_counterexamples",
                   a.reversed_sequence_failures}}}}},
      {"records", records},
      {"sequence_counterexamples", sequences}};
}

}  // namespace sachs
