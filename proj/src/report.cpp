#include "infosel/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace infosel::report {
namespace {

Json names_of(const VarSet& ids, const Dataset& ds) {
  Json out = Json::array();
  for (auto id : ids) out.push_back(ds.name(id));
  return out;
}

Json candidate_json(const CandidateScore& e, const Dataset& ds) {
  Json j{{"feature", ds.name(e.feature)}, {"index", e.feature}, {"score", number(e.score)}};
  if (e.terms) {
    j["relevance"] = number(e.terms->relevance);
    j["redundancy"] = number(e.terms->redundancy);
    j["complementarity"] = number(e.terms->complementarity);
  }
  return j;
}

}  // namespace

double round_significant(double v) {
  if (v == 0.0) return 0.0;  // folds -0.0
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, v);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_significant(v);
}

Json to_json(const SelectionTrace& trace, const Dataset& ds) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    Json scores = Json::array();
    for (const auto& e : s.board.entries) scores.push_back(candidate_json(e, ds));
    Json step{{"step", i + 1},
              {"direction", to_string(s.direction)},
              {"chosen", ds.name(s.chosen)},
              {"chosen_index", s.chosen},
              {"ties", names_of(s.ties, ds)},
              {"scores", scores},
              {"objective", number(s.objective)}};
    if (!s.board.warnings.empty()) step["warnings"] = s.board.warnings;
    steps.push_back(std::move(step));
  }
  Json selected = Json::array();
  for (auto id : trace.selected) selected.push_back({{"feature", ds.name(id)}, {"index", id}});
  return Json{{"criterion", trace.criterion},
              {"initial", names_of(trace.initial, ds)},
              {"steps", steps},
              {"selected", selected},
              {"stop_reason", to_string(trace.stop_reason)}};
}

Json to_json(const StructureReport& report, const Dataset& ds) {
  Json features = Json::array();
  for (ColumnId f = 0; f < ds.m(); ++f) {
    const auto& rel = report.relevance[f];
    Json blankets = Json::array();
    for (const auto& mb : report.markov_blankets[f]) blankets.push_back(names_of(mb, ds));
    Json entry{{"feature", ds.name(f)},
               {"index", f},
               {"relevance", to_string(rel.level)},
               {"unique_information", number(rel.unique_information)},
               {"markov_blankets", blankets}};
    entry["witness"] = rel.witness ? names_of(*rel.witness, ds) : Json(nullptr);
    features.push_back(std::move(entry));
  }
  const auto& suf = report.sufficiency;
  Json minimal = Json::array();
  for (const auto& s : suf.minimal) minimal.push_back(names_of(s, ds));
  Json examined = Json::array();
  for (const auto& e : suf.examined)
    examined.push_back({{"subset", names_of(e.subset, ds)},
                        {"information", number(e.information)},
                        {"dmi", number(e.dmi)},
                        {"lagrangian", number(e.lagrangian)},
                        {"feature_information", number(e.feature_information)}});
  return Json{{"epsilon", number(report.epsilon)},
              {"features", features},
              {"sufficiency",
               {{"full_information", number(suf.full_information)},
                {"lambda", number(suf.lambda)},
                {"minimal_subsets", minimal},
                {"examined", examined}}}};
}

Json to_json(const ErrorBounds& b) {
  return Json{{"mutual_information", number(b.mutual_information)},
              {"class_entropy", number(b.class_entropy)},
              {"lower", number(b.lower)},
              {"upper", number(b.upper)},
              {"fano_lower", number(b.fano_lower)},
              {"exact", number(b.exact)},
              {"composite", b.composite}};
}

Json to_json(const GroundTruth& truth, const Dataset& ds) {
  Json columns = Json::array();
  for (ColumnId f = 0; f < ds.m(); ++f)
    columns.push_back({{"feature", ds.name(f)},
                       {"index", f},
                       {"role", to_string(truth.roles[f])},
                       {"source", ds.name(truth.source[f])}});
  return Json{{"columns", columns}, {"class", ds.name(ds.class_id())}, {"metadata", ds.metadata()}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace infosel::report
