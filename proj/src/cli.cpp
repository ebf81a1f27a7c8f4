#include "infosel/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "infosel/bounds.hpp"
#include "infosel/criteria.hpp"
#include "infosel/error.hpp"
#include "infosel/info.hpp"
#include "infosel/report.hpp"
#include "infosel/search.hpp"
#include "infosel/structure.hpp"

namespace infosel::cli {
namespace {

using report::Json;
using report::number;

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kPrecondition: return "precondition";
  }
  return "error";
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kSelect: return "select";
    case Command::kAnalyze: return "analyze";
    case Command::kBounds: return "bounds";
    case Command::kGen: return "gen";
    case Command::kInfo: return "info";
  }
  return "?";
}

std::string_view strategy_label(Strategy s) {
  switch (s) {
    case Strategy::kForward: return "forward";
    case Strategy::kBackward: return "backward";
    case Strategy::kPlusLTakeAwayR: return "plus-l-take-away-r";
  }
  return "?";
}

void usage_if(bool bad, const std::string& what) {
  if (bad) fail(ErrorCode::kUsage, what);
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) fail(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  file << text;
  if (!file) fail(ErrorCode::kIo, "failed writing '" + path + "'");
}

std::string fixed12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", report::round_significant(v));
  return buf;
}

Json base_metadata(const RunConfig& config, const Dataset& ds) {
  return Json{{"command", command_name(config.command)},
              {"input", config.input},
              {"target", config.target},
              {"n", ds.n()},
              {"m", ds.m()},
              {"quantizer",
               {{"strategy", strategy_name(config.quantizer.strategy)},
                {"bins", config.quantizer.bins}}},
              {"log_base", 2},
              {"zero_tolerance", number(kZeroTolerance)}};
}

Dataset load(const RunConfig& config) {
  return load_csv(config.input, config.target, config.quantizer);
}

double default_epsilon(const Dataset& ds) {
  auto it = ds.metadata().find("mode");
  return (it != ds.metadata().end() && it->second == "exact") ? kExactEpsilon
                                                              : kEmpiricalEpsilon;
}

int run_select(const RunConfig& config, std::ostream& out) {
  const Dataset ds = load(config);
  const PluginEstimator est(ds);
  const CriterionSpec spec = CriterionSpec::parse(
      config.criterion.value_or(config.strategy == Strategy::kBackward ? "md" : "jmi"),
      config.beta);

  SelectionTrace trace;
  Json meta = base_metadata(config, ds);
  switch (config.strategy) {
    case Strategy::kForward: {
      StopRule stop{config.k, config.threshold};
      if (!stop.k && !stop.threshold) stop.threshold = kDefaultScoreThreshold;
      trace = forward_select(spec, est, stop);
      if (stop.threshold) meta["score_threshold"] = number(*stop.threshold);
      break;
    }
    case Strategy::kBackward:
      trace = backward_eliminate(est, *config.k);
      break;
    case Strategy::kPlusLTakeAwayR:
      trace = plus_l_take_away_r(spec, est, *config.l, *config.r, *config.k);
      meta["l"] = *config.l;
      meta["r"] = *config.r;
      break;
  }
  meta["strategy"] = strategy_label(config.strategy);
  if (config.k) meta["k"] = *config.k;
  if (spec.beta()) meta["beta"] = number(*spec.beta());
  meta["tie_break"] = "lowest column index among candidates within tie_tolerance of the best";
  meta["tie_tolerance"] = number(kTieTolerance);

  Json doc = report::to_json(trace, ds);
  const ColumnId c = ds.class_id();
  const Bits final_info =
      trace.selected.empty()
          ? 0.0
          : est.mutual_information(trace.selected, std::span<const ColumnId>(&c, 1));
  doc["information"] = number(final_info);
  doc["dmi"] = number(dmi(est, trace.selected));
  doc["metadata"] = std::move(meta);
  emit(config.output, report::dump(doc), out);

  if (!config.csv_output.empty()) {
    std::ostringstream csv;
    csv << "rank,feature,index\n";
    for (std::size_t i = 0; i < trace.selected.size(); ++i) {
      const auto id = trace.selected[i];
      std::string name = ds.name(id);
      if (name.find_first_of(",\"\r\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : name) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
        name = quoted + "\"";
      }
      csv << (i + 1) << ',' << name << ',' << id << '\n';
    }
    emit(config.csv_output, csv.str(), out);
  }
  return 0;
}

int run_analyze(const RunConfig& config, std::ostream& out) {
  const Dataset ds = load(config);
  const PluginEstimator est(ds);
  const double eps = config.epsilon.value_or(default_epsilon(ds));
  const StructureReport rep = analyze_structure(est, eps, config.lambda);
  Json doc = report::to_json(rep, ds);
  Json meta = base_metadata(config, ds);
  meta["epsilon"] = number(eps);
  meta["lambda_default"] = "m / I(F;C)";
  doc["metadata"] = std::move(meta);
  emit(config.output, report::dump(doc), out);
  return 0;
}

int run_bounds(const RunConfig& config, std::ostream& out) {
  const Dataset ds = load(config);
  struct Row {
    std::string label;
    ErrorBounds bounds;
  };
  std::vector<Row> rows;
  for (ColumnId f = 0; f < ds.m(); ++f)
    rows.push_back({ds.name(f), bayes_error_bounds(ds, std::span<const ColumnId>(&f, 1))});
  if (!config.features.empty()) {
    VarSet ids;
    std::string label;
    for (const auto& name : config.features) {
      auto id = ds.find(name);
      usage_if(!id || *id == ds.class_id(), "unknown feature '" + name + "'");
      ids.push_back(*id);
      label += (label.empty() ? "" : "+") + name;
    }
    rows.push_back({label, bayes_error_bounds(ds, ids)});
  }

  if (config.format == "csv") {
    std::ostringstream csv;
    csv << "feature,mutual_information,lower,upper,fano_lower,exact\n";
    for (const auto& row : rows) {
      const auto& b = row.bounds;
      csv << row.label << ',' << fixed12(b.mutual_information) << ',' << fixed12(b.lower) << ','
          << fixed12(b.upper) << ',' << fixed12(b.fano_lower) << ',' << fixed12(b.exact) << '\n';
    }
    emit(config.output, csv.str(), out);
    return 0;
  }
  Json table = Json::array();
  for (const auto& row : rows) {
    Json j = report::to_json(row.bounds);
    j["feature"] = row.label;
    table.push_back(std::move(j));
  }
  Json meta = base_metadata(config, ds);
  meta["lower_formula"] = "max(0, 1 - (I(f;C) + 1) / log2|C|)";
  meta["upper_formula"] = "min(1, (H(C) - I(f;C)) / 2)";
  meta["fano_lower_formula"] = "max(0, (H(C) - I(f;C) - 1) / log2|C|)";
  meta["note"] =
      "lower assumes equiprobable classes; fano_lower holds for any class prior; "
      "composite rows apply the single-variable bound to a feature set";
  emit(config.output, report::dump(Json{{"rows", table}, {"metadata", meta}}), out);
  return 0;
}

int run_info(const RunConfig& config, std::ostream& out) {
  const Dataset ds = load(config);
  const PluginEstimator est(ds);
  const ColumnId c = ds.class_id();
  Json names = Json::array(), entropies = Json::array(), relevance = Json::array();
  Json matrix = Json::array();
  for (ColumnId f = 0; f < ds.m(); ++f) {
    names.push_back(ds.name(f));
    entropies.push_back(number(est.entropy(std::span<const ColumnId>(&f, 1))));
    relevance.push_back(number(est.relevance(f)));
    Json row = Json::array();
    for (ColumnId g = 0; g < ds.m(); ++g)
      row.push_back(number(f == g ? est.entropy(std::span<const ColumnId>(&f, 1)) : est.mi(f, g)));
    matrix.push_back(std::move(row));
  }
  Json doc{{"features", names},
           {"entropy", entropies},
           {"relevance", relevance},
           {"pairwise_mi", matrix},
           {"class_entropy", number(est.entropy(std::span<const ColumnId>(&c, 1)))},
           {"metadata", base_metadata(config, ds)}};
  emit(config.output, report::dump(doc), out);
  return 0;
}

int run_gen(const RunConfig& config, std::ostream& out) {
  auto [ds, truth] = generate(config.synthetic);
  std::ostringstream csv;
  write_csv(csv, ds);
  emit(config.output, csv.str(), out);
  const std::string truth_path =
      config.truth_output.empty() ? config.output + ".truth.json" : config.truth_output;
  Json doc = report::to_json(truth, ds);
  doc["metadata"]["flip_prob"] = number(config.synthetic.flip_prob);
  doc["metadata"]["n"] = ds.n();
  emit(truth_path, report::dump(doc), out);
  return 0;
}

void add_data_options(CLI::App* sub, RunConfig& c, std::string& quantizer) {
  sub->add_option("-i,--input", c.input, "CSV file with a header row")->required();
  sub->add_option("-t,--target", c.target, "class column name")->required();
  sub->add_option("--quantizer", quantizer, "equal-frequency | equal-width | pass-through")
      ->capture_default_str();
  sub->add_option("--bins", c.quantizer.bins, "bins for numeric columns")->capture_default_str();
  sub->add_option("-o,--out", c.output, "report path (default: stdout)");
}

struct Parsed {
  RunConfig config;
  std::string quantizer = "equal-frequency";
  std::string strategy = "forward";
  CLI::Option* n_option = nullptr;
};

std::unique_ptr<CLI::App> build(Parsed& p) {
  auto app = std::make_unique<CLI::App>(
      "Information-theoretic feature selection and structure analysis");
  app->require_subcommand(1);
  RunConfig& c = p.config;

  auto* select = app->add_subcommand("select", "greedy feature selection, writes a trace");
  add_data_options(select, c, p.quantizer);
  select->add_option("--criterion", c.criterion,
                     "mim|mifs|mrmr|jmi|cife|cmifs|cmim|cmim2|icap|md|mmd (default jmi)");
  select->add_option("--beta", c.beta, "MIFS redundancy weight");
  select->add_option("--strategy", p.strategy, "forward | backward | plus-l-take-away-r")
      ->capture_default_str();
  select->add_option("-k,--k", c.k, "number of features to select");
  select->add_option("--threshold", c.threshold, "stop when the best score drops below this");
  select->add_option("--l", c.l, "forward steps per round (plus-l-take-away-r)");
  select->add_option("--r", c.r, "backward steps per round (plus-l-take-away-r)");
  select->add_option("--csv", c.csv_output, "also write the chosen features as CSV");

  auto* analyze = app->add_subcommand("analyze", "relevance levels, Markov blankets, sufficiency");
  add_data_options(analyze, c, p.quantizer);
  analyze->add_option("--epsilon", c.epsilon, "zero tolerance in bits (default 1e-3, 1e-9 exact)");
  analyze->add_option("--lambda", c.lambda, "Lagrange multiplier (default m / I(F;C))");

  auto* bounds = app->add_subcommand("bounds", "Bayes-error bounds per feature");
  add_data_options(bounds, c, p.quantizer);
  bounds->add_option("--features", c.features, "also bound this feature set as one composite")
      ->delimiter(',');
  bounds->add_option("--format", c.format, "json | csv")->capture_default_str();

  auto* info = app->add_subcommand("info", "pairwise MI matrix and per-feature relevance");
  add_data_options(info, c, p.quantizer);

  auto* gen = app->add_subcommand("gen", "synthetic dataset with planted structure");
  auto& s = c.synthetic;
  gen->add_option("-o,--out", c.output, "CSV output path")->required();
  gen->add_option("--truth", c.truth_output, "ground-truth JSON path (default <out>.truth.json)");
  p.n_option = gen->add_option("--n", s.n, "samples (exact mode: 2^bits)")->capture_default_str();
  gen->add_option("--relevant", s.relevant, "features OR-ed into the class")->capture_default_str();
  gen->add_option("--xor-groups", s.xor_groups, "XOR feature pairs")->capture_default_str();
  gen->add_option("--redundant", s.redundant_copies, "duplicated planted features")
      ->capture_default_str();
  gen->add_option("--noise", s.noise, "independent noise features")->capture_default_str();
  gen->add_option("--flip", s.flip_prob, "label flip probability")->capture_default_str();
  gen->add_option("--seed", s.seed, "PRNG seed")->capture_default_str();
  gen->add_flag("--exact", s.exact, "enumerate the full truth table instead of sampling");

  app->final_callback([&p, select, analyze, bounds, info, gen] {
    RunConfig& cfg = p.config;
    if (select->parsed()) cfg.command = Command::kSelect;
    if (analyze->parsed()) cfg.command = Command::kAnalyze;
    if (bounds->parsed()) cfg.command = Command::kBounds;
    if (info->parsed()) cfg.command = Command::kInfo;
    if (gen->parsed()) cfg.command = Command::kGen;
  });
  return app;
}

void finish(Parsed& p) {
  // exact mode sizes itself unless --n was given explicitly
  if (p.config.synthetic.exact && p.n_option && p.n_option->count() == 0) p.config.synthetic.n = 0;
  auto q = parse_strategy(p.quantizer);
  usage_if(!q, "unknown quantizer '" + p.quantizer + "'");
  p.config.quantizer.strategy = *q;
  if (p.strategy == "forward")
    p.config.strategy = Strategy::kForward;
  else if (p.strategy == "backward")
    p.config.strategy = Strategy::kBackward;
  else if (p.strategy == "plus-l-take-away-r")
    p.config.strategy = Strategy::kPlusLTakeAwayR;
  else
    fail(ErrorCode::kUsage, "unknown strategy '" + p.strategy + "'");
}

}  // namespace

RunConfig parse(int argc, const char* const* argv) {
  Parsed p;
  auto app = build(p);
  try {
    app->parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    fail(ErrorCode::kUsage, e.what());
  }
  finish(p);
  return p.config;
}

void validate(const RunConfig& c) {
  if (c.command == Command::kGen) {
    usage_if(c.output.empty(), "gen needs --out");
    return;
  }
  usage_if(c.input.empty(), "--input is required");
  usage_if(c.target.empty(), "--target is required");
  usage_if(c.quantizer.strategy != QuantizerSpec::Strategy::kPassThrough && c.quantizer.bins < 2,
           "--bins must be >= 2");
  switch (c.command) {
    case Command::kSelect:
      if (c.strategy == Strategy::kBackward) {
        usage_if(!c.k, "backward elimination needs --k");
        usage_if(c.criterion && *c.criterion != "md" && *c.criterion != "MD",
                 "backward elimination always uses the md objective");
      }
      if (c.strategy == Strategy::kPlusLTakeAwayR)
        usage_if(!c.k || !c.l || !c.r, "plus-l-take-away-r needs --k, --l and --r");
      else
        usage_if(c.l || c.r, "--l/--r only apply to plus-l-take-away-r");
      usage_if(c.threshold && c.strategy != Strategy::kForward,
               "--threshold only applies to forward selection");
      if (c.criterion) CriterionSpec::parse(*c.criterion, c.beta);
      break;
    case Command::kAnalyze:
      usage_if(c.epsilon && *c.epsilon < 0.0, "--epsilon must be >= 0");
      usage_if(c.lambda && *c.lambda < 0.0, "--lambda must be >= 0");
      break;
    case Command::kBounds:
      usage_if(c.format != "json" && c.format != "csv", "--format must be json or csv");
      break;
    default:
      break;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    switch (config.command) {
      case Command::kSelect: return run_select(config, out);
      case Command::kAnalyze: return run_analyze(config, out);
      case Command::kBounds: return run_bounds(config, out);
      case Command::kInfo: return run_info(config, out);
      case Command::kGen: return run_gen(config, out);
    }
  } catch (const Error& e) {
    err << "infosel: " << code_name(e.code()) << " error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "infosel: internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Parsed p;
  auto app = build(p);
  try {
    app->parse(argc, argv);
    finish(p);
  } catch (const CLI::CallForHelp&) {
    out << app->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "infosel: usage error: " << e.what() << '\n';
    return static_cast<int>(ErrorCode::kUsage);
  } catch (const Error& e) {
    err << "infosel: " << code_name(e.code()) << " error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  }
  return run(p.config, out, err);
}

}  // namespace infosel::cli
