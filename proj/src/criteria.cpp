#include "infosel/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "infosel/error.hpp"

namespace infosel {
namespace {

struct NamedKind {
  std::string_view name;
  CriterionKind kind;
};

constexpr NamedKind kNames[] = {
    {"mim", CriterionKind::kMim},     {"mifs", CriterionKind::kMifs},
    {"mrmr", CriterionKind::kMrmr},   {"jmi", CriterionKind::kJmi},
    {"cife", CriterionKind::kCife},   {"cmifs", CriterionKind::kCmifs},
    {"cmim", CriterionKind::kCmim},   {"cmim2", CriterionKind::kCmim2},
    {"icap", CriterionKind::kIcap},   {"md", CriterionKind::kMd},
    {"mmd", CriterionKind::kMmd},
};

// Sparse-support warning threshold for composite-variable estimates.
bool sparse_support(std::size_t support, std::size_t n) { return support * 5 > n; }

void validate(ColumnId f, std::span<const ColumnId> selected, const Dataset& ds) {
  require(f < ds.m(), "candidate " + std::to_string(f) + " is not a feature column");
  for (std::size_t i = 0; i < selected.size(); ++i) {
    require(selected[i] < ds.m(),
            "selected id " + std::to_string(selected[i]) + " is not a feature column");
    require(selected[i] != f, "candidate " + ds.name(f) + " is already selected");
    for (std::size_t j = 0; j < i; ++j)
      require(selected[i] != selected[j], "feature " + ds.name(selected[i]) + " selected twice");
  }
}

VarSet with(std::span<const ColumnId> s, ColumnId f) {
  VarSet out(s.begin(), s.end());
  out.push_back(f);
  return out;
}

VarSet complement_of(const Dataset& ds, const VarSet& chosen) {
  VarSet out;
  for (ColumnId id = 0; id < ds.m(); ++id)
    if (std::find(chosen.begin(), chosen.end(), id) == chosen.end()) out.push_back(id);
  return out;
}

CandidateScore linear(ColumnId f, Bits relevance, Bits redundancy, Bits complementarity) {
  return {f, relevance - redundancy + complementarity,
          TermBreakdown{relevance, redundancy, complementarity}};
}

}  // namespace

CriterionSpec CriterionSpec::of(CriterionKind kind) {
  require(kind != CriterionKind::kMifs, "MIFS needs a beta parameter");
  return CriterionSpec(kind, std::nullopt);
}

CriterionSpec CriterionSpec::mifs(double beta) {
  require(beta >= 0.0, "MIFS beta must be >= 0");
  return CriterionSpec(CriterionKind::kMifs, beta);
}

CriterionSpec CriterionSpec::parse(std::string_view name, std::optional<double> beta) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& entry : kNames) {
    if (entry.name != lower) continue;
    if (entry.kind == CriterionKind::kMifs) {
      if (!beta) fail(ErrorCode::kUsage, "criterion mifs requires --beta");
      return mifs(*beta);
    }
    if (beta) fail(ErrorCode::kUsage, "--beta only applies to mifs");
    return of(entry.kind);
  }
  fail(ErrorCode::kUsage, "unknown criterion '" + std::string(name) + "'");
}

std::string_view CriterionSpec::name() const noexcept {
  for (const auto& entry : kNames)
    if (entry.kind == kind_) return entry.name;
  return "?";
}

CandidateScore score_with_terms(const CriterionSpec& spec, ColumnId f,
                                std::span<const ColumnId> selected, const PluginEstimator& est) {
  const Dataset& ds = est.dataset();
  validate(f, selected, ds);
  const ColumnId c = ds.class_id();
  const Bits relevance = est.relevance(f);
  const std::size_t t = selected.size();
  const double inv_t = t ? 1.0 / static_cast<double>(t) : 0.0;

  auto sum_redundancy = [&] {
    Bits s = 0.0;
    for (auto sj : selected) s += est.mi(f, sj);
    return s;
  };
  auto sum_complementarity = [&] {
    Bits s = 0.0;
    for (auto sj : selected) s += est.cmi(f, sj, c);
    return s;
  };

  switch (spec.kind()) {
    case CriterionKind::kMim:
      return linear(f, relevance, 0.0, 0.0);
    case CriterionKind::kMifs:
      return linear(f, relevance, *spec.beta() * sum_redundancy(), 0.0);
    case CriterionKind::kMrmr:
      return linear(f, relevance, inv_t * sum_redundancy(), 0.0);
    case CriterionKind::kJmi:
      return linear(f, relevance, inv_t * sum_redundancy(), inv_t * sum_complementarity());
    case CriterionKind::kCife:
      return linear(f, relevance, sum_redundancy(), sum_complementarity());
    case CriterionKind::kCmifs: {
      if (t == 0) return linear(f, relevance, 0.0, 0.0);
      const ColumnId first = selected.front();
      const ColumnId last = selected.back();
      if (t == 1) return linear(f, relevance, est.mi(f, first), est.cmi(f, first, c));
      return linear(f, relevance, est.mi(f, last) + est.cmi(f, last, first),
                    est.cmi(f, first, c) + est.cmi(f, last, c));
    }
    case CriterionKind::kCmim: {
      if (t == 0) return linear(f, relevance, 0.0, 0.0);
      // min_j I(f;C|s_j), broken down at the minimising s_j
      Bits best = std::numeric_limits<Bits>::infinity();
      TermBreakdown terms;
      for (auto sj : selected) {
        const Bits red = est.mi(f, sj);
        const Bits comp = est.cmi(f, sj, c);
        const Bits v = relevance - red + comp;
        if (v < best) {
          best = v;
          terms = {relevance, red, comp};
        }
      }
      return {f, best, terms};
    }
    case CriterionKind::kCmim2: {
      if (t == 0) return linear(f, relevance, 0.0, 0.0);
      return linear(f, relevance, inv_t * sum_redundancy(), inv_t * sum_complementarity());
    }
    case CriterionKind::kIcap: {
      Bits penalty = 0.0;
      for (auto sj : selected) {
        const Bits interaction = est.cmi(f, sj, c) - est.mi(f, sj);
        penalty += std::min(0.0, interaction);
      }
      return linear(f, relevance, -penalty, 0.0);
    }
    case CriterionKind::kMd: {
      const VarSet joint = with(selected, f);
      return {f, est.mutual_information(joint, std::span<const ColumnId>(&c, 1)), std::nullopt};
    }
    case CriterionKind::kMmd: {
      const VarSet joint = with(selected, f);
      const VarSet rest = complement_of(ds, joint);
      const Bits dependence = est.mutual_information(joint, std::span<const ColumnId>(&c, 1));
      const Bits left_out =
          rest.empty() ? 0.0 : est.mutual_information(rest, std::span<const ColumnId>(&c, 1));
      return {f, dependence - left_out, std::nullopt};
    }
  }
  fail(ErrorCode::kPrecondition, "unhandled criterion");
}

Bits score(const CriterionSpec& spec, ColumnId f, std::span<const ColumnId> selected,
           const PluginEstimator& est) {
  return score_with_terms(spec, f, selected, est).score;
}

Bits score(const CriterionSpec& spec, ColumnId f, std::span<const ColumnId> selected,
           const Dataset& ds) {
  PluginEstimator est(ds);
  return score(spec, f, selected, est);
}

unsigned worker_threads() {
  if (const char* env = std::getenv("INFOSEL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ScoreBoard score_all(const CriterionSpec& spec, std::span<const ColumnId> candidates,
                     std::span<const ColumnId> selected, const PluginEstimator& est) {
  const Dataset& ds = est.dataset();
  for (auto f : candidates) validate(f, selected, ds);

  ScoreBoard board;
  board.entries.resize(candidates.size());
  const std::size_t per_thread = 8;
  const auto threads = static_cast<unsigned>(std::min<std::size_t>(
      worker_threads(), (candidates.size() + per_thread - 1) / per_thread));

  if (threads <= 1) {
    for (std::size_t i = 0; i < candidates.size(); ++i)
      board.entries[i] = score_with_terms(spec, candidates[i], selected, est);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < candidates.size(); i += threads)
              board.entries[i] = score_with_terms(spec, candidates[i], selected, est);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  if (spec.kind() == CriterionKind::kMmd) {
    for (auto f : candidates) {
      const VarSet joint = with(selected, f);
      const VarSet rest = complement_of(ds, joint);
      if (sparse_support(est.support(joint), ds.n()) ||
          (!rest.empty() && sparse_support(est.support(rest), ds.n()))) {
        board.warnings.push_back("composite support is sparse (distinct tuples > n/5) for "
                                 "candidate " + ds.name(f) +
                                 "; joint MI estimate is unreliable");
      }
    }
  }
  return board;
}

ScoreBoard score_all(const CriterionSpec& spec, std::span<const ColumnId> candidates,
                     std::span<const ColumnId> selected, const Dataset& ds) {
  PluginEstimator est(ds);
  return score_all(spec, candidates, selected, est);
}

}  // namespace infosel
