#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "infosel/datagen.hpp"
#include "infosel/dataset.hpp"

namespace infosel::cli {

enum class Command { kSelect, kAnalyze, kBounds, kGen, kInfo };
enum class Strategy { kForward, kBackward, kPlusLTakeAwayR };

struct RunConfig {
  Command command = Command::kInfo;

  // data source (all commands but gen)
  std::string input;
  std::string target;
  QuantizerSpec quantizer;

  // select
  std::optional<std::string> criterion;
  std::optional<double> beta;
  Strategy strategy = Strategy::kForward;
  std::optional<std::size_t> k;
  std::optional<double> threshold;
  std::optional<std::size_t> l;
  std::optional<std::size_t> r;

  // analyze
  std::optional<double> epsilon;
  std::optional<double> lambda;

  // bounds
  std::vector<std::string> features;  // evaluate this set as one composite

  // gen
  SyntheticSpec synthetic;
  std::string truth_output;

  // outputs; an empty report path writes the JSON report to stdout
  std::string output;
  std::string csv_output;
  std::string format = "json";
};

/// Parses argv into a config; throws Error(kUsage) on malformed input.
RunConfig parse(int argc, const char* const* argv);

/// Checks the fields each command requires; throws Error(kUsage).
void validate(const RunConfig& config);

/// Executes one command. Returns 0 on success or the ErrorCode value of the
/// failure, after writing a one-line diagnostic to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + run, for the executable.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infosel::cli
