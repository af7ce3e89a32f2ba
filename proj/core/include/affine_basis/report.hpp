#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine_basis/partitions.hpp"

namespace affine_basis {

// Outcome of one proof-step check. `seconds` is kept for logging only and
// is never serialized, so report files are reproducible byte for byte.
struct StepReport {
  std::string step;
  std::string spec;
  std::optional<ColoredPartition> partition;
  std::optional<int> degree;
  std::optional<Root> weight;
  std::optional<std::size_t> count;
  std::optional<std::size_t> rank;
  std::optional<Rational> scalar;
  bool pass = false;
  nlohmann::json witness;  // null on pass
  double seconds = 0;

  nlohmann::json to_json() const;
};

// An ordered collection of step reports of one sweep.
struct SweepReport {
  std::string step;
  std::string spec;
  std::vector<StepReport> reports;

  bool pass() const;
  std::size_t failures() const;
  // The first failing report, if any.
  const StepReport* first_failure() const;

  nlohmann::json to_json() const;
  // Columns: step, spec, degree, weight, count, rank, pass.
  std::string to_csv() const;
  std::string to_text() const;
};

enum class OutputFormat { json, csv, text };

OutputFormat parse_output_format(const std::string& name);
std::string render(const SweepReport& sweep, OutputFormat format);
std::string render(const std::vector<SweepReport>& sweeps, OutputFormat format);

// One JSON document per line.
std::string partitions_jsonl(const std::vector<ColoredPartition>& partitions);

}  // namespace affine_basis
