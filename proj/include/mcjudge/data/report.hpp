#pragma once

#include <array>
#include <string>
#include <vector>

#include "mcjudge/data/dataset.hpp"
#include "mcjudge/judge/pipeline.hpp"

namespace mcjudge {

inline constexpr int kMethodCount = 5;

// Column order is fixed across every rendering.
extern const std::array<const char*, kMethodCount> kMethodKeys;    // verdict choice keys
extern const std::array<const char*, kMethodCount> kMethodLabels;  // table headers

struct AccuracyRow {
  std::string source;
  std::string category;
  std::string split;  // "GPT", "Claude"; overall rows also use "Merged"
  long long n = 0;
  std::array<long long, kMethodCount> correct{};

  double accuracy(int method) const {
    return static_cast<double>(correct[static_cast<size_t>(method)]) / static_cast<double>(n);
  }
};

struct AccuracyReport {
  // Per (source, category, split) rows, sorted by source, category, then
  // split with GPT before Claude. Rows exist only where samples do.
  std::vector<AccuracyRow> rows;
  // Split totals (GPT, Claude, both only when present) followed by Merged,
  // which pools the samples of both splits.
  std::vector<AccuracyRow> overall;
};

// Scores each verdict against its sample's ground-truth label. A tie earns
// no credit, and a verdict carrying an error diagnostic counts against every
// method. Throws MissingVerdict when a sample has no verdict.
AccuracyReport compute_accuracy(const std::vector<EvaluationVerdict>& verdicts,
                                const std::vector<EvaluationSample>& samples);

enum class ReportFormat { Markdown, Csv, Json };

ReportFormat report_format_from_string(const std::string& name);
std::string to_string(ReportFormat format);

// correct/n as a two-decimal percentage, rounded half to even in exact
// integer arithmetic: (1, 800) -> "0.12", (3, 800) -> "0.38".
std::string percent_string(long long correct, long long n);

// Deterministic text in the requested format; byte-identical for equal
// reports. Rejects an empty report.
std::string render_report(const AccuracyReport& report, ReportFormat format);

}  // namespace mcjudge
