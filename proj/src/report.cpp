#include "mcjudge/data/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "mcjudge/errors.hpp"

namespace mcjudge {

const std::array<const char*, kMethodCount> kMethodKeys = {"direct", "crisp", "fuzzy",
                                                           "dual_crisp", "dual_fuzzy"};
const std::array<const char*, kMethodCount> kMethodLabels = {"Direct", "Crisp", "Fuzzy", "D+C",
                                                             "D+F"};

namespace {

int split_rank(const std::string& split) {
  if (split == "GPT") return 0;
  if (split == "Claude") return 1;
  return 2;  // Merged
}

bool row_before(const AccuracyRow& a, const AccuracyRow& b) {
  if (a.source != b.source) return a.source < b.source;
  if (a.category != b.category) return a.category < b.category;
  return split_rank(a.split) < split_rank(b.split);
}

}  // namespace

AccuracyReport compute_accuracy(const std::vector<EvaluationVerdict>& verdicts,
                                const std::vector<EvaluationSample>& samples) {
  std::unordered_map<std::string, const EvaluationVerdict*> by_id;
  for (const EvaluationVerdict& v : verdicts) by_id.emplace(v.sample_id, &v);

  std::map<std::tuple<std::string, std::string, std::string>, AccuracyRow> groups;
  std::map<std::string, AccuracyRow> totals;

  for (const EvaluationSample& sample : samples) {
    auto found = by_id.find(sample.sample_id);
    if (found == by_id.end()) throw MissingVerdict(sample.sample_id);
    const EvaluationVerdict& verdict = *found->second;

    std::array<long long, kMethodCount> credit{};
    if (verdict.error.empty()) {
      Choice truth = sample.label == 'A' ? Choice::A : Choice::B;
      for (int m = 0; m < kMethodCount; ++m) {
        auto choice = verdict.choices.find(kMethodKeys[static_cast<size_t>(m)]);
        if (choice != verdict.choices.end() && choice->second == truth)
          credit[static_cast<size_t>(m)] = 1;
      }
    }

    const std::string split = to_string(sample.split);
    AccuracyRow& row = groups[{sample.source, sample.category, split}];
    if (row.n == 0) {
      row.source = sample.source;
      row.category = sample.category;
      row.split = split;
    }
    AccuracyRow& split_total = totals[split];
    if (split_total.n == 0) {
      split_total.source = "overall";
      split_total.category = "overall";
      split_total.split = split;
    }
    AccuracyRow& merged = totals["Merged"];
    if (merged.n == 0) {
      merged.source = "overall";
      merged.category = "overall";
      merged.split = "Merged";
    }
    for (AccuracyRow* target : {&row, &split_total, &merged}) {
      target->n += 1;
      for (int m = 0; m < kMethodCount; ++m)
        target->correct[static_cast<size_t>(m)] += credit[static_cast<size_t>(m)];
    }
  }

  AccuracyReport report;
  for (auto& [key, row] : groups) report.rows.push_back(std::move(row));
  std::sort(report.rows.begin(), report.rows.end(), row_before);
  for (const char* split : {"GPT", "Claude", "Merged"}) {
    auto found = totals.find(split);
    if (found != totals.end()) report.overall.push_back(std::move(found->second));
  }
  return report;
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "markdown") return ReportFormat::Markdown;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown report format: " + name);
}

std::string to_string(ReportFormat format) {
  switch (format) {
    case ReportFormat::Markdown: return "markdown";
    case ReportFormat::Csv: return "csv";
    case ReportFormat::Json: return "json";
  }
  throw std::logic_error("unreachable");
}

std::string percent_string(long long correct, long long n) {
  if (n <= 0) throw std::invalid_argument("percent of an empty group");
  if (correct < 0 || correct > n) throw std::invalid_argument("correct count outside [0, n]");
  long long p = correct * 10000;
  long long d = p / n;
  long long r = p % n;
  if (2 * r > n || (2 * r == n && (d & 1))) ++d;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%02lld", d / 100, d % 100);
  return buf;
}

namespace {

void append_markdown_row(std::string& out, const AccuracyRow& row) {
  out += "| " + row.source + " | " + row.category + " | " + row.split + " | " +
         std::to_string(row.n);
  for (int m = 0; m < kMethodCount; ++m)
    out += " | " + percent_string(row.correct[static_cast<size_t>(m)], row.n);
  out += " |\n";
}

void append_csv_row(std::string& out, const AccuracyRow& row) {
  out += row.source + "," + row.category + "," + row.split + "," + std::to_string(row.n);
  for (int m = 0; m < kMethodCount; ++m)
    out += "," + percent_string(row.correct[static_cast<size_t>(m)], row.n);
  out += "\n";
}

nlohmann::ordered_json row_json(const AccuracyRow& row) {
  nlohmann::ordered_json j;
  j["source"] = row.source;
  j["category"] = row.category;
  j["split"] = row.split;
  j["n"] = row.n;
  j["correct"] = row.correct;
  auto percent = nlohmann::ordered_json::array();
  for (int m = 0; m < kMethodCount; ++m)
    percent.push_back(percent_string(row.correct[static_cast<size_t>(m)], row.n));
  j["percent"] = std::move(percent);
  return j;
}

}  // namespace

std::string render_report(const AccuracyReport& report, ReportFormat format) {
  if (report.rows.empty()) throw std::invalid_argument("cannot render an empty report");

  switch (format) {
    case ReportFormat::Markdown: {
      std::string out = "| Source | Category | Split | N";
      for (const char* label : kMethodLabels) out += std::string(" | ") + label;
      out += " |\n| --- | --- | --- | ---";
      for (int m = 0; m < kMethodCount; ++m) out += " | ---";
      out += " |\n";
      for (const AccuracyRow& row : report.rows) append_markdown_row(out, row);
      for (const AccuracyRow& row : report.overall) append_markdown_row(out, row);
      return out;
    }
    case ReportFormat::Csv: {
      std::string out = "Source,Category,Split,N";
      for (const char* label : kMethodLabels) out += std::string(",") + label;
      out += "\n";
      for (const AccuracyRow& row : report.rows) append_csv_row(out, row);
      for (const AccuracyRow& row : report.overall) append_csv_row(out, row);
      return out;
    }
    case ReportFormat::Json: {
      nlohmann::ordered_json j;
      j["schema_version"] = 1;
      j["methods"] = kMethodLabels;
      auto rows = nlohmann::ordered_json::array();
      for (const AccuracyRow& row : report.rows) rows.push_back(row_json(row));
      j["rows"] = std::move(rows);
      auto overall = nlohmann::ordered_json::array();
      for (const AccuracyRow& row : report.overall) overall.push_back(row_json(row));
      j["overall"] = std::move(overall);
      return j.dump() + "\n";
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace mcjudge
