#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcjudge/ahp.hpp"
#include "mcjudge/data/dataset.hpp"
#include "mcjudge/data/report.hpp"
#include "mcjudge/errors.hpp"
#include "mcjudge/judge/cache.hpp"
#include "mcjudge/judge/client.hpp"
#include "mcjudge/judge/criteria.hpp"
#include "mcjudge/judge/pipeline.hpp"

namespace {

using mcjudge::AccuracyReport;
using mcjudge::CachedClient;
using mcjudge::ComparisonMatrix;
using mcjudge::CriteriaConfig;
using mcjudge::EvaluationSample;
using mcjudge::EvaluationVerdict;
using mcjudge::PairwiseComparison;
using mcjudge::PipelineConfig;
using mcjudge::ReportFormat;
using mcjudge::ResponseCache;
using mcjudge::RunResult;

// Everything configurable, resolved from defaults, then the optional JSON
// config file, then explicit flags (flags win).
struct Options {
  std::string config_path;
  std::string dataset;
  std::string criteria;
  int scale = 10;
  double tau = 0.15;
  double beta = 7.0;
  int max_regen = 2;
  std::string cache_dir = ".mcjudge-cache";
  std::string endpoint = "http://127.0.0.1:8080/v1/chat/completions";
  std::string model = "mock-model";
  int parallelism = 4;
  std::string out = "verdicts.jsonl";
  std::string format = "markdown";
  double requests_per_second = 8.0;
};

// Copies config-file values into opts for every flag the user did not pass
// on the command line.
void merge_config_file(const CLI::App& cmd, Options& opts) {
  if (opts.config_path.empty()) return;
  std::ifstream in(opts.config_path);
  if (!in) throw mcjudge::NotFound("config file not found: " + opts.config_path);
  nlohmann::json j = nlohmann::json::parse(in);

  auto explicitly_set = [&](const char* flag) {
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  auto take = [&](const char* flag, const char* key, auto& slot) {
    if (j.contains(key) && !explicitly_set(flag)) slot = j.at(key).get<std::decay_t<decltype(slot)>>();
  };
  take("--dataset", "dataset", opts.dataset);
  take("--criteria", "criteria", opts.criteria);
  take("--scale", "scale", opts.scale);
  take("--tau", "tau", opts.tau);
  take("--beta", "beta", opts.beta);
  take("--max-regen", "max_regen", opts.max_regen);
  take("--cache-dir", "cache_dir", opts.cache_dir);
  take("--endpoint", "endpoint", opts.endpoint);
  take("--model", "model", opts.model);
  take("--parallelism", "parallelism", opts.parallelism);
  take("--out", "out", opts.out);
  take("--format", "format", opts.format);
  if (j.contains("requests_per_second")) {
    opts.requests_per_second = j.at("requests_per_second").get<double>();
  }
}

void add_common_flags(CLI::App* cmd, Options& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file; explicit flags win");
  cmd->add_option("--scale", opts.scale, "scoring scale, 10 or 5")
      ->check(CLI::IsMember({5, 10}));
  cmd->add_option("--tau", opts.tau, "consistency-ratio acceptance threshold");
  cmd->add_option("--beta", opts.beta, "fusion gate steepness");
  cmd->add_option("--max-regen", opts.max_regen, "comparison regeneration budget");
  cmd->add_option("--cache-dir", opts.cache_dir, "response cache directory");
  cmd->add_option("--endpoint", opts.endpoint, "chat-completions endpoint URL");
  cmd->add_option("--model", opts.model, "judge model name");
  cmd->add_option("--parallelism", opts.parallelism, "worker threads for runs");
}

PipelineConfig pipeline_config_from(const Options& opts) {
  PipelineConfig config;
  config.scale = mcjudge::scale_from_int(opts.scale);
  config.tau = opts.tau;
  config.beta = opts.beta;
  config.max_regenerations = opts.max_regen;
  config.model = opts.model;
  config.endpoint = opts.endpoint;
  config.cache_dir = opts.cache_dir;
  config.parallelism = opts.parallelism;
  config.validate();
  return config;
}

std::filesystem::path report_path_for(const std::filesystem::path& out, ReportFormat format) {
  const char* ext = format == ReportFormat::Markdown ? ".md"
                    : format == ReportFormat::Csv    ? ".csv"
                                                     : ".json";
  std::filesystem::path p = out;
  p.replace_extension("");
  p += std::string(".report") + ext;
  return p;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int cmd_run(const Options& opts) {
  if (opts.dataset.empty()) throw std::invalid_argument("--dataset is required");
  if (opts.criteria.empty()) throw std::invalid_argument("--criteria is required");

  CriteriaConfig criteria = CriteriaConfig::load(opts.criteria);
  std::set<std::string> known;
  for (const std::string& c : criteria.categories()) known.insert(c);

  PipelineConfig config = pipeline_config_from(opts);
  ReportFormat format = mcjudge::report_format_from_string(opts.format);
  std::printf("scale=%d tau=%.3f beta=%.3f max_regen=%d parallelism=%d model=%s\n", opts.scale,
              config.tau, config.beta, config.max_regenerations, config.parallelism,
              config.model.c_str());

  // Unknown categories abort here, before any model traffic.
  std::vector<EvaluationSample> samples = mcjudge::load_dataset(opts.dataset, known);
  if (samples.empty()) throw std::invalid_argument("dataset is empty: " + opts.dataset);
  std::printf("loaded %zu samples from %s\n", samples.size(), opts.dataset.c_str());

  ResponseCache cache(opts.cache_dir);
  mcjudge::HttpModelClient client(opts.endpoint, mcjudge::RetryPolicy{},
                                  opts.requests_per_second);
  RunResult result = mcjudge::run_evaluation(samples, criteria, config, client, cache);

  mcjudge::write_verdicts(opts.out, result.verdicts);
  AccuracyReport report = mcjudge::compute_accuracy(result.verdicts, samples);
  std::filesystem::path report_path = report_path_for(opts.out, format);
  write_text_file(report_path, mcjudge::render_report(report, format));

  std::printf("verdicts: %s\n", opts.out.c_str());
  std::printf("report:   %s\n", report_path.string().c_str());
  std::printf("judged %zu/%zu samples, %d unjudgeable, %d fallback\n",
              result.verdicts.size() - static_cast<size_t>(result.unjudgeable),
              result.verdicts.size(), result.unjudgeable, result.fallbacks);
  return result.unjudgeable > 0 ? 2 : 0;
}

int cmd_report(const std::string& verdicts_path, const std::string& out_path,
               const Options& opts) {
  if (opts.dataset.empty()) throw std::invalid_argument("--dataset is required");
  if (opts.criteria.empty()) throw std::invalid_argument("--criteria is required");

  CriteriaConfig criteria = CriteriaConfig::load(opts.criteria);
  std::set<std::string> known;
  for (const std::string& c : criteria.categories()) known.insert(c);
  std::vector<EvaluationSample> samples = mcjudge::load_dataset(opts.dataset, known);
  std::vector<EvaluationVerdict> verdicts = mcjudge::read_verdicts(verdicts_path);

  AccuracyReport report = mcjudge::compute_accuracy(verdicts, samples);
  std::string text = mcjudge::render_report(report, mcjudge::report_format_from_string(opts.format));
  if (out_path.empty() || out_path == "-") {
    std::fputs(text.c_str(), stdout);
  } else {
    write_text_file(out_path, text);
    std::printf("report: %s\n", out_path.c_str());
  }
  return 0;
}

std::vector<PairwiseComparison> load_comparisons(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mcjudge::NotFound("comparisons file not found: " + path);
  std::vector<PairwiseComparison> comparisons;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      PairwiseComparison c;
      c.i = j.at("i").get<int>();
      c.j = j.at("j").get<int>();
      c.score = mcjudge::SaatyScore{j.at("score").get<int>()};
      c.confidence = j.value("confidence", 1.0);
      c.validate();
      comparisons.push_back(c);
    } catch (const mcjudge::MalformedLine&) {
      throw;
    } catch (const std::exception& e) {
      throw mcjudge::MalformedLine(line_no, e.what());
    }
  }
  return comparisons;
}

void print_matrix(const ComparisonMatrix& matrix) {
  std::printf("matrix:\n");
  for (int r = 0; r < matrix.order(); ++r) {
    std::printf(" ");
    for (int c = 0; c < matrix.order(); ++c) std::printf(" %10.4f", matrix.at(r, c));
    std::printf("\n");
  }
}

void print_consistency(const mcjudge::ConsistencyReport& report, double tau) {
  std::printf("lambda_max = %.6f\n", report.lambda_max);
  std::printf("CI = %.6f\n", report.ci);
  std::printf("CR = %.4f, %s (tau = %.4f)\n", report.cr,
              report.acceptable ? "acceptable" : "unacceptable", tau);
}

int cmd_matrix(const std::string& comparisons_path, const Options& opts) {
  std::vector<PairwiseComparison> comparisons = load_comparisons(comparisons_path);
  int k = 0;
  for (const PairwiseComparison& c : comparisons) k = std::max({k, c.i + 1, c.j + 1});
  if (k < 2) {
    std::fprintf(stderr, "error: at least 2 criteria required (got K = %d)\n", k);
    return 1;
  }

  ComparisonMatrix matrix = mcjudge::build_matrix(comparisons, k);
  std::printf("K = %d\n", k);
  print_matrix(matrix);
  mcjudge::EigenResult eig = mcjudge::principal_eigenvector(matrix);
  mcjudge::ConsistencyReport report = mcjudge::consistency_report(matrix, eig.lambda_max, opts.tau);
  print_consistency(report, opts.tau);

  if (report.acceptable) {
    std::printf("status: AlreadyConsistent\n");
    return 0;
  }

  mcjudge::RepairOutcome outcome =
      mcjudge::repair_matrix(matrix, opts.tau, mcjudge::default_max_corrections(k));
  std::printf("status: %s\n", mcjudge::to_string(outcome.status).c_str());
  if (!outcome.corrections.empty()) {
    std::printf("corrections:\n");
    for (const mcjudge::Correction& c : outcome.corrections) {
      std::printf("  (%d,%d): %.6f -> %.6f\n", c.i, c.j, c.old_value, c.new_value);
    }
  }
  if (outcome.status == mcjudge::RepairStatus::Repaired) {
    std::printf("repaired ");
    print_matrix(outcome.matrix);
    std::printf("repaired lambda_max = %.6f\n", outcome.final_report.lambda_max);
    std::printf("repaired CR = %.4f, %s (tau = %.4f)\n", outcome.final_report.cr,
                outcome.final_report.acceptable ? "acceptable" : "unacceptable", opts.tau);
  } else {
    std::printf("no acceptable repair within budget; regenerate the comparisons\n");
  }
  return 0;
}

std::string scores_line(const char* label, double a, double b) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "  %-11s A %.6f  B %.6f\n", label, a, b);
  return buf;
}

int cmd_inspect(const std::string& sample_id, const std::string& verdicts_path) {
  std::vector<EvaluationVerdict> verdicts = mcjudge::read_verdicts(verdicts_path);
  const EvaluationVerdict* verdict = nullptr;
  for (const EvaluationVerdict& v : verdicts) {
    if (v.sample_id == sample_id) verdict = &v;
  }
  if (verdict == nullptr) throw mcjudge::NotFound("no verdict for sample " + sample_id);

  std::string out;
  out += "sample: " + verdict->sample_id + "\n";
  out += "scale_max: " + std::to_string(verdict->scale_max) + "\n";
  if (!verdict->error.empty()) {
    out += "error: " + verdict->error + "\n";
    out += "no scores recorded\n";
    std::fputs(out.c_str(), stdout);
    return 0;
  }

  out += "per-method scores:\n";
  out += scores_line("direct:", verdict->s_direct_a, verdict->s_direct_b);
  out += scores_line("crisp:", verdict->s_crisp_a, verdict->s_crisp_b);
  out += scores_line("fuzzy:", verdict->s_fuzzy_a, verdict->s_fuzzy_b);
  out += scores_line("dual_crisp:", verdict->s_dual_crisp_a, verdict->s_dual_crisp_b);
  out += scores_line("dual_fuzzy:", verdict->s_dual_fuzzy_a, verdict->s_dual_fuzzy_b);

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "consistency: CR = %.6f, alpha = %.6f, repair = %s, regenerations = %d%s\n",
                verdict->cr, verdict->alpha, mcjudge::to_string(verdict->repair_status).c_str(),
                verdict->regeneration_count, verdict->ahp_fallback ? ", direct-only fallback" : "");
  out += buf;

  auto weight_list = [](const std::vector<double>& ws) {
    std::string s = "[";
    for (size_t idx = 0; idx < ws.size(); ++idx) {
      char b[32];
      std::snprintf(b, sizeof b, "%s%.6f", idx ? ", " : "", ws[idx]);
      s += b;
    }
    return s + "]";
  };
  out += "crisp weights: " + weight_list(verdict->crisp_weights) + "\n";
  std::string tfns = "[";
  for (size_t idx = 0; idx < verdict->fuzzy_weights.size(); ++idx) {
    const auto& t = verdict->fuzzy_weights[idx];
    char b[80];
    std::snprintf(b, sizeof b, "%s(%.6f, %.6f, %.6f)", idx ? ", " : "", t.l, t.m, t.u);
    tfns += b;
  }
  out += "fuzzy weights: " + tfns + "]\n";
  out += "defuzzified weights: " + weight_list(verdict->defuzzified_weights) + "\n";

  if (verdict->corrections.empty()) {
    out += "corrections: none\n";
  } else {
    out += "corrections:\n";
    for (const mcjudge::Correction& c : verdict->corrections) {
      std::snprintf(buf, sizeof buf, "  (%d,%d): %.6f -> %.6f\n", c.i, c.j, c.old_value,
                    c.new_value);
      out += buf;
    }
  }

  out += "choices:";
  for (const char* key : mcjudge::kMethodKeys) {
    out += std::string(" ") + key + "=" + mcjudge::to_string(verdict->choices.at(key));
  }
  out += "\n";
  bool direct_tied = verdict->choices.at("direct") == mcjudge::Choice::Tie;
  bool weighted_decides = verdict->choices.at("dual_crisp") != mcjudge::Choice::Tie ||
                          verdict->choices.at("dual_fuzzy") != mcjudge::Choice::Tie;
  if (direct_tied && weighted_decides) {
    out += "note: direct scoring tied; the criterion-weighted branches resolved it\n";
  }
  std::fputs(out.c_str(), stdout);
  return 0;
}

int cmd_cache(const std::string& action, const Options& opts) {
  ResponseCache cache(opts.cache_dir);
  if (action == "stats") {
    ResponseCache::Stats stats = cache.stats();
    std::printf("cache dir: %s\n", opts.cache_dir.c_str());
    std::printf("entries: %llu\n", static_cast<unsigned long long>(stats.entries));
    std::printf("bytes: %llu\n", static_cast<unsigned long long>(stats.bytes));
    return 0;
  }
  auto removed = cache.purge();
  std::printf("purged %llu entries from %s\n", static_cast<unsigned long long>(removed),
              opts.cache_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-criteria LLM judge"};
  app.require_subcommand(1);
  Options opts;

  CLI::App* run = app.add_subcommand("run", "evaluate a dataset and write verdicts + report");
  run->add_option("--dataset", opts.dataset, "JSONL dataset path");
  run->add_option("--criteria", opts.criteria, "criteria config JSON path");
  run->add_option("--out", opts.out, "verdict JSONL output path");
  run->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  add_common_flags(run, opts);

  std::string report_verdicts, report_out;
  CLI::App* report = app.add_subcommand("report", "render an accuracy report from verdicts");
  report->add_option("verdicts", report_verdicts, "verdict JSONL path")->required();
  report->add_option("--dataset", opts.dataset, "JSONL dataset path");
  report->add_option("--criteria", opts.criteria, "criteria config JSON path");
  report->add_option("--out", report_out, "report output path (default: stdout)");
  report->add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  add_common_flags(report, opts);

  std::string matrix_file;
  CLI::App* matrix = app.add_subcommand("matrix", "diagnose a pairwise comparison file");
  matrix->add_option("comparisons", matrix_file, "JSONL comparisons path")->required();
  add_common_flags(matrix, opts);

  std::string inspect_id, inspect_verdicts;
  CLI::App* inspect = app.add_subcommand("inspect", "print one sample's evaluation trace");
  inspect->add_option("sample_id", inspect_id, "sample id")->required();
  inspect->add_option("verdicts", inspect_verdicts, "verdict JSONL path")->required();

  CLI::App* cache = app.add_subcommand("cache", "response cache maintenance");
  std::string cache_action;
  cache->add_option("action", cache_action, "stats or purge")
      ->required()
      ->check(CLI::IsMember({"stats", "purge"}));
  add_common_flags(cache, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      merge_config_file(*run, opts);
      return cmd_run(opts);
    }
    if (report->parsed()) {
      merge_config_file(*report, opts);
      return cmd_report(report_verdicts, report_out, opts);
    }
    if (matrix->parsed()) {
      merge_config_file(*matrix, opts);
      return cmd_matrix(matrix_file, opts);
    }
    if (inspect->parsed()) return cmd_inspect(inspect_id, inspect_verdicts);
    if (cache->parsed()) {
      merge_config_file(*cache, opts);
      return cmd_cache(cache_action, opts);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
