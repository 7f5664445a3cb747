#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mcjudge/ahp.hpp"
#include "mcjudge/data/dataset.hpp"
#include "mcjudge/fuzzy.hpp"
#include "mcjudge/judge/client.hpp"
#include "mcjudge/judge/criteria.hpp"
#include "mcjudge/judge/prompts.hpp"

namespace mcjudge {

enum class ScoreScale { OneToTen, OneToFive };

inline int scale_max_of(ScoreScale scale) { return scale == ScoreScale::OneToTen ? 10 : 5; }
ScoreScale scale_from_int(int value);  // 10 or 5, throws std::invalid_argument otherwise

struct PipelineConfig {
  ScoreScale scale = ScoreScale::OneToTen;
  double tau = 0.15;
  double beta = 7.0;
  int max_regenerations = 2;
  std::string model = "mock-model";
  double temperature = 0.0;
  int max_tokens = 1024;
  std::string endpoint;
  std::string cache_dir;
  int parallelism = 4;
  PromptTemplates prompts = PromptTemplates::defaults();

  int scale_max() const { return scale_max_of(scale); }
  void validate() const;  // tau > 0, beta >= 0, max_regenerations >= 0, parallelism >= 1
};

// Everything elicited from the judge for one sample. Comparisons reflect the
// latest regeneration round; per-criterion and direct scores are elicited
// once and reused across rounds.
struct JudgmentRecord {
  std::string sample_id;
  std::vector<PairwiseComparison> comparisons;
  std::map<std::string, std::pair<int, int>> per_criterion_scores;  // name -> (A, B)
  std::pair<int, int> direct_scores{0, 0};
  std::vector<std::pair<std::string, std::string>> raw_transcripts;  // (prompt hash, reply)
  int regeneration_count = 0;
};

enum class Choice { A, B, Tie };
std::string to_string(Choice choice);
Choice choice_from_string(const std::string& s);

// argmax with ties below 1e-12 treated as exact.
Choice decide(double score_a, double score_b);

// exp(-beta*cr) * s_ahp + (1 - exp(-beta*cr)) * s_abs.
double fuse_dualjudge(double s_ahp, double s_abs, double cr, double beta);

struct EvaluationVerdict {
  std::string sample_id;
  int scale_max = 10;
  // Non-empty when the sample could not be judged at all (parse or transport
  // exhaustion); every score field is then meaningless.
  std::string error;

  double s_direct_a = 0, s_direct_b = 0;
  double s_crisp_a = 0, s_crisp_b = 0;
  double s_fuzzy_a = 0, s_fuzzy_b = 0;
  double s_dual_crisp_a = 0, s_dual_crisp_b = 0;
  double s_dual_fuzzy_a = 0, s_dual_fuzzy_b = 0;

  double cr = 0.0;
  double alpha = 1.0;
  RepairStatus repair_status = RepairStatus::AlreadyConsistent;
  int regeneration_count = 0;
  // Regeneration budget ran out: the structured branch was replaced by the
  // direct scores so the verdict degrades to direct-only.
  bool ahp_fallback = false;

  std::map<std::string, Choice> choices;  // direct, crisp, fuzzy, dual_crisp, dual_fuzzy

  std::vector<double> crisp_weights;                 // eigenvector of the accepted matrix
  std::vector<TriangularFuzzyNumber> fuzzy_weights;  // normalized fuzzy priorities
  std::vector<double> defuzzified_weights;           // centroid weights the fuzzy branch used
  std::vector<Correction> corrections;
  std::string matrix_json;  // accepted comparison matrix
};

// Round-0 elicitation: one pairwise question per criterion pair (ordered by
// (i, j)), one scoring question per criterion, one direct question. Throws
// ParseFailure after the bounded re-ask, TransportFailure from the client.
JudgmentRecord elicit_judgments(const EvaluationSample& sample, const CriterionSet& criteria,
                                const PipelineConfig& config, CachedClient& client);

// (s_A, s_B) = direct scores / scale_max.
std::pair<double, double> score_branch_direct(const JudgmentRecord& record,
                                              const PipelineConfig& config);

struct AhpBranchResult {
  double crisp_a = 0, crisp_b = 0;
  double fuzzy_a = 0, fuzzy_b = 0;
  double cr = 0.0;
  RepairStatus status = RepairStatus::AlreadyConsistent;
  std::vector<double> weights;
  std::vector<TriangularFuzzyNumber> fuzzy_weights;
  std::vector<double> defuzzified_weights;
  std::vector<Correction> corrections;
  std::string matrix_json;
};

// Builds the comparison matrix, repairs it if needed and, when repair gives
// up, swaps in freshly elicited comparisons up to config.max_regenerations
// times (record.comparisons and regeneration_count track the last round).
// Weights come from the accepted matrix; each branch score is
// sum_i w_i * (criterion score_i / scale_max). Throws RegenerationExhausted
// when the final round still requires regeneration.
AhpBranchResult score_branch_ahp(
    JudgmentRecord& record, const CriterionSet& criteria, const PipelineConfig& config,
    const std::function<std::vector<PairwiseComparison>(int round)>& reelicit);

// Full per-sample pipeline. Parse and transport exhaustion produce a verdict
// with error set instead of propagating; regeneration exhaustion produces a
// direct-only fallback verdict with ahp_fallback set.
EvaluationVerdict evaluate_sample(const EvaluationSample& sample, const CriterionSet& criteria,
                                  const PipelineConfig& config, CachedClient& client);

struct RunResult {
  std::vector<EvaluationVerdict> verdicts;  // dataset order
  int unjudgeable = 0;                      // verdicts with error set
  int fallbacks = 0;                        // verdicts with ahp_fallback set
};

// Evaluates samples concurrently (config.parallelism workers) against one
// shared cache-backed client. Verdicts keep dataset order regardless of
// scheduling.
RunResult run_evaluation(const std::vector<EvaluationSample>& samples,
                         const CriteriaConfig& criteria, const PipelineConfig& config,
                         ModelClient& inner, ResponseCache& cache);

// Verdict persistence: JSONL, one verdict per line, schema_version 1.
std::string verdict_to_jsonl_line(const EvaluationVerdict& verdict);
EvaluationVerdict verdict_from_jsonl_line(const std::string& line, int line_no);
void write_verdicts(const std::string& path, const std::vector<EvaluationVerdict>& verdicts);
std::vector<EvaluationVerdict> read_verdicts(const std::string& path);

}  // namespace mcjudge
