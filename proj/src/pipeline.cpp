#include "mcjudge/judge/pipeline.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <thread>

#include "json.hpp"
#include "mcjudge/judge/elicit.hpp"

namespace mcjudge {

ScoreScale scale_from_int(int value) {
  if (value == 10) return ScoreScale::OneToTen;
  if (value == 5) return ScoreScale::OneToFive;
  throw std::invalid_argument("scale must be 10 or 5, got " + std::to_string(value));
}

void PipelineConfig::validate() const {
  if (!(tau > 0)) throw std::invalid_argument("tau must be positive");
  if (!(beta >= 0)) throw std::invalid_argument("beta must be non-negative");
  if (max_regenerations < 0) throw std::invalid_argument("max_regenerations must be non-negative");
  if (parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
  if (max_tokens < 1) throw std::invalid_argument("max_tokens must be positive");
  if (model.empty()) throw std::invalid_argument("model name must be non-empty");
}

std::string to_string(Choice choice) {
  switch (choice) {
    case Choice::A: return "A";
    case Choice::B: return "B";
    case Choice::Tie: return "tie";
  }
  throw std::logic_error("unreachable choice");
}

Choice choice_from_string(const std::string& s) {
  if (s == "A") return Choice::A;
  if (s == "B") return Choice::B;
  if (s == "tie") return Choice::Tie;
  throw std::invalid_argument("unknown choice: " + s);
}

Choice decide(double score_a, double score_b) {
  if (std::fabs(score_a - score_b) < 1e-12) return Choice::Tie;
  return score_a > score_b ? Choice::A : Choice::B;
}

double fuse_dualjudge(double s_ahp, double s_abs, double cr, double beta) {
  double alpha = std::exp(-beta * cr);
  return alpha * s_ahp + (1.0 - alpha) * s_abs;
}

namespace {

// One structured ask with the single bounded re-ask. base_attempt spaces the
// attempt counter so re-asks and regeneration rounds never collide in the
// cache. parse throws std::invalid_argument to reject a reply.
template <typename T, typename ParseFn>
T ask_structured(CachedClient& client, const std::string& prompt, int base_attempt,
                 std::vector<std::pair<std::string, std::string>>* transcripts,
                 ParseFn&& parse) {
  std::string detail;
  for (int parse_attempt = 0; parse_attempt < 2; ++parse_attempt) {
    std::string asked = parse_attempt == 0 ? prompt : prompt + format_reminder();
    int attempt = base_attempt + parse_attempt;
    std::string reply = client.complete(asked, attempt);
    if (transcripts) transcripts->emplace_back(client.key_for(asked, attempt), reply);
    try {
      return parse(reply);
    } catch (const std::invalid_argument& e) {
      detail = e.what();
    }
  }
  throw ParseFailure(client.key_for(prompt, base_attempt), detail);
}

// Pairwise comparisons for one regeneration round, in (i, j) ask order. The
// judge may return the pair in either orientation; the named winner becomes
// the comparison's i side.
std::vector<PairwiseComparison> elicit_comparisons(
    const PromptBuilder& builder, const CriterionSet& criteria, CachedClient& client, int round,
    std::vector<std::pair<std::string, std::string>>* transcripts) {
  std::vector<PairwiseComparison> comparisons;
  const int k = criteria.k();
  comparisons.reserve(static_cast<size_t>(k) * (k - 1) / 2);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const std::string& name_i = criteria.criteria[i].name;
      const std::string& name_j = criteria.criteria[j].name;
      auto parse = [&](const std::string& reply) {
        PairwiseAnswer ans = parse_pairwise_answer(reply);
        PairwiseComparison comparison;
        if (ans.i == name_i && ans.j == name_j) {
          comparison.i = i;
          comparison.j = j;
        } else if (ans.i == name_j && ans.j == name_i) {
          comparison.i = j;
          comparison.j = i;
        } else {
          throw std::invalid_argument("reply names criteria '" + ans.i + "'/'" + ans.j +
                                      "' instead of the asked pair '" + name_i + "'/'" + name_j + "'");
        }
        comparison.score = SaatyScore{ans.score};
        comparison.confidence = ans.confidence;
        comparison.validate();
        return comparison;
      };
      comparisons.push_back(ask_structured<PairwiseComparison>(client, builder.pairwise(i, j),
                                                               round * 2, transcripts, parse));
    }
  }
  return comparisons;
}

}  // namespace

JudgmentRecord elicit_judgments(const EvaluationSample& sample, const CriterionSet& criteria,
                                const PipelineConfig& config, CachedClient& client) {
  JudgmentRecord record;
  record.sample_id = sample.sample_id;
  const int scale_max = config.scale_max();
  PromptBuilder builder(config.prompts, sample, criteria, scale_max);

  record.comparisons = elicit_comparisons(builder, criteria, client, 0, &record.raw_transcripts);

  for (int idx = 0; idx < criteria.k(); ++idx) {
    const std::string& name = criteria.criteria[idx].name;
    auto parse = [&](const std::string& reply) {
      CriterionAnswer ans = parse_criterion_answer(reply, scale_max);
      if (ans.criterion != name) {
        throw std::invalid_argument("reply scores criterion '" + ans.criterion +
                                    "' instead of the asked '" + name + "'");
      }
      return std::make_pair(ans.score_a, ans.score_b);
    };
    record.per_criterion_scores[name] = ask_structured<std::pair<int, int>>(
        client, builder.criterion_scoring(idx), 0, &record.raw_transcripts, parse);
  }

  auto parse_direct = [&](const std::string& reply) {
    DirectAnswer ans = parse_direct_answer(reply, scale_max);
    return std::make_pair(ans.score_a, ans.score_b);
  };
  record.direct_scores = ask_structured<std::pair<int, int>>(client, builder.direct(), 0,
                                                             &record.raw_transcripts, parse_direct);
  return record;
}

std::pair<double, double> score_branch_direct(const JudgmentRecord& record,
                                              const PipelineConfig& config) {
  double scale = config.scale_max();
  return {record.direct_scores.first / scale, record.direct_scores.second / scale};
}

AhpBranchResult score_branch_ahp(
    JudgmentRecord& record, const CriterionSet& criteria, const PipelineConfig& config,
    const std::function<std::vector<PairwiseComparison>(int round)>& reelicit) {
  const int k = criteria.k();
  int round = record.regeneration_count;

  for (;;) {
    ComparisonMatrix matrix = build_matrix(record.comparisons, k);
    RepairOutcome outcome = repair_matrix(matrix, config.tau, default_max_corrections(k));
    if (outcome.status == RepairStatus::RegenerateRequired) {
      if (round >= config.max_regenerations) {
        throw RegenerationExhausted(record.sample_id, round, outcome.final_report.cr);
      }
      ++round;
      record.comparisons = reelicit(round);
      record.regeneration_count = round;
      continue;
    }

    AhpBranchResult result;
    result.status = outcome.status;
    result.cr = outcome.final_report.cr;
    result.corrections = outcome.corrections;
    result.matrix_json = outcome.matrix.to_json();

    EigenResult eigen = principal_eigenvector(outcome.matrix);
    result.weights = eigen.weights.weights;

    FuzzyComparisonMatrix fm = build_fuzzy_matrix(outcome.matrix, record.comparisons);
    std::vector<FuzzyWeight> fws = mcjudge::fuzzy_weights(fm);
    result.fuzzy_weights.reserve(fws.size());
    for (const FuzzyWeight& fw : fws) result.fuzzy_weights.push_back(fw.tfn);
    result.defuzzified_weights = defuzzify_weights(fws).weights;

    const double scale = config.scale_max();
    for (int idx = 0; idx < k; ++idx) {
      auto it = record.per_criterion_scores.find(criteria.criteria[idx].name);
      if (it == record.per_criterion_scores.end()) {
        throw std::logic_error("missing per-criterion score for '" + criteria.criteria[idx].name + "'");
      }
      double sa = it->second.first / scale;
      double sb = it->second.second / scale;
      result.crisp_a += result.weights[idx] * sa;
      result.crisp_b += result.weights[idx] * sb;
      result.fuzzy_a += result.defuzzified_weights[idx] * sa;
      result.fuzzy_b += result.defuzzified_weights[idx] * sb;
    }
    return result;
  }
}

EvaluationVerdict evaluate_sample(const EvaluationSample& sample, const CriterionSet& criteria,
                                  const PipelineConfig& config, CachedClient& client) {
  EvaluationVerdict verdict;
  verdict.sample_id = sample.sample_id;
  verdict.scale_max = config.scale_max();

  try {
    JudgmentRecord record = elicit_judgments(sample, criteria, config, client);
    auto [direct_a, direct_b] = score_branch_direct(record, config);
    verdict.s_direct_a = direct_a;
    verdict.s_direct_b = direct_b;

    PromptBuilder builder(config.prompts, sample, criteria, verdict.scale_max);
    auto reelicit = [&](int round) {
      return elicit_comparisons(builder, criteria, client, round, &record.raw_transcripts);
    };

    try {
      AhpBranchResult ahp = score_branch_ahp(record, criteria, config, reelicit);
      verdict.s_crisp_a = ahp.crisp_a;
      verdict.s_crisp_b = ahp.crisp_b;
      verdict.s_fuzzy_a = ahp.fuzzy_a;
      verdict.s_fuzzy_b = ahp.fuzzy_b;
      verdict.cr = ahp.cr;
      verdict.repair_status = ahp.status;
      verdict.regeneration_count = record.regeneration_count;
      verdict.crisp_weights = std::move(ahp.weights);
      verdict.fuzzy_weights = std::move(ahp.fuzzy_weights);
      verdict.defuzzified_weights = std::move(ahp.defuzzified_weights);
      verdict.corrections = std::move(ahp.corrections);
      verdict.matrix_json = std::move(ahp.matrix_json);
    } catch (const RegenerationExhausted& e) {
      // The structured branch is unusable; degrade to direct-only scores so
      // the fused methods still produce a verdict, and say so.
      verdict.ahp_fallback = true;
      verdict.repair_status = RepairStatus::RegenerateRequired;
      verdict.regeneration_count = e.rounds;
      verdict.cr = e.last_cr;
      verdict.s_crisp_a = verdict.s_direct_a;
      verdict.s_crisp_b = verdict.s_direct_b;
      verdict.s_fuzzy_a = verdict.s_direct_a;
      verdict.s_fuzzy_b = verdict.s_direct_b;
    }

    verdict.alpha = std::exp(-config.beta * verdict.cr);
    verdict.s_dual_crisp_a = fuse_dualjudge(verdict.s_crisp_a, verdict.s_direct_a, verdict.cr, config.beta);
    verdict.s_dual_crisp_b = fuse_dualjudge(verdict.s_crisp_b, verdict.s_direct_b, verdict.cr, config.beta);
    verdict.s_dual_fuzzy_a = fuse_dualjudge(verdict.s_fuzzy_a, verdict.s_direct_a, verdict.cr, config.beta);
    verdict.s_dual_fuzzy_b = fuse_dualjudge(verdict.s_fuzzy_b, verdict.s_direct_b, verdict.cr, config.beta);

    verdict.choices["direct"] = decide(verdict.s_direct_a, verdict.s_direct_b);
    verdict.choices["crisp"] = decide(verdict.s_crisp_a, verdict.s_crisp_b);
    verdict.choices["fuzzy"] = decide(verdict.s_fuzzy_a, verdict.s_fuzzy_b);
    verdict.choices["dual_crisp"] = decide(verdict.s_dual_crisp_a, verdict.s_dual_crisp_b);
    verdict.choices["dual_fuzzy"] = decide(verdict.s_dual_fuzzy_a, verdict.s_dual_fuzzy_b);
  } catch (const ParseFailure& e) {
    verdict.error = e.what();
  } catch (const TransportFailure& e) {
    verdict.error = e.what();
  }
  return verdict;
}

RunResult run_evaluation(const std::vector<EvaluationSample>& samples,
                         const CriteriaConfig& criteria, const PipelineConfig& config,
                         ModelClient& inner, ResponseCache& cache) {
  config.validate();
  CachedClient client(inner, cache, config.model, config.temperature, config.max_tokens);

  RunResult result;
  result.verdicts.resize(samples.size());
  std::atomic<size_t> next{0};
  std::atomic<int> unjudgeable{0};
  std::atomic<int> fallbacks{0};

  auto worker = [&] {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= samples.size()) return;
      const EvaluationSample& sample = samples[idx];
      EvaluationVerdict verdict;
      try {
        verdict = evaluate_sample(sample, criteria.for_category(sample.category), config, client);
      } catch (const std::exception& e) {
        verdict.sample_id = sample.sample_id;
        verdict.scale_max = config.scale_max();
        verdict.error = e.what();
      }
      if (!verdict.error.empty()) unjudgeable.fetch_add(1);
      if (verdict.ahp_fallback) fallbacks.fetch_add(1);
      result.verdicts[idx] = std::move(verdict);
    }
  };

  int workers = config.parallelism;
  if (static_cast<size_t>(workers) > samples.size()) workers = static_cast<int>(samples.size());
  if (workers < 1) workers = 1;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& thread : pool) thread.join();

  result.unjudgeable = unjudgeable.load();
  result.fallbacks = fallbacks.load();
  return result;
}

std::string verdict_to_jsonl_line(const EvaluationVerdict& v) {
  nlohmann::ordered_json obj;
  obj["schema_version"] = 1;
  obj["sample_id"] = v.sample_id;
  obj["scale_max"] = v.scale_max;
  obj["error"] = v.error;
  obj["s_direct_a"] = v.s_direct_a;
  obj["s_direct_b"] = v.s_direct_b;
  obj["s_crisp_a"] = v.s_crisp_a;
  obj["s_crisp_b"] = v.s_crisp_b;
  obj["s_fuzzy_a"] = v.s_fuzzy_a;
  obj["s_fuzzy_b"] = v.s_fuzzy_b;
  obj["s_dual_crisp_a"] = v.s_dual_crisp_a;
  obj["s_dual_crisp_b"] = v.s_dual_crisp_b;
  obj["s_dual_fuzzy_a"] = v.s_dual_fuzzy_a;
  obj["s_dual_fuzzy_b"] = v.s_dual_fuzzy_b;
  obj["cr"] = v.cr;
  obj["alpha"] = v.alpha;
  obj["repair_status"] = to_string(v.repair_status);
  obj["regeneration_count"] = v.regeneration_count;
  obj["ahp_fallback"] = v.ahp_fallback;

  nlohmann::ordered_json choices = nlohmann::ordered_json::object();
  for (const char* method : {"direct", "crisp", "fuzzy", "dual_crisp", "dual_fuzzy"}) {
    auto it = v.choices.find(method);
    if (it != v.choices.end()) choices[method] = to_string(it->second);
  }
  obj["choices"] = choices;

  obj["crisp_weights"] = v.crisp_weights;
  nlohmann::ordered_json tfns = nlohmann::ordered_json::array();
  for (const TriangularFuzzyNumber& t : v.fuzzy_weights) {
    tfns.push_back(nlohmann::ordered_json::array({t.l, t.m, t.u}));
  }
  obj["fuzzy_weights"] = tfns;
  obj["defuzzified_weights"] = v.defuzzified_weights;

  nlohmann::ordered_json corrections = nlohmann::ordered_json::array();
  for (const Correction& c : v.corrections) {
    nlohmann::ordered_json entry;
    entry["i"] = c.i;
    entry["j"] = c.j;
    entry["old_value"] = c.old_value;
    entry["new_value"] = c.new_value;
    corrections.push_back(entry);
  }
  obj["corrections"] = corrections;
  obj["matrix"] = v.matrix_json.empty() ? nlohmann::ordered_json()
                                        : nlohmann::ordered_json::parse(v.matrix_json);
  return obj.dump();
}

EvaluationVerdict verdict_from_jsonl_line(const std::string& line, int line_no) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::parse(line, nullptr, false);
  if (obj.is_discarded() || !obj.is_object()) throw MalformedLine(line_no, "not a JSON object");
  try {
    if (obj.at("schema_version").get<int>() != 1) {
      throw MalformedLine(line_no, "unsupported schema_version");
    }
    EvaluationVerdict v;
    v.sample_id = obj.at("sample_id").get<std::string>();
    v.scale_max = obj.at("scale_max").get<int>();
    v.error = obj.at("error").get<std::string>();
    v.s_direct_a = obj.at("s_direct_a").get<double>();
    v.s_direct_b = obj.at("s_direct_b").get<double>();
    v.s_crisp_a = obj.at("s_crisp_a").get<double>();
    v.s_crisp_b = obj.at("s_crisp_b").get<double>();
    v.s_fuzzy_a = obj.at("s_fuzzy_a").get<double>();
    v.s_fuzzy_b = obj.at("s_fuzzy_b").get<double>();
    v.s_dual_crisp_a = obj.at("s_dual_crisp_a").get<double>();
    v.s_dual_crisp_b = obj.at("s_dual_crisp_b").get<double>();
    v.s_dual_fuzzy_a = obj.at("s_dual_fuzzy_a").get<double>();
    v.s_dual_fuzzy_b = obj.at("s_dual_fuzzy_b").get<double>();
    v.cr = obj.at("cr").get<double>();
    v.alpha = obj.at("alpha").get<double>();
    v.repair_status = repair_status_from_string(obj.at("repair_status").get<std::string>());
    v.regeneration_count = obj.at("regeneration_count").get<int>();
    v.ahp_fallback = obj.at("ahp_fallback").get<bool>();
    for (const auto& [method, choice] : obj.at("choices").items()) {
      v.choices[method] = choice_from_string(choice.get<std::string>());
    }
    v.crisp_weights = obj.at("crisp_weights").get<std::vector<double>>();
    for (const auto& t : obj.at("fuzzy_weights")) {
      v.fuzzy_weights.push_back({t.at(0).get<double>(), t.at(1).get<double>(), t.at(2).get<double>()});
    }
    v.defuzzified_weights = obj.at("defuzzified_weights").get<std::vector<double>>();
    for (const auto& c : obj.at("corrections")) {
      v.corrections.push_back({c.at("i").get<int>(), c.at("j").get<int>(),
                               c.at("old_value").get<double>(), c.at("new_value").get<double>()});
    }
    const auto& matrix = obj.at("matrix");
    v.matrix_json = matrix.is_null() ? std::string() : matrix.dump();
    return v;
  } catch (const nlohmann::json::exception& e) {
    throw MalformedLine(line_no, e.what());
  } catch (const std::invalid_argument& e) {
    throw MalformedLine(line_no, e.what());
  }
}

void write_verdicts(const std::string& path, const std::vector<EvaluationVerdict>& verdicts) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw NotFound("cannot open verdict file for writing: " + path);
  for (const EvaluationVerdict& v : verdicts) out << verdict_to_jsonl_line(v) << '\n';
}

std::vector<EvaluationVerdict> read_verdicts(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NotFound("verdict file: " + path);
  std::vector<EvaluationVerdict> verdicts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    verdicts.push_back(verdict_from_jsonl_line(line, line_no));
  }
  return verdicts;
}

}  // namespace mcjudge
