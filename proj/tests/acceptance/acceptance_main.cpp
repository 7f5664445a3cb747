// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Every check here goes through the public library surface; oracles come
// from tests/support (dense eigensolver, geometric means) so the two routes
// stay independent.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcjudge/ahp.hpp"
#include "mcjudge/data/dataset.hpp"
#include "mcjudge/data/report.hpp"
#include "mcjudge/fuzzy.hpp"
#include "mcjudge/judge/cache.hpp"
#include "mcjudge/judge/criteria.hpp"
#include "mcjudge/judge/pipeline.hpp"
#include "support/fixture12.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using namespace mcjudge;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

[[noreturn]] void fail(const std::string& detail) { throw std::runtime_error(detail); }

void require(bool ok, const std::string& detail) {
  if (!ok) fail(detail);
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Power iteration agrees with a dense eigensolver on random judgment
//    matrices.

std::string eigenvector_oracle() {
  std::mt19937_64 rng(101);
  auto start = Clock::now();
  for (int trial = 0; trial < 200; ++trial) {
    int k = 3 + static_cast<int>(rng() % 6);
    auto m = testsupport::random_saaty_matrix(rng, k);
    auto got = principal_eigenvector(m);
    auto want = testsupport::dense_principal(m);
    require(std::fabs(got.lambda_max - want.lambda_max) <= 1e-8,
            "trial " + std::to_string(trial) + ": lambda off by " +
                fmt("%.3e", std::fabs(got.lambda_max - want.lambda_max)));
    for (int i = 0; i < k; ++i)
      require(std::fabs(got.weights.weights[i] - want.weights[i]) <= 1e-6,
              "trial " + std::to_string(trial) + ": weight " + std::to_string(i) +
                  " off by " + fmt("%.3e", std::fabs(got.weights.weights[i] - want.weights[i])));
  }
  double secs = seconds_since(start);
  require(secs < 5.0, "took " + fmt("%.2f", secs) + " s");
  return "200 matrices, K 3..8, " + fmt("%.2f", secs) + " s";
}

// ---------------------------------------------------------------------------
// 2. Ratio matrices are recognized as exactly consistent and their weights
//    recovered; lambda_max is bounded below by K with equality only when the
//    matrix is transitive.

std::string consistency_exactness() {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 100; ++trial) {
    int k = 3 + static_cast<int>(rng() % 6);
    auto w = testsupport::random_weights(rng, k);
    auto m = testsupport::ratio_matrix_from_weights(w);
    auto eig = principal_eigenvector(m);
    auto report = consistency_report(m, eig.lambda_max, 0.15);
    require(report.cr <= 1e-10, "ratio matrix CR " + fmt("%.3e", report.cr));
    require(std::fabs(eig.lambda_max - k) <= 1e-8,
            "ratio matrix lambda " + fmt("%.12f", eig.lambda_max));
    double sum = 0.0;
    for (double v : w) sum += v;
    for (int i = 0; i < k; ++i)
      require(std::fabs(eig.weights.weights[i] - w[i] / sum) <= 1e-8,
              "weight recovery off at " + std::to_string(i));
  }
  for (int trial = 0; trial < 200; ++trial) {
    int k = 3 + static_cast<int>(rng() % 6);
    auto m = testsupport::random_saaty_matrix(rng, k);
    double lambda = principal_eigenvector(m).lambda_max;
    require(lambda >= k - 1e-9, "lambda below K: " + fmt("%.12f", lambda));
    double violation = 0.0;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        for (int t = 0; t < k; ++t)
          violation = std::max(
              violation, std::fabs(std::log(m.at(i, t) * m.at(t, j) / m.at(i, j))));
    if (violation > 1e-3)
      require(lambda > k + 1e-9, "intransitive matrix with lambda at K");
    if (violation <= 1e-9)
      require(std::fabs(lambda - k) <= 1e-8, "transitive matrix with lambda above K");
  }
  return "100 ratio + 200 random matrices";
}

// ---------------------------------------------------------------------------
// 3. Repair reduces CR on singly-perturbed consistent matrices without ever
//    leaving the reciprocal Saaty domain, is idempotent on successful
//    outputs, and degrades to RegenerateRequired on hopeless inputs.

void check_matrix_domain(const ComparisonMatrix& m, const std::string& label) {
  m.validate();
  for (int i = 0; i < m.order(); ++i) {
    for (int j = 0; j < m.order(); ++j) {
      double v = m.at(i, j);
      require(v >= kSaatyMin * (1.0 - 1e-9) && v <= kSaatyMax * (1.0 + 1e-9),
              label + ": entry out of range: " + fmt("%.12f", v));
      require(std::fabs(v * m.at(j, i) - 1.0) <= 1e-9,
              label + ": reciprocity broken at (" + std::to_string(i) + ", " +
                  std::to_string(j) + ")");
    }
  }
}

std::string repair_contract() {
  std::mt19937_64 rng(303);
  int reduced = 0;
  int repaired = 0;
  // K >= 4 keeps the perturbed pair's deviation strictly largest. At K = 3
  // the three deviations of a cycle are identical, which the adversarial
  // block below exploits.
  for (int produced = 0; produced < 100;) {
    int k = 4 + static_cast<int>(rng() % 5);
    auto base = testsupport::ratio_matrix_from_weights(testsupport::random_weights(rng, k));
    auto pert = testsupport::perturb_one_entry(rng, base, 4.0, 8.0);
    auto before = consistency_report(pert, principal_eigenvector(pert).lambda_max, 0.15);
    if (before.acceptable) continue;
    ++produced;
    auto out = repair_matrix(pert, 0.15, default_max_corrections(k));
    check_matrix_domain(out.matrix, "repair output");
    if (out.final_report.cr < before.cr) ++reduced;
    if (out.status == RepairStatus::Repaired) {
      ++repaired;
      require(out.final_report.acceptable, "Repaired output above threshold");
      auto again = repair_matrix(out.matrix, 0.15, default_max_corrections(k));
      require(again.status == RepairStatus::AlreadyConsistent,
              "second repair pass changed status to " + to_string(again.status));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          require(again.matrix.at(i, j) == out.matrix.at(i, j),
                  "second repair pass modified the matrix");
    }
  }
  require(reduced >= 95, "CR reduced in only " + std::to_string(reduced) + "/100");
  require(repaired >= 95, "full repair in only " + std::to_string(repaired) + "/100");

  // Pure 3-cycles: every deviation carries the same magnitude, and the stale
  // transitive estimates invert the cycle instead of closing it, so the
  // default budget can never reach the threshold.
  for (int f : {2, 3, 4, 5, 9}) {
    ComparisonMatrix cycle(3);
    cycle.set_pair(0, 1, f);
    cycle.set_pair(1, 2, f);
    cycle.set_pair(0, 2, 1.0 / f);
    auto out = repair_matrix(cycle, 0.15, default_max_corrections(3));
    require(out.status == RepairStatus::RegenerateRequired,
            "3-cycle f=" + std::to_string(f) + " ended " + to_string(out.status));
    check_matrix_domain(out.matrix, "3-cycle output");
  }
  // Saturated conflict with a single-correction budget.
  ComparisonMatrix conflict(4);
  conflict.set_pair(0, 1, 9.0);
  conflict.set_pair(1, 2, 9.0);
  conflict.set_pair(2, 3, 9.0);
  conflict.set_pair(0, 2, 1.0 / 9.0);
  conflict.set_pair(1, 3, 1.0 / 9.0);
  conflict.set_pair(0, 3, 9.0);
  auto out = repair_matrix(conflict, 0.15, 1);
  require(out.status == RepairStatus::RegenerateRequired,
          "saturated conflict ended " + to_string(out.status));
  require(!out.diagnostics.empty(), "RegenerateRequired without diagnostics");
  return std::to_string(reduced) + "/100 reduced, " + std::to_string(repaired) +
         "/100 repaired, adversarial regenerate";
}

// ---------------------------------------------------------------------------
// 4. Full confidence collapses the fuzzy pipeline onto crisp geometric-mean
//    weights, and contraction scales interval width exactly.

ComparisonMatrix saaty_rounded(const ComparisonMatrix& m) {
  // Mirror of the fuzzy branch's crisp re-reading: the >= 1 direction of each
  // pair is rounded to the nearest Saaty integer.
  ComparisonMatrix r(m.order());
  for (int i = 0; i < m.order(); ++i) {
    for (int j = i + 1; j < m.order(); ++j) {
      if (m.at(i, j) >= 1.0)
        r.set_pair(i, j, static_cast<double>(std::lround(std::clamp(m.at(i, j), 1.0, 9.0))));
      else
        r.set_pair(j, i, static_cast<double>(std::lround(std::clamp(m.at(j, i), 1.0, 9.0))));
    }
  }
  return r;
}

WeightVector full_confidence_weights(const ComparisonMatrix& m) {
  std::vector<PairwiseComparison> comps;
  for (int i = 0; i < m.order(); ++i) {
    for (int j = i + 1; j < m.order(); ++j) {
      double v = std::max(m.at(i, j), m.at(j, i));
      int s = static_cast<int>(std::lround(std::clamp(v, 1.0, 9.0)));
      if (m.at(i, j) >= 1.0)
        comps.push_back({i, j, SaatyScore{s}, 1.0});
      else
        comps.push_back({j, i, SaatyScore{s}, 1.0});
    }
  }
  return defuzzify_weights(fuzzy_weights(build_fuzzy_matrix(m, comps)));
}

std::string fuzzy_collapse() {
  std::mt19937_64 rng(404);
  int exact_inputs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ComparisonMatrix matrix(2);
    if (trial < 10) {
      // Transitive chains with integer entries: rounding is the identity, so
      // the collapse is checked against the repaired matrix itself.
      int k = 3 + static_cast<int>(rng() % 4);
      std::vector<double> p(static_cast<size_t>(k), 1.0);
      for (int i = k - 2; i >= 0; --i) {
        double c = static_cast<double>(1 + rng() % 3);
        p[static_cast<size_t>(i)] = p[static_cast<size_t>(i) + 1] * c;
        if (p[static_cast<size_t>(i)] > 9.0) p[static_cast<size_t>(i)] = p[static_cast<size_t>(i) + 1];
      }
      ComparisonMatrix chain(k);
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) chain.set_pair(i, j, p[static_cast<size_t>(i)] / p[static_cast<size_t>(j)]);
      matrix = chain;
    } else {
      int k = 3 + static_cast<int>(rng() % 6);
      matrix = testsupport::random_saaty_matrix(rng, k);
    }
    auto accepted = repair_matrix(matrix, 0.15, default_max_corrections(matrix.order())).matrix;
    auto got = full_confidence_weights(accepted);
    auto rounded = saaty_rounded(accepted);
    auto expected = testsupport::geometric_mean_weights(rounded);
    for (int i = 0; i < accepted.order(); ++i)
      require(std::fabs(got.weights[static_cast<size_t>(i)] - expected[static_cast<size_t>(i)]) <= 1e-9,
              "trial " + std::to_string(trial) + ": collapse off by " +
                  fmt("%.3e", std::fabs(got.weights[static_cast<size_t>(i)] - expected[static_cast<size_t>(i)])));
    bool integral = true;
    for (int i = 0; i < accepted.order() && integral; ++i)
      for (int j = 0; j < accepted.order() && integral; ++j)
        if (accepted.at(i, j) >= 1.0 && std::fabs(accepted.at(i, j) - std::round(accepted.at(i, j))) > 1e-12)
          integral = false;
    if (integral) {
      ++exact_inputs;
      auto direct = testsupport::geometric_mean_weights(accepted);
      for (int i = 0; i < accepted.order(); ++i)
        require(std::fabs(got.weights[static_cast<size_t>(i)] - direct[static_cast<size_t>(i)]) <= 1e-9,
                "integral matrix collapse off against its own geometric means");
    }
  }
  require(exact_inputs >= 10, "only " + std::to_string(exact_inputs) + " integer-entry inputs");

  for (double gamma : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    for (int s = 1; s <= 9; ++s) {
      auto base = tfn_from_score(SaatyScore{s}, 0.0);
      auto t = tfn_from_score(SaatyScore{s}, gamma);
      double base_width = static_cast<double>(std::min(9, s + 1) - std::max(1, s - 1));
      require(base.u - base.l == base_width, "base width wrong at s=" + std::to_string(s));
      require(t.u - t.l == (1.0 - gamma) * base_width,
              "width not exactly (1-gamma)*base at s=" + std::to_string(s) +
                  ", gamma=" + fmt("%.2f", gamma));
      require(t.m == static_cast<double>(s), "mode moved under contraction");
    }
  }
  return "100 collapse matrices (" + std::to_string(exact_inputs) +
         " integer), 45-point width grid";
}

// ---------------------------------------------------------------------------
// 5. Fusion matches the closed form, stays inside the convex hull of its two
//    scores, and leans toward the direct score as CR grows.

std::string fusion_formula() {
  const double pairs[3][2] = {{1.0, 0.0}, {0.3, 0.9}, {0.75, 0.75}};
  for (double cr : {0.0, 0.05, 0.1, 0.15}) {
    for (double beta : {0.0, 7.0}) {
      double alpha = std::exp(-beta * cr);
      for (const auto& p : pairs) {
        double want = alpha * p[0] + (1.0 - alpha) * p[1];
        double got = fuse_dualjudge(p[0], p[1], cr, beta);
        require(std::fabs(got - want) <= 1e-12,
                "grid mismatch at cr=" + fmt("%.2f", cr) + ", beta=" + fmt("%.0f", beta));
      }
    }
  }
  double spot = fuse_dualjudge(1.0, 0.0, 0.1, 7.0);
  require(std::fabs(spot - 0.4965853) <= 5e-8, "alpha spot value " + fmt("%.9f", spot));

  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    double sa = unit(rng), sb = unit(rng);
    double cr1 = unit(rng), cr2 = cr1 + unit(rng);
    double f1 = fuse_dualjudge(sa, sb, cr1, 7.0);
    double f2 = fuse_dualjudge(sa, sb, cr2, 7.0);
    double lo = std::min(sa, sb), hi = std::max(sa, sb);
    require(f1 >= lo - 1e-15 && f1 <= hi + 1e-15, "fused score left the convex hull");
    if (sa >= sb)
      require(f2 <= f1 + 1e-15, "higher CR moved the score toward the AHP branch");
    else
      require(f2 >= f1 - 1e-15, "higher CR moved the score toward the AHP branch");
  }
  return "8-point grid, spot alpha, 10000 random triples";
}

// ---------------------------------------------------------------------------
// 6. A direct-score tie never blocks a decision: both fused variants side
//    with their structured branch.

std::string tie_resolution() {
  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double direct = unit(rng);
    require(decide(direct, direct) == Choice::Tie, "equal direct scores did not tie");
    double cr = 1.5 * unit(rng);
    for (int branch = 0; branch < 2; ++branch) {
      double gap = 1e-3 + 0.5 * unit(rng);
      double base = (1.0 - gap) * unit(rng);
      bool a_wins = rng() % 2 == 0;
      double sa = a_wins ? base + gap : base;
      double sb = a_wins ? base : base + gap;
      double fused_a = fuse_dualjudge(sa, direct, cr, 7.0);
      double fused_b = fuse_dualjudge(sb, direct, cr, 7.0);
      Choice got = decide(fused_a, fused_b);
      require(got == (a_wins ? Choice::A : Choice::B),
              "trial " + std::to_string(trial) + ": fused choice " + to_string(got) +
                  " against AHP winner " + (a_wins ? "A" : "B"));
    }
  }
  return "1000 synthesized tie verdicts, both variants";
}

// ---------------------------------------------------------------------------
// 7. Scripted end-to-end runs are deterministic and replay from cache with
//    zero model traffic.

std::string deterministic_end_to_end() {
  auto start = Clock::now();
  testsupport::TempDir dir("acceptance_e2e");
  testsupport::Fixture12 fixture;
  std::ostringstream note;
  for (int scale : {10, 5}) {
    PipelineConfig config;
    config.scale = scale_from_int(scale);
    config.tau = 0.15;
    config.beta = 7.0;
    config.max_regenerations = 2;
    config.model = "mock-model";
    config.parallelism = 4;
    ResponseCache cache(dir.file("cache_" + std::to_string(scale)));

    std::string paths[2][2];
    std::uint64_t calls[2] = {0, 0};
    for (int run = 0; run < 2; ++run) {
      testsupport::ScriptedModelClient client;
      if (run == 0) fixture.script(client, scale);
      auto result = run_evaluation(fixture.samples(), fixture.criteria(), config, client, cache);
      require(result.unjudgeable == 0, "unjudgeable samples in scripted run");
      require(result.fallbacks == 0, "fallback verdicts in scripted run");
      bool regenerated = false;
      for (const auto& v : result.verdicts) regenerated |= v.regeneration_count > 0;
      require(regenerated, "no regeneration path exercised");
      std::string tag = std::to_string(scale) + "_" + std::to_string(run);
      paths[run][0] = dir.file("verdicts_" + tag + ".jsonl");
      paths[run][1] = dir.file("report_" + tag + ".md");
      write_verdicts(paths[run][0], result.verdicts);
      testsupport::write_file(
          paths[run][1],
          render_report(compute_accuracy(result.verdicts, fixture.samples()),
                        ReportFormat::Markdown));
      calls[run] = client.call_count();
    }
    require(calls[0] > 0, "first run made no model calls");
    require(calls[1] == 0,
            "second run hit the model " + std::to_string(calls[1]) + " times");
    require(testsupport::read_file(paths[0][0]) == testsupport::read_file(paths[1][0]),
            "verdict files differ between runs");
    require(testsupport::read_file(paths[0][1]) == testsupport::read_file(paths[1][1]),
            "report files differ between runs");
    note << "scale " << scale << ": " << calls[0] << " calls then replay; ";
  }
  double secs = seconds_since(start);
  require(secs < 10.0, "took " + fmt("%.2f", secs) + " s");
  return note.str() + fmt("%.2f", secs) + " s";
}

// ---------------------------------------------------------------------------
// 8. Accuracy arithmetic is exact on a hand-counted fixture; JudgeBench
//    split totals are validated when the real dataset is available.

struct GroupSpec {
  const char* source;
  const char* category;
  Split split;
  const char* prefix;
  int n;
  std::array<long long, kMethodCount> correct;
};

const AccuracyRow& find_row(const std::vector<AccuracyRow>& rows, const std::string& category,
                            const std::string& split) {
  for (const auto& row : rows)
    if (row.category == category && row.split == split) return row;
  fail("missing row " + category + "/" + split);
}

void check_row(const AccuracyRow& row, long long n, const std::array<long long, kMethodCount>& correct,
               const std::array<const char*, kMethodCount>& percents) {
  require(row.n == n, row.category + "/" + row.split + ": n " + std::to_string(row.n));
  for (int m = 0; m < kMethodCount; ++m) {
    require(row.correct[static_cast<size_t>(m)] == correct[static_cast<size_t>(m)],
            row.category + "/" + row.split + ": correct[" + std::to_string(m) + "] = " +
                std::to_string(row.correct[static_cast<size_t>(m)]));
    std::string got = percent_string(row.correct[static_cast<size_t>(m)], row.n);
    require(got == percents[static_cast<size_t>(m)],
            row.category + "/" + row.split + ": " + got + " != " + percents[static_cast<size_t>(m)]);
  }
}

std::string report_arithmetic() {
  // Within a group, the first correct[m] samples agree with the label under
  // method m; the rest tie or pick the loser. One sample carries an error
  // diagnostic and must count against every method.
  const GroupSpec groups[4] = {
      {"livebench-math", "livebench-math", Split::GPT, "lbm-g", 8, {5, 7, 7, 7, 7}},
      {"livebench-math", "livebench-math", Split::Claude, "lbm-c", 4, {3, 3, 3, 3, 3}},
      {"mmlu-pro", "mmlu-pro-law", Split::GPT, "law-g", 4, {2, 4, 3, 4, 3}},
      {"mmlu-pro", "mmlu-pro-law", Split::Claude, "law-c", 4, {2, 3, 3, 3, 3}},
  };
  std::vector<EvaluationSample> samples;
  std::vector<EvaluationVerdict> verdicts;
  for (const auto& group : groups) {
    for (int k = 0; k < group.n; ++k) {
      EvaluationSample sample;
      sample.sample_id = std::string(group.prefix) + "-" + std::to_string(k);
      sample.source = group.source;
      sample.category = group.category;
      sample.split = group.split;
      sample.question = "q";
      sample.response_a = "a";
      sample.response_b = "b";
      sample.label = 'A';
      samples.push_back(sample);

      EvaluationVerdict verdict;
      verdict.sample_id = sample.sample_id;
      if (std::string(group.prefix) == "lbm-g" && k == group.n - 1) {
        verdict.error = "transport failure: simulated outage";
      } else {
        for (int m = 0; m < kMethodCount; ++m)
          verdict.choices[kMethodKeys[static_cast<size_t>(m)]] =
              k < group.correct[static_cast<size_t>(m)]
                  ? Choice::A
                  : ((k + m) % 2 == 0 ? Choice::Tie : Choice::B);
      }
      verdicts.push_back(verdict);
    }
  }

  auto report = compute_accuracy(verdicts, samples);
  require(report.rows.size() == 4, std::to_string(report.rows.size()) + " rows");
  require(report.overall.size() == 3, std::to_string(report.overall.size()) + " overall rows");
  check_row(find_row(report.rows, "livebench-math", "GPT"), 8, {5, 7, 7, 7, 7},
            {"62.50", "87.50", "87.50", "87.50", "87.50"});
  check_row(find_row(report.rows, "livebench-math", "Claude"), 4, {3, 3, 3, 3, 3},
            {"75.00", "75.00", "75.00", "75.00", "75.00"});
  check_row(find_row(report.rows, "mmlu-pro-law", "GPT"), 4, {2, 4, 3, 4, 3},
            {"50.00", "100.00", "75.00", "100.00", "75.00"});
  check_row(find_row(report.rows, "mmlu-pro-law", "Claude"), 4, {2, 3, 3, 3, 3},
            {"50.00", "75.00", "75.00", "75.00", "75.00"});
  check_row(find_row(report.overall, "overall", "GPT"), 12, {7, 11, 10, 11, 10},
            {"58.33", "91.67", "83.33", "91.67", "83.33"});
  check_row(find_row(report.overall, "overall", "Claude"), 8, {5, 6, 6, 6, 6},
            {"62.50", "75.00", "75.00", "75.00", "75.00"});
  check_row(find_row(report.overall, "overall", "Merged"), 20, {12, 17, 16, 17, 16},
            {"60.00", "85.00", "80.00", "85.00", "80.00"});
  // Merged pools samples, so its counts are the split sums.
  for (int m = 0; m < kMethodCount; ++m) {
    auto idx = static_cast<size_t>(m);
    require(find_row(report.overall, "overall", "Merged").correct[idx] ==
                find_row(report.overall, "overall", "GPT").correct[idx] +
                    find_row(report.overall, "overall", "Claude").correct[idx],
            "merged counts are not the split sums");
  }

  const char* bench = std::getenv("MCJUDGE_JUDGEBENCH_PATH");
  if (bench == nullptr)
    return "20-verdict fixture exact; JudgeBench totals skipped "
           "(MCJUDGE_JUDGEBENCH_PATH not set)";
  auto config = CriteriaConfig::load(testsupport::fixture_path("../../configs/criteria.json"));
  auto bench_samples = load_dataset(bench, config.categories());
  long long gpt = 0, claude = 0;
  for (const auto& s : bench_samples) (s.split == Split::GPT ? gpt : claude) += 1;
  require(gpt == 350, "GPT split total " + std::to_string(gpt));
  require(claude == 270, "Claude split total " + std::to_string(claude));
  return "20-verdict fixture exact; JudgeBench totals validated (350/270)";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::string (*run)();
  };
  const Criterion criteria[] = {
      {"eigenvector-oracle-equivalence", eigenvector_oracle},
      {"consistency-exactness", consistency_exactness},
      {"repair-contract", repair_contract},
      {"fuzzy-collapse", fuzzy_collapse},
      {"fusion-formula", fusion_formula},
      {"tie-resolution", tie_resolution},
      {"deterministic-end-to-end", deterministic_end_to_end},
      {"report-arithmetic", report_arithmetic},
  };
  int failures = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    try {
      std::string note = criterion.run();
      std::printf("PASS %d %s (%s)\n", index, criterion.name, note.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL %d %s: %s\n", index, criterion.name, e.what());
    }
  }
  return failures == 0 ? 0 : 1;
}
