#pragma once

#include <stdexcept>
#include <string>

namespace mcjudge {

// Matrix construction faults. Indices refer to criterion positions.
struct MissingPair : std::runtime_error {
  int i, j;
  MissingPair(int i_, int j_)
      : std::runtime_error("missing pairwise comparison for pair (" +
                           std::to_string(i_) + ", " + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

struct DuplicatePair : std::runtime_error {
  int i, j;
  DuplicatePair(int i_, int j_)
      : std::runtime_error("duplicate pairwise comparison for pair (" +
                           std::to_string(i_) + ", " + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

struct IndexOutOfRange : std::out_of_range {
  int index, order;
  IndexOutOfRange(int index_, int order_)
      : std::out_of_range("criterion index " + std::to_string(index_) +
                          " outside matrix order " + std::to_string(order_)),
        index(index_), order(order_) {}
};

struct ConvergenceFailure : std::runtime_error {
  explicit ConvergenceFailure(const std::string& detail)
      : std::runtime_error("eigenvector iteration failed to converge: " + detail) {}
};

struct UnknownRandomIndex : std::out_of_range {
  int k;
  explicit UnknownRandomIndex(int k_)
      : std::out_of_range("no random-index constant for matrix order " +
                          std::to_string(k_)),
        k(k_) {}
};

struct MissingConfidence : std::runtime_error {
  int i, j;
  MissingConfidence(int i_, int j_)
      : std::runtime_error("no confidence available for pair (" +
                           std::to_string(i_) + ", " + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

// Judge harness faults.
struct ParseFailure : std::runtime_error {
  std::string prompt_hash;
  explicit ParseFailure(const std::string& prompt_hash_, const std::string& detail)
      : std::runtime_error("structured output parse failed for prompt " +
                           prompt_hash_ + ": " + detail),
        prompt_hash(prompt_hash_) {}
};

struct TransportFailure : std::runtime_error {
  explicit TransportFailure(const std::string& detail)
      : std::runtime_error("model transport failed: " + detail) {}
};

struct RegenerationExhausted : std::runtime_error {
  std::string sample_id;
  int rounds;
  double last_cr;  // CR of the final rejected matrix, kept for the fallback verdict
  explicit RegenerationExhausted(const std::string& sample_id_, int rounds_, double last_cr_ = 0.0)
      : std::runtime_error("comparison matrix for sample " + sample_id_ +
                           " still requires regeneration after " +
                           std::to_string(rounds_) + " re-elicitations"),
        sample_id(sample_id_), rounds(rounds_), last_cr(last_cr_) {}
};

// Dataset and reporting faults. Line numbers are 1-based.
struct MalformedLine : std::runtime_error {
  int line;
  MalformedLine(int line_, const std::string& detail)
      : std::runtime_error("line " + std::to_string(line_) + ": " + detail),
        line(line_) {}
};

struct UnknownCategory : std::runtime_error {
  int line;
  std::string category;
  UnknownCategory(int line_, const std::string& category_)
      : std::runtime_error("line " + std::to_string(line_) +
                           ": category not present in criteria config: " + category_),
        line(line_), category(category_) {}
};

struct MissingField : std::runtime_error {
  int line;
  std::string field;
  MissingField(int line_, const std::string& field_)
      : std::runtime_error("line " + std::to_string(line_) +
                           ": missing required field: " + field_),
        line(line_), field(field_) {}
};

struct MissingVerdict : std::runtime_error {
  std::string sample_id;
  explicit MissingVerdict(const std::string& sample_id_)
      : std::runtime_error("no verdict found for sample " + sample_id_),
        sample_id(sample_id_) {}
};

struct NotFound : std::runtime_error {
  explicit NotFound(const std::string& what_)
      : std::runtime_error("not found: " + what_) {}
};

}  // namespace mcjudge
