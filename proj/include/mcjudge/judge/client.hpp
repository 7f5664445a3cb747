#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>

#include "mcjudge/errors.hpp"
#include "mcjudge/judge/cache.hpp"

namespace mcjudge {

struct ModelRequest {
  std::string model;
  double temperature = 0.0;
  int max_tokens = 1024;
  std::string prompt;
};

// Transport to a judge model. complete() returns the reply text or throws
// TransportFailure; call_count() is the number of completions requested.
class ModelClient {
 public:
  virtual ~ModelClient() = default;
  virtual std::string complete(const ModelRequest& request) = 0;
  virtual std::uint64_t call_count() const = 0;
};

struct RetryPolicy {
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  double multiplier = 2.0;
};

// Chat-completions client over HTTP. The request body is
// {"model", "messages": [{"role": "user", "content": prompt}],
//  "temperature", "max_tokens"} and the reply text is read from
// choices[0].message.content.
//
// Retries connection failures, 429 and 5xx with exponential backoff up to
// RetryPolicy::attempts; other HTTP errors and unparseable bodies fail
// immediately. A shared minimum spacing between request starts caps the
// request rate across all threads using this client.
class HttpModelClient : public ModelClient {
 public:
  // endpoint: scheme://host[:port][/path]. Without a path the standard
  // /v1/chat/completions route is used. If MCJUDGE_API_KEY is set in the
  // environment its value is sent as a bearer token; there is deliberately
  // no way to pass the token as an argument.
  explicit HttpModelClient(std::string endpoint, RetryPolicy retry = {},
                           double requests_per_second = 8.0);

  std::string complete(const ModelRequest& request) override;
  std::uint64_t call_count() const override;

  static constexpr const char* kAuthTokenEnvVar = "MCJUDGE_API_KEY";

 private:
  void pace();

  std::string base_;
  std::string path_;
  RetryPolicy retry_;
  std::chrono::microseconds min_interval_{0};
  std::mutex pace_mu_;
  std::chrono::steady_clock::time_point next_allowed_{};
  std::atomic<std::uint64_t> calls_{0};
};

// Serves completions from a ResponseCache, forwarding only misses to the
// inner client and recording their replies write-once. attempt distinguishes
// physical calls at the same elicitation point (re-asks after a malformed
// reply, regeneration rounds), so a cached run replays byte-identically
// without touching the network.
class CachedClient {
 public:
  CachedClient(ModelClient& inner, ResponseCache& cache, std::string model, double temperature,
               int max_tokens);

  std::string complete(const std::string& prompt, int attempt);
  // Cache key of one call; used to label transcripts.
  std::string key_for(const std::string& prompt, int attempt) const;

  const std::string& model() const { return model_; }

 private:
  ModelClient& inner_;
  ResponseCache& cache_;
  std::string model_;
  double temperature_;
  int max_tokens_;
};

}  // namespace mcjudge
