#include "mcjudge/judge/client.hpp"

#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace mcjudge {

HttpModelClient::HttpModelClient(std::string endpoint, RetryPolicy retry, double requests_per_second)
    : retry_(retry) {
  size_t scheme = endpoint.find("://");
  if (scheme == std::string::npos) {
    throw std::invalid_argument("endpoint must start with http:// or https://, got '" + endpoint + "'");
  }
  size_t slash = endpoint.find('/', scheme + 3);
  if (slash == std::string::npos) {
    base_ = endpoint;
    path_ = "/v1/chat/completions";
  } else {
    base_ = endpoint.substr(0, slash);
    path_ = endpoint.substr(slash);
    if (path_ == "/") path_ = "/v1/chat/completions";
  }
  if (requests_per_second > 0) {
    min_interval_ = std::chrono::microseconds(static_cast<long long>(1e6 / requests_per_second));
  }
}

void HttpModelClient::pace() {
  if (min_interval_.count() == 0) return;
  std::chrono::steady_clock::time_point slot;
  {
    std::lock_guard<std::mutex> lock(pace_mu_);
    auto now = std::chrono::steady_clock::now();
    slot = next_allowed_ > now ? next_allowed_ : now;
    next_allowed_ = slot + min_interval_;
  }
  std::this_thread::sleep_until(slot);
}

std::string HttpModelClient::complete(const ModelRequest& request) {
  calls_.fetch_add(1, std::memory_order_relaxed);

  nlohmann::ordered_json body;
  body["model"] = request.model;
  body["messages"] = nlohmann::json::array({{{"role", "user"}, {"content", request.prompt}}});
  body["temperature"] = request.temperature;
  body["max_tokens"] = request.max_tokens;
  std::string payload = body.dump();

  httplib::Headers headers;
  if (const char* token = std::getenv(kAuthTokenEnvVar); token && *token) {
    headers.emplace("Authorization", std::string("Bearer ") + token);
  }

  std::string last_error;
  auto backoff = retry_.initial_backoff;
  for (int attempt = 1; attempt <= retry_.attempts; ++attempt) {
    if (attempt > 1) {
      std::this_thread::sleep_for(backoff);
      backoff = std::chrono::milliseconds(
          static_cast<long long>(static_cast<double>(backoff.count()) * retry_.multiplier));
    }
    pace();

    httplib::Client http(base_);
    http.set_connection_timeout(10, 0);
    http.set_read_timeout(120, 0);
    http.set_write_timeout(30, 0);

    auto res = http.Post(path_, headers, payload, "application/json");
    if (!res) {
      last_error = "connection to " + base_ + " failed: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status) + " from " + base_ + path_;
      continue;
    }
    if (res->status != 200) {
      throw TransportFailure("HTTP " + std::to_string(res->status) + " from " + base_ + path_ +
                             ": " + res->body);
    }

    nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("choices") || !reply["choices"].is_array() ||
        reply["choices"].empty()) {
      throw TransportFailure("response body has no choices array");
    }
    const nlohmann::json& message = reply["choices"][0];
    if (!message.contains("message") || !message["message"].contains("content") ||
        !message["message"]["content"].is_string()) {
      throw TransportFailure("response choice has no message content");
    }
    return message["message"]["content"].get<std::string>();
  }
  throw TransportFailure("gave up after " + std::to_string(retry_.attempts) +
                         " attempts; last error: " + last_error);
}

std::uint64_t HttpModelClient::call_count() const { return calls_.load(std::memory_order_relaxed); }

CachedClient::CachedClient(ModelClient& inner, ResponseCache& cache, std::string model,
                           double temperature, int max_tokens)
    : inner_(inner), cache_(cache), model_(std::move(model)), temperature_(temperature),
      max_tokens_(max_tokens) {}

std::string CachedClient::key_for(const std::string& prompt, int attempt) const {
  return cache_key(model_, temperature_, prompt, attempt);
}

std::string CachedClient::complete(const std::string& prompt, int attempt) {
  std::string key = key_for(prompt, attempt);
  if (auto hit = cache_.get(key)) return *hit;
  ModelRequest request{model_, temperature_, max_tokens_, prompt};
  std::string reply = inner_.complete(request);
  cache_.put(key, reply);
  return reply;
}

}  // namespace mcjudge
