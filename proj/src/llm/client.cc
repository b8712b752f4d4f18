//
// Copyright 2026 The mwpaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "mwpaug/llm/client.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <thread>
#include <utility>

#include "httplib.h"
#include "json.hpp"

namespace mwpaug::llm {

absl::Status ValidateConfig(const LlmEndpointConfig& config) {
  if (config.base_url.empty()) {
    return absl::InvalidArgumentError("llm: base_url is empty");
  }
  if (config.model_name.empty()) {
    return absl::InvalidArgumentError("llm: model name is empty");
  }
  if (!(config.temperature >= 0)) {
    return absl::InvalidArgumentError("llm: temperature must be >= 0");
  }
  if (config.max_tokens < 1) {
    return absl::InvalidArgumentError("llm: max_tokens must be >= 1");
  }
  if (config.max_concurrent_requests < 1) {
    return absl::InvalidArgumentError(
        "llm: max_concurrent_requests must be >= 1");
  }
  if (config.max_retries < 0) {
    return absl::InvalidArgumentError("llm: max_retries must be >= 0");
  }
  if (config.timeout.count() <= 0) {
    return absl::InvalidArgumentError("llm: timeout must be positive");
  }
  return absl::OkStatus();
}

LlmEndpointConfig WithEnvironmentKey(LlmEndpointConfig config) {
  if (config.api_key.empty()) {
    if (const char* key = std::getenv(kApiKeyEnv)) config.api_key = key;
  }
  return config;
}

std::string TruncateCompletion(std::string_view raw,
                               std::string_view stop_marker) {
  if (!stop_marker.empty()) raw = raw.substr(0, raw.find(stop_marker));
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  while (!raw.empty() && space(raw.front())) raw.remove_prefix(1);
  while (!raw.empty() && space(raw.back())) raw.remove_suffix(1);
  return std::string(raw);
}

void ConcurrencyLimiter::Acquire() {
  std::unique_lock lock(mu_);
  cv_.wait(lock, [this] { return free_ > 0; });
  --free_;
}

void ConcurrencyLimiter::Release() {
  {
    std::lock_guard lock(mu_);
    ++free_;
  }
  cv_.notify_one();
}

namespace {

struct ParsedUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // without trailing '/'
};

absl::StatusOr<ParsedUrl> SplitUrl(const std::string& url) {
  const size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    return absl::InvalidArgumentError("llm: base_url needs a scheme: " + url);
  }
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    return absl::InvalidArgumentError("llm: unsupported scheme: " + scheme);
  }
  const size_t path_start = url.find('/', scheme_end + 3);
  ParsedUrl out;
  out.origin = url.substr(0, path_start);
  if (path_start != std::string::npos) out.path = url.substr(path_start);
  while (!out.path.empty() && out.path.back() == '/') out.path.pop_back();
  return out;
}

class HttplibTransport : public HttpTransport {
 public:
  HttplibTransport(std::string origin, std::string api_key,
                   std::chrono::milliseconds timeout)
      : origin_(std::move(origin)),
        api_key_(std::move(api_key)),
        timeout_(timeout) {}

  absl::StatusOr<HttpResponse> PostJson(const std::string& path,
                                        const std::string& body) override {
    // httplib clients are not safe to share across threads; one per call.
    httplib::Client client(origin_);
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(timeout_);
    const auto micros =
        std::chrono::duration_cast<std::chrono::microseconds>(timeout_ - seconds);
    client.set_connection_timeout(seconds.count(), micros.count());
    client.set_read_timeout(seconds.count(), micros.count());
    client.set_write_timeout(seconds.count(), micros.count());
    httplib::Headers headers;
    if (!api_key_.empty()) {
      headers.emplace("Authorization", "Bearer " + api_key_);
    }
    const auto start = std::chrono::steady_clock::now();
    auto result = client.Post(path, headers, body, "application/json");
    if (!result) {
      const auto error = result.error();
      if (error == httplib::Error::ConnectionTimeout ||
          std::chrono::steady_clock::now() - start >= timeout_) {
        return absl::DeadlineExceededError("timeout: " +
                                           httplib::to_string(error));
      }
      return absl::UnavailableError("transport-failure: " +
                                    httplib::to_string(error));
    }
    return HttpResponse{result->status, result->body};
  }

 private:
  std::string origin_;
  std::string api_key_;
  std::chrono::milliseconds timeout_;
};

}  // namespace

absl::StatusOr<std::unique_ptr<HttpTransport>> MakeHttpTransport(
    const LlmEndpointConfig& config) {
  auto url = SplitUrl(config.base_url);
  if (!url.ok()) return url.status();
  return std::make_unique<HttplibTransport>(url->origin, config.api_key,
                                            config.timeout);
}

EndpointClient::EndpointClient(LlmEndpointConfig config,
                               std::unique_ptr<HttpTransport> transport)
    : config_(std::move(config)),
      transport_(std::move(transport)),
      limiter_(std::max(1, config_.max_concurrent_requests)) {
  auto url = SplitUrl(config_.base_url);
  completions_path_ = (url.ok() ? url->path : std::string()) + "/completions";
}

absl::StatusOr<std::unique_ptr<EndpointClient>> EndpointClient::Create(
    const LlmEndpointConfig& config) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  auto transport = MakeHttpTransport(config);
  if (!transport.ok()) return transport.status();
  return std::make_unique<EndpointClient>(config, std::move(*transport));
}

absl::StatusOr<std::string> EndpointClient::Attempt(
    const std::string& body, std::string_view stop_marker, bool& retryable) {
  retryable = true;
  limiter_.Acquire();
  const int now = ++in_flight_;
  int peak = peak_in_flight_.load();
  while (now > peak && !peak_in_flight_.compare_exchange_weak(peak, now)) {
  }
  auto response = transport_->PostJson(completions_path_, body);
  --in_flight_;
  limiter_.Release();

  if (!response.ok()) return response.status();
  if (response->status >= 500) {
    return absl::UnavailableError("transport-failure: HTTP " +
                                  std::to_string(response->status));
  }
  if (response->status >= 400 || response->status < 200) {
    retryable = false;
    return absl::FailedPreconditionError(
        "endpoint-error: HTTP " + std::to_string(response->status) + ": " +
        response->body.substr(0, 200));
  }
  retryable = false;
  try {
    const auto doc = nlohmann::json::parse(response->body);
    const std::string text =
        doc.at("choices").at(0).at("text").get<std::string>();
    return TruncateCompletion(text, stop_marker);
  } catch (const nlohmann::json::exception& e) {
    return absl::FailedPreconditionError(
        std::string("endpoint-error: unexpected response body: ") + e.what());
  }
}

absl::StatusOr<std::string> EndpointClient::Complete(
    std::string_view prompt, std::string_view stop_marker) {
  nlohmann::ordered_json request = {
      {"model", config_.model_name},
      {"prompt", std::string(prompt)},
      {"temperature", config_.temperature},
      {"max_tokens", config_.max_tokens},
  };
  if (!stop_marker.empty()) {
    request["stop"] = nlohmann::json::array({std::string(stop_marker)});
  }
  const std::string body = request.dump();

  auto backoff = config_.initial_backoff;
  for (int attempt = 0;; ++attempt) {
    bool retryable = false;
    auto result = Attempt(body, stop_marker, retryable);
    if (result.ok() || !retryable || attempt >= config_.max_retries) {
      if (!result.ok() && retryable && attempt > 0) {
        return absl::Status(result.status().code(),
                            std::string(result.status().message()) +
                                " (after " + std::to_string(attempt) +
                                " retries)");
      }
      return result;
    }
    ++retries_;
    std::this_thread::sleep_for(backoff);
    backoff *= 2;
  }
}

}  // namespace mwpaug::llm
