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

#ifndef MWPAUG_LLM_CLIENT_H_
#define MWPAUG_LLM_CLIENT_H_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace mwpaug::llm {

// Environment variable holding the bearer token for the endpoint.
inline constexpr char kApiKeyEnv[] = "MWPAUG_API_KEY";

struct LlmEndpointConfig {
  std::string base_url;  // e.g. "http://localhost:8000/v1"
  std::string model_name;
  double temperature = 0.7;
  int max_tokens = 256;
  std::chrono::milliseconds timeout{60000};
  int max_retries = 3;
  int max_concurrent_requests = 4;
  std::chrono::milliseconds initial_backoff{500};  // doubles per retry
  std::string api_key;
};

absl::Status ValidateConfig(const LlmEndpointConfig& config);

// Reads the API key from the environment when the config has none.
LlmEndpointConfig WithEnvironmentKey(LlmEndpointConfig config);

// Anything that turns a prompt into completion text. Implementations are
// safe to call from several threads at once.
class CompletionClient {
 public:
  virtual ~CompletionClient() = default;

  // The completion cut at the first `stop_marker` and trimmed.
  // Errors: "transport-failure", "endpoint-error", "timeout".
  virtual absl::StatusOr<std::string> Complete(std::string_view prompt,
                                               std::string_view stop_marker) = 0;
};

// Cuts `raw` at the first occurrence of `stop_marker` and trims whitespace.
std::string TruncateCompletion(std::string_view raw,
                               std::string_view stop_marker);

struct HttpResponse {
  int status = 0;
  std::string body;
};

// One POST of a JSON body. Transport-level failures are errors; any HTTP
// status is a response.
class HttpTransport {
 public:
  virtual ~HttpTransport() = default;
  virtual absl::StatusOr<HttpResponse> PostJson(const std::string& path,
                                                const std::string& body) = 0;
};

// cpp-httplib transport against base_url (http or https).
absl::StatusOr<std::unique_ptr<HttpTransport>> MakeHttpTransport(
    const LlmEndpointConfig& config);

// Counting limit on concurrent work.
class ConcurrencyLimiter {
 public:
  explicit ConcurrencyLimiter(int slots) : free_(slots) {}
  void Acquire();
  void Release();

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  int free_;
};

// OpenAI-compatible completions client: POST {path}/completions with model,
// prompt, temperature, max_tokens and stop; reads choices[0].text. Transport
// errors and 5xx are retried with exponential backoff, 4xx are not.
class EndpointClient : public CompletionClient {
 public:
  EndpointClient(LlmEndpointConfig config,
                 std::unique_ptr<HttpTransport> transport);

  // Validates the config and builds the httplib transport.
  static absl::StatusOr<std::unique_ptr<EndpointClient>> Create(
      const LlmEndpointConfig& config);

  absl::StatusOr<std::string> Complete(std::string_view prompt,
                                       std::string_view stop_marker) override;

  // Retries performed over the client's lifetime.
  int retries() const { return retries_.load(); }
  // Highest number of requests observed in flight at once.
  int peak_in_flight() const { return peak_in_flight_.load(); }

 private:
  absl::StatusOr<std::string> Attempt(const std::string& body,
                                      std::string_view stop_marker,
                                      bool& retryable);

  LlmEndpointConfig config_;
  std::unique_ptr<HttpTransport> transport_;
  std::string completions_path_;
  ConcurrencyLimiter limiter_;
  std::atomic<int> retries_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> peak_in_flight_{0};
};

}  // namespace mwpaug::llm

#endif  // MWPAUG_LLM_CLIENT_H_
