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

#include <atomic>
#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "mwpaug/corpus/corpus_io.h"
#include "mwpaug/llm/client.h"
#include "mwpaug/llm/mock.h"
#include "mwpaug/llm/prompt.h"
#include "test_util.h"

namespace mwpaug::llm {
namespace {

using ::mwpaug::testing::SourcePath;

constexpr char kCakes[] =
    "A restaurant served 6 cakes during lunch and 9 during dinner today . "
    "How many cakes were served today ?";

size_t Count(const std::string& haystack, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(PromptTest, RendersBundledFixturesByteForByte) {
  for (const char* dataset : {"mawps", "svamp"}) {
    auto from_file = LoadPromptTemplate(
        SourcePath(std::string("fixtures/prompts/") + dataset +
                   "_template.json"));
    ASSERT_TRUE(from_file.ok()) << from_file.status();
    auto bundled = BundledTemplate(dataset);
    ASSERT_TRUE(bundled.ok()) << bundled.status();
    auto expected = corpus::ReadFile(
        SourcePath(std::string("fixtures/prompts/") + dataset + "_prompt.txt"));
    ASSERT_TRUE(expected.ok());
    EXPECT_EQ(RenderPrompt(*from_file, kCakes), *expected) << dataset;
    EXPECT_EQ(RenderPrompt(*bundled, kCakes), *expected) << dataset;
  }
}

TEST(PromptTest, Structure) {
  auto t = BundledTemplate("mawps");
  ASSERT_TRUE(t.ok());
  const std::string prompt = RenderPrompt(*t, kCakes);
  EXPECT_EQ(prompt.rfind(t->instruction + "\n\nText: ", 0), 0u);
  EXPECT_EQ(Count(prompt, "\nRephrased:"), kExemplarCount + 1);
  const std::string tail = std::string("Text: ") + kCakes + "\nRephrased:";
  EXPECT_EQ(prompt.substr(prompt.size() - tail.size()), tail);
  EXPECT_EQ(PromptTarget(prompt), kCakes);
  EXPECT_EQ(t->stop_marker, "\nText:");
}

TEST(PromptTest, EmptyTarget) {
  auto t = BundledTemplate("svamp");
  ASSERT_TRUE(t.ok());
  const std::string prompt = RenderPrompt(*t, "");
  EXPECT_EQ(prompt.substr(prompt.size() - 17), "Text: \nRephrased:");
}

TEST(PromptTest, Pure) {
  auto t = BundledTemplate("mawps");
  ASSERT_TRUE(t.ok());
  EXPECT_EQ(RenderPrompt(*t, "x?"), RenderPrompt(*t, "x?"));
}

TEST(PromptTest, TemplateValidation) {
  EXPECT_FALSE(BundledTemplate("gsm8k").ok());
  auto bad = ParsePromptTemplate(
      R"({"instruction":"Rephrase.","exemplars":[{"text":"a","rephrased":"b"}]})");
  ASSERT_FALSE(bad.ok());
  EXPECT_NE(bad.status().message().find("15"), std::string::npos);
  EXPECT_FALSE(ParsePromptTemplate("[]").ok());
}

TEST(TruncateTest, StopMarker) {
  EXPECT_EQ(TruncateCompletion("A? \nText: junk", "\nText:"), "A?");
  EXPECT_EQ(TruncateCompletion("  only text?  ", "\nText:"), "only text?");
  EXPECT_EQ(TruncateCompletion("\nText: all junk", "\nText:"), "");
}

TEST(MockLlmTest, PromptAndTargetKeys) {
  auto mock = MockLlm::Parse(
      "{\"prompt\": \"P\", \"completion\": \"Rephrased text?\"}\n"
      "\n"
      "{\"target\": \"T?\", \"completion\": \"Target hit? \\nText: more\"}\n");
  ASSERT_TRUE(mock.ok()) << mock.status();
  EXPECT_EQ(*mock->Complete("P", "\nText:"), "Rephrased text?");
  EXPECT_EQ(*mock->Complete("Do it.\n\nText: T?\nRephrased:", "\nText:"),
            "Target hit?");
  EXPECT_EQ(*mock->Complete("Text: unknown\nRephrased:", "\nText:"), "");
  EXPECT_FALSE(MockLlm::Parse("{\"prompt\": 1}\n").ok());
}

// Local completions endpoint with a scripted status sequence.
class FakeEndpoint {
 public:
  explicit FakeEndpoint(std::vector<int> statuses,
                        std::chrono::milliseconds delay = {})
      : statuses_(std::move(statuses)), delay_(delay) {
    server_.Post("/v1/completions", [this](const httplib::Request& req,
                                           httplib::Response& res) {
      const int call = calls_++;
      const int now = ++in_flight_;
      int peak = peak_.load();
      while (now > peak && !peak_.compare_exchange_weak(peak, now)) {
      }
      last_body_ = req.body;
      last_auth_ = req.get_header_value("Authorization");
      std::this_thread::sleep_for(delay_);
      --in_flight_;
      const int status =
          call < static_cast<int>(statuses_.size()) ? statuses_[call] : 200;
      res.status = status;
      if (status == 200) {
        res.set_content(
            R"({"choices":[{"text":" Rephrased here? \nText: junk"}]})",
            "application/json");
      } else {
        res.set_content("{\"error\":\"scripted\"}", "application/json");
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeEndpoint() {
    server_.stop();
    thread_.join();
  }

  LlmEndpointConfig Config() const {
    LlmEndpointConfig config;
    config.base_url = "http://127.0.0.1:" + std::to_string(port_) + "/v1/";
    config.model_name = "llama-7b";
    config.initial_backoff = std::chrono::milliseconds(1);
    config.timeout = std::chrono::milliseconds(5000);
    return config;
  }
  int calls() const { return calls_.load(); }
  int peak() const { return peak_.load(); }
  std::string last_body() const { return last_body_; }
  std::string last_auth() const { return last_auth_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::vector<int> statuses_;
  std::chrono::milliseconds delay_;
  std::atomic<int> calls_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> peak_{0};
  std::string last_body_;
  std::string last_auth_;
};

TEST(EndpointClientTest, RequestShapeAndTruncation) {
  FakeEndpoint endpoint({200});
  LlmEndpointConfig config = endpoint.Config();
  config.api_key = "secret";
  auto client = EndpointClient::Create(config);
  ASSERT_TRUE(client.ok()) << client.status();
  auto text = (*client)->Complete("Text: a?\nRephrased:", "\nText:");
  ASSERT_TRUE(text.ok()) << text.status();
  EXPECT_EQ(*text, "Rephrased here?");
  const auto body = nlohmann::json::parse(endpoint.last_body());
  EXPECT_EQ(body["model"], "llama-7b");
  EXPECT_EQ(body["prompt"], "Text: a?\nRephrased:");
  EXPECT_DOUBLE_EQ(body["temperature"].get<double>(), 0.7);
  EXPECT_EQ(body["max_tokens"], 256);
  EXPECT_EQ(body["stop"], nlohmann::json::array({"\nText:"}));
  EXPECT_EQ(endpoint.last_auth(), "Bearer secret");
}

TEST(EndpointClientTest, RetriesServerErrors) {
  FakeEndpoint endpoint({500, 500, 200});
  auto client = EndpointClient::Create(endpoint.Config());
  ASSERT_TRUE(client.ok());
  auto text = (*client)->Complete("p", "\nText:");
  ASSERT_TRUE(text.ok()) << text.status();
  EXPECT_EQ((*client)->retries(), 2);
  EXPECT_EQ(endpoint.calls(), 3);
}

TEST(EndpointClientTest, GivesUpAfterMaxRetries) {
  FakeEndpoint endpoint({503, 503, 503, 503, 503});
  LlmEndpointConfig config = endpoint.Config();
  config.max_retries = 2;
  auto client = EndpointClient::Create(config);
  ASSERT_TRUE(client.ok());
  auto text = (*client)->Complete("p", "\nText:");
  ASSERT_FALSE(text.ok());
  EXPECT_EQ(text.status().code(), absl::StatusCode::kUnavailable);
  EXPECT_EQ(std::string(text.status().message()).rfind("transport-failure", 0),
            0u);
  EXPECT_EQ(endpoint.calls(), 3);
}

TEST(EndpointClientTest, ClientErrorIsNotRetried) {
  FakeEndpoint endpoint({404});
  auto client = EndpointClient::Create(endpoint.Config());
  ASSERT_TRUE(client.ok());
  auto text = (*client)->Complete("p", "\nText:");
  ASSERT_FALSE(text.ok());
  EXPECT_EQ(std::string(text.status().message()).rfind("endpoint-error", 0),
            0u);
  EXPECT_EQ(endpoint.calls(), 1);
  EXPECT_EQ((*client)->retries(), 0);
}

TEST(EndpointClientTest, UnreachableIsTransportFailure) {
  LlmEndpointConfig config;
  config.base_url = "http://127.0.0.1:1/v1";
  config.model_name = "m";
  config.max_retries = 1;
  config.initial_backoff = std::chrono::milliseconds(1);
  config.timeout = std::chrono::milliseconds(2000);
  auto client = EndpointClient::Create(config);
  ASSERT_TRUE(client.ok());
  auto text = (*client)->Complete("p", "\nText:");
  ASSERT_FALSE(text.ok());
  EXPECT_EQ((*client)->retries(), 1);
}

TEST(EndpointClientTest, Timeout) {
  FakeEndpoint endpoint({200}, std::chrono::milliseconds(600));
  LlmEndpointConfig config = endpoint.Config();
  config.timeout = std::chrono::milliseconds(150);
  config.max_retries = 0;
  auto client = EndpointClient::Create(config);
  ASSERT_TRUE(client.ok());
  auto text = (*client)->Complete("p", "\nText:");
  ASSERT_FALSE(text.ok());
  EXPECT_EQ(text.status().code(), absl::StatusCode::kDeadlineExceeded);
}

TEST(EndpointClientTest, BoundsRequestsInFlight) {
  FakeEndpoint endpoint({}, std::chrono::milliseconds(40));
  LlmEndpointConfig config = endpoint.Config();
  config.max_concurrent_requests = 2;
  auto client = EndpointClient::Create(config);
  ASSERT_TRUE(client.ok());
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      if ((*client)->Complete("p", "\nText:").ok()) ++ok;
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok.load(), 8);
  EXPECT_LE(endpoint.peak(), 2);
  EXPECT_LE((*client)->peak_in_flight(), 2);
}

TEST(EndpointConfigTest, Validation) {
  LlmEndpointConfig config;
  config.base_url = "http://localhost:8000/v1";
  config.model_name = "m";
  EXPECT_TRUE(ValidateConfig(config).ok());
  config.temperature = -0.1;
  EXPECT_FALSE(ValidateConfig(config).ok());
  config.temperature = 0;
  config.max_tokens = 0;
  EXPECT_FALSE(ValidateConfig(config).ok());
  config.max_tokens = 1;
  config.max_concurrent_requests = 0;
  EXPECT_FALSE(ValidateConfig(config).ok());
  config.max_concurrent_requests = 1;
  config.base_url = "ftp://host";
  EXPECT_FALSE(EndpointClient::Create(config).ok());
}

}  // namespace
}  // namespace mwpaug::llm
