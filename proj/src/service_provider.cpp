// Copyright 2026 The seekfc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <mutex>

#include <httplib.h>
#include <json.hpp>

#include "seekfc/embedding.hpp"
#include "seekfc/error.hpp"

namespace seekfc {
namespace {

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint parse_endpoint(const std::string& url) {
  const auto scheme = url.find("://");
  if (scheme == std::string::npos || url.compare(0, scheme, "http") != 0) {
    throw ConfigError("embedding service: expected an http:// URL, got \"" + url + "\"");
  }
  const auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

class ServiceProvider final : public EmbeddingProvider {
 public:
  ServiceProvider(const std::string& url, int timeout_ms, std::size_t expected_dim)
      : url_(url), endpoint_(parse_endpoint(url)), client_(endpoint_.origin), dim_(expected_dim) {
    if (timeout_ms <= 0) throw ConfigError("embedding service: timeout must be positive");
    const auto timeout = std::chrono::milliseconds(timeout_ms);
    client_.set_connection_timeout(timeout);
    client_.set_read_timeout(timeout);
    client_.set_write_timeout(timeout);
  }

  std::string name() const override { return "service(" + url_ + ")"; }

  std::size_t dim() const override {
    std::lock_guard lock(mu_);
    return dim_;
  }

  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const override {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (std::size_t begin = 0; begin < texts.size(); begin += kServiceBatchSize) {
      const auto count = std::min(kServiceBatchSize, texts.size() - begin);
      auto batch = request(texts.subspan(begin, count));
      for (auto& v : batch) out.push_back(std::move(v));
    }
    return out;
  }

 private:
  std::vector<EmbeddingVector> request(std::span<const std::string> texts) const {
    nlohmann::json body;
    body["texts"] = nlohmann::json::array();
    for (const auto& t : texts) {
      if (t.empty()) throw ProviderError(name() + ": cannot embed empty text");
      body["texts"].push_back(t);
    }

    std::lock_guard lock(mu_);
    auto res = client_.Post(endpoint_.path, body.dump(), "application/json");
    if (!res) {
      throw ProviderError(name() + ": request failed (" + httplib::to_string(res.error()) + ")");
    }
    if (res->status != 200) {
      throw ProviderError(name() + ": HTTP status " + std::to_string(res->status));
    }

    nlohmann::json reply;
    try {
      reply = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::parse_error&) {
      throw ProviderError(name() + ": response is not JSON");
    }
    if (!reply.is_object() || !reply.contains("vectors") || !reply["vectors"].is_array()) {
      throw ProviderError(name() + ": response lacks a \"vectors\" array");
    }
    const auto& vectors = reply["vectors"];
    if (vectors.size() != texts.size()) {
      throw ProviderError(name() + ": got " + std::to_string(vectors.size()) + " vectors for " +
                          std::to_string(texts.size()) + " texts");
    }

    std::vector<EmbeddingVector> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) {
      if (!v.is_array()) throw ProviderError(name() + ": vector is not an array");
      std::vector<double> values;
      values.reserve(v.size());
      for (const auto& x : v) {
        if (!x.is_number()) throw ProviderError(name() + ": vector entry is not a number");
        values.push_back(x.get<double>());
      }
      if (dim_ == 0) dim_ = values.size();
      if (values.size() != dim_) {
        throw ProviderError(name() + ": vector length " + std::to_string(values.size()) +
                            " does not match dim " + std::to_string(dim_));
      }
      EmbeddingVector vec(std::move(values));
      if (!vec.all_finite() || vec.norm() == 0.0) {
        throw ProviderError(name() + ": vector must be finite and non-zero");
      }
      out.push_back(vec.normalized());
    }
    return out;
  }

  std::string url_;
  Endpoint endpoint_;
  mutable std::mutex mu_;
  mutable httplib::Client client_;
  mutable std::size_t dim_;
};

}  // namespace

std::unique_ptr<EmbeddingProvider> make_service_provider(const std::string& endpoint,
                                                         int timeout_ms,
                                                         std::size_t expected_dim) {
  return std::make_unique<ServiceProvider>(endpoint, timeout_ms, expected_dim);
}

}  // namespace seekfc
