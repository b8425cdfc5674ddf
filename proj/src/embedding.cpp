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

#include "seekfc/embedding.hpp"

#include <algorithm>
#include <cmath>

#include <spdlog/spdlog.h>

#include "seekfc/error.hpp"

namespace seekfc {

double EmbeddingVector::norm() const {
  double sum = 0.0;
  for (double v : values_) sum += v * v;
  return std::sqrt(sum);
}

bool EmbeddingVector::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

EmbeddingVector EmbeddingVector::normalized() const {
  const double n = norm();
  if (n == 0.0) return *this;
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [n](double v) { return v / n; });
  return EmbeddingVector(std::move(out));
}

std::vector<EmbeddingVector> embed_all(const EmbeddingProvider& provider,
                                       const std::vector<std::string>& texts) {
  for (const auto& t : texts) {
    if (t.empty()) throw ProviderError(provider.name() + ": cannot embed empty text");
  }
  auto vectors = provider.embed_batch(texts);
  if (vectors.size() != texts.size()) {
    throw ProviderError(provider.name() + ": returned " + std::to_string(vectors.size()) +
                        " vectors for " + std::to_string(texts.size()) + " texts");
  }
  return vectors;
}

EmbeddingVector embed(const EmbeddingProvider& provider, std::string_view text) {
  return embed_all(provider, {std::string(text)}).front();
}

EmbeddingVector embed_claim(const EmbeddingProvider& provider, std::string_view claim_text) {
  if (claim_text.empty()) throw ProviderError(provider.name() + ": cannot embed empty claim");
  std::string query(kClaimInstructionPrefix);
  query += claim_text;
  return embed(provider, query);
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim()) {
    throw Error("cosine: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                std::to_string(b.dim()) + ")");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) {
    spdlog::warn("cosine with a zero-norm vector; treating similarity as 0");
    return 0.0;
  }
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

EmbeddingVector mean_embedding(std::span<const EmbeddingVector> vectors) {
  if (vectors.empty()) throw Error("mean_embedding: empty input");
  const std::size_t dim = vectors.front().dim();
  std::vector<double> sum(dim, 0.0);
  for (const auto& v : vectors) {
    if (v.dim() != dim) throw Error("mean_embedding: dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) sum[i] += v[i];
  }
  const double n = static_cast<double>(vectors.size());
  for (double& x : sum) x /= n;
  return EmbeddingVector(std::move(sum));
}

std::unique_ptr<EmbeddingProvider> make_provider(const std::string& spec,
                                                 const ProviderOptions& options) {
  if (spec == "hash") return make_hash_provider(options.hash_dim, options.hash_seed);
  if (spec.rfind("file:", 0) == 0) return make_file_provider(spec.substr(5));
  if (spec.rfind("service:", 0) == 0) {
    return make_service_provider(spec.substr(8), options.timeout_ms);
  }
  throw ConfigError("unknown embedder \"" + spec + "\" (expected hash, file:<path> or service:<url>)");
}

}  // namespace seekfc
