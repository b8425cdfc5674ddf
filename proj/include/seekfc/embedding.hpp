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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seekfc {

// Dense vector. Providers always emit unit-norm vectors; window means built
// by mean_embedding() keep their raw (possibly shorter) norm.
class EmbeddingVector {
 public:
  EmbeddingVector() = default;
  explicit EmbeddingVector(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t dim() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  double norm() const;
  bool all_finite() const;

  // Copy scaled to unit L2 norm. A zero vector stays zero.
  EmbeddingVector normalized() const;

  bool operator==(const EmbeddingVector&) const = default;

 private:
  std::vector<double> values_;
};

// Text-to-vector backend. Implementations must be deterministic and safe to
// call from several threads at once.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::string name() const = 0;
  virtual std::size_t dim() const = 0;

  // Embeds every text, preserving order. Texts must be non-empty.
  virtual std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const = 0;
};

// Prefix the retrieval encoder expects in front of every claim.
inline constexpr std::string_view kClaimInstructionPrefix =
    "Instruct: Given a claim, retrieve relevant evidence from web documents that "
    "support or refute the claim.\nQuery: ";

EmbeddingVector embed(const EmbeddingProvider& provider, std::string_view text);
std::vector<EmbeddingVector> embed_all(const EmbeddingProvider& provider,
                                       const std::vector<std::string>& texts);
EmbeddingVector embed_claim(const EmbeddingProvider& provider, std::string_view claim_text);

// Cosine similarity clamped to [-1, 1]. Zero-norm inputs give 0.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

// Component-wise arithmetic mean, not re-normalized.
EmbeddingVector mean_embedding(std::span<const EmbeddingVector> vectors);

// Deterministic character-trigram feature hashing with signed buckets.
std::unique_ptr<EmbeddingProvider> make_hash_provider(std::size_t dim, std::uint64_t seed);

// Precomputed vectors keyed by SHA-256 of the exact text. Each line of the
// file is {"text_sha256": "<hex>", "vector": [...]}.
std::unique_ptr<EmbeddingProvider> make_file_provider(const std::string& path);

// HTTP embedding service: POST {"texts": [...]} -> {"vectors": [[...], ...]}
// in batches of at most kServiceBatchSize. When `expected_dim` is 0 the
// dimension is fixed by the first response.
inline constexpr std::size_t kServiceBatchSize = 64;
std::unique_ptr<EmbeddingProvider> make_service_provider(const std::string& endpoint,
                                                         int timeout_ms,
                                                         std::size_t expected_dim = 0);

// Parses "hash", "file:<path>" or "service:<url>".
struct ProviderOptions {
  std::size_t hash_dim = 256;
  std::uint64_t hash_seed = 0;
  int timeout_ms = 30000;
};
std::unique_ptr<EmbeddingProvider> make_provider(const std::string& spec,
                                                 const ProviderOptions& options);

}  // namespace seekfc
