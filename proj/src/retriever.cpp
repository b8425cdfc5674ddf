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

#include "seekfc/retriever.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <spdlog/spdlog.h>

#include "seekfc/error.hpp"

namespace seekfc {

void RetrievalConfig::validate() const {
  if (top_n < 1) throw ConfigError("n must be positive");
  if (top_k < 1) throw ConfigError("k must be positive");
  if (top_k > top_n) throw ConfigError("k exceeds n");
}

ChunkIndex::ChunkIndex(std::vector<IndexEntry> entries) : entries_(std::move(entries)) {
  std::unordered_set<std::string> ids;
  for (const auto& e : entries_) {
    if (!ids.insert(e.chunk_id).second) {
      throw InputError("index: duplicate chunk_id \"" + e.chunk_id + "\"");
    }
    if (dim_ == 0) dim_ = e.vector.dim();
    if (e.vector.dim() != dim_ || dim_ == 0) {
      throw InputError("index: inconsistent vector dimension for \"" + e.chunk_id + "\"");
    }
    if (!e.vector.all_finite() || std::abs(e.vector.norm() - 1.0) > 1e-6) {
      throw InputError("index: vector for \"" + e.chunk_id + "\" is not unit-norm");
    }
  }
}

ChunkIndex build_index(const std::vector<Chunk>& chunks, const EmbeddingProvider& provider) {
  std::unordered_set<std::string> ids;
  std::vector<std::string> texts;
  texts.reserve(chunks.size());
  for (const auto& c : chunks) {
    if (!ids.insert(c.chunk_id).second) {
      throw InputError("index: duplicate chunk_id \"" + c.chunk_id + "\"");
    }
    texts.push_back(c.text);
  }
  if (chunks.empty()) return ChunkIndex{};

  std::vector<EmbeddingVector> vectors;
  try {
    vectors = embed_all(provider, texts);
  } catch (const ProviderError&) {
    // Re-embed one at a time to name the chunk that failed.
    for (const auto& c : chunks) {
      try {
        embed(provider, c.text);
      } catch (const ProviderError& e) {
        throw ProviderError("chunk \"" + c.chunk_id + "\": " + e.what());
      }
    }
    throw;
  }

  std::vector<IndexEntry> entries;
  entries.reserve(chunks.size());
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    entries.push_back({chunks[i].chunk_id, chunks[i].claim_id, std::move(vectors[i])});
  }
  return ChunkIndex(std::move(entries));
}

double bi_encoder_score(const EmbeddingVector& claim, const IndexEntry& entry) {
  return cosine(claim, entry.vector);
}

namespace {

struct Candidate {
  const IndexEntry* entry;
  double score;
};

bool ranks_before(const Candidate& a, const Candidate& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.entry->chunk_id < b.entry->chunk_id;
}

void keep_top(std::vector<Candidate>& candidates, std::size_t count) {
  if (candidates.size() > count) {
    std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count),
                      candidates.end(), ranks_before);
    candidates.resize(count);
  } else {
    std::sort(candidates.begin(), candidates.end(), ranks_before);
  }
}

}  // namespace

EvidenceSet retrieve_with_vector(const ChunkIndex& index, const std::string& claim_id,
                                 const EmbeddingVector& claim_vector,
                                 const RetrievalConfig& config, bool scope_claim_only,
                                 const RerankScorer& rerank) {
  config.validate();
  EvidenceSet result;
  result.claim_id = claim_id;
  result.k = config.top_k;

  std::vector<Candidate> candidates;
  for (const auto& entry : index.entries()) {
    if (scope_claim_only && entry.claim_id != claim_id) continue;
    candidates.push_back({&entry, cosine(claim_vector, entry.vector)});
  }
  if (candidates.empty()) {
    spdlog::warn("claim \"{}\": no candidate chunks; evidence is empty", claim_id);
    return result;
  }

  keep_top(candidates, config.top_n);
  for (auto& c : candidates) c.score = rerank(claim_vector, *c.entry);
  keep_top(candidates, config.top_k);

  result.ranked.reserve(candidates.size());
  for (const auto& c : candidates) result.ranked.push_back({c.entry->chunk_id, c.score});
  return result;
}

EvidenceSet retrieve(const ChunkIndex& index, const Claim& claim,
                     const EmbeddingProvider& provider, const RetrievalConfig& config,
                     bool scope_claim_only, const RerankScorer& rerank) {
  config.validate();
  if (index.empty()) {
    spdlog::warn("claim \"{}\": chunk index is empty; evidence is empty", claim.claim_id);
    EvidenceSet result;
    result.claim_id = claim.claim_id;
    result.k = config.top_k;
    return result;
  }
  const auto claim_vector = embed_claim(provider, claim.text);
  return retrieve_with_vector(index, claim.claim_id, claim_vector, config, scope_claim_only,
                              rerank);
}

}  // namespace seekfc
