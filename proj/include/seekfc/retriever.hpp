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
#include <functional>
#include <string>
#include <vector>

#include "seekfc/corpus.hpp"
#include "seekfc/embedding.hpp"

namespace seekfc {

struct RetrievalConfig {
  std::size_t top_n = 20;
  std::size_t top_k = 5;

  void validate() const;
};

struct IndexEntry {
  std::string chunk_id;
  std::string claim_id;
  EmbeddingVector vector;
};

// Exact (exhaustive) cosine index over every chunk of a corpus. Immutable
// once built; concurrent searches are safe.
class ChunkIndex {
 public:
  ChunkIndex() = default;
  explicit ChunkIndex(std::vector<IndexEntry> entries);

  const std::vector<IndexEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t dim() const { return dim_; }

 private:
  std::vector<IndexEntry> entries_;
  std::size_t dim_ = 0;
};

// Embeds chunk texts without an instruction prefix.
ChunkIndex build_index(const std::vector<Chunk>& chunks, const EmbeddingProvider& provider);

// Second-stage scorer applied to the top-N candidates.
using RerankScorer = std::function<double(const EmbeddingVector& claim, const IndexEntry& entry)>;
double bi_encoder_score(const EmbeddingVector& claim, const IndexEntry& entry);

// Top-N by cosine against the instructed claim embedding, then top-K by the
// rerank score. Ties are broken by ascending chunk_id.
EvidenceSet retrieve(const ChunkIndex& index, const Claim& claim,
                     const EmbeddingProvider& provider, const RetrievalConfig& config,
                     bool scope_claim_only, const RerankScorer& rerank = bi_encoder_score);

// Same pipeline with a precomputed claim vector.
EvidenceSet retrieve_with_vector(const ChunkIndex& index, const std::string& claim_id,
                                 const EmbeddingVector& claim_vector,
                                 const RetrievalConfig& config, bool scope_claim_only,
                                 const RerankScorer& rerank = bi_encoder_score);

}  // namespace seekfc
