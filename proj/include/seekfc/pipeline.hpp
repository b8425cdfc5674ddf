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

#include <string_view>
#include <vector>

#include "seekfc/chunker.hpp"
#include "seekfc/corpus.hpp"
#include "seekfc/embedding.hpp"
#include "seekfc/retriever.hpp"

namespace seekfc {

enum class ChunkMethod { kSeek, kSentence, kSemantic };

ChunkMethod parse_chunk_method(std::string_view name);
std::string_view chunk_method_name(ChunkMethod method);

// The sentence baseline uses seek.budget.
struct ChunkOptions {
  ChunkMethod method = ChunkMethod::kSeek;
  SeekConfig seek;
  SemanticBaselineConfig semantic;

  void validate() const;
  bool needs_embeddings() const { return method != ChunkMethod::kSentence; }
};

// Segments and chunks one document. `provider` may be null for the sentence
// baseline. Empty documents give no chunks.
std::vector<Chunk> chunk_document(const DocumentRecord& doc, const ChunkOptions& options,
                                  const EmbeddingProvider* provider);

// Indexes every chunk once and retrieves evidence for each claim in order.
std::vector<EvidenceSet> retrieve_all(const std::vector<Claim>& claims,
                                      const std::vector<Chunk>& chunks,
                                      const EmbeddingProvider& provider,
                                      const RetrievalConfig& config, bool scope_claim_only);

}  // namespace seekfc
