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

#include "seekfc/pipeline.hpp"

#include "seekfc/error.hpp"
#include "seekfc/segmenter.hpp"

namespace seekfc {

ChunkMethod parse_chunk_method(std::string_view name) {
  if (name == "seek") return ChunkMethod::kSeek;
  if (name == "sentence") return ChunkMethod::kSentence;
  if (name == "semantic") return ChunkMethod::kSemantic;
  throw ConfigError("unknown method \"" + std::string(name) + "\" (expected seek, sentence or semantic)");
}

std::string_view chunk_method_name(ChunkMethod method) {
  switch (method) {
    case ChunkMethod::kSeek:
      return "seek";
    case ChunkMethod::kSentence:
      return "sentence";
    case ChunkMethod::kSemantic:
      return "semantic";
  }
  return "seek";
}

void ChunkOptions::validate() const {
  switch (method) {
    case ChunkMethod::kSeek:
      seek.validate();
      break;
    case ChunkMethod::kSentence:
      if (seek.budget < 1) throw ConfigError("token budget must be positive");
      break;
    case ChunkMethod::kSemantic:
      semantic.validate();
      break;
  }
}

std::vector<Chunk> chunk_document(const DocumentRecord& doc, const ChunkOptions& options,
                                  const EmbeddingProvider* provider) {
  options.validate();
  const auto sentences = split_sentences(doc.text);
  if (sentences.empty()) return {};
  const DocumentRef ref{doc.doc_id, doc.claim_id};
  if (options.method == ChunkMethod::kSentence) {
    return sentence_chunk(sentences, options.seek.budget, ref);
  }
  if (provider == nullptr) throw ConfigError("an embedder is required for this method");

  std::vector<std::string> texts;
  texts.reserve(sentences.size());
  for (const auto& s : sentences) texts.push_back(s.text);
  const auto embeddings = embed_all(*provider, texts);
  if (options.method == ChunkMethod::kSemantic) {
    return semantic_chunk(sentences, embeddings, options.semantic, ref);
  }
  return seek_chunk(sentences, embeddings, options.seek, ref).chunks;
}

std::vector<EvidenceSet> retrieve_all(const std::vector<Claim>& claims,
                                      const std::vector<Chunk>& chunks,
                                      const EmbeddingProvider& provider,
                                      const RetrievalConfig& config, bool scope_claim_only) {
  config.validate();
  const auto index = build_index(chunks, provider);
  std::vector<EvidenceSet> out;
  out.reserve(claims.size());
  for (const auto& claim : claims) {
    out.push_back(retrieve(index, claim, provider, config, scope_claim_only));
  }
  return out;
}

}  // namespace seekfc
