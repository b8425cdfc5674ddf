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
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seekfc {

struct Claim {
  std::string claim_id;
  std::string text;
  std::string lang;
  std::optional<std::string> label;
  std::optional<std::string> split;

  bool operator==(const Claim&) const = default;
};

// A crawled source page. Empty text is legal and yields no chunks.
struct DocumentRecord {
  std::string doc_id;
  std::string claim_id;
  std::optional<std::string> url;
  std::string text;
  std::string lang;

  bool operator==(const DocumentRecord&) const = default;
};

// Inclusive sentence index range [first, last].
struct SentenceRange {
  std::size_t first = 0;
  std::size_t last = 0;

  bool operator==(const SentenceRange&) const = default;
};

// A contiguous run of whole sentences. sent_range and text include the
// overlap prefix; the sentences this chunk owns start at
// sent_range.first + overlap_prefix_sentences.
struct Chunk {
  std::string chunk_id;
  std::string doc_id;
  std::string claim_id;
  SentenceRange sent_range;
  std::string text;
  std::size_t token_count = 0;
  std::size_t overlap_prefix_sentences = 0;

  std::size_t owned_first() const { return sent_range.first + overlap_prefix_sentences; }

  bool operator==(const Chunk&) const = default;
};

std::string make_chunk_id(const std::string& doc_id, std::size_t ordinal);

struct ScoredChunk {
  std::string chunk_id;
  double score = 0.0;

  bool operator==(const ScoredChunk&) const = default;
};

// Ranked evidence for one claim, best first.
struct EvidenceSet {
  std::string claim_id;
  std::vector<ScoredChunk> ranked;
  std::size_t k = 1;
};

// Line-delimited JSON ingestion. Errors name the 1-based line number or
// the duplicated id.
std::vector<Claim> read_claims(const std::filesystem::path& path);
std::vector<DocumentRecord> read_documents(const std::filesystem::path& path);
std::vector<Chunk> read_chunks(const std::filesystem::path& path);
std::vector<EvidenceSet> read_evidence(const std::filesystem::path& path);

void write_claims(const std::vector<Claim>& claims, const std::filesystem::path& path);
void write_documents(const std::vector<DocumentRecord>& docs, const std::filesystem::path& path);
void write_chunks(const std::vector<Chunk>& chunks, const std::filesystem::path& path);
void write_evidence(const std::vector<EvidenceSet>& sets, const std::filesystem::path& path);

// Single-record serialization, shared by the file readers/writers above.
std::string chunk_to_json_line(const Chunk& chunk);

}  // namespace seekfc
