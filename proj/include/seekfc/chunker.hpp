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
#include <span>
#include <string>
#include <vector>

#include "seekfc/corpus.hpp"
#include "seekfc/embedding.hpp"
#include "seekfc/segmenter.hpp"

namespace seekfc {

struct SeekConfig {
  std::size_t window = 3;      // sentences on each side of a candidate boundary
  std::size_t smoothing = 3;   // odd moving-average width
  double percentile = 95.0;    // in (0, 100]
  std::size_t budget = 512;    // tokens per chunk, overlap excluded
  std::size_t overlap_sentences = 1;

  // Throws ConfigError on out-of-range values.
  void validate() const;
};

struct SemanticBaselineConfig {
  double tau = 0.55;  // boundary when neighbour cosine < tau
  std::size_t budget = 512;

  void validate() const;
};

// Per-document boundary diagnostics. Entry i describes the gap between
// sentence i and sentence i + 1.
struct ShiftProfile {
  std::vector<double> raw;
  std::vector<double> smoothed;
  double threshold = 0.0;
  std::vector<bool> boundaries;
};

// Owning document identity stamped on every produced chunk.
struct DocumentRef {
  std::string doc_id;
  std::string claim_id;
};

// Topic-shift score per gap: 1 - cos(mean(left window), mean(right window)).
// Windows hold up to `window` sentences and are truncated at document edges.
// Fewer than two embeddings give an empty result.
std::vector<double> shift_scores(std::span<const EmbeddingVector> embeddings, std::size_t window);

// Centered moving average of width `width` (odd). Edge windows are
// truncated and averaged over the values they actually cover.
std::vector<double> smooth(std::span<const double> raw, std::size_t width);

// Linear-interpolation percentile at rank (p / 100) * (m - 1).
double adaptive_threshold(std::span<const double> smoothed, double percentile);

std::vector<bool> select_boundaries(std::span<const double> smoothed, double threshold);

ShiftProfile compute_shift_profile(std::span<const EmbeddingVector> embeddings,
                                   const SeekConfig& config);

// Cuts the sentence list after every flagged gap, greedily packs whole
// sentences into chunks of at most `budget` tokens inside each segment, and
// prepends the `overlap_sentences` sentences preceding each chunk (except the
// first). A sentence larger than the budget becomes a chunk of its own.
// `boundaries` is either empty (no cuts) or has sentences.size() - 1 entries.
std::vector<Chunk> assemble_chunks(std::span<const Sentence> sentences,
                                   const std::vector<bool>& boundaries, std::size_t budget,
                                   std::size_t overlap_sentences, const DocumentRef& doc);

struct SeekResult {
  std::vector<Chunk> chunks;
  ShiftProfile profile;
};

SeekResult seek_chunk(std::span<const Sentence> sentences,
                      std::span<const EmbeddingVector> embeddings, const SeekConfig& config,
                      const DocumentRef& doc);

// Fixed-budget baseline: consecutive whole sentences, no topic cuts.
std::vector<Chunk> sentence_chunk(std::span<const Sentence> sentences, std::size_t budget,
                                  const DocumentRef& doc);

// Adjacent-similarity baseline: cut where cos(e_i, e_{i+1}) < tau.
std::vector<Chunk> semantic_chunk(std::span<const Sentence> sentences,
                                  std::span<const EmbeddingVector> embeddings,
                                  const SemanticBaselineConfig& config, const DocumentRef& doc);

}  // namespace seekfc
