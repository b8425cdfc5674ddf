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

#include "seekfc/chunker.hpp"

#include <algorithm>
#include <cmath>

#include <spdlog/spdlog.h>

#include "seekfc/error.hpp"

namespace seekfc {

void SeekConfig::validate() const {
  if (window < 1) throw ConfigError("context window must be at least 1");
  if (smoothing < 1 || smoothing % 2 == 0) throw ConfigError("smoothing window must be odd");
  if (!(percentile > 0.0 && percentile <= 100.0)) {
    throw ConfigError("percentile must lie in (0, 100]");
  }
  if (budget < 1) throw ConfigError("token budget must be positive");
}

void SemanticBaselineConfig::validate() const {
  if (!std::isfinite(tau) || tau < -1.0 || tau > 1.0) throw ConfigError("tau out of range");
  if (budget < 1) throw ConfigError("token budget must be positive");
}

std::vector<double> shift_scores(std::span<const EmbeddingVector> embeddings, std::size_t window) {
  if (window < 1) throw ConfigError("context window must be at least 1");
  const std::size_t n = embeddings.size();
  if (n < 2) return {};
  for (const auto& e : embeddings) {
    if (e.dim() != embeddings.front().dim()) throw Error("shift_scores: dimension mismatch");
  }
  std::vector<double> raw(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t left_begin = i + 1 >= window ? i + 1 - window : 0;
    const std::size_t right_end = std::min(n, i + 1 + window);
    auto left = mean_embedding(embeddings.subspan(left_begin, i + 1 - left_begin));
    auto right = mean_embedding(embeddings.subspan(i + 1, right_end - (i + 1)));
    raw[i] = 1.0 - cosine(left, right);
  }
  return raw;
}

std::vector<double> smooth(std::span<const double> raw, std::size_t width) {
  if (width < 1 || width % 2 == 0) throw ConfigError("smoothing window must be odd");
  const std::size_t m = raw.size();
  const std::size_t half = width / 2;
  std::vector<double> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(m - 1, i + half);
    double sum = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) sum += raw[j];
    out[i] = sum / static_cast<double>(hi - lo + 1);
  }
  return out;
}

double adaptive_threshold(std::span<const double> smoothed, double percentile) {
  if (smoothed.empty()) throw Error("adaptive_threshold: empty score array");
  if (!(percentile > 0.0 && percentile <= 100.0)) {
    throw ConfigError("percentile must lie in (0, 100]");
  }
  std::vector<double> sorted(smoothed.begin(), smoothed.end());
  std::sort(sorted.begin(), sorted.end());
  const double rank = percentile / 100.0 * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = static_cast<std::size_t>(std::ceil(rank));
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<bool> select_boundaries(std::span<const double> smoothed, double threshold) {
  std::vector<bool> out(smoothed.size());
  for (std::size_t i = 0; i < smoothed.size(); ++i) out[i] = smoothed[i] >= threshold;
  return out;
}

ShiftProfile compute_shift_profile(std::span<const EmbeddingVector> embeddings,
                                   const SeekConfig& config) {
  config.validate();
  ShiftProfile profile;
  profile.raw = shift_scores(embeddings, config.window);
  if (profile.raw.empty()) return profile;
  profile.smoothed = smooth(profile.raw, config.smoothing);
  profile.threshold = adaptive_threshold(profile.smoothed, config.percentile);
  profile.boundaries = select_boundaries(profile.smoothed, profile.threshold);
  return profile;
}

namespace {

std::string join_sentences(std::span<const Sentence> sentences) {
  std::string text;
  for (const auto& s : sentences) {
    if (!text.empty()) text += ' ';
    text += s.text;
  }
  return text;
}

}  // namespace

std::vector<Chunk> assemble_chunks(std::span<const Sentence> sentences,
                                   const std::vector<bool>& boundaries, std::size_t budget,
                                   std::size_t overlap_sentences, const DocumentRef& doc) {
  if (budget < 1) throw ConfigError("token budget must be positive");
  const std::size_t n = sentences.size();
  if (n == 0) return {};
  if (!boundaries.empty() && boundaries.size() != n - 1) {
    throw Error("assemble_chunks: expected " + std::to_string(n - 1) + " boundary flags, got " +
                std::to_string(boundaries.size()));
  }

  std::vector<Chunk> chunks;
  std::size_t prev_first = 0;

  auto emit = [&](std::size_t first, std::size_t last, std::size_t owned_tokens) {
    std::size_t prefix = 0;
    if (!chunks.empty()) prefix = std::min(overlap_sentences, first - prev_first);
    const std::size_t begin = first - prefix;
    Chunk c;
    c.chunk_id = make_chunk_id(doc.doc_id, chunks.size());
    c.doc_id = doc.doc_id;
    c.claim_id = doc.claim_id;
    c.sent_range = {begin, last};
    c.text = join_sentences(sentences.subspan(begin, last - begin + 1));
    c.token_count = count_tokens(c.text);
    c.overlap_prefix_sentences = prefix;
    if (first == last && owned_tokens > budget) {
      spdlog::warn("{}: sentence {} has {} tokens, over the {}-token budget; kept whole",
                   c.chunk_id, first, owned_tokens, budget);
    }
    prev_first = begin;
    chunks.push_back(std::move(c));
  };

  std::size_t segment_begin = 0;
  for (std::size_t seg_end = 0; seg_end < n; ++seg_end) {
    const bool cut_here = seg_end + 1 == n || (!boundaries.empty() && boundaries[seg_end]);
    if (!cut_here) continue;

    std::size_t first = segment_begin;
    std::size_t tokens = 0;
    for (std::size_t i = segment_begin; i <= seg_end; ++i) {
      const std::size_t t = sentences[i].token_count;
      if (i > first && tokens + t > budget) {
        emit(first, i - 1, tokens);
        first = i;
        tokens = 0;
      }
      tokens += t;
    }
    emit(first, seg_end, tokens);
    segment_begin = seg_end + 1;
  }
  return chunks;
}

SeekResult seek_chunk(std::span<const Sentence> sentences,
                      std::span<const EmbeddingVector> embeddings, const SeekConfig& config,
                      const DocumentRef& doc) {
  config.validate();
  if (sentences.size() != embeddings.size()) {
    throw Error("seek_chunk: " + std::to_string(sentences.size()) + " sentences but " +
                std::to_string(embeddings.size()) + " embeddings");
  }
  SeekResult result;
  if (sentences.empty()) return result;
  result.profile = compute_shift_profile(embeddings, config);
  result.chunks = assemble_chunks(sentences, result.profile.boundaries, config.budget,
                                  config.overlap_sentences, doc);
  return result;
}

std::vector<Chunk> sentence_chunk(std::span<const Sentence> sentences, std::size_t budget,
                                  const DocumentRef& doc) {
  return assemble_chunks(sentences, {}, budget, 0, doc);
}

std::vector<Chunk> semantic_chunk(std::span<const Sentence> sentences,
                                  std::span<const EmbeddingVector> embeddings,
                                  const SemanticBaselineConfig& config, const DocumentRef& doc) {
  config.validate();
  if (sentences.size() != embeddings.size()) {
    throw Error("semantic_chunk: " + std::to_string(sentences.size()) + " sentences but " +
                std::to_string(embeddings.size()) + " embeddings");
  }
  if (sentences.empty()) return {};
  std::vector<bool> boundaries(sentences.size() - 1);
  for (std::size_t i = 0; i + 1 < sentences.size(); ++i) {
    boundaries[i] = cosine(embeddings[i], embeddings[i + 1]) < config.tau;
  }
  return assemble_chunks(sentences, boundaries, config.budget, 0, doc);
}

}  // namespace seekfc
