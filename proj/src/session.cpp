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

#include "seekfc/session.hpp"

#include <cmath>

#include "seekfc/error.hpp"
#include "seekfc/pipeline.hpp"
#include "seekfc/segmenter.hpp"

namespace seekfc {
namespace {

std::int64_t as_int(const PlainValue& v, const std::string& key) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  if (const auto* d = std::get_if<double>(&v); d && std::floor(*d) == *d) {
    return static_cast<std::int64_t>(*d);
  }
  throw ConfigError("parameter \"" + key + "\" must be an integer");
}

std::size_t as_count(const PlainValue& v, const std::string& key) {
  const auto i = as_int(v, key);
  if (i < 0) throw ConfigError("parameter \"" + key + "\" must be nonnegative");
  return static_cast<std::size_t>(i);
}

double as_double(const PlainValue& v, const std::string& key) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  throw ConfigError("parameter \"" + key + "\" must be a number");
}

std::string as_string(const PlainValue& v, const std::string& key) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  throw ConfigError("parameter \"" + key + "\" must be a string");
}

const PlainValue& field(const PlainRecord& r, const std::string& key) {
  auto it = r.find(key);
  if (it == r.end()) throw InputError("chunk record lacks \"" + key + "\"");
  return it->second;
}

}  // namespace

Session::Session(const std::string& embedder, const ProviderOptions& options)
    : provider_(make_provider(embedder, options)) {}

std::vector<PlainRecord> Session::chunk(const std::string& text, const std::string& method,
                                        const PlainParams& params) const {
  ChunkOptions options;
  options.method = parse_chunk_method(method);
  DocumentRecord doc{"doc", "claim", std::nullopt, text, ""};
  for (const auto& [key, value] : params) {
    if (key == "window") {
      options.seek.window = as_count(value, key);
    } else if (key == "smooth") {
      options.seek.smoothing = as_count(value, key);
    } else if (key == "percentile") {
      options.seek.percentile = as_double(value, key);
    } else if (key == "budget") {
      options.seek.budget = options.semantic.budget = as_count(value, key);
    } else if (key == "overlap") {
      options.seek.overlap_sentences = as_count(value, key);
    } else if (key == "tau") {
      options.semantic.tau = as_double(value, key);
    } else if (key == "doc_id") {
      doc.doc_id = as_string(value, key);
    } else if (key == "claim_id") {
      doc.claim_id = as_string(value, key);
    } else {
      throw ConfigError("unknown parameter \"" + key + "\"");
    }
  }

  std::vector<PlainRecord> out;
  for (const auto& c : chunk_document(doc, options, provider_.get())) {
    out.push_back({
        {"chunk_id", c.chunk_id},
        {"doc_id", c.doc_id},
        {"claim_id", c.claim_id},
        {"sent_start", static_cast<std::int64_t>(c.sent_range.first)},
        {"sent_end", static_cast<std::int64_t>(c.sent_range.last)},
        {"token_count", static_cast<std::int64_t>(c.token_count)},
        {"overlap_prefix_sentences", static_cast<std::int64_t>(c.overlap_prefix_sentences)},
        {"text", c.text},
    });
  }
  return out;
}

std::vector<std::pair<std::string, double>> Session::retrieve(
    const std::string& claim, const std::vector<PlainRecord>& chunks, std::size_t n,
    std::size_t k) const {
  RetrievalConfig config{n, k};
  config.validate();
  std::vector<Chunk> pool;
  pool.reserve(chunks.size());
  for (const auto& r : chunks) {
    Chunk c;
    c.chunk_id = as_string(field(r, "chunk_id"), "chunk_id");
    c.text = as_string(field(r, "text"), "text");
    if (auto it = r.find("claim_id"); it != r.end()) c.claim_id = as_string(it->second, "claim_id");
    c.token_count = count_tokens(c.text);
    pool.push_back(std::move(c));
  }
  const Claim query{"query", claim, "", std::nullopt, std::nullopt};
  const auto evidence = retrieve_all({query}, pool, *provider_, config, false).front();
  std::vector<std::pair<std::string, double>> out;
  for (const auto& r : evidence.ranked) out.emplace_back(r.chunk_id, r.score);
  return out;
}

}  // namespace seekfc
