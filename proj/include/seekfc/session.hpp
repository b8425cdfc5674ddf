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

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "seekfc/embedding.hpp"

namespace seekfc {

// Plain-data facade for scripting-language bindings. Only strings, numbers,
// lists and maps cross this boundary; parameter names match the CLI flags
// (window, smooth, percentile, budget, overlap, tau, top-n, top-k).
using PlainValue = std::variant<std::int64_t, double, std::string>;
using PlainRecord = std::map<std::string, PlainValue>;
using PlainParams = std::map<std::string, PlainValue>;

class Session {
 public:
  // `embedder` uses the CLI syntax: hash | file:<path> | service:<url>.
  explicit Session(const std::string& embedder = "hash",
                   const ProviderOptions& options = ProviderOptions{});

  // Chunks one document (doc_id "doc", claim_id "claim" unless given in
  // params). Keys of each record: chunk_id, doc_id, claim_id, sent_start,
  // sent_end, token_count, overlap_prefix_sentences, text.
  std::vector<PlainRecord> chunk(const std::string& text, const std::string& method,
                                 const PlainParams& params) const;

  // Ranks `chunks` (records as returned by chunk()) against the claim using
  // the global pool.
  std::vector<std::pair<std::string, double>> retrieve(const std::string& claim,
                                                       const std::vector<PlainRecord>& chunks,
                                                       std::size_t n, std::size_t k) const;

  const EmbeddingProvider& provider() const { return *provider_; }

 private:
  std::shared_ptr<const EmbeddingProvider> provider_;
};

}  // namespace seekfc
