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

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seekfc/corpus.hpp"

namespace seekfc {

enum class Dataset { kXFact, kRu22Fact };

Dataset parse_dataset(std::string_view name);
std::string_view dataset_name(Dataset dataset);

// Veracity instruction with "{language}" still in place.
std::string_view instruction_template(Dataset dataset);

// English language name for an ISO-639-1 code; unknown values pass through.
std::string language_name(std::string_view lang);

struct PromptRecord {
  std::string claim_id;
  std::string instruction;
  std::string claim_text;
  std::vector<std::string> evidence_texts;
  std::string rendered;
};

inline constexpr std::string_view kNoEvidenceBlock = "No evidence retrieved.";

// instruction + "\n\nClaim: " + claim + ("\n\nEvidence [r]: " + chunk)...
PromptRecord build_prompt(const Claim& claim, const EvidenceSet& evidence,
                          const std::unordered_map<std::string, Chunk>& chunk_lookup,
                          Dataset dataset);

// Judge prompt asking for Complete / Partial / Irrelevant. Substitution is
// literal: braces inside claim or evidence are copied unchanged.
std::string build_completeness_prompt(std::string_view claim, std::string_view evidence);

}  // namespace seekfc
