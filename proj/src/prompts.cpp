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

#include "seekfc/prompts.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "seekfc/error.hpp"

namespace seekfc {
namespace {

constexpr std::string_view kXFactInstruction =
    "Classify the given {language} claim into one of the seven categories: TRUE, MOSTLY-TRUE, "
    "PARTLY-TRUE/MISLEADING, FALSE, MOSTLY-FALSE, COMPLICATED/HARD-TO-CATEGORISE, OTHER, based "
    "on the provided evidence. The label definitions are: TRUE = fully supported by the "
    "evidence; MOSTLY-TRUE = mostly supported but with minor inaccuracies; "
    "PARTLY-TRUE/MISLEADING = partially supported but with significant omissions; FALSE = "
    "clearly contradicted or unsupported; MOSTLY-FALSE = largely incorrect with only a small "
    "element of truth; COMPLICATED/HARD-TO-CATEGORISE = too complex for a straightforward "
    "label; OTHER = does not fit the above categories. Provide exactly one label.";

constexpr std::string_view kRu22FactInstruction =
    "Classify the given {language} claim into one of three categories: SUPPORTED, REFUTED, NEI, "
    "based on the provided evidence. The label definitions are: SUPPORTED = the evidence "
    "supports the claim; REFUTED = the evidence contradicts the claim; NEI = not enough "
    "information to verify. Provide exactly one label.";

constexpr std::string_view kCompletenessTemplate =
    "You are evaluating retrieved evidence for a fact-checking task.\n"
    "\n"
    "Claim: {claim}\n"
    "\n"
    "Retrieved Evidence: {evidence}\n"
    "\n"
    "Question: Does the retrieved evidence contain enough information to verify whether the "
    "claim is true or false?\n"
    "\n"
    "Choose exactly one label:\n"
    "Complete: The evidence contains sufficient information to verify the claim.\n"
    "Partial: The evidence is related to the claim but incomplete.\n"
    "Irrelevant: The evidence is unrelated, noisy, empty, blocked webpage text, or does not help "
    "verify the claim.\n"
    "\n"
    "Return only one word: Complete, Partial, or Irrelevant.";

constexpr std::array<std::pair<std::string_view, std::string_view>, 34> kLanguages{{
    {"ar", "Arabic"},     {"az", "Azerbaijani"}, {"bn", "Bengali"},   {"de", "German"},
    {"en", "English"},    {"es", "Spanish"},     {"fa", "Persian"},   {"fr", "French"},
    {"gu", "Gujarati"},   {"hi", "Hindi"},       {"id", "Indonesian"}, {"it", "Italian"},
    {"ja", "Japanese"},   {"ka", "Georgian"},    {"ko", "Korean"},    {"mr", "Marathi"},
    {"nl", "Dutch"},      {"no", "Norwegian"},   {"pa", "Punjabi"},   {"pl", "Polish"},
    {"pt", "Portuguese"}, {"ro", "Romanian"},    {"ru", "Russian"},   {"si", "Sinhala"},
    {"sq", "Albanian"},   {"sr", "Serbian"},     {"sv", "Swedish"},   {"ta", "Tamil"},
    {"te", "Telugu"},     {"tr", "Turkish"},     {"uk", "Ukrainian"}, {"ur", "Urdu"},
    {"vi", "Vietnamese"}, {"zh", "Chinese"},
}};

// Replaces every occurrence of `placeholder` in `tmpl` in a single pass, so
// substituted text is never scanned again.
std::string substitute(std::string_view tmpl,
                       std::initializer_list<std::pair<std::string_view, std::string_view>> subs) {
  std::string out;
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    bool replaced = false;
    for (const auto& [key, value] : subs) {
      if (tmpl.compare(pos, key.size(), key) == 0) {
        out += value;
        pos += key.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out += tmpl[pos++];
  }
  return out;
}

}  // namespace

Dataset parse_dataset(std::string_view name) {
  if (name == "xfact") return Dataset::kXFact;
  if (name == "ru22fact") return Dataset::kRu22Fact;
  throw ConfigError("unknown dataset \"" + std::string(name) + "\" (expected xfact or ru22fact)");
}

std::string_view dataset_name(Dataset dataset) {
  return dataset == Dataset::kXFact ? "xfact" : "ru22fact";
}

std::string_view instruction_template(Dataset dataset) {
  return dataset == Dataset::kXFact ? kXFactInstruction : kRu22FactInstruction;
}

std::string language_name(std::string_view lang) {
  std::string key(lang);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (auto dash = key.find_first_of("-_"); dash != std::string::npos) key.resize(dash);
  for (const auto& [code, name] : kLanguages) {
    if (code == key) return std::string(name);
  }
  return std::string(lang);
}

PromptRecord build_prompt(const Claim& claim, const EvidenceSet& evidence,
                          const std::unordered_map<std::string, Chunk>& chunk_lookup,
                          Dataset dataset) {
  PromptRecord record;
  record.claim_id = claim.claim_id;
  record.instruction =
      substitute(instruction_template(dataset), {{"{language}", language_name(claim.lang)}});
  record.claim_text = claim.text;
  for (const auto& item : evidence.ranked) {
    auto it = chunk_lookup.find(item.chunk_id);
    if (it == chunk_lookup.end()) {
      throw InputError("claim \"" + claim.claim_id + "\": unknown evidence chunk \"" +
                       item.chunk_id + "\"");
    }
    record.evidence_texts.push_back(it->second.text);
  }

  std::string out = record.instruction;
  out += "\n\nClaim: ";
  out += record.claim_text;
  if (record.evidence_texts.empty()) {
    out += "\n\n";
    out += kNoEvidenceBlock;
  }
  for (std::size_t r = 0; r < record.evidence_texts.size(); ++r) {
    out += "\n\nEvidence [" + std::to_string(r + 1) + "]: ";
    out += record.evidence_texts[r];
  }
  record.rendered = std::move(out);
  return record;
}

std::string build_completeness_prompt(std::string_view claim, std::string_view evidence) {
  return substitute(kCompletenessTemplate, {{"{claim}", claim}, {"{evidence}", evidence}});
}

}  // namespace seekfc
