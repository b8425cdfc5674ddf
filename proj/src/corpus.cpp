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

#include "seekfc/corpus.hpp"

#include <string_view>
#include <unordered_set>

#include <json.hpp>

#include "seekfc/error.hpp"
#include "seekfc/jsonl.hpp"
#include "seekfc/segmenter.hpp"

namespace seekfc {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string where(const std::filesystem::path& path, std::size_t line) {
  return path.string() + " line " + std::to_string(line);
}

std::string required_string(const nlohmann::json& obj, const char* key,
                            const std::filesystem::path& path, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw InputError(where(path, line) + ": malformed record (missing string field \"" + key +
                     "\")");
  }
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const nlohmann::json& obj, const char* key,
                                           const std::filesystem::path& path, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw InputError(where(path, line) + ": malformed record (field \"" + key +
                     "\" must be a string)");
  }
  return it->get<std::string>();
}

std::size_t required_count(const nlohmann::json& obj, const char* key,
                           const std::filesystem::path& path, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_unsigned()) {
    throw InputError(where(path, line) + ": malformed record (field \"" + key +
                     "\" must be a nonnegative integer)");
  }
  return it->get<std::size_t>();
}

bool blank(std::string_view s) {
  for (std::size_t i = 0; i < s.size();) {
    std::size_t ws = whitespace_length_at(s, i);
    if (ws == 0) return false;
    i += ws;
  }
  return true;
}

void require_unique(std::unordered_set<std::string>& seen, const std::string& id,
                    const char* what, const std::filesystem::path& path, std::size_t line) {
  if (!seen.insert(id).second) {
    throw InputError(where(path, line) + ": duplicate " + what + " \"" + id + "\"");
  }
}

template <typename Json>
void put_optional(Json& obj, const char* key, const std::optional<std::string>& value) {
  if (value) obj[key] = *value;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string make_chunk_id(const std::string& doc_id, std::size_t ordinal) {
  return doc_id + "#" + std::to_string(ordinal);
}

std::vector<Claim> read_claims(const std::filesystem::path& path) {
  std::vector<Claim> out;
  std::unordered_set<std::string> seen;
  jsonl::for_each_object(path, [&](const nlohmann::json& obj, std::size_t line) {
    Claim c;
    c.claim_id = required_string(obj, "claim_id", path, line);
    c.text = required_string(obj, "text", path, line);
    c.lang = required_string(obj, "lang", path, line);
    c.label = optional_string(obj, "label", path, line);
    c.split = optional_string(obj, "split", path, line);
    if (c.claim_id.empty()) throw InputError(where(path, line) + ": empty claim_id");
    if (blank(c.text)) throw InputError(where(path, line) + ": empty claim text");
    require_unique(seen, c.claim_id, "claim_id", path, line);
    out.push_back(std::move(c));
  });
  return out;
}

std::vector<DocumentRecord> read_documents(const std::filesystem::path& path) {
  std::vector<DocumentRecord> out;
  std::unordered_set<std::string> seen;
  jsonl::for_each_object(path, [&](const nlohmann::json& obj, std::size_t line) {
    DocumentRecord d;
    d.doc_id = required_string(obj, "doc_id", path, line);
    d.claim_id = required_string(obj, "claim_id", path, line);
    d.url = optional_string(obj, "url", path, line);
    d.text = required_string(obj, "text", path, line);
    d.lang = required_string(obj, "lang", path, line);
    if (d.doc_id.empty()) throw InputError(where(path, line) + ": empty doc_id");
    require_unique(seen, d.doc_id, "doc_id", path, line);
    out.push_back(std::move(d));
  });
  return out;
}

std::vector<Chunk> read_chunks(const std::filesystem::path& path) {
  std::vector<Chunk> out;
  std::unordered_set<std::string> seen;
  jsonl::for_each_object(path, [&](const nlohmann::json& obj, std::size_t line) {
    Chunk c;
    c.chunk_id = required_string(obj, "chunk_id", path, line);
    c.doc_id = required_string(obj, "doc_id", path, line);
    c.claim_id = required_string(obj, "claim_id", path, line);
    auto range = obj.find("sent_range");
    if (range == obj.end() || !range->is_array() || range->size() != 2 ||
        !(*range)[0].is_number_unsigned() || !(*range)[1].is_number_unsigned()) {
      throw InputError(where(path, line) + ": malformed record (sent_range must be [start, end])");
    }
    c.sent_range = {(*range)[0].get<std::size_t>(), (*range)[1].get<std::size_t>()};
    c.token_count = required_count(obj, "token_count", path, line);
    c.overlap_prefix_sentences = required_count(obj, "overlap_prefix_sentences", path, line);
    c.text = required_string(obj, "text", path, line);
    if (c.sent_range.first > c.sent_range.last) {
      throw InputError(where(path, line) + ": sent_range start exceeds end");
    }
    if (c.overlap_prefix_sentences > c.sent_range.last - c.sent_range.first) {
      throw InputError(where(path, line) + ": overlap covers the whole chunk");
    }
    if (c.token_count != count_tokens(c.text)) {
      throw InputError(where(path, line) + ": token_count does not match text");
    }
    require_unique(seen, c.chunk_id, "chunk_id", path, line);
    out.push_back(std::move(c));
  });
  return out;
}

std::vector<EvidenceSet> read_evidence(const std::filesystem::path& path) {
  std::vector<EvidenceSet> out;
  std::unordered_set<std::string> seen;
  jsonl::for_each_object(path, [&](const nlohmann::json& obj, std::size_t line) {
    EvidenceSet e;
    e.claim_id = required_string(obj, "claim_id", path, line);
    auto ranked = obj.find("ranked");
    if (ranked == obj.end() || !ranked->is_array()) {
      throw InputError(where(path, line) + ": malformed record (ranked must be an array)");
    }
    for (const auto& item : *ranked) {
      if (!item.is_object() || !item.contains("chunk_id") || !item["chunk_id"].is_string() ||
          !item.contains("score") || !item["score"].is_number()) {
        throw InputError(where(path, line) + ": malformed ranked entry");
      }
      double score = item["score"].get<double>();
      if (!(score >= -1.0 && score <= 1.0)) {
        throw InputError(where(path, line) + ": score outside [-1, 1]");
      }
      e.ranked.push_back({item["chunk_id"].get<std::string>(), score});
    }
    for (std::size_t i = 1; i < e.ranked.size(); ++i) {
      if (e.ranked[i].score > e.ranked[i - 1].score) {
        throw InputError(where(path, line) + ": ranked scores are not descending");
      }
    }
    e.k = e.ranked.empty() ? 1 : e.ranked.size();
    require_unique(seen, e.claim_id, "claim_id", path, line);
    out.push_back(std::move(e));
  });
  return out;
}

void write_claims(const std::vector<Claim>& claims, const std::filesystem::path& path) {
  std::vector<std::string> lines;
  for (const auto& c : claims) {
    ordered_json obj;
    obj["claim_id"] = c.claim_id;
    obj["text"] = c.text;
    obj["lang"] = c.lang;
    put_optional(obj, "label", c.label);
    put_optional(obj, "split", c.split);
    lines.push_back(obj.dump());
  }
  jsonl::write_atomically(path, join_lines(lines));
}

void write_documents(const std::vector<DocumentRecord>& docs, const std::filesystem::path& path) {
  std::vector<std::string> lines;
  for (const auto& d : docs) {
    ordered_json obj;
    obj["doc_id"] = d.doc_id;
    obj["claim_id"] = d.claim_id;
    put_optional(obj, "url", d.url);
    obj["text"] = d.text;
    obj["lang"] = d.lang;
    lines.push_back(obj.dump());
  }
  jsonl::write_atomically(path, join_lines(lines));
}

std::string chunk_to_json_line(const Chunk& c) {
  ordered_json obj;
  obj["chunk_id"] = c.chunk_id;
  obj["doc_id"] = c.doc_id;
  obj["claim_id"] = c.claim_id;
  obj["sent_range"] = {c.sent_range.first, c.sent_range.last};
  obj["token_count"] = c.token_count;
  obj["overlap_prefix_sentences"] = c.overlap_prefix_sentences;
  obj["text"] = c.text;
  return obj.dump();
}

void write_chunks(const std::vector<Chunk>& chunks, const std::filesystem::path& path) {
  std::vector<std::string> lines;
  lines.reserve(chunks.size());
  for (const auto& c : chunks) lines.push_back(chunk_to_json_line(c));
  jsonl::write_atomically(path, join_lines(lines));
}

void write_evidence(const std::vector<EvidenceSet>& sets, const std::filesystem::path& path) {
  std::vector<std::string> lines;
  for (const auto& e : sets) {
    ordered_json obj;
    obj["claim_id"] = e.claim_id;
    obj["ranked"] = ordered_json::array();
    for (const auto& r : e.ranked) {
      ordered_json item;
      item["chunk_id"] = r.chunk_id;
      item["score"] = r.score;
      obj["ranked"].push_back(std::move(item));
    }
    lines.push_back(obj.dump());
  }
  jsonl::write_atomically(path, join_lines(lines));
}

}  // namespace seekfc
