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

#include <cctype>
#include <unordered_map>

#include <json.hpp>

#include "seekfc/embedding.hpp"
#include "seekfc/error.hpp"
#include "seekfc/jsonl.hpp"
#include "seekfc/sha256.hpp"

namespace seekfc {
namespace {

class FileProvider final : public EmbeddingProvider {
 public:
  explicit FileProvider(const std::string& path) : path_(path) {
    jsonl::for_each_object(path, [&](const nlohmann::json& obj, std::size_t line) {
      const std::string at = path + " line " + std::to_string(line);
      if (!obj.contains("text_sha256") || !obj["text_sha256"].is_string() ||
          !obj.contains("vector") || !obj["vector"].is_array()) {
        throw InputError(at + ": malformed record (need text_sha256 and vector)");
      }
      std::vector<double> values;
      for (const auto& v : obj["vector"]) {
        if (!v.is_number()) throw InputError(at + ": vector entries must be numbers");
        values.push_back(v.get<double>());
      }
      if (values.empty()) throw InputError(at + ": empty vector");
      if (dim_ == 0) dim_ = values.size();
      if (values.size() != dim_) {
        throw InputError(at + ": vector has " + std::to_string(values.size()) +
                         " entries, expected " + std::to_string(dim_));
      }
      EmbeddingVector vec(std::move(values));
      if (!vec.all_finite() || vec.norm() == 0.0) {
        throw InputError(at + ": vector must be finite and non-zero");
      }
      auto key = obj["text_sha256"].get<std::string>();
      for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      vectors_.insert_or_assign(std::move(key), vec.normalized());
    });
    if (vectors_.empty()) throw InputError(path + ": no vectors");
  }

  std::string name() const override { return "file(" + path_ + ")"; }
  std::size_t dim() const override { return dim_; }

  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const override {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) {
      if (t.empty()) throw ProviderError(name() + ": cannot embed empty text");
      const auto hash = sha256_hex(t);
      auto it = vectors_.find(hash);
      if (it == vectors_.end()) throw ProviderError(name() + ": no vector for text_sha256 " + hash);
      out.push_back(it->second);
    }
    return out;
  }

 private:
  std::string path_;
  std::size_t dim_ = 0;
  std::unordered_map<std::string, EmbeddingVector> vectors_;
};

}  // namespace

std::unique_ptr<EmbeddingProvider> make_file_provider(const std::string& path) {
  return std::make_unique<FileProvider>(path);
}

}  // namespace seekfc
