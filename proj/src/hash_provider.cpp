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

#include <cstdint>
#include <string>
#include <vector>

#include "seekfc/embedding.hpp"
#include "seekfc/error.hpp"

namespace seekfc {
namespace {

// Splits UTF-8 into code point byte slices; stray continuation bytes stay
// attached to the preceding character.
std::vector<std::string_view> code_points(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    if (i == s.size() || (static_cast<unsigned char>(s[i]) & 0xC0) != 0x80) {
      out.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  return out;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// splitmix64 finaliser; spreads FNV output over all bits.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class HashProvider final : public EmbeddingProvider {
 public:
  HashProvider(std::size_t dim, std::uint64_t seed) : dim_(dim), seed_(seed) {
    if (dim_ == 0) throw ConfigError("hash embedder: dim must be positive");
  }

  std::string name() const override {
    return "hash(dim=" + std::to_string(dim_) + ",seed=" + std::to_string(seed_) + ")";
  }
  std::size_t dim() const override { return dim_; }

  std::vector<EmbeddingVector> embed_batch(std::span<const std::string> texts) const override {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(embed_one(t));
    return out;
  }

 private:
  EmbeddingVector embed_one(const std::string& text) const {
    if (text.empty()) throw ProviderError(name() + ": cannot embed empty text");
    // Pad with one boundary marker on each side so that word edges and
    // very short strings still produce trigrams.
    std::string padded = "\x02" + text + "\x03";
    auto cps = code_points(padded);
    std::vector<double> values(dim_, 0.0);
    for (std::size_t i = 0; i + 3 <= cps.size(); ++i) {
      const char* begin = cps[i].data();
      const char* end = cps[i + 2].data() + cps[i + 2].size();
      add_feature(values, std::string_view(begin, static_cast<std::size_t>(end - begin)));
    }
    double norm2 = 0.0;
    for (double v : values) norm2 += v * v;
    if (norm2 == 0.0) {
      // Every feature cancelled out; fall back to one bucket for the whole text.
      add_feature(values, text);
    }
    return EmbeddingVector(std::move(values)).normalized();
  }

  void add_feature(std::vector<double>& values, std::string_view feature) const {
    const std::uint64_t h = mix(fnv1a(feature, seed_));
    const std::size_t bucket = static_cast<std::size_t>(h % dim_);
    values[bucket] += (h >> 63) ? -1.0 : 1.0;
  }

  std::size_t dim_;
  std::uint64_t seed_;
};

}  // namespace

std::unique_ptr<EmbeddingProvider> make_hash_provider(std::size_t dim, std::uint64_t seed) {
  return std::make_unique<HashProvider>(dim, seed);
}

}  // namespace seekfc
