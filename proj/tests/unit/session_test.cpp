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

#include <doctest.h>

#include "seekfc/error.hpp"
#include "seekfc/session.hpp"

using namespace seekfc;

namespace {

const std::string kText =
    "The dam opened in 1998. It supplies water to the valley. Farmers depend on it. "
    "Elections were held in March. Turnout was high. The winner promised reforms.";

}  // namespace

TEST_CASE("chunk records carry the documented keys") {
  Session s;
  auto records = s.chunk(kText, "sentence", {{"budget", std::int64_t{8}}, {"doc_id", std::string("d7")}});
  REQUIRE(records.size() >= 2);
  for (const char* key : {"chunk_id", "doc_id", "claim_id", "sent_start", "sent_end", "token_count",
                          "overlap_prefix_sentences", "text"}) {
    CHECK(records[0].count(key) == 1);
  }
  CHECK(std::get<std::string>(records[0].at("chunk_id")) == "d7#0");
  CHECK(std::get<std::string>(records[0].at("claim_id")) == "claim");
  CHECK(std::get<std::int64_t>(records[0].at("sent_start")) == 0);
}

TEST_CASE("seek and semantic through the facade") {
  Session s;
  auto seek = s.chunk(kText, "seek", {{"window", std::int64_t{2}}, {"percentile", 90.0}});
  CHECK_FALSE(seek.empty());
  auto semantic = s.chunk(kText, "semantic", {{"tau", 0.3}});
  CHECK_FALSE(semantic.empty());
  CHECK(s.chunk("", "seek", {}).empty());
}

TEST_CASE("bad parameters") {
  Session s;
  CHECK_THROWS_AS(s.chunk(kText, "seek", {{"colour", std::int64_t{1}}}), ConfigError);
  CHECK_THROWS_AS(s.chunk(kText, "seek", {{"smooth", std::int64_t{2}}}), ConfigError);
  CHECK_THROWS_AS(s.chunk(kText, "bogus", {}), ConfigError);
  CHECK_THROWS_AS(Session("nope:"), ConfigError);
}

TEST_CASE("retrieve over facade records") {
  Session s;
  auto records = s.chunk(kText, "sentence", {{"budget", std::int64_t{6}}});
  auto ranked = s.retrieve("Turnout was high in the elections.", records, 5, 2);
  REQUIRE(ranked.size() == 2);
  CHECK(ranked[0].second >= ranked[1].second);
  CHECK_THROWS_AS(s.retrieve("x", records, 1, 2), ConfigError);
}
