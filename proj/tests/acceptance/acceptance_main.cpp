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

// Acceptance gate. One line per criterion; exit status is the number of
// failures.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <spdlog/spdlog.h>

#include "oracles/oracles.hpp"
#include "seekfc/analysis.hpp"
#include "seekfc/chunker.hpp"
#include "seekfc/pipeline.hpp"
#include "seekfc/prompts.hpp"
#include "seekfc/retriever.hpp"
#include "temp_dir.hpp"

namespace fs = std::filesystem;
using namespace seekfc;

namespace {

constexpr double kChi2Tolerance = 0.01;
constexpr double kStageTolerance = 1e-9;
constexpr double kScoreTolerance = 1e-9;
constexpr double kF1Tolerance = 1e-12;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  const char* name;
  double limit_seconds;  // 0 means no runtime bound
  std::function<Outcome()> run;
};

// Published discordant counts and statistics, grouped by baseline.
struct PublishedRow {
  const char* baseline;
  const char* setting;
  std::uint64_t b_only;
  std::uint64_t o_only;
  std::int64_t net_gain;
  double chi2;
  bool significant;
};

const std::vector<PublishedRow> kPublished = {
    {"semantic", "RU22Fact Test Gemma", 31, 136, 105, 64.77, true},
    {"semantic", "RU22Fact Test LLaMA", 41, 147, 106, 58.64, true},
    {"semantic", "RU22Fact Test Mistral", 41, 144, 103, 56.24, true},
    {"semantic", "X-FACT ID Gemma", 306, 487, 181, 40.86, true},
    {"semantic", "X-FACT ID LLaMA", 255, 410, 155, 35.66, true},
    {"semantic", "X-FACT ID Mistral", 290, 497, 207, 53.92, true},
    {"semantic", "X-FACT OOD Gemma", 187, 329, 142, 38.53, true},
    {"semantic", "X-FACT OOD LLaMA", 171, 298, 127, 33.85, true},
    {"semantic", "X-FACT OOD Mistral", 198, 229, 31, 2.11, false},
    {"semantic", "X-FACT ZS Gemma", 303, 371, 68, 6.66, true},
    {"semantic", "X-FACT ZS LLaMA", 273, 394, 121, 21.59, true},
    {"semantic", "X-FACT ZS Mistral", 322, 389, 67, 6.13, true},
    {"sentence", "RU22Fact Test Gemma", 33, 283, 250, 196.21, true},
    {"sentence", "RU22Fact Test LLaMA", 37, 297, 260, 200.84, true},
    {"sentence", "RU22Fact Test Mistral", 32, 294, 262, 208.96, true},
    {"sentence", "X-FACT ID Gemma", 310, 465, 155, 30.60, true},
    {"sentence", "X-FACT ID LLaMA", 273, 433, 160, 35.81, true},
    {"sentence", "X-FACT ID Mistral", 283, 408, 125, 22.25, true},
    {"sentence", "X-FACT OOD Gemma", 212, 344, 132, 30.87, true},
    {"sentence", "X-FACT OOD LLaMA", 208, 241, 33, 2.28, false},
    {"sentence", "X-FACT OOD Mistral", 158, 297, 139, 41.85, true},
    {"sentence", "X-FACT ZS Gemma", 364, 367, 3, 0.01, false},
    {"sentence", "X-FACT ZS LLaMA", 259, 402, 143, 30.51, true},
    {"sentence", "X-FACT ZS Mistral", 347, 465, 118, 16.86, true},
    {"concrete", "X-FACT ID Gemma", 294, 1225, 931, 569.39, true},
    {"concrete", "X-FACT ID LLaMA", 260, 1084, 824, 503.97, true},
    {"concrete", "X-FACT ID Mistral", 290, 1186, 896, 542.70, true},
    {"concrete", "X-FACT OOD Gemma", 235, 563, 328, 134.00, true},
    {"concrete", "X-FACT OOD LLaMA", 199, 568, 369, 176.56, true},
    {"concrete", "X-FACT OOD Mistral", 180, 588, 408, 215.69, true},
    {"concrete", "X-FACT ZS Gemma", 357, 734, 377, 129.58, true},
    {"concrete", "X-FACT ZS LLaMA", 337, 721, 384, 138.65, true},
    {"concrete", "X-FACT ZS Mistral", 365, 669, 304, 88.79, true},
    {"snippet", "X-FACT ID Gemma", 356, 1052, 696, 343.06, true},
    {"snippet", "X-FACT ID LLaMA", 320, 1145, 825, 463.46, true},
    {"snippet", "X-FACT ID Mistral", 359, 1031, 672, 323.91, true},
    {"snippet", "X-FACT OOD Gemma", 227, 503, 276, 103.60, true},
    {"snippet", "X-FACT OOD LLaMA", 246, 522, 276, 98.47, true},
    {"snippet", "X-FACT OOD Mistral", 184, 466, 282, 121.48, true},
    {"snippet", "X-FACT ZS Gemma", 417, 515, 98, 10.10, true},
    {"snippet", "X-FACT ZS LLaMA", 349, 646, 297, 88.06, true},
    {"snippet", "X-FACT ZS Mistral", 364, 622, 258, 66.99, true},
    {"llm", "RU22Fact Test Gemma", 46, 246, 200, 135.62, true},
    {"llm", "RU22Fact Test LLaMA", 44, 261, 217, 152.97, true},
    {"llm", "RU22Fact Test Mistral", 41, 253, 212, 151.43, true},
};

Outcome mcnemar_reproduction() {
  Outcome out;
  std::size_t semantic_rows = 0;
  for (const auto& row : kPublished) {
    if (std::string(row.baseline) == "semantic") ++semantic_rows;
    const auto r = mcnemar({row.b_only, row.o_only});
    const std::string tag = std::string(row.baseline) + " " + row.setting;
    if (std::abs(r.chi2 - row.chi2) > kChi2Tolerance) {
      out.fail(tag + ": chi2 " + std::to_string(r.chi2) + " vs " + std::to_string(row.chi2));
    }
    if (r.net_gain != row.net_gain) out.fail(tag + ": net gain");
    if (mcnemar_significant(r.chi2) != row.significant) out.fail(tag + ": significance");
  }
  if (semantic_rows != 12) out.fail("expected 12 rows against the semantic baseline");
  if (out.pass) out.detail = std::to_string(kPublished.size()) + " rows";
  return out;
}

oracle::Vec random_unit(std::mt19937& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  oracle::Vec v(dim);
  double n = 0;
  for (auto& x : v) {
    x = g(rng);
    n += x * x;
  }
  n = std::sqrt(n);
  for (auto& x : v) x /= n;
  return v;
}

std::vector<EmbeddingVector> wrap(const std::vector<oracle::Vec>& vs) {
  std::vector<EmbeddingVector> out;
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

Outcome stage_oracles() {
  Outcome out;
  std::mt19937 rng(314159);
  std::size_t largest = 0;
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = round == 0 ? 500 : 2 + rng() % 499;
    const std::size_t dim = round == 0 ? 64 : 1 + rng() % 64;
    const std::size_t w = 1 + rng() % 8;
    const std::size_t k = 2 * (rng() % 5) + 1;
    const double p = round == 1 ? 100.0 : 1.0 + (rng() % 9900) / 100.0;
    largest = std::max(largest, n);

    // Topic runs plus noise, so profiles have some structure.
    std::vector<oracle::Vec> vs;
    oracle::Vec topic = random_unit(rng, dim);
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 12 == 0) topic = random_unit(rng, dim);
      auto noise = random_unit(rng, dim);
      oracle::Vec v(dim);
      for (std::size_t d = 0; d < dim; ++d) v[d] = topic[d] + 0.3 * noise[d];
      vs.push_back(v);
    }
    const auto embeddings = wrap(vs);

    const auto raw = shift_scores(embeddings, w);
    const auto raw_ref = oracle::shift_scores(vs, static_cast<int>(w));
    const auto sm = smooth(raw, k);
    const auto sm_ref = oracle::smooth(raw_ref, static_cast<int>(k));
    const double tau = adaptive_threshold(sm, p);
    const double tau_ref = oracle::percentile(sm_ref, p);
    const auto b = select_boundaries(sm, tau);
    const auto b_ref = oracle::boundaries(sm_ref, tau_ref);

    const std::string tag = "profile " + std::to_string(round);
    if (raw.size() != raw_ref.size() || raw.size() != n - 1) {
      out.fail(tag + ": length");
      continue;
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (std::abs(raw[i] - raw_ref[i]) > kStageTolerance) out.fail(tag + ": shift score");
      if (std::abs(sm[i] - sm_ref[i]) > kStageTolerance) out.fail(tag + ": smoothing");
    }
    if (std::abs(tau - tau_ref) > kStageTolerance) out.fail(tag + ": threshold");
    if (b != b_ref) out.fail(tag + ": boundaries");

    const auto profile = compute_shift_profile(embeddings, SeekConfig{w, k, p, 512, 1});
    if (profile.boundaries != b || profile.threshold != tau) out.fail(tag + ": profile");
  }
  if (out.pass) out.detail = "100 profiles, n up to " + std::to_string(largest);
  return out;
}

std::vector<Sentence> synthetic_sentences(std::size_t n) {
  std::vector<Sentence> out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::string t = "s" + std::to_string(i) + " w.";
    const std::size_t len = t.size();
    out.push_back({i, std::move(t), {offset, offset + len}, 2});
    offset += len + 1;
  }
  return out;
}

Outcome planted_boundary() {
  Outcome out;
  std::mt19937 rng(2718);
  for (int round = 0; round < 100; ++round) {
    const std::size_t dim = 2 + rng() % 63;
    const std::size_t a = 3 + rng() % 8;
    const std::size_t b = 3 + rng() % 8;
    // Random orthonormal pair.
    auto u = random_unit(rng, dim);
    auto v = random_unit(rng, dim);
    const double proj = oracle::dot(u, v);
    double norm = 0;
    for (std::size_t d = 0; d < dim; ++d) {
      v[d] -= proj * u[d];
      norm += v[d] * v[d];
    }
    for (auto& x : v) x /= std::sqrt(norm);

    std::vector<oracle::Vec> vs(a, u);
    vs.insert(vs.end(), b, v);
    const auto r = seek_chunk(synthetic_sentences(a + b), wrap(vs), SeekConfig{3, 1, 95.0, 100000, 0},
                              {"d", "c"});
    std::vector<bool> expected(a + b - 1, false);
    expected[a - 1] = true;
    const std::string tag = "planting " + std::to_string(round) + " (" + std::to_string(a) + "+" +
                            std::to_string(b) + ")";
    if (r.profile.boundaries != expected) out.fail(tag + ": boundary set");
    if (r.chunks.size() != 2 || r.chunks[1].sent_range.first != a) out.fail(tag + ": chunks");
  }
  if (out.pass) out.detail = "100 plantings";
  return out;
}

const std::vector<std::string> kWords = {
    "river", "council", "vote", "नदी", "सरकार", "योजना", "мост", "ремонт", "выборы", "水",
    "城市", "مدينة", "ماء", "ponte", "cidade", "rio", "budget", "reform", "दावा"};
const std::vector<std::string> kEnds = {".", "?", "!", "।", "…", "؟"};

std::string random_document(std::mt19937& rng) {
  std::string text;
  const std::size_t sentences = 1 + rng() % 40;
  for (std::size_t s = 0; s < sentences; ++s) {
    const std::size_t words = 1 + rng() % (rng() % 10 == 0 ? 80 : 12);
    for (std::size_t i = 0; i < words; ++i) {
      if (i) text += ' ';
      text += kWords[rng() % kWords.size()];
    }
    text += kEnds[rng() % kEnds.size()];
    text += rng() % 8 == 0 ? "\n\n" : " ";
  }
  return text;
}

// Empty string when the chunk list is a valid packing of `sentences`.
std::string check_chunks(const std::vector<Sentence>& sentences, const std::vector<Chunk>& chunks,
                         std::size_t budget, std::size_t overlap) {
  std::size_t next = 0;
  std::size_t prev_size = 0;
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    const auto& ch = chunks[c];
    const std::size_t owned = ch.owned_first();
    if (owned != next) return "owned spans do not tile the document";
    if (ch.sent_range.last < owned || ch.sent_range.last >= sentences.size()) return "bad range";
    const std::size_t want_prefix = c == 0 ? 0 : std::min(overlap, prev_size);
    if (ch.overlap_prefix_sentences != want_prefix) return "overlap prefix";
    std::size_t owned_tokens = 0;
    for (std::size_t i = owned; i <= ch.sent_range.last; ++i) owned_tokens += sentences[i].token_count;
    if (owned_tokens > budget && owned != ch.sent_range.last) return "budget exceeded";
    std::string text;
    for (std::size_t i = ch.sent_range.first; i <= ch.sent_range.last; ++i) {
      if (!text.empty()) text += ' ';
      text += sentences[i].text;
    }
    if (text != ch.text || count_tokens(text) != ch.token_count) return "chunk text";
    prev_size = ch.sent_range.last - ch.sent_range.first + 1;
    next = ch.sent_range.last + 1;
  }
  if (next != sentences.size()) return "sentences left uncovered";
  return {};
}

Outcome partition_invariants() {
  Outcome out;
  std::mt19937 rng(1618);
  auto provider = make_hash_provider(64, 9);
  std::size_t checked = 0;
  std::size_t oversized = 0;
  for (ChunkMethod method : {ChunkMethod::kSeek, ChunkMethod::kSentence, ChunkMethod::kSemantic}) {
    for (int round = 0; round < 200; ++round) {
      DocumentRecord doc{"doc" + std::to_string(round), "claim", std::nullopt, random_document(rng), "xx"};
      ChunkOptions options;
      options.method = method;
      options.seek.window = 1 + rng() % 5;
      options.seek.smoothing = 2 * (rng() % 3) + 1;
      options.seek.percentile = 50.0 + (rng() % 500) / 10.0;
      options.seek.budget = 4 + rng() % 60;
      options.seek.overlap_sentences = method == ChunkMethod::kSeek ? rng() % 3 : 0;
      options.semantic.tau = (rng() % 100) / 100.0;
      options.semantic.budget = options.seek.budget;

      const auto first = chunk_document(doc, options, provider.get());
      const auto second = chunk_document(doc, options, provider.get());
      std::string a, b;
      for (const auto& c : first) a += chunk_to_json_line(c);
      for (const auto& c : second) b += chunk_to_json_line(c);
      const std::string tag = std::string(chunk_method_name(method)) + " doc " + std::to_string(round);
      if (a != b) out.fail(tag + ": nondeterministic output");
      const auto why = check_chunks(split_sentences(doc.text), first, options.seek.budget,
                                    options.seek.overlap_sentences);
      if (!why.empty()) out.fail(tag + ": " + why);
      for (const auto& c : first) {
        if (c.sent_range.first + c.overlap_prefix_sentences == c.sent_range.last &&
            c.token_count > options.seek.budget) {
          ++oversized;
        }
      }
      ++checked;
    }
  }
  if (oversized == 0) out.fail("no over-budget sentence was exercised");
  if (out.pass) {
    out.detail = std::to_string(checked) + " documents, " + std::to_string(oversized) +
                 " oversized single-sentence chunks";
  }
  return out;
}

std::string compare_ranked(const EvidenceSet& got,
                           const std::vector<std::pair<std::string, double>>& want) {
  if (got.ranked.size() != want.size()) return "length";
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (got.ranked[i].chunk_id != want[i].first) return "order at rank " + std::to_string(i);
    if (std::abs(got.ranked[i].score - want[i].second) > kScoreTolerance) return "score";
  }
  return {};
}

Outcome retrieval_exactness() {
  Outcome out;
  std::mt19937 rng(4242);
  std::size_t queries = 0;
  for (std::size_t size : {1u, 7u, 100u, 1000u, 5000u, 10000u}) {
    const std::size_t dim = 8 + rng() % 57;
    const std::size_t claims = 1 + size / 50;
    std::vector<oracle::PoolItem> pool;
    std::vector<IndexEntry> entries;
    for (std::size_t i = 0; i < size; ++i) {
      oracle::PoolItem item{"chunk" + std::to_string(i), "claim" + std::to_string(rng() % claims),
                            random_unit(rng, dim)};
      // Duplicated vectors force the id tie-break.
      if (i > 0 && rng() % 20 == 0) item.v = pool[rng() % i].v;
      entries.push_back({item.chunk_id, item.claim_id, EmbeddingVector(item.v)});
      pool.push_back(std::move(item));
    }
    const ChunkIndex index(std::move(entries));
    for (int round = 0; round < 10; ++round) {
      const auto q = random_unit(rng, dim);
      const std::string claim = "claim" + std::to_string(rng() % claims);
      const std::size_t n = 1 + rng() % 40;
      const std::size_t k = 1 + rng() % n;
      for (bool scoped : {true, false}) {
        const auto want = oracle::exhaustive_topk(pool, q, k, scoped ? &claim : nullptr);
        const auto got = retrieve_with_vector(index, claim, EmbeddingVector(q), {n, k}, scoped);
        const std::string tag = "pool " + std::to_string(size) + " query " + std::to_string(round);
        auto why = compare_ranked(got, want);
        if (!why.empty()) out.fail(tag + ": " + why);
        // Exact search makes TopK of TopN equal TopK of the whole pool.
        why = compare_ranked(retrieve_with_vector(index, claim, EmbeddingVector(q), {k, k}, scoped), want);
        if (!why.empty()) out.fail(tag + ": composition " + why);
        ++queries;
      }
    }
  }
  if (out.pass) out.detail = std::to_string(queries) + " queries, pools up to 10000";
  return out;
}

Chunk text_chunk(std::string id, std::string text) {
  Chunk c;
  c.chunk_id = std::move(id);
  c.text = std::move(text);
  return c;
}

Outcome prompt_goldens() {
  Outcome out;
  const fs::path dir = fs::path(SEEKFC_GOLDEN_DIR) / "prompts";

  Claim hi{"c1", "प्रधानमंत्री ने नई योजना की घोषणा की।", "hi", std::nullopt, std::nullopt};
  std::unordered_map<std::string, Chunk> lookup{
      {"d#0", text_chunk("d#0", "सरकार ने सोमवार को योजना शुरू की।")},
      {"d#1", text_chunk("d#1", "विपक्ष ने इस दावे पर सवाल उठाए।")},
  };
  const auto xfact = build_prompt(hi, {"c1", {{"d#0", 0.9}, {"d#1", 0.4}}, 2}, lookup, Dataset::kXFact);
  const auto xfact_golden = testing::slurp(dir / "xfact_prompt.txt");
  if (xfact.rendered != xfact_golden) out.fail("x-fact prompt differs from golden");

  Claim ru{"r1", "Мост был закрыт на ремонт в мае.", "ru", std::nullopt, std::nullopt};
  const auto ru22 = build_prompt(ru, {"r1", {}, 1}, {}, Dataset::kRu22Fact);
  const auto ru_golden = testing::slurp(dir / "ru22fact_prompt.txt");
  if (ru22.rendered != ru_golden) out.fail("ru22fact prompt differs from golden");

  const auto judge = build_completeness_prompt("The {evidence} tower is 300 m tall.",
                                               "The tower measures 300 metres.");
  const auto judge_golden = testing::slurp(dir / "completeness_prompt.txt");
  if (judge != judge_golden) out.fail("completeness prompt differs from golden");

  for (const auto* g : {&xfact_golden, &ru_golden}) {
    if (g->find("Provide exactly one label.") == std::string::npos) out.fail("golden lacks instruction");
  }
  if (judge_golden.find("Return only one word") == std::string::npos) out.fail("golden lacks judge line");
  if (out.pass) out.detail = "3 goldens byte-identical";
  return out;
}

Outcome macro_f1_oracle() {
  Outcome out;
  std::mt19937 rng(8080);
  double worst = 0.0;
  for (int round = 0; round < 100; ++round) {
    const std::size_t labels = 1 + rng() % 8;
    LabelPairs d;
    for (std::size_t i = 0; i < labels; ++i) d.label_set.push_back("label-" + std::to_string(i));
    const std::size_t count = 1 + rng() % 1000;
    for (std::size_t i = 0; i < count; ++i) {
      const auto& gold = d.label_set[rng() % labels];
      std::string pred = rng() % 15 == 0 ? "unlisted" : d.label_set[rng() % labels];
      d.pairs.emplace_back(gold, pred);
    }
    const double diff = std::abs(macro_f1(d) - oracle::macro_f1(d.pairs, d.label_set));
    worst = std::max(worst, diff);
    if (diff > kF1Tolerance) out.fail("label set " + std::to_string(round));
  }
  if (out.pass) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "100 label sets, max diff %.1e", worst);
    out.detail = buf;
  }
  return out;
}

int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string("'") + SEEKFC_CLI + "' " + args + " > '" + log.string() + "' 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

Outcome cli_smoke() {
  Outcome out;
  const fs::path in = fs::path(SEEKFC_FIXTURE_DIR) / "smoke";
  const fs::path golden = fs::path(SEEKFC_GOLDEN_DIR) / "smoke";
  testing::TempDir dir;
  const auto log = dir / "log.txt";

  const std::vector<std::pair<std::string, std::string>> steps = {
      {"chunks.jsonl", "chunk --input " + q(in / "docs.jsonl") + " --out " + q(dir / "chunks.jsonl")},
      {"evidence.jsonl", "retrieve --claims " + q(in / "claims.jsonl") + " --chunks " +
                             q(dir / "chunks.jsonl") + " --out " + q(dir / "evidence.jsonl")},
      {"prompts.jsonl", "prompt --dataset xfact --claims " + q(in / "claims.jsonl") + " --evidence " +
                            q(dir / "evidence.jsonl") + " --chunks " + q(dir / "chunks.jsonl") +
                            " --out " + q(dir / "prompts.jsonl")},
      {"similarity.json", "eval similarity --evidence " + q(dir / "evidence.jsonl") + " --out " +
                              q(dir / "similarity.json")},
      {"macro_f1.json", "eval macro-f1 --pred " + q(in / "pred.jsonl") +
                            " --labels true,false,half-true --out " + q(dir / "macro_f1.json")},
      {"mcnemar.json", "eval mcnemar --paired " + q(in / "paired.jsonl") + " --out " +
                           q(dir / "mcnemar.json")},
  };
  for (const auto& [file, args] : steps) {
    const int status = run_cli(args, log);
    if (status != 0) {
      out.fail(file + ": exit " + std::to_string(status) + ": " + testing::slurp(log));
      return out;
    }
    if (testing::slurp(dir / file) != testing::slurp(golden / file)) out.fail(file + " differs from golden");
  }
  if (out.pass) out.detail = std::to_string(steps.size()) + " outputs match goldens";
  return out;
}

}  // namespace

int main() {
  spdlog::set_level(spdlog::level::err);
  const std::vector<Criterion> criteria = {
      {"mcnemar_reproduction", 1.0, mcnemar_reproduction},
      {"seek_stage_oracles", 30.0, stage_oracles},
      {"planted_boundary_recovery", 10.0, planted_boundary},
      {"partition_budget_invariants", 0.0, partition_invariants},
      {"retrieval_exactness", 60.0, retrieval_exactness},
      {"prompt_byte_exactness", 0.0, prompt_goldens},
      {"macro_f1_oracle", 0.0, macro_f1_oracle},
      {"cli_smoke", 10.0, cli_smoke},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.fail("took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    }
    std::printf("%s %-28s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures;
}
