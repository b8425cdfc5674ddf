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

// seekfc: chunk crawled fact-checking documents, retrieve claim evidence,
// render veracity prompts and compute evaluation statistics.
//
//   seekfc chunk    --input docs.jsonl --method seek --out chunks.jsonl
//   seekfc retrieve --claims claims.jsonl --chunks chunks.jsonl --out evidence.jsonl
//   seekfc prompt   --dataset xfact --claims ... --evidence ... --chunks ... --out prompts.jsonl
//   seekfc eval     macro-f1 | mcnemar | similarity | completeness ...
//
// Exit codes: 0 success, 1 input or validation error, 2 usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "seekfc/analysis.hpp"
#include "seekfc/corpus.hpp"
#include "seekfc/error.hpp"
#include "seekfc/jsonl.hpp"
#include "seekfc/manifest.hpp"
#include "seekfc/pipeline.hpp"
#include "seekfc/prompts.hpp"
#include "seekfc/version.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

struct EmbedderFlags {
  std::string spec = "hash";
  std::size_t dim = 256;
  std::uint64_t seed = 0;
  int timeout_ms = 30000;

  void add_to(CLI::App& app) {
    app.add_option("--embedder", spec, "hash | file:<path> | service:<url>")
        ->capture_default_str();
    app.add_option("--embed-dim", dim, "hash embedder dimension")->capture_default_str();
    app.add_option("--embed-seed", seed, "hash embedder seed")->capture_default_str();
    app.add_option("--timeout-ms", timeout_ms, "embedding service timeout")->capture_default_str();
  }

  std::unique_ptr<seekfc::EmbeddingProvider> make() const {
    return seekfc::make_provider(spec, {dim, seed, timeout_ms});
  }

  json echo() const {
    return {{"embedder", spec}, {"embed_dim", dim}, {"embed_seed", seed}, {"timeout_ms", timeout_ms}};
  }
};

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

// Writes a report to `out`, or to stdout when `out` is empty.
void emit_report(const ordered_json& report, const std::string& out) {
  const auto text = report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    seekfc::jsonl::write_atomically(out, text);
  }
}

// ---- chunk ----------------------------------------------------------------

struct ChunkCommand {
  std::string input, out, method = "seek";
  seekfc::ChunkOptions options;
  EmbedderFlags embedder;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("chunk", "Split documents into evidence chunks");
    cmd->add_option("--input", input, "documents (line-delimited JSON)")->required();
    cmd->add_option("--out", out, "chunk output file")->required();
    cmd->add_option("--method", method, "seek | sentence | semantic")->capture_default_str();
    cmd->add_option("--window", options.seek.window, "context window w")->capture_default_str();
    cmd->add_option("--smooth", options.seek.smoothing, "odd smoothing width k")->capture_default_str();
    cmd->add_option("--percentile", options.seek.percentile, "boundary percentile p")->capture_default_str();
    cmd->add_option("--budget", options.seek.budget, "token budget per chunk")->capture_default_str();
    cmd->add_option("--overlap", options.seek.overlap_sentences, "overlap sentences")->capture_default_str();
    cmd->add_option("--tau", options.semantic.tau, "semantic baseline similarity threshold")
        ->capture_default_str();
    embedder.add_to(*cmd);
    cmd->callback([this] { run(); });
  }

  void run() {
    options.method = seekfc::parse_chunk_method(method);
    options.semantic.budget = options.seek.budget;
    options.validate();

    const auto docs = seekfc::read_documents(input);
    std::unique_ptr<seekfc::EmbeddingProvider> provider;
    if (options.needs_embeddings()) provider = embedder.make();

    std::vector<seekfc::Chunk> chunks;
    std::size_t done = 0;
    for (const auto& doc : docs) {
      auto doc_chunks = seekfc::chunk_document(doc, options, provider.get());
      std::move(doc_chunks.begin(), doc_chunks.end(), std::back_inserter(chunks));
      if (++done % 1000 == 0) spdlog::info("chunked {} / {} documents", done, docs.size());
    }
    seekfc::write_chunks(chunks, out);

    json config = {{"method", method},
                   {"window", options.seek.window},
                   {"smooth", options.seek.smoothing},
                   {"percentile", options.seek.percentile},
                   {"budget", options.seek.budget},
                   {"overlap", options.seek.overlap_sentences},
                   {"tau", options.semantic.tau},
                   {"tokenizer", "whitespace"},
                   {"documents", docs.size()},
                   {"chunks", chunks.size()}};
    config.update(embedder.echo());
    seekfc::write_manifest(seekfc::make_manifest("chunk", config, {input}), out);
  }
};

// ---- retrieve -------------------------------------------------------------

struct RetrieveCommand {
  std::string claims, chunks, out;
  seekfc::RetrievalConfig config;
  bool global_pool = false;
  EmbedderFlags embedder;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("retrieve", "Rank chunks against each claim");
    cmd->add_option("--claims", claims, "claims (line-delimited JSON)")->required();
    cmd->add_option("--chunks", chunks, "chunk file from `seekfc chunk`")->required();
    cmd->add_option("--out", out, "evidence output file")->required();
    cmd->add_option("--top-n", config.top_n, "first-stage candidates N")->capture_default_str();
    cmd->add_option("--top-k", config.top_k, "final evidence chunks K")->capture_default_str();
    cmd->add_flag("--global-pool", global_pool,
                  "search every chunk instead of only the claim's own documents");
    embedder.add_to(*cmd);
    cmd->callback([this] { run(); });
  }

  void run() {
    config.validate();
    const auto claim_list = seekfc::read_claims(claims);
    const auto chunk_list = seekfc::read_chunks(chunks);
    if (chunk_list.empty()) spdlog::warn("{}: no chunks; every evidence list will be empty", chunks);
    const auto provider = embedder.make();
    const auto evidence =
        seekfc::retrieve_all(claim_list, chunk_list, *provider, config, !global_pool);
    seekfc::write_evidence(evidence, out);

    json echo = {{"top_n", config.top_n},
                 {"top_k", config.top_k},
                 {"scope", global_pool ? "global" : "claim"},
                 {"index", "exact cosine"},
                 {"rerank", "bi-encoder cosine"},
                 {"claim_prefix", std::string(seekfc::kClaimInstructionPrefix)},
                 {"claims", claim_list.size()},
                 {"chunks", chunk_list.size()}};
    echo.update(embedder.echo());
    seekfc::write_manifest(seekfc::make_manifest("retrieve", echo, {claims, chunks}), out);
  }
};

// ---- prompt ---------------------------------------------------------------

struct PromptCommand {
  std::string dataset, claims, evidence, chunks, out;
  bool completeness = false;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("prompt", "Render veracity or completeness prompts");
    cmd->add_option("--dataset", dataset, "xfact | ru22fact")->required();
    cmd->add_option("--claims", claims)->required();
    cmd->add_option("--evidence", evidence)->required();
    cmd->add_option("--chunks", chunks)->required();
    cmd->add_option("--out", out)->required();
    cmd->add_flag("--completeness", completeness, "emit evidence-completeness judge prompts");
    cmd->callback([this] { run(); });
  }

  void run() {
    const auto ds = seekfc::parse_dataset(dataset);
    const auto claim_list = seekfc::read_claims(claims);
    const auto evidence_list = seekfc::read_evidence(evidence);
    std::unordered_map<std::string, seekfc::Chunk> lookup;
    for (auto& c : seekfc::read_chunks(chunks)) lookup.emplace(c.chunk_id, std::move(c));
    std::unordered_map<std::string, const seekfc::EvidenceSet*> by_claim;
    for (const auto& e : evidence_list) by_claim.emplace(e.claim_id, &e);

    std::vector<std::string> lines;
    for (const auto& claim : claim_list) {
      seekfc::EvidenceSet empty{claim.claim_id, {}, 1};
      const seekfc::EvidenceSet* ev = &empty;
      if (auto it = by_claim.find(claim.claim_id); it != by_claim.end()) {
        ev = it->second;
      } else {
        spdlog::warn("claim \"{}\" has no evidence record", claim.claim_id);
      }
      const auto record = seekfc::build_prompt(claim, *ev, lookup, ds);
      ordered_json obj;
      obj["claim_id"] = claim.claim_id;
      if (completeness) {
        std::string joined;
        for (const auto& t : record.evidence_texts) {
          if (!joined.empty()) joined += "\n\n";
          joined += t;
        }
        obj["prompt"] = seekfc::build_completeness_prompt(claim.text, joined);
      } else {
        obj["label"] = claim.label ? json(*claim.label) : json(nullptr);
        obj["prompt"] = record.rendered;
      }
      lines.push_back(obj.dump());
    }
    seekfc::jsonl::write_atomically(out, join_lines(lines));

    json echo = {{"dataset", dataset},
                 {"kind", completeness ? "completeness" : "veracity"},
                 {"template", "instruction \\n\\nClaim: <claim> (\\n\\nEvidence [r]: <chunk>)*"},
                 {"claims", claim_list.size()}};
    seekfc::write_manifest(seekfc::make_manifest("prompt", echo, {claims, evidence, chunks}), out);
  }
};

// ---- eval -----------------------------------------------------------------

std::vector<std::string> split_labels(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::string required_field(const json& obj, const char* key, std::size_t line) {
  if (!obj.contains(key) || !obj[key].is_string()) {
    throw seekfc::InputError("line " + std::to_string(line) + ": missing string field \"" + key + "\"");
  }
  return obj[key].get<std::string>();
}

bool required_bool(const json& obj, const char* key, std::size_t line) {
  if (!obj.contains(key) || !obj[key].is_boolean()) {
    throw seekfc::InputError("line " + std::to_string(line) + ": missing boolean field \"" + key + "\"");
  }
  return obj[key].get<bool>();
}

struct EvalCommand {
  std::string pred, labels, paired, evidence, judgements, out, csv;

  void attach(CLI::App& app) {
    auto* eval = app.add_subcommand("eval", "Evaluation statistics");
    eval->require_subcommand(1);

    auto* f1 = eval->add_subcommand("macro-f1", "Macro-F1 over a label set");
    f1->add_option("--pred", pred, "predictions {claim_id, gold, predicted}")->required();
    f1->add_option("--labels", labels, "comma-separated label set")->required();
    f1->add_option("--out", out, "report file (default stdout)");
    f1->add_option("--csv", csv, "per-class CSV");
    f1->callback([this] { macro_f1(); });

    auto* mc = eval->add_subcommand("mcnemar", "Continuity-corrected McNemar test");
    mc->add_option("--paired", paired, "{claim_id, baseline_correct, ours_correct}")->required();
    mc->add_option("--out", out, "report file (default stdout)");
    mc->callback([this] { mcnemar(); });

    auto* sim = eval->add_subcommand("similarity", "Claim-evidence cosine summary");
    sim->add_option("--evidence", evidence, "evidence file from `seekfc retrieve`")->required();
    sim->add_option("--out", out, "report file (default stdout)");
    sim->add_option("--csv", csv, "per-claim CSV");
    sim->callback([this] { similarity(); });

    auto* comp = eval->add_subcommand("completeness", "Tally judge completeness labels");
    comp->add_option("--judgements", judgements, "{claim_id, label} judge outputs")->required();
    comp->add_option("--out", out, "report file (default stdout)");
    comp->callback([this] { completeness(); });
  }

  void macro_f1() {
    seekfc::LabelPairs data;
    data.label_set = split_labels(labels);
    seekfc::jsonl::for_each_object(pred, [&](const json& obj, std::size_t line) {
      data.pairs.emplace_back(required_field(obj, "gold", line), required_field(obj, "predicted", line));
    });
    const auto report = seekfc::macro_f1_report(data);
    ordered_json j;
    j["metric"] = "macro_f1";
    j["macro_f1"] = report.macro_f1;
    j["pairs"] = data.pairs.size();
    j["out_of_set_predictions"] = report.out_of_set_predictions;
    j["empty_class_policy"] = "zero-fill";
    j["per_class"] = ordered_json::array();
    std::string table = "label,precision,recall,f1,support\n";
    for (const auto& c : report.per_class) {
      ordered_json row;
      row["label"] = c.label;
      row["precision"] = c.precision;
      row["recall"] = c.recall;
      row["f1"] = c.f1;
      row["support"] = c.support;
      j["per_class"].push_back(row);
      table += c.label + "," + json(c.precision).dump() + "," + json(c.recall).dump() + "," +
               json(c.f1).dump() + "," + std::to_string(c.support) + "\n";
    }
    if (!csv.empty()) seekfc::jsonl::write_atomically(csv, table);
    emit_report(j, out);
  }

  void mcnemar() {
    seekfc::ContingencyCounts counts;
    std::size_t pairs = 0;
    seekfc::jsonl::for_each_object(paired, [&](const json& obj, std::size_t line) {
      required_field(obj, "claim_id", line);
      const bool base = required_bool(obj, "baseline_correct", line);
      const bool ours = required_bool(obj, "ours_correct", line);
      ++pairs;
      if (base && !ours) ++counts.b_only;
      if (ours && !base) ++counts.o_only;
    });
    const auto r = seekfc::mcnemar(counts);
    ordered_json j;
    j["test"] = "mcnemar";
    j["correction"] = "continuity";
    j["pairs"] = pairs;
    j["b_only"] = counts.b_only;
    j["o_only"] = counts.o_only;
    j["net_gain"] = r.net_gain;
    j["chi2"] = r.chi2;
    j["p_value"] = r.p_value;
    j["alpha"] = 0.05;
    j["significant"] = seekfc::mcnemar_significant(r.chi2);
    emit_report(j, out);
  }

  void similarity() {
    const auto stats = seekfc::similarity_stats(seekfc::read_evidence(evidence));
    ordered_json j;
    j["metric"] = "claim_evidence_cosine";
    j["claims"] = stats.per_claim.size();
    j["skipped"] = stats.skipped;
    j["summary"] = {{"mean", stats.summary.mean},
                    {"median", stats.summary.median},
                    {"p25", stats.summary.p25},
                    {"p75", stats.summary.p75}};
    j["per_claim"] = ordered_json::array();
    std::string table = "claim_id,mean_topk_cosine\n";
    for (const auto& [id, mean] : stats.per_claim) {
      ordered_json row;
      row["claim_id"] = id;
      row["mean_topk_cosine"] = mean;
      j["per_claim"].push_back(row);
      table += id + "," + json(mean).dump() + "\n";
    }
    if (!csv.empty()) seekfc::jsonl::write_atomically(csv, table);
    emit_report(j, out);
  }

  void completeness() {
    std::vector<seekfc::Completeness> parsed;
    seekfc::jsonl::for_each_object(judgements, [&](const json& obj, std::size_t line) {
      parsed.push_back(seekfc::parse_completeness(required_field(obj, "label", line)));
    });
    const auto tally = seekfc::completeness_tally(parsed);
    ordered_json j;
    j["metric"] = "evidence_completeness";
    j["total"] = tally.total;
    j["empty"] = tally.empty();
    j["percent"] = {{"complete", tally.percent[0]},
                    {"partial", tally.percent[1]},
                    {"irrelevant", tally.percent[2]}};
    j["reference_complete_percent"] = {{"xfact", seekfc::kReferenceCompleteXFact},
                                       {"ru22fact", seekfc::kReferenceCompleteRu22Fact}};
    emit_report(j, out);
  }
};

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_st("seekfc"));
  spdlog::set_pattern("seekfc: %l: %v");

  CLI::App app{"Evidence chunking, retrieval and evaluation for multilingual fact-checking"};
  app.set_version_flag("--version", std::string(seekfc::kVersion));
  app.require_subcommand(1);

  ChunkCommand chunk;
  RetrieveCommand retrieve;
  PromptCommand prompt;
  EvalCommand eval;
  chunk.attach(app);
  retrieve.attach(app);
  prompt.attach(app);
  eval.attach(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const seekfc::Error& e) {
    std::cerr << "seekfc: error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "seekfc: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
