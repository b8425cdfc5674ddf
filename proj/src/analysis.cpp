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

#include "seekfc/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "seekfc/error.hpp"

namespace seekfc {

double chi2_1df_survival(double chi2) {
  if (chi2 <= 0.0) return 1.0;
  return std::erfc(std::sqrt(chi2 / 2.0));
}

McNemarResult mcnemar(const ContingencyCounts& counts) {
  const std::uint64_t total = counts.b_only + counts.o_only;
  if (total == 0) throw InputError("McNemar statistic undefined: no discordant pairs");
  const double diff = std::abs(static_cast<double>(counts.b_only) -
                               static_cast<double>(counts.o_only));
  const double corrected = diff - 1.0;
  McNemarResult r;
  r.chi2 = corrected * corrected / static_cast<double>(total);
  r.net_gain = static_cast<std::int64_t>(counts.o_only) - static_cast<std::int64_t>(counts.b_only);
  r.p_value = chi2_1df_survival(r.chi2);
  return r;
}

bool mcnemar_significant(double chi2) { return chi2 >= kChi2Critical005; }

MacroF1Report macro_f1_report(const LabelPairs& data) {
  if (data.pairs.empty()) throw InputError("macro-F1: no prediction pairs");
  if (data.label_set.empty()) throw InputError("macro-F1: empty label set");

  std::unordered_map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < data.label_set.size(); ++i) {
    if (!slot.emplace(data.label_set[i], i).second) {
      throw InputError("macro-F1: duplicate label \"" + data.label_set[i] + "\"");
    }
  }

  const std::size_t c = data.label_set.size();
  std::vector<std::size_t> tp(c, 0), fp(c, 0), fn(c, 0), support(c, 0);
  MacroF1Report report;
  for (const auto& [gold, pred] : data.pairs) {
    auto g = slot.find(gold);
    if (g == slot.end()) throw InputError("macro-F1: gold label \"" + gold + "\" not in label set");
    ++support[g->second];
    auto p = slot.find(pred);
    if (p == slot.end()) {
      ++report.out_of_set_predictions;
      ++fn[g->second];
    } else if (p->second == g->second) {
      ++tp[g->second];
    } else {
      ++fn[g->second];
      ++fp[p->second];
    }
  }

  double sum = 0.0;
  for (std::size_t i = 0; i < c; ++i) {
    ClassScore s;
    s.label = data.label_set[i];
    s.support = support[i];
    s.precision = tp[i] + fp[i] ? static_cast<double>(tp[i]) / static_cast<double>(tp[i] + fp[i]) : 0.0;
    s.recall = tp[i] + fn[i] ? static_cast<double>(tp[i]) / static_cast<double>(tp[i] + fn[i]) : 0.0;
    s.f1 = s.precision + s.recall > 0.0
               ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
               : 0.0;
    sum += s.f1;
    report.per_class.push_back(std::move(s));
  }
  report.macro_f1 = sum / static_cast<double>(c);
  return report;
}

double macro_f1(const LabelPairs& data) { return macro_f1_report(data).macro_f1; }

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw Error("quantile: empty input");
  std::sort(values.begin(), values.end());
  const double rank = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(rank));
  const auto hi = static_cast<std::size_t>(std::ceil(rank));
  return values[lo] + (rank - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

SimilarityStats similarity_stats(const std::vector<EvidenceSet>& evidence_sets) {
  SimilarityStats stats;
  std::vector<double> means;
  for (const auto& e : evidence_sets) {
    if (e.ranked.empty()) {
      ++stats.skipped;
      continue;
    }
    double sum = 0.0;
    for (const auto& r : e.ranked) sum += r.score;
    const double mean = sum / static_cast<double>(e.ranked.size());
    stats.per_claim.emplace_back(e.claim_id, mean);
    means.push_back(mean);
  }
  if (means.empty()) return stats;
  stats.summary.mean = std::accumulate(means.begin(), means.end(), 0.0) /
                       static_cast<double>(means.size());
  stats.summary.median = quantile(means, 0.5);
  stats.summary.p25 = quantile(means, 0.25);
  stats.summary.p75 = quantile(means, 0.75);
  return stats;
}

Completeness parse_completeness(std::string_view label) {
  std::string key;
  for (char ch : label) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '.') {
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
  }
  if (key == "complete") return Completeness::kComplete;
  if (key == "partial") return Completeness::kPartial;
  if (key == "irrelevant") return Completeness::kIrrelevant;
  throw InputError("unknown completeness label \"" + std::string(label) + "\"");
}

CompletenessTally completeness_tally(const std::vector<Completeness>& labels) {
  CompletenessTally tally;
  tally.total = labels.size();
  if (labels.empty()) return tally;
  std::array<std::size_t, 3> counts{};
  for (auto l : labels) ++counts[static_cast<std::size_t>(l)];
  for (std::size_t i = 0; i < 3; ++i) {
    tally.percent[i] = 100.0 * static_cast<double>(counts[i]) / static_cast<double>(labels.size());
  }
  return tally;
}

}  // namespace seekfc
