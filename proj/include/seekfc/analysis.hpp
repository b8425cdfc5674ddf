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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seekfc/corpus.hpp"

namespace seekfc {

// Discordant pairs of a paired comparison.
struct ContingencyCounts {
  std::uint64_t b_only = 0;  // correct only under the baseline
  std::uint64_t o_only = 0;  // correct only under ours
};

struct McNemarResult {
  double chi2 = 0.0;
  std::int64_t net_gain = 0;
  double p_value = 1.0;
};

inline constexpr double kChi2Critical005 = 3.841459;

// Continuity-corrected statistic (|b - o| - 1)^2 / (b + o).
McNemarResult mcnemar(const ContingencyCounts& counts);
bool mcnemar_significant(double chi2);

// Upper tail of the chi-square distribution with one degree of freedom.
double chi2_1df_survival(double chi2);

struct LabelPairs {
  std::vector<std::pair<std::string, std::string>> pairs;  // (gold, predicted)
  std::vector<std::string> label_set;
};

struct ClassScore {
  std::string label;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

struct MacroF1Report {
  double macro_f1 = 0.0;
  std::vector<ClassScore> per_class;
  std::size_t out_of_set_predictions = 0;
};

// Unweighted mean of per-class F1 over label_set. Classes that never occur
// contribute 0; predictions outside label_set are wrong for every class.
MacroF1Report macro_f1_report(const LabelPairs& data);
double macro_f1(const LabelPairs& data);

struct SummaryQuantiles {
  double mean = 0.0;
  double median = 0.0;
  double p25 = 0.0;
  double p75 = 0.0;
};

struct SimilarityStats {
  std::vector<std::pair<std::string, double>> per_claim;
  SummaryQuantiles summary;
  std::size_t skipped = 0;
};

SimilarityStats similarity_stats(const std::vector<EvidenceSet>& evidence_sets);

// Linear-interpolation quantile, q in [0, 1]. Throws on empty input.
double quantile(std::vector<double> values, double q);

enum class Completeness { kComplete, kPartial, kIrrelevant };

Completeness parse_completeness(std::string_view label);

struct CompletenessTally {
  std::array<double, 3> percent{};  // Complete, Partial, Irrelevant
  std::size_t total = 0;
  bool empty() const { return total == 0; }
};

CompletenessTally completeness_tally(const std::vector<Completeness>& labels);

// Reported shares of Complete evidence, shown as reference lines only.
inline constexpr double kReferenceCompleteXFact = 54.3;
inline constexpr double kReferenceCompleteRu22Fact = 76.0;

}  // namespace seekfc
