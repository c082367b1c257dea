// Copyright 2026 The Tempaxis Authors.
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

#ifndef TEMPAXIS_METRICS_H_
#define TEMPAXIS_METRICS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tempaxis/annotation.h"
#include "tempaxis/relation_files.h"

namespace tempaxis {

// kappa = (p_o - p_e) / (1 - p_e). Returns 1 when p_e = 1 and p_o = 1.
// Throws kLengthMismatch or kEmpty.
double CohensKappa(const std::vector<std::string> &a, const std::vector<std::string> &b);

struct LabelAgreement {
  double kappa = 1.0;  // one-vs-rest
  double f1 = 1.0;     // `a` is the reference
  std::optional<double> precision;  // unset when `b` never predicts the label
  std::optional<double> recall;     // unset when `a` never uses the label
  double distribution = 0.0;        // frequency in `a`
  bool vacuous = false;             // label absent from both sequences
};

struct AgreementReport {
  double overall_kappa = 0.0;
  // Micro-averaged F1 over all labels with `a` as reference; equals the
  // observed agreement.
  double overall_f1 = 0.0;
  std::map<std::string, LabelAgreement> per_label;
  std::size_t n_items = 0;
};

AgreementReport PerLabelAgreement(const std::vector<std::string> &a,
                                  const std::vector<std::string> &b,
                                  const std::vector<std::string> &labels);

class ConfusionMatrix {
 public:
  ConfusionMatrix(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  void Add(const std::string &row, const std::string &col, long long count = 1);

  const std::vector<std::string> &row_labels() const { return row_labels_; }
  const std::vector<std::string> &col_labels() const { return col_labels_; }
  long long At(const std::string &row, const std::string &col) const;
  long long RowTotal(const std::string &row) const;
  long long ColTotal(const std::string &col) const;
  long long Total() const;

  // Set when the matrix was built from an empty intersection.
  bool empty_intersection = false;

 private:
  std::size_t RowIndex(const std::string &label) const;
  std::size_t ColIndex(const std::string &label) const;

  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::vector<long long>> counts_;
};

// Counts over pairs present in both sets, rows = `theirs` (projected to
// start points), columns = `ours`. A pair stored reversed in `theirs` has its
// label inverted first. Labels are b, a, e, v.
ConfusionMatrix CompareDatasets(
    const RelationSet &ours, const RelationSet &theirs,
    PointRelation (*projector)(IntervalRelation) = ToStartPointRelation);

struct McNemarResult {
  long long b = 0;  // x and not y
  long long c = 0;  // y and not x
  std::optional<double> chi_square;  // unset when b + c = 0
  std::optional<double> p_value;     // chi-square with one degree of freedom
};

// No continuity correction. Throws kEmpty.
McNemarResult McNemarsTest(const std::vector<std::pair<bool, bool>> &paired);
// Same statistic from the two discordant counts directly.
McNemarResult McNemarsTest(long long b, long long c);

// Relative frequencies. Throws kEmpty.
std::map<std::string, double> LabelDistribution(const std::vector<std::string> &labels);

std::vector<std::string> PointLabels();  // b, a, e, v
std::vector<std::string> ToLabels(const std::vector<PointRelation> &relations);

// Report exports. JSON field names: kappa, f1, distribution, counts, marginals.
std::string ToJson(const AgreementReport &report);
std::string ToTsv(const AgreementReport &report);
std::string ToJson(const ConfusionMatrix &matrix);
std::string ToTsv(const ConfusionMatrix &matrix);
std::string ToJson(const McNemarResult &result);
std::string ToTsv(const McNemarResult &result);
std::string ToJson(const QualityReport &report);
std::string ToTsv(const QualityReport &report);

}  // namespace tempaxis

#endif  // TEMPAXIS_METRICS_H_
