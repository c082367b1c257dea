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

#include "tempaxis/metrics.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"
#include "tempaxis/error.h"
#include "tempaxis/file_util.h"

namespace tempaxis {
namespace {

using json = nlohmann::json;

void CheckPaired(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kLengthMismatch,
                "sequences have lengths " + std::to_string(a) + " and " + std::to_string(b));
  }
  if (a == 0) throw Error(ErrorCode::kEmpty, "no items to compare");
}

json Optional(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

std::string Cell(const std::optional<double> &v) { return v ? FormatDouble(*v) : "-"; }

}  // namespace

double CohensKappa(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  CheckPaired(a.size(), b.size());
  const double n = static_cast<double>(a.size());
  std::map<std::string, double> count_a, count_b;
  double agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    count_a[a[i]] += 1;
    count_b[b[i]] += 1;
    if (a[i] == b[i]) agree += 1;
  }
  const double p_o = agree / n;
  double p_e = 0;
  for (const auto &[label, ca] : count_a) {
    auto it = count_b.find(label);
    if (it != count_b.end()) p_e += (ca / n) * (it->second / n);
  }
  if (1.0 - p_e <= 1e-12) return p_o >= 1.0 - 1e-12 ? 1.0 : 0.0;
  return (p_o - p_e) / (1.0 - p_e);
}

AgreementReport PerLabelAgreement(const std::vector<std::string> &a,
                                  const std::vector<std::string> &b,
                                  const std::vector<std::string> &labels) {
  CheckPaired(a.size(), b.size());
  AgreementReport report;
  report.n_items = a.size();
  report.overall_kappa = CohensKappa(a, b);
  std::size_t agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) agree += a[i] == b[i];
  report.overall_f1 = static_cast<double>(agree) / static_cast<double>(a.size());

  for (const std::string &label : labels) {
    LabelAgreement out;
    std::vector<std::string> bin_a, bin_b;
    long long in_a = 0, in_b = 0, both = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const bool x = a[i] == label;
      const bool y = b[i] == label;
      bin_a.push_back(x ? "1" : "0");
      bin_b.push_back(y ? "1" : "0");
      in_a += x;
      in_b += y;
      both += x && y;
    }
    out.distribution = static_cast<double>(in_a) / static_cast<double>(a.size());
    if (in_a == 0 && in_b == 0) {
      out.vacuous = true;
      out.kappa = 1.0;
      out.f1 = 1.0;
      report.per_label[label] = out;
      continue;
    }
    out.kappa = CohensKappa(bin_a, bin_b);
    if (in_b > 0) out.precision = static_cast<double>(both) / static_cast<double>(in_b);
    if (in_a > 0) out.recall = static_cast<double>(both) / static_cast<double>(in_a);
    out.f1 = (in_a + in_b) > 0 ? 2.0 * static_cast<double>(both) / static_cast<double>(in_a + in_b)
                               : 0.0;
    report.per_label[label] = out;
  }
  return report;
}

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> row_labels,
                                 std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      counts_(row_labels_.size(), std::vector<long long>(col_labels_.size(), 0)) {}

std::size_t ConfusionMatrix::RowIndex(const std::string &label) const {
  auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
  if (it == row_labels_.end()) throw Error(ErrorCode::kUnknownLabel, "row label " + label);
  return static_cast<std::size_t>(it - row_labels_.begin());
}

std::size_t ConfusionMatrix::ColIndex(const std::string &label) const {
  auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
  if (it == col_labels_.end()) throw Error(ErrorCode::kUnknownLabel, "column label " + label);
  return static_cast<std::size_t>(it - col_labels_.begin());
}

void ConfusionMatrix::Add(const std::string &row, const std::string &col, long long count) {
  counts_[RowIndex(row)][ColIndex(col)] += count;
}

long long ConfusionMatrix::At(const std::string &row, const std::string &col) const {
  return counts_[RowIndex(row)][ColIndex(col)];
}

long long ConfusionMatrix::RowTotal(const std::string &row) const {
  long long total = 0;
  for (long long v : counts_[RowIndex(row)]) total += v;
  return total;
}

long long ConfusionMatrix::ColTotal(const std::string &col) const {
  const std::size_t j = ColIndex(col);
  long long total = 0;
  for (const auto &row : counts_) total += row[j];
  return total;
}

long long ConfusionMatrix::Total() const {
  long long total = 0;
  for (const auto &row : counts_) {
    for (long long v : row) total += v;
  }
  return total;
}

ConfusionMatrix CompareDatasets(const RelationSet &ours, const RelationSet &theirs,
                                PointRelation (*projector)(IntervalRelation)) {
  ConfusionMatrix matrix(PointLabels(), PointLabels());
  for (const auto &[key, entry] : ours.entries) {
    RelationLabel their_label;
    if (const RelationEntry *match = theirs.Find(key)) {
      their_label = match->label;
    } else if (const RelationEntry *reversed = theirs.Find(key.Reversed())) {
      their_label = InvertLabel(reversed->label);
    } else {
      continue;
    }
    matrix.Add(std::string(ShortLabel(ProjectLabel(their_label, projector))),
               std::string(ShortLabel(ProjectLabel(entry.label, projector))));
  }
  matrix.empty_intersection = matrix.Total() == 0;
  return matrix;
}

McNemarResult McNemarsTest(long long b, long long c) {
  McNemarResult result;
  result.b = b;
  result.c = c;
  if (b + c > 0) {
    const double diff = static_cast<double>(b - c);
    const double chi = diff * diff / static_cast<double>(b + c);
    result.chi_square = chi;
    result.p_value = std::erfc(std::sqrt(chi / 2.0));
  }
  return result;
}

McNemarResult McNemarsTest(const std::vector<std::pair<bool, bool>> &paired) {
  if (paired.empty()) throw Error(ErrorCode::kEmpty, "no paired observations");
  long long b = 0, c = 0;
  for (const auto &[x, y] : paired) {
    if (x && !y) ++b;
    if (!x && y) ++c;
  }
  return McNemarsTest(b, c);
}

std::map<std::string, double> LabelDistribution(const std::vector<std::string> &labels) {
  if (labels.empty()) throw Error(ErrorCode::kEmpty, "no labels");
  std::map<std::string, double> out;
  for (const std::string &label : labels) out[label] += 1.0;
  for (auto &[label, v] : out) v /= static_cast<double>(labels.size());
  return out;
}

std::vector<std::string> PointLabels() { return {"b", "a", "e", "v"}; }

std::vector<std::string> ToLabels(const std::vector<PointRelation> &relations) {
  std::vector<std::string> out;
  out.reserve(relations.size());
  for (PointRelation r : relations) out.emplace_back(ShortLabel(r));
  return out;
}

std::string ToJson(const AgreementReport &report) {
  json doc;
  doc["n_items"] = report.n_items;
  doc["kappa"] = report.overall_kappa;
  doc["f1"] = report.overall_f1;
  json labels = json::object();
  for (const auto &[label, a] : report.per_label) {
    labels[label] = {{"kappa", a.kappa},
                     {"f1", a.f1},
                     {"precision", Optional(a.precision)},
                     {"recall", Optional(a.recall)},
                     {"distribution", a.distribution},
                     {"vacuous", a.vacuous}};
  }
  doc["labels"] = labels;
  return doc.dump(2) + "\n";
}

std::string ToTsv(const AgreementReport &report) {
  std::string out = "label\tkappa\tf1\tprecision\trecall\tdistribution\n";
  for (const auto &[label, a] : report.per_label) {
    out += label + '\t' + FormatDouble(a.kappa) + '\t' + FormatDouble(a.f1) + '\t' +
           Cell(a.precision) + '\t' + Cell(a.recall) + '\t' + FormatDouble(a.distribution) +
           '\n';
  }
  out += "overall\t" + FormatDouble(report.overall_kappa) + '\t' +
         FormatDouble(report.overall_f1) + "\t-\t-\t1\n";
  return out;
}

std::string ToJson(const ConfusionMatrix &m) {
  json doc;
  doc["rows"] = m.row_labels();
  doc["columns"] = m.col_labels();
  json counts = json::array();
  for (const std::string &r : m.row_labels()) {
    json row = json::array();
    for (const std::string &c : m.col_labels()) row.push_back(m.At(r, c));
    counts.push_back(row);
  }
  doc["counts"] = counts;
  json rows = json::array(), cols = json::array();
  for (const std::string &r : m.row_labels()) rows.push_back(m.RowTotal(r));
  for (const std::string &c : m.col_labels()) cols.push_back(m.ColTotal(c));
  doc["marginals"] = {{"rows", rows}, {"columns", cols}, {"total", m.Total()}};
  doc["empty_intersection"] = m.empty_intersection;
  return doc.dump(2) + "\n";
}

std::string ToTsv(const ConfusionMatrix &m) {
  std::string out;
  for (const std::string &c : m.col_labels()) out += '\t' + c;
  out += "\tAll\n";
  for (const std::string &r : m.row_labels()) {
    out += r;
    for (const std::string &c : m.col_labels()) out += '\t' + std::to_string(m.At(r, c));
    out += '\t' + std::to_string(m.RowTotal(r)) + '\n';
  }
  out += "All";
  for (const std::string &c : m.col_labels()) out += '\t' + std::to_string(m.ColTotal(c));
  out += '\t' + std::to_string(m.Total()) + '\n';
  return out;
}

std::string ToJson(const McNemarResult &r) {
  json doc;
  doc["b"] = r.b;
  doc["c"] = r.c;
  doc["chi_square"] = Optional(r.chi_square);
  doc["p_value"] = Optional(r.p_value);
  doc["applicable"] = r.chi_square.has_value();
  return doc.dump(2) + "\n";
}

std::string ToTsv(const McNemarResult &r) {
  return "b\tc\tchi_square\tp_value\n" + std::to_string(r.b) + '\t' + std::to_string(r.c) +
         '\t' + (r.chi_square ? FormatDouble(*r.chi_square) : "NOT_APPLICABLE") + '\t' +
         Cell(r.p_value) + '\n';
}

std::string ToJson(const QualityReport &r) {
  json doc;
  doc["accuracy_on_gold"] = r.accuracy_on_gold;
  doc["wawa"] = r.wawa;
  doc["qualification_pass_rate"] = r.qualification_pass_rate;
  doc["survival_rate"] = r.survival_rate;
  doc["mean_response_time"] = r.mean_response_time;
  doc["counts"] = {{"gold_responses", r.gold_responses},
                   {"gold_correct", r.gold_correct},
                   {"wawa_responses", r.wawa_responses},
                   {"wawa_agreements", r.wawa_agreements},
                   {"aggregated_questions", r.aggregated_questions},
                   {"workers_attempted", r.workers_attempted},
                   {"workers_qualified", r.workers_qualified},
                   {"workers_banned", r.workers_banned},
                   {"judgements", r.judgements},
                   {"discarded_judgements", r.discarded_judgements}};
  return doc.dump(2) + "\n";
}

std::string ToTsv(const QualityReport &r) {
  std::string out = "metric\tvalue\n";
  auto row = [&](const char *name, const std::string &v) { out += std::string(name) + '\t' + v + '\n'; };
  row("accuracy_on_gold", FormatDouble(r.accuracy_on_gold));
  row("wawa", FormatDouble(r.wawa));
  row("qualification_pass_rate", FormatDouble(r.qualification_pass_rate));
  row("survival_rate", FormatDouble(r.survival_rate));
  row("mean_response_time", FormatDouble(r.mean_response_time));
  row("gold_responses", std::to_string(r.gold_responses));
  row("wawa_responses", std::to_string(r.wawa_responses));
  row("wawa_agreements", std::to_string(r.wawa_agreements));
  row("workers_attempted", std::to_string(r.workers_attempted));
  row("workers_qualified", std::to_string(r.workers_qualified));
  row("workers_banned", std::to_string(r.workers_banned));
  row("judgements", std::to_string(r.judgements));
  row("discarded_judgements", std::to_string(r.discarded_judgements));
  return out;
}

}  // namespace tempaxis
