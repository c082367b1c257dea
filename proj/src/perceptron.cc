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

#include "tempaxis/perceptron.h"

#include <numeric>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "tempaxis/error.h"
#include "tempaxis/file_util.h"
#include "tempaxis/random.h"

namespace tempaxis {
namespace {

constexpr std::string_view kMagic = "tempaxis-perceptron";
constexpr int kFormatVersion = 1;

using Sparse = std::vector<std::pair<std::uint32_t, double>>;

std::size_t ClassIndex(PointRelation r) { return static_cast<std::size_t>(r); }

std::size_t Argmax(const std::array<double, kNumClasses> &scores) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < kNumClasses; ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return best;
}

double Harmonic(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

}  // namespace

std::uint32_t FeatureDictionary::Intern(const std::string &name) {
  auto [it, inserted] = index_.emplace(name, static_cast<std::uint32_t>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

std::optional<std::uint32_t> FeatureDictionary::Find(const std::string &name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::array<double, kNumClasses> PerceptronModel::Scores(const FeatureVector &fv) const {
  std::array<double, kNumClasses> scores{};
  auto add = [&](std::uint32_t f, double x) {
    for (std::size_t k = 0; k < kNumClasses; ++k) {
      if (f < weights[k].size()) scores[k] += weights[k][f] * x;
    }
  };
  if (auto bias = dictionary.Find(std::string(kBiasFeature))) add(*bias, 1.0);
  for (const auto &[name, x] : fv.features) {
    if (auto f = dictionary.Find(name)) add(*f, x);
  }
  return scores;
}

PointRelation PerceptronModel::Predict(const FeatureVector &fv) const {
  return kPointRelations[Argmax(Scores(fv))];
}

std::string PerceptronModel::Serialize() const {
  std::string out;
  out += std::string(kMagic) + ' ' + std::to_string(kFormatVersion) + '\n';
  out += "labels";
  for (PointRelation r : kPointRelations) out += ' ' + std::string(Name(r));
  out += "\nepochs " + std::to_string(trained_epochs) + '\n';
  out += "seed " + std::to_string(seed) + '\n';
  out += "features " + std::to_string(dictionary.size()) + '\n';
  for (std::size_t f = 0; f < dictionary.size(); ++f) {
    out += EscapeField(dictionary.names()[f]);
    for (std::size_t k = 0; k < kNumClasses; ++k) {
      out += '\t' + FormatDouble(f < weights[k].size() ? weights[k][f] : 0.0);
    }
    out += '\n';
  }
  return out;
}

PerceptronModel PerceptronModel::Deserialize(std::string_view text) {
  const auto lines = SplitLines(text);
  auto fail = [](std::size_t line, const std::string &what) -> Error {
    return Error(ErrorCode::kParseError, "model line " + std::to_string(line + 1) + ": " + what);
  };
  if (lines.size() < 5) throw fail(lines.size(), "truncated header");
  if (lines[0] != std::string(kMagic) + ' ' + std::to_string(kFormatVersion)) {
    throw fail(0, "unsupported model format");
  }
  std::string labels = "labels";
  for (PointRelation r : kPointRelations) labels += ' ' + std::string(Name(r));
  if (lines[1] != labels) throw fail(1, "unexpected label order");

  PerceptronModel model;
  long long value = 0;
  auto header = [&](std::size_t i, std::string_view key) {
    if (lines[i].substr(0, key.size() + 1) != std::string(key) + ' ' ||
        !ParseInt(lines[i].substr(key.size() + 1), &value) || value < 0) {
      throw fail(i, "expected '" + std::string(key) + " <n>'");
    }
    return value;
  };
  model.trained_epochs = static_cast<int>(header(2, "epochs"));
  model.seed = static_cast<std::uint64_t>(header(3, "seed"));
  const auto n = static_cast<std::size_t>(header(4, "features"));
  if (lines.size() < 5 + n) throw fail(lines.size(), "truncated feature table");
  for (auto &row : model.weights) row.resize(n);
  for (std::size_t f = 0; f < n; ++f) {
    const auto fields = SplitTabs(lines[5 + f]);
    if (fields.size() != kNumClasses + 1) throw fail(5 + f, "expected 5 columns");
    if (model.dictionary.Intern(UnescapeField(fields[0])) != f) {
      throw fail(5 + f, "duplicate feature");
    }
    for (std::size_t k = 0; k < kNumClasses; ++k) {
      if (!ParseDouble(fields[k + 1], &model.weights[k][f])) throw fail(5 + f, "bad weight");
    }
  }
  for (std::size_t i = 5 + n; i < lines.size(); ++i) {
    if (!lines[i].empty()) throw fail(i, "trailing data");
  }
  return model;
}

PerceptronModel TrainPerceptron(const std::vector<Example> &examples, int epochs,
                                std::uint64_t seed,
                                std::vector<PerceptronModel> *epoch_models) {
  if (examples.empty()) throw Error(ErrorCode::kEmptyTrainingSet, "no training examples");
  if (epochs < 1) throw Error(ErrorCode::kInvalidConfig, "epochs must be at least 1");

  PerceptronModel model;
  model.seed = seed;
  const std::uint32_t bias = model.dictionary.Intern(std::string(kBiasFeature));
  std::vector<Sparse> vectors;
  vectors.reserve(examples.size());
  for (const Example &ex : examples) {
    Sparse v{{bias, 1.0}};
    for (const auto &[name, x] : ex.features.features) v.emplace_back(model.dictionary.Intern(name), x);
    vectors.push_back(std::move(v));
  }
  const std::size_t n = model.dictionary.size();
  // w: current weights. u: sum of step * update, so that the mean of the
  // post-example snapshots w_1..w_T is ((T + 1) w - u) / T.
  std::array<std::vector<double>, kNumClasses> w, u;
  for (std::size_t k = 0; k < kNumClasses; ++k) {
    w[k].assign(n, 0.0);
    u[k].assign(n, 0.0);
  }

  auto averaged = [&](long long steps, int done) {
    PerceptronModel snapshot;
    snapshot.dictionary = model.dictionary;
    snapshot.seed = seed;
    snapshot.trained_epochs = done;
    const double t = static_cast<double>(steps);
    for (std::size_t k = 0; k < kNumClasses; ++k) {
      snapshot.weights[k].resize(n);
      for (std::size_t f = 0; f < n; ++f) {
        snapshot.weights[k][f] = ((t + 1.0) * w[k][f] - u[k][f]) / t;
      }
    }
    return snapshot;
  };

  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  long long step = 0;
  for (int epoch = 1; epoch <= epochs; ++epoch) {
    rng.Shuffle(order);
    for (std::size_t i : order) {
      ++step;
      const Sparse &x = vectors[i];
      std::array<double, kNumClasses> scores{};
      for (std::size_t k = 0; k < kNumClasses; ++k) {
        for (const auto &[f, v] : x) scores[k] += w[k][f] * v;
      }
      const std::size_t predicted = Argmax(scores);
      const std::size_t gold = ClassIndex(examples[i].label);
      if (predicted == gold) continue;
      const double s = static_cast<double>(step);
      for (const auto &[f, v] : x) {
        w[gold][f] += v;
        u[gold][f] += s * v;
        w[predicted][f] -= v;
        u[predicted][f] -= s * v;
      }
    }
    if (epoch_models != nullptr) epoch_models->push_back(averaged(step, epoch));
  }
  return averaged(step, epochs);
}

EvalReport EvaluatePredictions(const std::vector<PointRelation> &gold,
                               const std::vector<PointRelation> &predicted) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::kLengthMismatch, "gold and predictions differ in length");
  }
  if (gold.empty()) throw Error(ErrorCode::kEmpty, "nothing to evaluate");
  EvalReport report;
  report.n = static_cast<long long>(gold.size());
  long long correct = 0, relation_correct = 0, relation_predicted = 0, relation_gold = 0;
  for (PointRelation r : kPointRelations) report.per_label[r];
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++report.per_label[gold[i]].gold;
    ++report.per_label[predicted[i]].predicted;
    const bool hit = gold[i] == predicted[i];
    if (hit) {
      ++correct;
      ++report.per_label[gold[i]].correct;
    }
    if (gold[i] != PointRelation::kVague) ++relation_gold;
    if (predicted[i] != PointRelation::kVague) {
      ++relation_predicted;
      if (hit) ++relation_correct;
    }
  }
  for (auto &[label, s] : report.per_label) {
    if (s.predicted > 0) s.precision = static_cast<double>(s.correct) / s.predicted;
    if (s.gold > 0) s.recall = static_cast<double>(s.correct) / s.gold;
    s.f1 = Harmonic(s.precision.value_or(0.0), s.recall.value_or(0.0));
  }
  report.precision =
      relation_predicted == 0 ? 0.0 : static_cast<double>(relation_correct) / relation_predicted;
  report.recall = relation_gold == 0 ? 0.0 : static_cast<double>(relation_correct) / relation_gold;
  report.f1 = Harmonic(report.precision, report.recall);
  report.strict_accuracy = static_cast<double>(correct) / report.n;
  return report;
}

EvalReport Evaluate(const PerceptronModel &model, const std::vector<Example> &examples) {
  std::vector<PointRelation> gold, predicted;
  for (const Example &ex : examples) {
    gold.push_back(ex.label);
    predicted.push_back(model.Predict(ex.features));
  }
  return EvaluatePredictions(gold, predicted);
}

TrainResult Train(const std::vector<Example> &train, const std::vector<Example> &dev,
                  const TrainConfig &config) {
  if (config.max_epochs < 1) throw Error(ErrorCode::kInvalidConfig, "max_epochs must be >= 1");
  TrainResult result;
  std::vector<PerceptronModel> per_epoch;
  TrainPerceptron(train, config.max_epochs, config.seed, &per_epoch);
  result.best_epoch = config.max_epochs;
  if (!dev.empty()) {
    double best = -1.0;
    for (std::size_t e = 0; e < per_epoch.size(); ++e) {
      const double f1 = Evaluate(per_epoch[e], dev).f1;
      result.dev_f1.push_back(f1);
      if (f1 > best) {
        best = f1;
        result.best_epoch = static_cast<int>(e) + 1;
      }
    }
  }
  std::vector<Example> all = train;
  all.insert(all.end(), dev.begin(), dev.end());
  result.model = TrainPerceptron(all, result.best_epoch, config.seed);
  return result;
}

std::string ToJson(const EvalReport &report) {
  nlohmann::ordered_json j;
  auto opt = [](const std::optional<double> &v) -> nlohmann::ordered_json {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  };
  for (const auto &[label, s] : report.per_label) {
    j["per_label"][std::string(Name(label))] = {{"precision", opt(s.precision)},
                                                {"recall", opt(s.recall)},
                                                {"f1", s.f1},
                                                {"gold", s.gold},
                                                {"predicted", s.predicted},
                                                {"correct", s.correct}};
  }
  j["overall"] = {{"precision", report.precision}, {"recall", report.recall}, {"f1", report.f1}};
  j["strict_accuracy"] = report.strict_accuracy;
  j["n"] = report.n;
  return j.dump(2) + "\n";
}

std::string ToTsv(const EvalReport &report) {
  auto opt = [](const std::optional<double> &v) { return v ? FormatDouble(*v) : std::string("-"); };
  std::string out = "label\tprecision\trecall\tf1\n";
  for (const auto &[label, s] : report.per_label) {
    out += std::string(Name(label)) + '\t' + opt(s.precision) + '\t' + opt(s.recall) + '\t' +
           FormatDouble(s.f1) + '\n';
  }
  out += "OVERALL\t" + FormatDouble(report.precision) + '\t' + FormatDouble(report.recall) + '\t' +
         FormatDouble(report.f1) + '\n';
  out += "STRICT_ACCURACY\t" + FormatDouble(report.strict_accuracy) + "\t\t\n";
  return out;
}

}  // namespace tempaxis
