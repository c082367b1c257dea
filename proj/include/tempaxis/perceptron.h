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

#ifndef TEMPAXIS_PERCEPTRON_H_
#define TEMPAXIS_PERCEPTRON_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempaxis/features.h"
#include "tempaxis/relations.h"

namespace tempaxis {

inline constexpr std::size_t kNumClasses = 4;  // BEFORE, AFTER, EQUAL, VAGUE
inline constexpr std::string_view kBiasFeature = "<bias>";

class FeatureDictionary {
 public:
  std::uint32_t Intern(const std::string &name);
  std::optional<std::uint32_t> Find(const std::string &name) const;
  const std::vector<std::string> &names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  bool operator==(const FeatureDictionary &other) const { return names_ == other.names_; }

 private:
  std::map<std::string, std::uint32_t, std::less<>> index_;
  std::vector<std::string> names_;
};

struct Example {
  FeatureVector features;
  PointRelation label = PointRelation::kVague;
};

struct PerceptronModel {
  FeatureDictionary dictionary;
  // Averaged weights, one row per class in kPointRelations order.
  std::array<std::vector<double>, kNumClasses> weights;
  int trained_epochs = 0;
  std::uint64_t seed = 0;

  // Every class score includes the bias weight; unknown features are
  // ignored.
  std::array<double, kNumClasses> Scores(const FeatureVector &fv) const;
  // Highest score, ties to the earlier class.
  PointRelation Predict(const FeatureVector &fv) const;

  std::string Serialize() const;
  // Throws kParseError.
  static PerceptronModel Deserialize(std::string_view text);

  bool operator==(const PerceptronModel &) const = default;
};

// Plain averaged perceptron for a fixed number of epochs. The examples are
// shuffled at the start of every epoch with one generator seeded by `seed`.
// `epoch_models`, when given, receives the averaged model after each epoch.
// Throws kEmptyTrainingSet.
PerceptronModel TrainPerceptron(const std::vector<Example> &examples, int epochs,
                                std::uint64_t seed,
                                std::vector<PerceptronModel> *epoch_models = nullptr);

struct LabelScores {
  std::optional<double> precision;  // unset when the label is never predicted
  std::optional<double> recall;     // unset when the label never occurs in gold
  double f1 = 0.0;
  long long gold = 0;
  long long predicted = 0;
  long long correct = 0;
};

struct EvalReport {
  std::map<PointRelation, LabelScores> per_label;
  // Non-VAGUE labels count as relations: precision over predicted
  // relations, recall over gold relations.
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double strict_accuracy = 0.0;  // plain accuracy over all four labels
  long long n = 0;
};

// Throws kLengthMismatch or kEmpty.
EvalReport EvaluatePredictions(const std::vector<PointRelation> &gold,
                               const std::vector<PointRelation> &predicted);
EvalReport Evaluate(const PerceptronModel &model, const std::vector<Example> &examples);

struct TrainConfig {
  int max_epochs = 20;
  std::uint64_t seed = 1;
};

struct TrainResult {
  PerceptronModel model;
  int best_epoch = 0;
  std::vector<double> dev_f1;  // overall F1 on dev after each epoch
};

// Tunes the epoch count on `dev` (ties to fewer epochs), then retrains on
// train plus dev with the same seed. With an empty dev set, max_epochs is
// used. Throws kEmptyTrainingSet or kInvalidConfig.
TrainResult Train(const std::vector<Example> &train, const std::vector<Example> &dev,
                  const TrainConfig &config);

std::string ToJson(const EvalReport &report);
std::string ToTsv(const EvalReport &report);

}  // namespace tempaxis

#endif  // TEMPAXIS_PERCEPTRON_H_
