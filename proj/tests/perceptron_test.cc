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

#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "tempaxis/error.h"
#include "tempaxis/random.h"

namespace tempaxis {
namespace {

using P = PointRelation;

Example Ex(std::vector<std::string> names, P label) {
  FeatureVector fv;
  for (auto &n : names) fv.features.emplace_back(n, 1.0);
  std::sort(fv.features.begin(), fv.features.end());
  return {fv, label};
}

int Index(P p) {
  for (int k = 0; k < 4; ++k) {
    if (kPointRelations[k] == p) return k;
  }
  return -1;
}

// Textbook averaged perceptron: keeps every post-example weight snapshot
// and averages them at the end.
std::map<std::string, std::array<double, 4>> NaiveAveraged(const std::vector<Example> &examples,
                                                          int epochs, std::uint64_t seed) {
  std::map<std::string, std::array<double, 4>> w, sum;
  std::vector<std::size_t> order(examples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  long long t = 0;
  for (int e = 0; e < epochs; ++e) {
    rng.Shuffle(order);
    for (std::size_t i : order) {
      std::vector<std::pair<std::string, double>> x = examples[i].features.features;
      x.emplace_back(std::string(kBiasFeature), 1.0);
      std::array<double, 4> score{};
      for (const auto &[f, v] : x) {
        for (int k = 0; k < 4; ++k) score[k] += w[f][k] * v;
      }
      int best = 0;
      for (int k = 1; k < 4; ++k) {
        if (score[k] > score[best]) best = k;
      }
      const int gold = Index(examples[i].label);
      if (best != gold) {
        for (const auto &[f, v] : x) {
          w[f][gold] += v;
          w[f][best] -= v;
        }
      }
      ++t;
      for (const auto &[f, row] : w) {
        for (int k = 0; k < 4; ++k) sum[f][k] += row[k];
      }
    }
  }
  for (auto &[f, row] : sum) {
    for (double &v : row) v /= static_cast<double>(t);
  }
  return sum;
}

std::vector<Example> Noisy(int n, std::uint64_t seed) {
  std::mt19937 gen(static_cast<unsigned>(seed));
  std::vector<Example> out;
  for (int i = 0; i < n; ++i) {
    const P label = kPointRelations[gen() % 4];
    std::vector<std::string> f = {"cue=" + std::string(Name(gen() % 5 ? label : kPointRelations[gen() % 4]))};
    f.push_back("noise=" + std::to_string(gen() % 6));
    out.push_back(Ex(f, label));
  }
  return out;
}

TEST_CASE("averaged weights equal the mean of all snapshots") {
  const std::vector<Example> small = {
      Ex({"x", "y"}, P::kBefore), Ex({"y"}, P::kAfter), Ex({"x", "z"}, P::kEqual),
      Ex({"z"}, P::kVague), Ex({"x"}, P::kBefore)};
  for (const auto &data : {small, Noisy(60, 3)}) {
    for (int epochs : {1, 3, 7}) {
      const PerceptronModel m = TrainPerceptron(data, epochs, 17);
      const auto expected = NaiveAveraged(data, epochs, 17);
      for (const auto &[f, row] : expected) {
        const auto id = m.dictionary.Find(f);
        REQUIRE(id.has_value());
        for (int k = 0; k < 4; ++k) CHECK(m.weights[k][*id] == doctest::Approx(row[k]));
      }
    }
  }
}

TEST_CASE("separable data is learned") {
  std::vector<Example> data;
  for (int i = 0; i < 10; ++i) {
    for (P p : kPointRelations) data.push_back(Ex({"cue=" + std::string(Name(p))}, p));
  }
  const PerceptronModel m = TrainPerceptron(data, 10, 1);
  CHECK(Evaluate(m, data).strict_accuracy == 1.0);
}

TEST_CASE("training is deterministic and serialization round trips") {
  const auto data = Noisy(80, 5);
  const PerceptronModel a = TrainPerceptron(data, 5, 9);
  const PerceptronModel b = TrainPerceptron(data, 5, 9);
  CHECK(a.Serialize() == b.Serialize());
  const PerceptronModel back = PerceptronModel::Deserialize(a.Serialize());
  CHECK(back.Serialize() == a.Serialize());
  for (const Example &ex : data) CHECK(back.Predict(ex.features) == a.Predict(ex.features));
  CHECK_THROWS_AS(PerceptronModel::Deserialize("not a model"), Error);
  CHECK(a.Serialize().rfind("tempaxis-perceptron 1\n", 0) == 0);
}

TEST_CASE("ties go to the earlier label") {
  PerceptronModel m;
  m.dictionary.Intern(std::string(kBiasFeature));
  for (auto &row : m.weights) row.assign(1, 0.0);
  CHECK(m.Predict({}) == P::kBefore);
  m.weights[2][0] = 1.0;
  m.weights[3][0] = 1.0;
  CHECK(m.Predict({}) == P::kEqual);
}

TEST_CASE("prediction is invariant to positive scaling") {
  const auto data = Noisy(50, 7);
  PerceptronModel m = TrainPerceptron(data, 4, 2);
  std::vector<P> before;
  for (const Example &ex : data) before.push_back(m.Predict(ex.features));
  for (auto &row : m.weights) {
    for (double &v : row) v *= 3.5;
  }
  for (std::size_t i = 0; i < data.size(); ++i) CHECK(m.Predict(data[i].features) == before[i]);
}

struct Counts {
  double p, r, f;
};
Counts OracleOverall(const std::vector<P> &gold, const std::vector<P> &pred) {
  double correct = 0, predicted = 0, relations = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    predicted += pred[i] != P::kVague;
    relations += gold[i] != P::kVague;
    correct += pred[i] == gold[i] && gold[i] != P::kVague;
  }
  const double p = predicted ? correct / predicted : 0.0;
  const double r = relations ? correct / relations : 0.0;
  return {p, r, p + r > 0 ? 2 * p * r / (p + r) : 0.0};
}

TEST_CASE("evaluation conventions") {
  const std::vector<P> gold = {P::kBefore, P::kAfter, P::kVague, P::kEqual};
  const EvalReport perfect = EvaluatePredictions(gold, gold);
  CHECK(perfect.f1 == 1.0);
  CHECK(perfect.strict_accuracy == 1.0);

  const EvalReport vague = EvaluatePredictions(gold, std::vector<P>(4, P::kVague));
  CHECK(vague.precision == 0.0);
  CHECK(vague.recall == 0.0);
  CHECK(vague.strict_accuracy == 0.25);
  CHECK_FALSE(vague.per_label.at(P::kBefore).precision.has_value());

  std::mt19937 gen(1);
  for (int t = 0; t < 200; ++t) {
    std::vector<P> g, p;
    for (int i = 0; i < 1 + static_cast<int>(gen() % 30); ++i) {
      g.push_back(kPointRelations[gen() % 4]);
      p.push_back(kPointRelations[gen() % 4]);
    }
    const EvalReport r = EvaluatePredictions(g, p);
    const Counts o = OracleOverall(g, p);
    CHECK(r.precision == doctest::Approx(o.p));
    CHECK(r.recall == doctest::Approx(o.r));
    CHECK(r.f1 == doctest::Approx(o.f));
  }
  CHECK_THROWS_AS(EvaluatePredictions(gold, {P::kBefore}), Error);
  CHECK_THROWS_AS(EvaluatePredictions({}, {}), Error);
}

TEST_CASE("training errors") {
  CHECK_THROWS_AS(TrainPerceptron({}, 3, 1), Error);
  CHECK_THROWS_AS(TrainPerceptron(Noisy(3, 1), 0, 1), Error);
}

TEST_CASE("dev tuning picks the best epoch and retrains on train plus dev") {
  const auto train = Noisy(60, 11), dev = Noisy(30, 12);
  TrainConfig config{6, 4};
  const TrainResult r = Train(train, dev, config);
  REQUIRE(r.dev_f1.size() == 6);
  std::vector<PerceptronModel> snapshots;
  TrainPerceptron(train, 6, 4, &snapshots);
  int best = 1;
  for (int e = 1; e <= 6; ++e) {
    const double f1 = Evaluate(snapshots[e - 1], dev).f1;
    CHECK(f1 == doctest::Approx(r.dev_f1[e - 1]));
    if (f1 > Evaluate(snapshots[best - 1], dev).f1) best = e;
  }
  CHECK(r.best_epoch == best);
  std::vector<Example> all = train;
  all.insert(all.end(), dev.begin(), dev.end());
  CHECK(r.model.Serialize() == TrainPerceptron(all, best, 4).Serialize());
}

TEST_CASE("dev ties resolve to the smaller epoch") {
  // A separable set stays perfect once learned, so later epochs tie.
  std::vector<Example> data;
  for (P p : kPointRelations) data.push_back(Ex({"cue=" + std::string(Name(p))}, p));
  const TrainResult r = Train(data, data, {8, 1});
  const double top = *std::max_element(r.dev_f1.begin(), r.dev_f1.end());
  const int first = static_cast<int>(std::find(r.dev_f1.begin(), r.dev_f1.end(), top) -
                                     r.dev_f1.begin()) + 1;
  REQUIRE(std::count(r.dev_f1.begin(), r.dev_f1.end(), top) > 1);
  CHECK(r.best_epoch == first);
  const TrainResult no_dev = Train(data, {}, {5, 1});
  CHECK(no_dev.best_epoch == 5);
}

}  // namespace
}  // namespace tempaxis
