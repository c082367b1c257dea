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

#include "tempaxis/crowd_simulation.h"

#include "doctest.h"
#include "oracles.h"
#include "tempaxis/metrics.h"

namespace tempaxis {
namespace {

SimulationConfig Config(double p, int workers) {
  SimulationConfig c;
  c.population = {WorkerModel{p, 20.0}};
  c.n_workers = workers;
  c.n_questions = 40;
  c.n_gold = 30;
  c.max_tasks_per_worker = 5;
  c.seed = 1;
  c.qc.rng_seed = 1;
  return c;
}

TEST_CASE("binomial tail oracle values") {
  CHECK(oracle::BinomialTail(10, 7, 0.7) == doctest::Approx(0.6496).epsilon(1e-4));
  // Exact tail for p = 0.37; the commonly quoted 0.021 is not reproducible.
  CHECK(oracle::BinomialTail(10, 7, 0.37) == doctest::Approx(0.035625).epsilon(1e-3));
}

TEST_CASE("perfect workers all pass and survive") {
  const QualityReport r = SimulateCrowd(Config(1.0, 200));
  CHECK(r.qualification_pass_rate == 1.0);
  CHECK(r.survival_rate == 1.0);
  CHECK(r.accuracy_on_gold == 1.0);
}

TEST_CASE("pass rate tracks the binomial tail") {
  const QualityReport r = SimulateCrowd(Config(0.7, 4000));
  CHECK(r.qualification_pass_rate ==
        doctest::Approx(oracle::BinomialTail(10, 7, 0.7)).epsilon(0.06));
  const QualityReport low = SimulateCrowd(Config(0.37, 4000));
  CHECK(low.qualification_pass_rate == doctest::Approx(oracle::BinomialTail(10, 7, 0.37)).epsilon(0.35));
}

TEST_CASE("simulation is deterministic") {
  const QualityReport a = SimulateCrowd(Config(0.8, 300));
  const QualityReport b = SimulateCrowd(Config(0.8, 300));
  CHECK(ToJson(a) == ToJson(b));
  SimulationConfig other = Config(0.8, 300);
  other.seed = 2;
  CHECK(ToJson(SimulateCrowd(other)) != ToJson(a));
}

TEST_CASE("invalid simulation configs are rejected") {
  SimulationConfig c = Config(0.7, 10);
  c.population.clear();
  CHECK_THROWS(SimulateCrowd(c));
  c = Config(0.7, 10);
  c.n_gold = 5;
  CHECK_THROWS(SimulateCrowd(c));
}

}  // namespace
}  // namespace tempaxis
