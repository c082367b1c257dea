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

#ifndef TEMPAXIS_CROWD_SIMULATION_H_
#define TEMPAXIS_CROWD_SIMULATION_H_

#include <cstdint>
#include <vector>

#include "tempaxis/annotation.h"

namespace tempaxis {

// A synthetic worker answers every question correctly with probability
// `accuracy`, independently, and takes an exponentially distributed time.
struct WorkerModel {
  double accuracy = 0.7;
  double mean_response_time = 30.0;
};

struct SimulationConfig {
  QcConfig qc;
  // Worker i follows population[i % population.size()].
  std::vector<WorkerModel> population = {WorkerModel{}};
  int n_workers = 100;
  int n_questions = 100;
  int n_gold = 50;
  int max_tasks_per_worker = 50;
  std::uint64_t seed = 1;
};

// Runs qualification, task serving, submission and banning end to end.
// Deterministic given the config. Throws kInvalidConfig for bad inputs.
QualityReport SimulateCrowd(const SimulationConfig &config);

}  // namespace tempaxis

#endif  // TEMPAXIS_CROWD_SIMULATION_H_
