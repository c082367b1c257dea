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

// Command-line entry point: corpus ingestion, pair generation, dataset
// conversion, aggregation, metrics, crowd simulation, the baseline and the
// annotation server.
//
// Exit status: 0 on success, 1 on a data error, 2 on a usage error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tempaxis/annotation_service.h"
#include "tempaxis/corpus_store.h"
#include "tempaxis/crowd_simulation.h"
#include "tempaxis/error.h"
#include "tempaxis/file_util.h"
#include "tempaxis/judgement_log.h"
#include "tempaxis/metrics.h"
#include "tempaxis/perceptron.h"
#include "tempaxis/pipeline.h"
#include "tempaxis/pos_tagger.h"
#include "tempaxis/relation_files.h"
#include "tempaxis/timeml.h"
#include "tempaxis/wordnet.h"

namespace {

namespace fs = std::filesystem;
using namespace tempaxis;

struct Globals {
  std::string out;
  std::string format = "tsv";
  std::string data_dir;
  std::uint64_t seed = 1;
};

Globals g;

std::string Resolve(const std::string &path) {
  if (path.empty() || g.data_dir.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(g.data_dir) / path).string();
}

std::string Read(const std::string &path) { return ReadFile(Resolve(path)); }

void Emit(const std::string &text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    WriteFileAtomic(g.out, text);
  }
}

bool Json() { return g.format == "json"; }

std::vector<Document> LoadCorpusFile(const std::string &path, const std::string &pos_path) {
  std::vector<Document> docs = LoadCorpus(Read(path), path);
  if (!pos_path.empty()) ApplyPosSidecar(Read(pos_path), docs, pos_path);
  return docs;
}

RelationSet LoadRelations(const std::string &path) {
  const std::string text = Read(path);
  // Dense files have four columns, start-point files six.
  for (std::string_view line : SplitLines(text)) {
    if (Trim(line).empty()) continue;
    return SplitTabs(line).size() == 4 ? LoadTbDense(text, path) : LoadMatres(text, path);
  }
  return RelationSet{};
}

std::vector<std::string> ReadLabelColumn(const std::string &path, int column) {
  std::vector<std::string> out;
  const std::string text = Read(path);
  for (std::string_view line : SplitLines(text)) {
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (column < 0 || static_cast<std::size_t>(column) >= fields.size()) {
      throw Error(ErrorCode::kColumnCount, path + ": missing column " + std::to_string(column));
    }
    out.push_back(Trim(fields[static_cast<std::size_t>(column)]));
  }
  return out;
}

std::map<std::string, Answer> ReadAnswers(const std::string &path) {
  std::map<std::string, Answer> out;
  int line_no = 0;
  const std::string text = Read(path);
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    const auto answer = fields.size() == 2 ? ParseAnswer(Trim(fields[1])) : std::nullopt;
    if (!answer) {
      throw Error(ErrorCode::kParseError,
                  path + ":" + std::to_string(line_no) + ": expected question_id TAB YES|NO");
    }
    out[UnescapeField(fields[0])] = *answer;
  }
  return out;
}

WordNetIndex MaybeWordNet(const std::string &dir) {
  return dir.empty() ? WordNetIndex{} : LoadWordNet(Resolve(dir));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"tempaxis: multi-axis temporal relation annotation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", g.out, "Write output here (atomically) instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.add_option("--data-dir", g.data_dir, "Base directory for relative input paths");
  app.add_option("--seed", g.seed, "Random seed");

  // ingest
  std::string ingest_dir, ingest_pos;
  bool all_events = false;
  auto *ingest = app.add_subcommand("ingest", "TimeML directory -> corpus file");
  ingest->add_option("input", ingest_dir, "Directory of .tml/.xml files")->required();
  ingest->add_option("--pos", ingest_pos, "POS sidecar; without it a fallback tagger runs");
  ingest->add_flag("--all-events", all_events, "Keep non-verb events");

  // pairs
  std::string pairs_corpus, pairs_axes, pairs_axis = "main";
  int window = 2;
  auto *pairs = app.add_subcommand("pairs", "corpus + axis assignments -> event pairs");
  pairs->add_option("--corpus", pairs_corpus)->required();
  pairs->add_option("--axes", pairs_axes, "doc_id TAB eiid TAB category [TAB anchor]")->required();
  pairs->add_option("--axis", pairs_axis, "main, orthogonal:<anchor>, hypothesis or generic");
  pairs->add_option("--window", window, "Sentence window")->check(CLI::PositiveNumber);

  // convert
  std::string convert_input, convert_corpus;
  auto *convert = app.add_subcommand("convert", "dense interval file -> start-point relations");
  convert->add_option("input", convert_input)->required();
  convert->add_option("--corpus", convert_corpus, "Fill token columns from this corpus");

  // aggregate
  std::string agg_q1, agg_q2, agg_corpus, agg_gold_q1, agg_gold_q2;
  int min_judgements = 5;
  auto *aggregate = app.add_subcommand("aggregate", "Q1/Q2 judgement logs -> start-point file");
  aggregate->add_option("--q1", agg_q1)->required();
  aggregate->add_option("--q2", agg_q2)->required();
  aggregate->add_option("--corpus", agg_corpus)->required();
  aggregate->add_option("--gold-q1", agg_gold_q1, "question_id TAB YES|NO answers of gold questions");
  aggregate->add_option("--gold-q2", agg_gold_q2);
  aggregate->add_option("--min-judgements", min_judgements)->check(CLI::PositiveNumber);

  // metrics
  std::vector<std::string> kappa_files, compare_files;
  std::string mcnemar_file;
  std::vector<long long> mcnemar_counts;
  int column = 0;
  bool per_label = false;
  auto *metrics = app.add_subcommand("metrics", "Agreement, confusion matrix or McNemar's test");
  auto *kappa_opt = metrics->add_option("--kappa", kappa_files, "Two label files (A is reference)")
                        ->expected(2);
  metrics->add_option("--column", column, "Label column in the --kappa files");
  metrics->add_flag("--per-label", per_label, "Per-label kappa/F1 report");
  auto *compare_opt =
      metrics->add_option("--compare", compare_files, "OURS THEIRS relation files")->expected(2);
  auto *mcnemar_opt =
      metrics->add_option("--mcnemar", mcnemar_file, "Two 0/1 columns of paired outcomes");
  auto *counts_opt =
      metrics->add_option("--mcnemar-counts", mcnemar_counts, "Discordant counts b c")->expected(2);
  kappa_opt->excludes(compare_opt)->excludes(mcnemar_opt)->excludes(counts_opt);
  compare_opt->excludes(mcnemar_opt)->excludes(counts_opt);
  mcnemar_opt->excludes(counts_opt);

  // simulate
  SimulationConfig sim;
  double p = 0.7, mean_time = 30.0;
  auto *simulate = app.add_subcommand("simulate", "Synthetic crowd through the QC protocol");
  simulate->add_option("--p", p, "Worker accuracy")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--mean-time", mean_time, "Mean response time (s)");
  simulate->add_option("--workers", sim.n_workers);
  simulate->add_option("--questions", sim.n_questions);
  simulate->add_option("--gold", sim.n_gold);
  simulate->add_option("--tasks-per-worker", sim.max_tasks_per_worker);
  simulate->add_option("--qualify-size", sim.qc.qualify_size);
  simulate->add_option("--qualify-threshold", sim.qc.qualify_threshold);
  simulate->add_option("--survive-threshold", sim.qc.survive_threshold);
  simulate->add_option("--judgements-per-question", sim.qc.judgements_per_question);
  simulate->add_option("--gold-rate", sim.qc.gold_injection_rate);

  // train / eval
  std::string corpus_path, relations_path, train_list, dev_list, test_list, wordnet_dir, pos_path,
      model_path;
  int max_epochs = 20;
  auto *train = app.add_subcommand("train", "Train the averaged perceptron baseline");
  train->add_option("--corpus", corpus_path)->required();
  train->add_option("--relations", relations_path)->required();
  train->add_option("--train-list", train_list)->required();
  train->add_option("--dev-list", dev_list);
  train->add_option("--wordnet", wordnet_dir, "WordNet dict directory");
  train->add_option("--pos", pos_path);
  train->add_option("--max-epochs", max_epochs)->check(CLI::PositiveNumber);
  auto *eval = app.add_subcommand("eval", "Evaluate a trained model");
  eval->add_option("--model", model_path)->required();
  eval->add_option("--corpus", corpus_path)->required();
  eval->add_option("--relations", relations_path)->required();
  eval->add_option("--test-list", test_list)->required();
  eval->add_option("--wordnet", wordnet_dir);
  eval->add_option("--pos", pos_path);

  // serve
  std::string bind, admin_token;
  auto *serve = app.add_subcommand("serve", "Run the annotation service");
  serve->add_option("--bind", bind, "host:port (default TEMPAXIS_BIND)");
  serve->add_option("--admin-token", admin_token, "default TEMPAXIS_ADMIN_TOKEN");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*ingest) {
      std::vector<fs::path> files;
      for (const auto &entry : fs::directory_iterator(Resolve(ingest_dir))) {
        const std::string ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".tml" || ext == ".xml")) files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      std::vector<Document> docs;
      TimemlOptions options;
      options.verbs_only = !all_events;
      for (const fs::path &file : files) {
        ParsedTimeml parsed =
            ParseTimeml(ReadFile(file.string()), file.stem().string(), options);
        for (const std::string &w : parsed.warnings) std::cerr << file.string() << ": " << w << "\n";
        parsed.document.source = file.filename().string();
        docs.push_back(std::move(parsed.document));
      }
      if (!ingest_pos.empty()) {
        ApplyPosSidecar(Read(ingest_pos), docs, ingest_pos);
      } else {
        for (Document &d : docs) TagMissing(d);
      }
      Emit(SaveCorpus(docs));
    } else if (*pairs) {
      const auto docs = LoadCorpusFile(pairs_corpus, "");
      const auto axes = LoadAxisAssignments(Read(pairs_axes), pairs_axes);
      Axis axis = Axis::Main();
      if (pairs_axis.rfind("orthogonal:", 0) == 0) {
        axis = Axis::Orthogonal(pairs_axis.substr(11));
      } else if (pairs_axis == "hypothesis") {
        axis = Axis::Parallel(ParallelKind::kHypothesis);
      } else if (pairs_axis == "generic") {
        axis = Axis::Parallel(ParallelKind::kGeneric);
      } else if (pairs_axis != "main") {
        throw CLI::ValidationError("--axis", "unknown axis " + pairs_axis);
      }
      std::vector<EventPair> out;
      for (const Document &doc : docs) {
        auto it = axes.find(doc.doc_id);
        if (it == axes.end()) {
          throw Error(ErrorCode::kMissingAssignment, "no axis assignments for " + doc.doc_id);
        }
        const auto members = AxisMembers(doc, axis, it->second);
        const auto generated = GeneratePairs(doc, members, window);
        out.insert(out.end(), generated.begin(), generated.end());
      }
      if (Json()) {
        nlohmann::json j = nlohmann::json::array();
        for (const EventPair &p : out) j.push_back({p.doc_id, p.first, p.second});
        Emit(j.dump(1) + "\n");
      } else {
        Emit(ExportPairs(out));
      }
    } else if (*convert) {
      RelationSet converted = ToStartPoints(LoadTbDense(Read(convert_input), convert_input));
      converted.source = RelationSource::kMatres;
      if (!convert_corpus.empty()) {
        const auto docs = LoadCorpusFile(convert_corpus, "");
        for (auto &[key, entry] : converted.entries) {
          for (const Document &doc : docs) {
            if (doc.doc_id != key.doc_id) continue;
            const Event *e1 = FindEventById(doc, key.first);
            const Event *e2 = FindEventById(doc, key.second);
            if (e1) entry.first_token = doc.tokens[e1->token_offset].surface;
            if (e2) entry.second_token = doc.tokens[e2->token_offset].surface;
          }
        }
      }
      Emit(ExportMatres(converted));
    } else if (*aggregate) {
      const auto docs = LoadCorpusFile(agg_corpus, "");
      auto collect = [&](const std::string &path) {
        std::vector<Judgement> judgements;
        for (const LoggedJudgement &l : ParseJudgementLog(Read(path), path)) {
          judgements.push_back(l.judgement);
        }
        return AggregateJudgements(judgements, min_judgements);
      };
      auto q1 = collect(agg_q1);
      auto q2 = collect(agg_q2);
      if (!agg_gold_q1.empty()) {
        for (const auto &[id, a] : ReadAnswers(agg_gold_q1)) q1[id] = a;
      }
      if (!agg_gold_q2.empty()) {
        for (const auto &[id, a] : ReadAnswers(agg_gold_q2)) q2[id] = a;
      }
      const AggregatedRelations result = CombineRelationAnswers(docs, q1, q2);
      for (const std::string &id : result.incomplete) {
        std::cerr << "warning: " << id << " lacks a Q1 or Q2 aggregate\n";
      }
      Emit(ExportMatres(result.relations));
    } else if (*metrics) {
      if (!kappa_files.empty()) {
        const auto a = ReadLabelColumn(kappa_files[0], column);
        const auto b = ReadLabelColumn(kappa_files[1], column);
        if (per_label) {
          std::set<std::string> seen(a.begin(), a.end());
          seen.insert(b.begin(), b.end());
          std::vector<std::string> labels = PointLabels();
          for (const std::string &l : seen) {
            if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
          }
          const AgreementReport report = PerLabelAgreement(a, b, labels);
          Emit(Json() ? ToJson(report) : ToTsv(report));
        } else {
          const double kappa = CohensKappa(a, b);
          Emit(Json() ? nlohmann::json{{"kappa", kappa}}.dump() + "\n"
                      : "kappa\t" + FormatDouble(kappa) + "\n");
        }
      } else if (!compare_files.empty()) {
        const ConfusionMatrix m =
            CompareDatasets(LoadRelations(compare_files[0]), LoadRelations(compare_files[1]));
        Emit(Json() ? ToJson(m) : ToTsv(m));
      } else if (!mcnemar_file.empty() || !mcnemar_counts.empty()) {
        McNemarResult r;
        if (!mcnemar_counts.empty()) {
          r = McNemarsTest(mcnemar_counts[0], mcnemar_counts[1]);
        } else {
          const auto x = ReadLabelColumn(mcnemar_file, 0);
          const auto y = ReadLabelColumn(mcnemar_file, 1);
          std::vector<std::pair<bool, bool>> paired;
          for (std::size_t i = 0; i < x.size(); ++i) paired.emplace_back(x[i] == "1", y[i] == "1");
          r = McNemarsTest(paired);
        }
        Emit(Json() ? ToJson(r) : ToTsv(r));
      } else {
        throw CLI::RequiredError("one of --kappa, --compare, --mcnemar, --mcnemar-counts");
      }
    } else if (*simulate) {
      sim.population = {WorkerModel{p, mean_time}};
      sim.seed = g.seed;
      sim.qc.rng_seed = g.seed;
      const QualityReport report = SimulateCrowd(sim);
      Emit(Json() ? ToJson(report) : ToTsv(report));
    } else if (*train) {
      const auto docs = LoadCorpusFile(corpus_path, pos_path);
      const RelationSet gold = LoadRelations(relations_path);
      const WordNetIndex wn = MaybeWordNet(wordnet_dir);
      const auto train_ex = BuildExamples(docs, LoadDocumentList(Read(train_list)), gold, wn);
      const auto dev_ex = dev_list.empty()
                              ? std::vector<Example>{}
                              : BuildExamples(docs, LoadDocumentList(Read(dev_list)), gold, wn);
      const TrainResult result = Train(train_ex, dev_ex, {max_epochs, g.seed});
      std::cerr << "selected epochs: " << result.best_epoch << "\n";
      Emit(result.model.Serialize());
    } else if (*eval) {
      const auto docs = LoadCorpusFile(corpus_path, pos_path);
      const PerceptronModel model = PerceptronModel::Deserialize(Read(model_path));
      const auto examples = BuildExamples(docs, LoadDocumentList(Read(test_list)),
                                          LoadRelations(relations_path), MaybeWordNet(wordnet_dir));
      const EvalReport report = Evaluate(model, examples);
      Emit(Json() ? ToJson(report) : ToTsv(report));
    } else if (*serve) {
      ServiceOptions options = ServiceOptionsFromEnvironment();
      if (!bind.empty()) {
        const std::size_t colon = bind.rfind(':');
        if (colon == std::string::npos) throw CLI::ValidationError("--bind", "expected host:port");
        options.host = bind.substr(0, colon);
        options.port = std::stoi(bind.substr(colon + 1));
      }
      if (!g.data_dir.empty()) options.data_dir = g.data_dir;
      if (!admin_token.empty()) options.admin_token = admin_token;
      AnnotationService service(options);
      const int port = service.Bind();
      if (port < 0) throw Error(ErrorCode::kIo, "cannot bind " + options.host);
      std::cerr << "listening on " << options.host << ":" << port << "\n";
      service.Run();
    }
  } catch (const CLI::Error &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
