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

#include "tempaxis/wordnet.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <sstream>

#include "tempaxis/error.h"
#include "tempaxis/file_util.h"

namespace tempaxis {
namespace {

const std::vector<std::string> kNoSynsets;
const std::set<std::string> kNoLemmas;

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

struct Record {
  std::size_t offset;  // byte offset of the line in its file
  std::vector<std::string> fields;
};

// Non-license lines split on spaces; the gloss after '|' is dropped.
std::vector<Record> ReadRecords(const std::string &text) {
  std::vector<Record> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != ' ') {
      if (auto bar = line.find(" | "); bar != std::string_view::npos) line = line.substr(0, bar);
      Record record{pos, {}};
      std::istringstream in{std::string(line)};
      for (std::string f; in >> f;) record.fields.push_back(std::move(f));
      out.push_back(std::move(record));
    }
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void Fail(const std::string &file, std::size_t offset, const std::string &what) {
  throw Error(ErrorCode::kParseError, file + ": offset " + std::to_string(offset) + ": " + what);
}

long long Number(const Record &r, std::size_t i, int base, const std::string &file) {
  if (i >= r.fields.size()) Fail(file, r.offset, "truncated record");
  try {
    std::size_t used = 0;
    long long v = std::stoll(r.fields[i], &used, base);
    if (used != r.fields[i].size() || v < 0) Fail(file, r.offset, "bad number '" + r.fields[i] + "'");
    return v;
  } catch (const std::logic_error &) {
    Fail(file, r.offset, "bad number '" + r.fields[i] + "'");
  }
}

struct DataSynset {
  std::vector<std::string> words;
  // (target pos, target offset, source word number, target word number)
  struct Pointer {
    char pos;
    std::string offset;
    int source;
    int target;
  };
  std::vector<Pointer> derivations;
};

std::map<std::string, DataSynset> ParseData(const std::string &path, const std::string &name) {
  std::map<std::string, DataSynset> out;
  for (const Record &r : ReadRecords(ReadFile(path))) {
    if (r.fields.size() < 4) Fail(name, r.offset, "truncated record");
    DataSynset synset;
    const long long w_cnt = Number(r, 3, 16, name);
    std::size_t i = 4;
    for (long long w = 0; w < w_cnt; ++w, i += 2) {
      if (i + 1 >= r.fields.size()) Fail(name, r.offset, "truncated word list");
      std::string word = r.fields[i];
      // Adjective syntactic markers, e.g. "galore(ip)".
      if (auto paren = word.find('('); paren != std::string::npos) word.resize(paren);
      synset.words.push_back(Lower(word));
    }
    const long long p_cnt = Number(r, i, 10, name);
    ++i;
    for (long long p = 0; p < p_cnt; ++p, i += 4) {
      if (i + 3 >= r.fields.size()) Fail(name, r.offset, "truncated pointer list");
      if (r.fields[i] != "+") continue;
      const std::string &st = r.fields[i + 3];
      if (st.size() != 4) Fail(name, r.offset, "bad source/target field '" + st + "'");
      Record hex{r.offset, {st.substr(0, 2), st.substr(2)}};
      synset.derivations.push_back({r.fields[i + 2].empty() ? '?' : r.fields[i + 2][0],
                                    r.fields[i + 1], static_cast<int>(Number(hex, 0, 16, name)),
                                    static_cast<int>(Number(hex, 1, 16, name))});
    }
    out[r.fields[0]] = std::move(synset);
  }
  return out;
}

}  // namespace

const std::vector<std::string> &WordNetIndex::Synsets(std::string_view lemma) const {
  auto it = synsets_.find(Lower(lemma));
  return it == synsets_.end() ? kNoSynsets : it->second;
}

const std::set<std::string> &WordNetIndex::Members(std::string_view synset) const {
  auto it = members_.find(synset);
  return it == members_.end() ? kNoLemmas : it->second;
}

bool WordNetIndex::SharesSynset(std::string_view a, std::string_view b) const {
  const auto &sa = Synsets(a);
  const auto &sb = Synsets(b);
  for (const std::string &s : sa) {
    if (std::find(sb.begin(), sb.end(), s) != sb.end()) return true;
  }
  return false;
}

const std::set<std::string> &WordNetIndex::DerivationalLinks(std::string_view lemma) const {
  auto it = derivations_.find(Lower(lemma));
  return it == derivations_.end() ? kNoLemmas : it->second;
}

bool WordNetIndex::DerivationallyRelated(std::string_view a, std::string_view b) const {
  const auto &la = DerivationalLinks(a);
  const auto &lb = DerivationalLinks(b);
  if (la.count(Lower(b)) > 0) return true;
  for (const std::string &x : la) {
    if (lb.count(x) > 0) return true;
  }
  return false;
}

std::string WordNetIndex::Lemmatize(std::string_view word) const {
  const std::string lower = Lower(word);
  if (auto it = exceptions_.find(lower); it != exceptions_.end()) return it->second;
  if (synsets_.count(lower) > 0) return lower;
  static const std::pair<std::string_view, std::string_view> kRules[] = {
      {"s", ""}, {"ies", "y"}, {"es", "e"}, {"es", ""},
      {"ed", "e"}, {"ed", ""}, {"ing", "e"}, {"ing", ""},
  };
  for (const auto &[suffix, replacement] : kRules) {
    if (lower.size() <= suffix.size() ||
        lower.compare(lower.size() - suffix.size(), suffix.size(), suffix) != 0) {
      continue;
    }
    std::string base = lower.substr(0, lower.size() - suffix.size()) + std::string(replacement);
    if (synsets_.count(base) > 0) return base;
  }
  return lower;
}

void WordNetIndex::AddSense(const std::string &lemma, const std::string &synset) {
  const std::string key = Lower(lemma);
  auto &list = synsets_[key];
  if (std::find(list.begin(), list.end(), synset) == list.end()) list.push_back(synset);
  members_[synset].insert(key);
}

void WordNetIndex::AddDerivation(const std::string &a, const std::string &b) {
  const std::string la = Lower(a);
  const std::string lb = Lower(b);
  if (la == lb) return;
  derivations_[la].insert(lb);
  derivations_[lb].insert(la);
}

void WordNetIndex::AddException(const std::string &inflected, const std::string &base) {
  exceptions_.emplace(Lower(inflected), Lower(base));
}

WordNetIndex LoadWordNet(const std::string &directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);
  WordNetIndex index;

  for (const Record &r : ReadRecords(ReadFile((dir / "index.verb").string()))) {
    const std::string name = "index.verb";
    const long long synset_cnt = Number(r, 2, 10, name);
    const long long p_cnt = Number(r, 3, 10, name);
    const std::size_t first = 4 + static_cast<std::size_t>(p_cnt) + 2;
    if (r.fields.size() != first + static_cast<std::size_t>(synset_cnt)) {
      Fail(name, r.offset, "expected " + std::to_string(synset_cnt) + " synset offsets");
    }
    for (std::size_t i = first; i < r.fields.size(); ++i) {
      index.AddSense(r.fields[0], "v" + r.fields[i]);
    }
  }

  const auto verbs = ParseData((dir / "data.verb").string(), "data.verb");
  std::map<std::string, DataSynset> nouns;
  if (fs::exists(dir / "data.noun")) nouns = ParseData((dir / "data.noun").string(), "data.noun");
  if (fs::exists(dir / "verb.exc")) {
    for (const Record &r : ReadRecords(ReadFile((dir / "verb.exc").string()))) {
      if (r.fields.size() >= 2) index.AddException(r.fields[0], r.fields[1]);
    }
  }

  for (const auto &[offset, synset] : verbs) {
    for (const DataSynset::Pointer &p : synset.derivations) {
      const auto &targets = p.pos == 'v' ? verbs : nouns;
      auto target = targets.find(p.offset);
      if (target == targets.end()) continue;
      for (std::size_t s = 0; s < synset.words.size(); ++s) {
        if (p.source != 0 && static_cast<int>(s) + 1 != p.source) continue;
        for (std::size_t t = 0; t < target->second.words.size(); ++t) {
          if (p.target != 0 && static_cast<int>(t) + 1 != p.target) continue;
          index.AddDerivation(synset.words[s], target->second.words[t]);
        }
      }
    }
  }
  return index;
}

}  // namespace tempaxis
