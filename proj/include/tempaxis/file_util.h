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

#ifndef TEMPAXIS_FILE_UTIL_H_
#define TEMPAXIS_FILE_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace tempaxis {

// Whole-file read; kMissingFile when the file cannot be opened.
std::string ReadFile(const std::string &path);

// Writes to a temporary sibling and renames it over `path`.
void WriteFileAtomic(const std::string &path, std::string_view contents);

// Splits on '\t' without unescaping.
std::vector<std::string_view> SplitTabs(std::string_view line);

// Splits text into lines, dropping a trailing '\r' on each.
std::vector<std::string_view> SplitLines(std::string_view text);

// TSV field escaping: tab, newline, carriage return and backslash.
std::string EscapeField(std::string_view field);
std::string UnescapeField(std::string_view field);

// Shortest representation that parses back to the same double.
std::string FormatDouble(double value);
// Strict parse of a whole field; returns false on junk.
bool ParseDouble(std::string_view text, double *out);
bool ParseInt(std::string_view text, long long *out);

std::string Trim(std::string_view text);

}  // namespace tempaxis

#endif  // TEMPAXIS_FILE_UTIL_H_
