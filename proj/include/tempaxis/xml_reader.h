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

#ifndef TEMPAXIS_XML_READER_H_
#define TEMPAXIS_XML_READER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tempaxis {

// Minimal XML tree for corpus files: elements, attributes and text, with the
// predefined and numeric character entities. Comments, processing
// instructions and DOCTYPE declarations are skipped; CDATA becomes text.
struct XmlNode {
  std::string name;  // empty for text nodes
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<XmlNode> children;
  std::string text;  // text nodes only
  std::size_t offset = 0;  // byte offset of the node in the source

  bool is_text() const { return name.empty(); }
  // Attribute value or nullptr.
  const std::string *Attribute(std::string_view key) const;
  // All descendant text, concatenated.
  std::string InnerText() const;
};

// Parses a document with a single root element. Throws kMalformedXml with the
// byte offset of the problem.
XmlNode ParseXml(std::string_view text);

}  // namespace tempaxis

#endif  // TEMPAXIS_XML_READER_H_
