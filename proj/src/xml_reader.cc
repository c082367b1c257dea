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

#include "tempaxis/xml_reader.h"

#include <cctype>
#include <cstdint>

#include "tempaxis/error.h"

namespace tempaxis {
namespace {

bool IsNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
         c == ':' || static_cast<unsigned char>(c) >= 0x80;
}

void AppendUtf8(std::string &out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  XmlNode Document() {
    SkipMisc();
    if (AtEnd() || Peek() != '<') Fail("expected root element");
    XmlNode root = Element();
    SkipMisc();
    if (!AtEnd()) Fail("content after root element");
    return root;
  }

 private:
  [[noreturn]] void Fail(const std::string &what) const {
    throw Error(ErrorCode::kMalformedXml, "offset " + std::to_string(pos_) + ": " + what);
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  bool StartsWith(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  void SkipSpace() {
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) ++pos_;
  }

  void SkipPast(std::string_view terminator) {
    const std::size_t end = text_.find(terminator, pos_);
    if (end == std::string_view::npos) Fail("unterminated markup");
    pos_ = end + terminator.size();
  }

  void SkipDoctype() {
    int depth = 0;
    while (!AtEnd()) {
      const char c = text_[pos_++];
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == '>' && depth <= 0) return;
    }
    Fail("unterminated DOCTYPE");
  }

  // Whitespace, comments, processing instructions and DOCTYPE outside the root.
  void SkipMisc() {
    while (true) {
      SkipSpace();
      if (StartsWith("<?")) {
        SkipPast("?>");
      } else if (StartsWith("<!--")) {
        SkipPast("-->");
      } else if (StartsWith("<!DOCTYPE")) {
        SkipDoctype();
      } else {
        return;
      }
    }
  }

  std::string Name() {
    const std::size_t start = pos_;
    while (!AtEnd() && IsNameChar(Peek())) ++pos_;
    if (start == pos_) Fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string Decode(std::string_view raw, std::size_t base) {
    std::string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      const std::size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos) {
        pos_ = base + i;
        Fail("unterminated entity");
      }
      const std::string_view entity = raw.substr(i + 1, semi - i - 1);
      if (entity == "amp") out += '&';
      else if (entity == "lt") out += '<';
      else if (entity == "gt") out += '>';
      else if (entity == "quot") out += '"';
      else if (entity == "apos") out += '\'';
      else if (entity.size() > 1 && entity[0] == '#') {
        std::uint32_t cp = 0;
        const bool hex = entity[1] == 'x' || entity[1] == 'X';
        const std::string_view digits = entity.substr(hex ? 2 : 1);
        if (digits.empty()) {
          pos_ = base + i;
          Fail("bad character reference");
        }
        for (char c : digits) {
          const int d = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                        : hex && std::isxdigit(static_cast<unsigned char>(c))
                            ? std::tolower(static_cast<unsigned char>(c)) - 'a' + 10
                            : -1;
          if (d < 0) {
            pos_ = base + i;
            Fail("bad character reference");
          }
          cp = cp * (hex ? 16 : 10) + static_cast<std::uint32_t>(d);
          if (cp > 0x10FFFF) {
            pos_ = base + i;
            Fail("character reference out of range");
          }
        }
        AppendUtf8(out, cp);
      } else {
        pos_ = base + i;
        Fail("unknown entity &" + std::string(entity) + ";");
      }
      i = semi;
    }
    return out;
  }

  XmlNode Element() {
    XmlNode node;
    node.offset = pos_;
    ++pos_;  // '<'
    node.name = Name();
    while (true) {
      SkipSpace();
      if (AtEnd()) Fail("unterminated start tag <" + node.name + ">");
      if (StartsWith("/>")) {
        pos_ += 2;
        return node;
      }
      if (Peek() == '>') {
        ++pos_;
        break;
      }
      std::string key = Name();
      SkipSpace();
      if (AtEnd() || Peek() != '=') Fail("expected '=' after attribute " + key);
      ++pos_;
      SkipSpace();
      if (AtEnd() || (Peek() != '"' && Peek() != '\'')) Fail("expected quoted value");
      const char quote = text_[pos_++];
      const std::size_t end = text_.find(quote, pos_);
      if (end == std::string_view::npos) Fail("unterminated attribute value");
      const std::size_t start = pos_;
      std::string value = Decode(text_.substr(start, end - start), start);
      pos_ = end + 1;
      for (const auto &[k, v] : node.attributes) {
        if (k == key) Fail("duplicate attribute " + key);
      }
      node.attributes.emplace_back(std::move(key), std::move(value));
    }
    Content(node);
    return node;
  }

  void Content(XmlNode &node) {
    while (true) {
      if (AtEnd()) Fail("missing </" + node.name + ">");
      if (StartsWith("</")) {
        pos_ += 2;
        const std::string closing = Name();
        SkipSpace();
        if (AtEnd() || Peek() != '>') Fail("malformed end tag");
        ++pos_;
        if (closing != node.name) {
          Fail("</" + closing + "> does not close <" + node.name + ">");
        }
        return;
      }
      if (StartsWith("<!--")) {
        SkipPast("-->");
      } else if (StartsWith("<![CDATA[")) {
        const std::size_t start = pos_ + 9;
        SkipPast("]]>");
        AddText(node, std::string(text_.substr(start, pos_ - 3 - start)), start);
      } else if (StartsWith("<?")) {
        SkipPast("?>");
      } else if (Peek() == '<') {
        node.children.push_back(Element());
      } else {
        const std::size_t start = pos_;
        const std::size_t end = text_.find('<', pos_);
        pos_ = end == std::string_view::npos ? text_.size() : end;
        AddText(node, Decode(text_.substr(start, pos_ - start), start), start);
      }
    }
  }

  static void AddText(XmlNode &node, std::string text, std::size_t offset) {
    if (!node.children.empty() && node.children.back().is_text()) {
      node.children.back().text += text;
      return;
    }
    XmlNode t;
    t.text = std::move(text);
    t.offset = offset;
    node.children.push_back(std::move(t));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void CollectText(const XmlNode &node, std::string &out) {
  if (node.is_text()) {
    out += node.text;
    return;
  }
  for (const XmlNode &child : node.children) CollectText(child, out);
}

}  // namespace

const std::string *XmlNode::Attribute(std::string_view key) const {
  for (const auto &[k, v] : attributes) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string XmlNode::InnerText() const {
  std::string out;
  CollectText(*this, out);
  return out;
}

XmlNode ParseXml(std::string_view text) { return Parser(text).Document(); }

}  // namespace tempaxis
