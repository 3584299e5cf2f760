// Copyright 2026 The nner-lin Authors.
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

#include "nnerlin/corpus_io.h"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace nnerlin {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

bool GetLine(std::istream &in, std::string *line) {
  if (!std::getline(in, *line)) return false;
  if (!line->empty() && line->back() == '\r') line->pop_back();
  return true;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(sep, pos);
    if (next == std::string_view::npos) {
      fields.push_back(text.substr(pos));
      return fields;
    }
    fields.push_back(text.substr(pos, next - pos));
    pos = next + 1;
  }
}

EntitySpan ReadEntity(const json &value, int num_tokens, int line) {
  if (!value.is_object()) throw ParseError("entity must be an object", line);
  for (const char *key : {"start", "end"}) {
    if (!value.contains(key) || !value[key].is_number_integer()) {
      throw ParseError(std::string("entity field '") + key +
                           "' must be an integer",
                       line);
    }
  }
  if (!value.contains("type") || !value["type"].is_string()) {
    throw ParseError("entity field 'type' must be a string", line);
  }
  EntitySpan span;
  long long start = value["start"].get<long long>();
  long long end = value["end"].get<long long>();
  if (start < 0 || end < 0 || start > num_tokens || end > num_tokens) {
    throw ParseError("entity indices [" + std::to_string(start) + "," +
                         std::to_string(end) + ") outside sentence of " +
                         std::to_string(num_tokens) + " tokens",
                     line);
  }
  span.start = static_cast<int>(start);
  span.end = static_cast<int>(end);
  span.type = value["type"].get<std::string>();
  if (!IsValidEntityType(span.type)) {
    throw ParseError("invalid entity type '" + span.type + "'", line);
  }
  return span;
}

Sentence ReadRecord(std::string_view text, int line, CrossingPolicy policy,
                    ParseStats *stats) {
  json record;
  try {
    record = json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line);
  }
  if (!record.is_object() || !record.contains("tokens") ||
      !record["tokens"].is_array()) {
    throw ParseError("record must be an object with a 'tokens' array", line);
  }
  Sentence sentence;
  for (const json &token : record["tokens"]) {
    if (!token.is_string() || !IsValidToken(token.get<std::string>())) {
      throw ParseError("tokens must be non-empty strings without tabs or "
                       "newlines",
                       line);
    }
    sentence.tokens.push_back(token.get<std::string>());
  }
  if (sentence.tokens.empty()) throw ParseError("empty token list", line);

  if (record.contains("entities")) {
    if (!record["entities"].is_array()) {
      throw ParseError("'entities' must be an array", line);
    }
    for (const json &value : record["entities"]) {
      EntitySpan span = ReadEntity(value, sentence.size(), line);
      auto warn = [&](const std::string &message) {
        if (stats != nullptr) {
          stats->warnings.push_back("line " + std::to_string(line) + ": " +
                                    message);
        }
      };
      if (span.start >= span.end) {
        if (policy == CrossingPolicy::kError) {
          throw ValidationError("line " + std::to_string(line) +
                                ": inverted span " + ToString(span));
        }
        warn("dropped inverted span " + ToString(span));
        if (stats != nullptr) ++stats->spans_dropped;
        continue;
      }
      bool keep = true;
      for (const EntitySpan &kept : sentence.entities) {
        if (kept == span) {
          warn("removed duplicate entity " + ToString(span));
          if (stats != nullptr) ++stats->duplicates_removed;
          keep = false;
          break;
        }
        if (kept.Crosses(span)) {
          if (policy == CrossingPolicy::kError) {
            throw ValidationError("line " + std::to_string(line) +
                                  ": crossing spans " + ToString(kept) +
                                  " and " + ToString(span));
          }
          warn("dropped " + ToString(span) + " crossing " + ToString(kept));
          if (stats != nullptr) ++stats->spans_dropped;
          keep = false;
          break;
        }
      }
      if (keep) sentence.entities.push_back(std::move(span));
    }
  }
  return sentence;
}

// Tree tokenizer.
class TreeLexer {
 public:
  explicit TreeLexer(std::string_view text) : text_(text) {}

  // Returns "(", ")", an atom, or "" at end of input.
  std::string_view Next() {
    while (pos_ < text_.size() && std::isspace(Byte(pos_))) ++pos_;
    if (pos_ >= text_.size()) return {};
    if (text_[pos_] == '(' || text_[pos_] == ')') return text_.substr(pos_++, 1);
    size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(Byte(pos_)) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  size_t position() const { return pos_; }

 private:
  unsigned char Byte(size_t i) const {
    return static_cast<unsigned char>(text_[i]);
  }
  std::string_view text_;
  size_t pos_ = 0;
};

std::string ReplaceAll(std::string text, std::string_view from,
                       std::string_view to) {
  size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

std::string UnescapeToken(std::string_view atom) {
  return ReplaceAll(ReplaceAll(std::string(atom), "-LRB-", "("), "-RRB-", ")");
}

std::string EscapeToken(std::string_view token) {
  return ReplaceAll(ReplaceAll(std::string(token), "(", "-LRB-"), ")",
                    "-RRB-");
}

ParseError TreeError(const std::string &message, const TreeLexer &lexer) {
  return ParseError(message + " at offset " + std::to_string(lexer.position()));
}

// Called after the opening parenthesis has been consumed.
Node ReadNode(TreeLexer *lexer, int *next_token) {
  std::string_view label = lexer->Next();
  if (label.empty()) throw TreeError("unbalanced brackets", *lexer);
  if (label == "(" || label == ")") {
    throw TreeError("missing non-terminal label", *lexer);
  }
  Node node = Node::Nonterminal(std::string(label), {});
  while (true) {
    std::string_view token = lexer->Next();
    if (token.empty()) throw TreeError("unbalanced brackets", *lexer);
    if (token == ")") break;
    if (token == "(") {
      node.children.push_back(ReadNode(lexer, next_token));
    } else {
      node.children.push_back(Node::Leaf((*next_token)++, UnescapeToken(token)));
    }
  }
  if (node.children.empty()) {
    throw TreeError("empty non-terminal '" + node.label + "'", *lexer);
  }
  return node;
}

void AppendNode(const Node &node, std::string *out) {
  if (node.is_leaf()) {
    if (node.label.empty() ||
        node.label.find_first_of(" \t\n\r") != std::string::npos) {
      throw std::invalid_argument("token not representable in bracketing: '" +
                                  node.label + "'");
    }
    out->append(EscapeToken(node.label));
    return;
  }
  if (node.label.empty() ||
      node.label.find_first_of(" \t\n\r()") != std::string::npos) {
    throw std::invalid_argument("label not representable in bracketing: '" +
                                node.label + "'");
  }
  out->push_back('(');
  out->append(node.label);
  for (const Node &child : node.children) {
    out->push_back(' ');
    AppendNode(child, out);
  }
  out->push_back(')');
}

}  // namespace

std::vector<Sentence> ParseCorpus(std::istream &in, CrossingPolicy policy,
                                  ParseStats *stats) {
  std::vector<Sentence> sentences;
  std::string line;
  int line_number = 0;
  while (GetLine(in, &line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    sentences.push_back(ReadRecord(line, line_number, policy, stats));
    if (stats != nullptr) {
      ++stats->sentences;
      stats->entities += static_cast<int>(sentences.back().entities.size());
    }
  }
  return sentences;
}

std::vector<Sentence> ParseCorpus(std::string_view text, CrossingPolicy policy,
                                  ParseStats *stats) {
  std::istringstream in{std::string(text)};
  return ParseCorpus(in, policy, stats);
}

std::string WriteRecord(const Sentence &sentence) {
  std::vector<EntitySpan> entities = sentence.entities;
  SortCanonical(&entities);
  ordered_json record;
  record["tokens"] = sentence.tokens;
  record["entities"] = ordered_json::array();
  for (const EntitySpan &e : entities) {
    ordered_json entity;
    entity["start"] = e.start;
    entity["end"] = e.end;
    entity["type"] = e.type;
    record["entities"].push_back(std::move(entity));
  }
  return record.dump(-1, ' ', false, json::error_handler_t::strict);
}

void WriteCorpus(const std::vector<Sentence> &sentences, std::ostream &out) {
  for (const Sentence &sentence : sentences) out << WriteRecord(sentence) << '\n';
}

std::string WriteCorpus(const std::vector<Sentence> &sentences) {
  std::ostringstream out;
  WriteCorpus(sentences, out);
  return out.str();
}

std::vector<LabeledSentence> ParseLabeled(std::istream &in) {
  std::vector<LabeledSentence> sentences;
  std::string line;
  int line_number = 0;
  bool have_header = false;
  bool combined = false;
  Scheme scheme = Scheme::kAbsolute;
  LabeledSentence current;

  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.scheme = scheme;
    sentences.push_back(std::move(current));
    current = LabeledSentence();
  };

  while (GetLine(in, &line)) {
    ++line_number;
    if (!have_header) {
      if (IsBlank(line)) continue;
      if (line.rfind("#", 0) != 0) {
        throw ParseError("missing '# scheme=... columns=...' header",
                         line_number);
      }
      std::istringstream fields(line.substr(1));
      std::string field;
      bool have_scheme = false;
      bool have_columns = false;
      while (fields >> field) {
        if (field.rfind("scheme=", 0) == 0) {
          auto parsed = SchemeFromName(field.substr(7));
          if (!parsed) {
            throw ParseError("unknown scheme '" + field.substr(7) + "'",
                             line_number);
          }
          scheme = *parsed;
          have_scheme = true;
        } else if (field.rfind("columns=", 0) == 0) {
          std::string value = field.substr(8);
          if (value != "split" && value != "combined") {
            throw ParseError("unknown column layout '" + value + "'",
                             line_number);
          }
          combined = value == "combined";
          have_columns = true;
        }
      }
      if (!have_scheme || !have_columns) {
        throw ParseError("header must declare scheme= and columns=",
                         line_number);
      }
      have_header = true;
      continue;
    }
    if (line.empty()) {
      flush();
      continue;
    }
    std::vector<std::string_view> fields = Split(line, '\t');
    size_t expected = combined ? 2 : 4;
    if (fields.size() != expected) {
      throw ParseError("expected " + std::to_string(expected) +
                           " columns, found " + std::to_string(fields.size()),
                       line_number);
    }
    if (!IsValidToken(fields[0])) throw ParseError("empty token", line_number);
    TagLabel label;
    try {
      if (combined) {
        label = ParseCombined(fields[1], scheme);
      } else {
        if (fields[2].empty() || fields[3].empty()) {
          throw LexError("empty label column");
        }
        label = ParseCount(fields[1], scheme);
        label.nonterminal = ParseSlot(fields[2]);
        label.unary = ParseSlot(fields[3]);
      }
    } catch (const LexError &e) {
      throw ParseError(e.what(), line_number);
    }
    current.tokens.emplace_back(fields[0]);
    current.labels.push_back(std::move(label));
  }
  flush();
  return sentences;
}

std::vector<LabeledSentence> ParseLabeled(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseLabeled(in);
}

void WriteLabeled(const std::vector<LabeledSentence> &sentences, bool combined,
                  std::ostream &out) {
  if (sentences.empty()) return;
  Scheme scheme = sentences.front().scheme;
  out << "# scheme=" << SchemeName(scheme)
      << " columns=" << (combined ? "combined" : "split") << '\n';
  for (const LabeledSentence &sentence : sentences) {
    if (sentence.scheme != scheme) {
      throw std::invalid_argument("tag file sentences must share one scheme");
    }
    if (sentence.labels.size() != sentence.tokens.size()) {
      throw std::invalid_argument("label count differs from token count");
    }
    for (size_t i = 0; i < sentence.tokens.size(); ++i) {
      const TagLabel &label = sentence.labels[i];
      out << sentence.tokens[i] << '\t';
      if (combined) {
        out << FormatCombined(label, scheme);
      } else {
        out << FormatCount(label, scheme) << '\t'
            << FormatSlot(label.nonterminal) << '\t'
            << FormatSlot(label.unary);
      }
      out << '\n';
    }
    out << '\n';
  }
}

std::string WriteLabeled(const std::vector<LabeledSentence> &sentences,
                         bool combined) {
  std::ostringstream out;
  WriteLabeled(sentences, combined, out);
  return out.str();
}

ConstTree ParseTree(std::string_view text) {
  TreeLexer lexer(text);
  if (lexer.Next() != "(") throw TreeError("tree must start with '('", lexer);
  int next_token = 0;
  ConstTree tree{ReadNode(&lexer, &next_token)};
  if (!lexer.Next().empty()) {
    throw TreeError("unbalanced brackets: trailing input", lexer);
  }
  return tree;
}

std::string WriteTree(const Node &root) {
  std::string out;
  AppendNode(root, &out);
  return out;
}

std::string WriteTree(const ConstTree &tree) { return WriteTree(tree.root); }

}  // namespace nnerlin
