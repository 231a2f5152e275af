// Copyright 2026 The ACE Toolkit Authors
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

#include "ace/program.hpp"

#include <algorithm>
#include <cctype>

#include "ace/error.hpp"

namespace ace {

std::string_view condition_keyword(Condition c) {
  switch (c) {
    case Condition::PathAhead: return "path_ahead";
    case Condition::PathLeft: return "path_left";
    case Condition::PathRight: return "path_right";
  }
  return "?";
}

int block_count(const std::vector<Block>& blocks) {
  int n = 0;
  for (const Block& b : blocks) n += 1 + block_count(b.body) + block_count(b.otherwise);
  return n;
}

int nesting_depth(const std::vector<Block>& blocks) {
  int depth = 0;
  for (const Block& b : blocks) {
    if (!b.compound()) continue;
    depth = std::max(depth, 1 + std::max(nesting_depth(b.body), nesting_depth(b.otherwise)));
  }
  return depth;
}

namespace {

std::optional<std::string> blocks_violation(const std::vector<Block>& blocks) {
  for (const Block& b : blocks) {
    switch (b.kind) {
      case BlockKind::Move:
      case BlockKind::TurnLeft:
      case BlockKind::TurnRight:
        if (!b.body.empty() || !b.otherwise.empty()) return "primitive block with a body";
        continue;
      case BlockKind::Repeat:
        if (b.count < kMinRepeat || b.count > kMaxRepeat) {
          return "repeat count " + std::to_string(b.count) + " outside [1,99]";
        }
        break;
      case BlockKind::IfElse:
        if (b.otherwise.empty()) return "empty else body";
        break;
      default:
        break;
    }
    if (b.body.empty()) return "empty block body";
    if (b.kind != BlockKind::IfElse && !b.otherwise.empty()) return "else body on a non if/else block";
    if (auto v = blocks_violation(b.body)) return v;
    if (auto v = blocks_violation(b.otherwise)) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> program_violation(const Program& p) {
  if (auto v = blocks_violation(p.blocks)) return v;
  if (nesting_depth(p.blocks) > kMaxNesting) return "nesting deeper than 8";
  if (block_count(p) > kMaxBlocks) return "more than 200 blocks";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Word, Int, LBrace, RBrace, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line_, col_});
        return out;
      }
      const char c = src_[pos_];
      const int line = line_, col = col_;
      if (c == '{' || c == '}') {
        advance();
        out.push_back({c == '{' ? Tok::LBrace : Tok::RBrace, std::string(1, c), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
        std::string text(1, c);
        advance();
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          text += src_[pos_];
          advance();
        }
        if (text == "-") throw ParseError(line, col, "integer", "stray '-'");
        out.push_back({Tok::Int, text, line, col});
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string text;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_')) {
          text += src_[pos_];
          advance();
        }
        out.push_back({Tok::Word, text, line, col});
      } else {
        throw ParseError(line, col, "block keyword", std::string("unexpected character '") + c + "'");
      }
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<Block> program() {
    std::vector<Block> blocks;
    while (peek().kind != Tok::End) {
      if (peek().kind == Tok::RBrace) fail(peek(), "block keyword", "unbalanced '}'");
      blocks.push_back(block(1));
    }
    return blocks;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] static void fail(const Token& t, const std::string& expected,
                                const std::string& detail) {
    throw ParseError(t.line, t.column, expected, detail);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::LBrace: return "'{'";
      case Tok::RBrace: return "'}'";
      default: return "'" + t.text + "'";
    }
  }

  // `depth` is the nesting level a compound block at this position would occupy.
  Block block(int depth) {
    const Token& t = next();
    if (t.kind != Tok::Word) fail(t, "block keyword", "unexpected " + describe(t));
    if (t.text == "move") return Block::move();
    if (t.text == "turn_left") return Block::turn_left();
    if (t.text == "turn_right") return Block::turn_right();
    if (t.text != "repeat" && t.text != "repeat_until_goal" && t.text != "if") {
      fail(t, "block keyword", "unknown keyword '" + t.text + "'");
    }
    if (depth > kMaxNesting) fail(t, "", "nesting deeper than 8");

    if (t.text == "repeat") {
      const Token& n = next();
      if (n.kind != Tok::Int) fail(n, "repeat count", "unexpected " + describe(n));
      long value = 0;
      try {
        value = n.text.size() > 4 ? 100 : std::stol(n.text);
      } catch (const std::exception&) {
        value = 0;
      }
      if (value < kMinRepeat || value > kMaxRepeat) {
        fail(n, "count in [1,99]", "repeat count " + n.text + " out of range");
      }
      return Block::repeat(static_cast<int>(value), body(depth));
    }
    if (t.text == "repeat_until_goal") return Block::repeat_until_goal(body(depth));

    const Token& c = next();
    Condition cond{};
    if (c.kind == Tok::Word && c.text == "path_ahead") {
      cond = Condition::PathAhead;
    } else if (c.kind == Tok::Word && c.text == "path_left") {
      cond = Condition::PathLeft;
    } else if (c.kind == Tok::Word && c.text == "path_right") {
      cond = Condition::PathRight;
    } else {
      fail(c, "path_ahead, path_left or path_right", "unknown condition " + describe(c));
    }
    auto then = body(depth);
    if (peek().kind == Tok::Word && peek().text == "else") {
      next();
      return Block::if_else(cond, std::move(then), body(depth));
    }
    return Block::if_then(cond, std::move(then));
  }

  std::vector<Block> body(int depth) {
    const Token& open = next();
    if (open.kind != Tok::LBrace) fail(open, "'{'", "unexpected " + describe(open));
    std::vector<Block> blocks;
    while (peek().kind != Tok::RBrace) {
      if (peek().kind == Tok::End) fail(peek(), "'}'", "unbalanced '{' opened at line " +
                                                          std::to_string(open.line));
      blocks.push_back(block(depth + 1));
    }
    if (blocks.empty()) fail(peek(), "block keyword", "empty body");
    next();
    return blocks;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_blocks(const std::vector<Block>& blocks, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const Block& b : blocks) {
    if (!out.empty()) out += '\n';
    out += pad;
    switch (b.kind) {
      case BlockKind::Move: out += "move"; continue;
      case BlockKind::TurnLeft: out += "turn_left"; continue;
      case BlockKind::TurnRight: out += "turn_right"; continue;
      case BlockKind::Repeat: out += "repeat " + std::to_string(b.count) + " {"; break;
      case BlockKind::RepeatUntilGoal: out += "repeat_until_goal {"; break;
      case BlockKind::If:
      case BlockKind::IfElse:
        out += "if ";
        out += condition_keyword(b.cond);
        out += " {";
        break;
    }
    print_blocks(b.body, indent + 1, out);
    out += '\n' + pad + "}";
    if (b.kind == BlockKind::IfElse) {
      out += " else {";
      print_blocks(b.otherwise, indent + 1, out);
      out += '\n' + pad + "}";
    }
  }
}

void inline_blocks(const std::vector<Block>& blocks, std::string& out) {
  for (const Block& b : blocks) {
    if (!out.empty()) out += ' ';
    switch (b.kind) {
      case BlockKind::Move: out += "move"; continue;
      case BlockKind::TurnLeft: out += "turn_left"; continue;
      case BlockKind::TurnRight: out += "turn_right"; continue;
      case BlockKind::Repeat: out += "repeat " + std::to_string(b.count) + " {"; break;
      case BlockKind::RepeatUntilGoal: out += "repeat_until_goal {"; break;
      case BlockKind::If:
      case BlockKind::IfElse:
        out += "if ";
        out += condition_keyword(b.cond);
        out += " {";
        break;
    }
    inline_blocks(b.body, out);
    out += " }";
    if (b.kind == BlockKind::IfElse) {
      out += " else {";
      inline_blocks(b.otherwise, out);
      out += " }";
    }
  }
}

}  // namespace

Program parse_program(std::string_view text) {
  Parser parser(Lexer(text).run());
  Program p(parser.program());
  if (block_count(p) > kMaxBlocks) {
    throw ParseError(1, 1, "", "program has more than 200 blocks");
  }
  p.source = std::string(text);
  return p;
}

std::string pretty_print(const Program& p) {
  std::string out;
  print_blocks(p.blocks, 0, out);
  return out;
}

std::string inline_text(const Program& p) {
  std::string out;
  inline_blocks(p.blocks, out);
  return out;
}

}  // namespace ace
