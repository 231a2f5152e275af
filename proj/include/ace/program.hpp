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

// The block language and its canonical text form:
//
//   program := block*
//   block   := "move" | "turn_left" | "turn_right"
//            | "repeat" INT "{" block+ "}"
//            | "repeat_until_goal" "{" block+ "}"
//            | "if" cond "{" block+ "}" [ "else" "{" block+ "}" ]
//   cond    := "path_ahead" | "path_left" | "path_right"
//
// Whitespace is insignificant and '#' starts a comment that runs to the end
// of the line.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ace {

inline constexpr int kMinRepeat = 1;
inline constexpr int kMaxRepeat = 99;
/// Maximum number of compound blocks enclosing one another.
inline constexpr int kMaxNesting = 8;
inline constexpr int kMaxBlocks = 200;

enum class Condition { PathAhead, PathLeft, PathRight };

std::string_view condition_keyword(Condition c);

enum class BlockKind { Move, TurnLeft, TurnRight, Repeat, RepeatUntilGoal, If, IfElse };

struct Block {
  BlockKind kind = BlockKind::Move;
  int count = 0;                          // Repeat only
  Condition cond = Condition::PathAhead;  // If / IfElse only
  std::vector<Block> body;                // Repeat, RepeatUntilGoal, If, IfElse (then-branch)
  std::vector<Block> otherwise;           // IfElse only

  static Block move() { return {BlockKind::Move, 0, Condition::PathAhead, {}, {}}; }
  static Block turn_left() { return {BlockKind::TurnLeft, 0, Condition::PathAhead, {}, {}}; }
  static Block turn_right() { return {BlockKind::TurnRight, 0, Condition::PathAhead, {}, {}}; }
  static Block repeat(int n, std::vector<Block> body) {
    return {BlockKind::Repeat, n, Condition::PathAhead, std::move(body), {}};
  }
  static Block repeat_until_goal(std::vector<Block> body) {
    return {BlockKind::RepeatUntilGoal, 0, Condition::PathAhead, std::move(body), {}};
  }
  static Block if_then(Condition c, std::vector<Block> then) {
    return {BlockKind::If, 0, c, std::move(then), {}};
  }
  static Block if_else(Condition c, std::vector<Block> then, std::vector<Block> otherwise) {
    return {BlockKind::IfElse, 0, c, std::move(then), std::move(otherwise)};
  }

  bool compound() const {
    return kind != BlockKind::Move && kind != BlockKind::TurnLeft && kind != BlockKind::TurnRight;
  }

  friend bool operator==(const Block&, const Block&) = default;
};

struct Program {
  std::vector<Block> blocks;
  std::optional<std::string> source;

  Program() = default;
  explicit Program(std::vector<Block> b) : blocks(std::move(b)) {}

  /// Structural equality; the retained source text is not compared.
  friend bool operator==(const Program& a, const Program& b) { return a.blocks == b.blocks; }
};

/// Blocks counted recursively (a repeat with one move counts as 2).
int block_count(const std::vector<Block>& blocks);
inline int block_count(const Program& p) { return block_count(p.blocks); }

/// Deepest chain of compound blocks (0 for a flat program).
int nesting_depth(const std::vector<Block>& blocks);

/// Empty if `p` satisfies the structural limits; otherwise a description of
/// the first violation.
std::optional<std::string> program_violation(const Program& p);

/// Throws ParseError with the line, column and expected token.
Program parse_program(std::string_view text);

/// Canonical text: one block per line, two-space indentation, no trailing newline.
std::string pretty_print(const Program& p);

/// Single-line form used in stems and summaries, e.g. "repeat 2 { move } turn_left".
std::string inline_text(const Program& p);

}  // namespace ace
