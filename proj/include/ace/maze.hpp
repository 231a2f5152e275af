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

// Grid world of the maze domain: cells, avatar pose, coordinate naming and
// the ASCII grid format.
//
// Coordinates: `col` grows to the right (letters a..h), `row` grows downward
// (numbers 1..8). Left/right turns are counter-clockwise/clockwise on screen.

#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ace {

inline constexpr int kMaxGridSide = 8;
inline constexpr int kMinGridSide = 2;

struct Position {
  int col = 0;
  int row = 0;

  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

enum class Direction { East = 0, South = 1, West = 2, North = 3 };
enum class Side { Left, Right };
enum class CellKind { Free, Wall };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::East, Direction::South, Direction::West, Direction::North};

Direction turn(Direction d, Side side);
Position step_toward(Position p, Direction d);
std::string_view direction_name(Direction d);
std::optional<Direction> direction_from_name(std::string_view name);

struct AvatarState {
  Position pos;
  Direction dir = Direction::East;

  friend constexpr auto operator<=>(const AvatarState&, const AvatarState&) = default;
};

/// "b2" style names. Throws ContractViolation when the position is outside a-h/1-8.
std::string cell_name(Position p);
/// Inverse of cell_name. Throws ParseError for anything not matching [a-h][1-8].
Position parse_cell_name(std::string_view name);

/// Rectangular maze. The goal is optional so that goal-placement questions can
/// carry a grid whose goal is still to be designed.
class Grid {
 public:
  /// All-free grid; throws ContractViolation for sides outside [2, 8].
  Grid(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }
  bool in_bounds(Position p) const {
    return p.col >= 0 && p.row >= 0 && p.col < width_ && p.row < height_;
  }
  CellKind at(Position p) const;
  bool is_free(Position p) const { return in_bounds(p) && at(p) == CellKind::Free; }
  void set(Position p, CellKind kind);

  const std::optional<Position>& goal() const { return goal_; }
  void set_goal(std::optional<Position> goal) { goal_ = goal; }

  /// Free cells in row-major order.
  std::vector<Position> free_cells() const;

  /// Empty when the grid satisfies every invariant; otherwise one message per
  /// broken invariant. `require_goal` = false accepts a goal-less grid.
  std::vector<std::string> check(bool require_goal = true) const;
  bool valid(bool require_goal = true) const { return check(require_goal).empty(); }

  /// True when `s` may be used as an avatar pose on this grid.
  bool valid_start(const AvatarState& s) const { return is_free(s.pos); }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  int width_;
  int height_;
  std::vector<CellKind> cells_;
  std::optional<Position> goal_;
};

/// A grid together with the avatar overlay found in its text form.
struct GridText {
  Grid grid;
  std::optional<AvatarState> avatar;
};

/// Parses the ASCII form: one line per row, '.' free, '#' wall, 'G' goal and
/// an optional avatar marker '>', 'v', '<', '^'. Blank lines and trailing
/// whitespace are ignored. Throws ParseError.
GridText parse_grid(std::string_view text);

/// Renders the ASCII form, rows joined by '\n' without a trailing newline.
std::string format_grid(const Grid& g, const std::optional<AvatarState>& avatar = std::nullopt);

}  // namespace ace
