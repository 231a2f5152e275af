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

#include "ace/maze.hpp"

#include "ace/error.hpp"

namespace ace {

Direction turn(Direction d, Side side) {
  int v = static_cast<int>(d);
  v = side == Side::Right ? (v + 1) % 4 : (v + 3) % 4;
  return static_cast<Direction>(v);
}

Position step_toward(Position p, Direction d) {
  switch (d) {
    case Direction::East: return {p.col + 1, p.row};
    case Direction::South: return {p.col, p.row + 1};
    case Direction::West: return {p.col - 1, p.row};
    case Direction::North: return {p.col, p.row - 1};
  }
  return p;
}

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::East: return "East";
    case Direction::South: return "South";
    case Direction::West: return "West";
    case Direction::North: return "North";
  }
  return "?";
}

std::optional<Direction> direction_from_name(std::string_view name) {
  for (Direction d : kAllDirections) {
    if (direction_name(d) == name) return d;
  }
  return std::nullopt;
}

std::string cell_name(Position p) {
  if (p.col < 0 || p.col >= kMaxGridSide || p.row < 0 || p.row >= kMaxGridSide) {
    throw ContractViolation("cell (" + std::to_string(p.col) + "," + std::to_string(p.row) +
                            ") has no letter-number name");
  }
  std::string name;
  name += static_cast<char>('a' + p.col);
  name += static_cast<char>('1' + p.row);
  return name;
}

Position parse_cell_name(std::string_view name) {
  if (name.size() != 2 || name[0] < 'a' || name[0] > 'h' || name[1] < '1' || name[1] > '8') {
    throw ParseError(1, 1, "cell name [a-h][1-8]", "malformed cell name '" + std::string(name) + "'");
  }
  return {name[0] - 'a', name[1] - '1'};
}

Grid::Grid(int width, int height) : width_(width), height_(height) {
  if (width < kMinGridSide || width > kMaxGridSide || height < kMinGridSide ||
      height > kMaxGridSide) {
    throw ContractViolation("grid dimensions " + std::to_string(width) + "x" +
                            std::to_string(height) + " outside [2,8]");
  }
  cells_.assign(static_cast<std::size_t>(width * height), CellKind::Free);
}

CellKind Grid::at(Position p) const {
  if (!in_bounds(p)) throw ContractViolation("cell lookup out of bounds");
  return cells_[static_cast<std::size_t>(p.row * width_ + p.col)];
}

void Grid::set(Position p, CellKind kind) {
  if (!in_bounds(p)) throw ContractViolation("cell update out of bounds");
  cells_[static_cast<std::size_t>(p.row * width_ + p.col)] = kind;
}

std::vector<Position> Grid::free_cells() const {
  std::vector<Position> out;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      if (at({c, r}) == CellKind::Free) out.push_back({c, r});
    }
  }
  return out;
}

std::vector<std::string> Grid::check(bool require_goal) const {
  std::vector<std::string> problems;
  if (goal_) {
    if (!in_bounds(*goal_)) {
      problems.emplace_back("goal out of bounds");
    } else if (at(*goal_) != CellKind::Free) {
      problems.emplace_back("goal cell is a wall");
    }
  } else if (require_goal) {
    problems.emplace_back("grid has no goal");
  }
  int free_non_goal = 0;
  for (const Position& p : free_cells()) {
    if (!goal_ || p != *goal_) ++free_non_goal;
  }
  if (free_non_goal == 0) problems.emplace_back("grid has no free non-goal cell");
  return problems;
}

namespace {

std::optional<Direction> avatar_marker(char c) {
  switch (c) {
    case '>': return Direction::East;
    case 'v': return Direction::South;
    case '<': return Direction::West;
    case '^': return Direction::North;
    default: return std::nullopt;
  }
}

char marker_for(Direction d) {
  switch (d) {
    case Direction::East: return '>';
    case Direction::South: return 'v';
    case Direction::West: return '<';
    case Direction::North: return '^';
  }
  return '?';
}

}  // namespace

GridText parse_grid(std::string_view text) {
  struct Line {
    int number;
    std::string body;
  };
  std::vector<Line> rows;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string line(text.substr(start, end - start));
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.pop_back();
    }
    if (!line.empty()) rows.push_back({line_no, line});
    start = end + 1;
  }
  if (rows.empty()) throw ParseError(1, 1, "grid rows", "empty grid");

  const int height = static_cast<int>(rows.size());
  const int width = static_cast<int>(rows.front().body.size());
  for (const Line& row : rows) {
    if (static_cast<int>(row.body.size()) != width) {
      throw ParseError(row.number, static_cast<int>(row.body.size()) + 1,
                       std::to_string(width) + " cells", "ragged grid row");
    }
  }
  if (width < kMinGridSide || width > kMaxGridSide) {
    throw ParseError(rows.front().number, 1, "width in [2,8]",
                     "grid width " + std::to_string(width));
  }
  if (height < kMinGridSide || height > kMaxGridSide) {
    throw ParseError(rows.front().number, 1, "height in [2,8]",
                     "grid height " + std::to_string(height));
  }

  GridText out{Grid(width, height), std::nullopt};
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      const char ch = rows[static_cast<std::size_t>(r)].body[static_cast<std::size_t>(c)];
      const int line = rows[static_cast<std::size_t>(r)].number;
      const Position p{c, r};
      if (ch == '.') continue;
      if (ch == '#') {
        out.grid.set(p, CellKind::Wall);
      } else if (ch == 'G') {
        if (out.grid.goal()) throw ParseError(line, c + 1, "", "second goal cell");
        out.grid.set_goal(p);
      } else if (auto d = avatar_marker(ch)) {
        if (out.avatar) throw ParseError(line, c + 1, "", "second avatar marker");
        out.avatar = AvatarState{p, *d};
      } else {
        throw ParseError(line, c + 1, "one of . # G > v < ^",
                         std::string("unknown cell character '") + ch + "'");
      }
    }
  }
  return out;
}

std::string format_grid(const Grid& g, const std::optional<AvatarState>& avatar) {
  std::string out;
  for (int r = 0; r < g.height(); ++r) {
    if (r > 0) out += '\n';
    for (int c = 0; c < g.width(); ++c) {
      const Position p{c, r};
      if (avatar && avatar->pos == p) {
        out += marker_for(avatar->dir);
      } else if (g.goal() && *g.goal() == p) {
        out += 'G';
      } else {
        out += g.at(p) == CellKind::Wall ? '#' : '.';
      }
    }
  }
  return out;
}

}  // namespace ace
