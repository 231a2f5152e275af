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

#include "ace/generator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ace/error.hpp"
#include "ace/interpreter.hpp"
#include "ace/oracles.hpp"

namespace ace {

std::string_view difficulty_name(Difficulty d) {
  switch (d) {
    case Difficulty::Easy: return "Easy";
    case Difficulty::Medium: return "Medium";
    case Difficulty::Hard: return "Hard";
  }
  return "?";
}

std::optional<Difficulty> difficulty_from_name(std::string_view name) {
  for (Difficulty d : {Difficulty::Easy, Difficulty::Medium, Difficulty::Hard}) {
    if (difficulty_name(d) == name) return d;
  }
  return std::nullopt;
}

Difficulty program_band(int blocks) {
  if (blocks <= 4) return Difficulty::Easy;
  if (blocks <= 8) return Difficulty::Medium;
  return Difficulty::Hard;
}

Difficulty count_band(long long count) {
  if (count <= 3) return Difficulty::Easy;
  if (count <= 6) return Difficulty::Medium;
  return Difficulty::Hard;
}

std::optional<std::string> spec_problem(const GenSpec& spec) {
  if (!kind_admissible(spec.category, spec.kind)) {
    return "kind " + std::string(kind_name(spec.kind)) + " is not admissible for " +
           std::string(category_name(spec.category));
  }
  if (spec.kind == ItemKind::FreeText) return "FreeText items cannot be generated";
  if (spec.width < 3 || spec.width > kMaxGridSide || spec.height < 3 ||
      spec.height > kMaxGridSide) {
    return "grid size must be within 3x3 .. 8x8";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Grids and paths

std::optional<std::vector<Position>> shortest_path(const Grid& g, Position from, Position to) {
  if (!g.is_free(from) || !g.is_free(to)) return std::nullopt;
  std::map<Position, Position> parent;
  std::deque<Position> queue{from};
  parent.emplace(from, from);
  while (!queue.empty()) {
    const Position cur = queue.front();
    queue.pop_front();
    if (cur == to) break;
    for (Direction d : kAllDirections) {
      const Position next = step_toward(cur, d);
      if (g.is_free(next) && parent.emplace(next, cur).second) queue.push_back(next);
    }
  }
  if (!parent.contains(to)) return std::nullopt;
  std::vector<Position> path{to};
  while (path.back() != from) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

double wall_density(Difficulty d) {
  switch (d) {
    case Difficulty::Easy: return 0.12;
    case Difficulty::Medium: return 0.2;
    case Difficulty::Hard: return 0.28;
  }
  return 0.2;
}

Direction direction_between(Position a, Position b) {
  for (Direction d : kAllDirections) {
    if (step_toward(a, d) == b) return d;
  }
  throw ContractViolation("path cells are not adjacent");
}

struct Layout {
  Grid grid;
  AvatarState start;
  std::vector<Position> path;  // start .. goal
};

std::optional<Layout> random_layout(Rng& rng, int width, int height, double density) {
  Grid g(width, height);
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      if (rng.chance(density)) g.set({c, r}, CellKind::Wall);
    }
  }
  std::vector<Position> free = g.free_cells();
  if (free.size() < 3) return std::nullopt;
  const Position start = rng.pick(free);
  const Position goal = rng.pick(free);
  if (start == goal) return std::nullopt;
  auto path = shortest_path(g, start, goal);
  if (!path) return std::nullopt;
  g.set_goal(goal);
  const AvatarState s{start, kAllDirections[rng.below(4)]};
  return Layout{std::move(g), s, std::move(*path)};
}

}  // namespace

GeneratedTask generate_grid(std::uint64_t seed, const GenSpec& spec) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (auto layout = random_layout(rng, spec.width, spec.height, wall_density(spec.difficulty))) {
      return {std::move(layout->grid), layout->start};
    }
  }
  throw GenerationExhausted("no grid with a start-to-goal path after 1000 attempts");
}

Program path_program(const AvatarState& start, const std::vector<Position>& path,
                     bool compress_pairs) {
  std::vector<Block> blocks;
  Direction facing = start.dir;
  std::size_t i = 0;
  while (i + 1 < path.size()) {
    const Direction want = direction_between(path[i], path[i + 1]);
    const int delta = (static_cast<int>(want) - static_cast<int>(facing) + 4) % 4;
    if (delta == 1) blocks.push_back(Block::turn_right());
    if (delta == 3) blocks.push_back(Block::turn_left());
    if (delta == 2) {
      blocks.push_back(Block::turn_right());
      blocks.push_back(Block::turn_right());
    }
    facing = want;
    int run = 0;
    while (i + 1 < path.size() && direction_between(path[i], path[i + 1]) == want) {
      ++run;
      ++i;
    }
    if (run >= 3 || (run == 2 && compress_pairs)) {
      blocks.push_back(Block::repeat(run, {Block::move()}));
    } else {
      for (int k = 0; k < run; ++k) blocks.push_back(Block::move());
    }
  }
  return Program(std::move(blocks));
}

// ---------------------------------------------------------------------------
// Mutations

namespace {

using Blocks = std::vector<Block>;

// All single-edit variants of a block list. `allow_empty` permits deleting the
// last block (top level only).
std::vector<Blocks> list_mutants(const Blocks& list, bool allow_empty) {
  std::vector<Blocks> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const Block& b = list[i];
    auto replaced = [&](Block nb) {
      Blocks copy = list;
      copy[i] = std::move(nb);
      out.push_back(std::move(copy));
    };
    if (list.size() > 1 || allow_empty) {
      Blocks copy = list;
      copy.erase(copy.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(std::move(copy));
    }
    {
      Blocks copy = list;
      copy.insert(copy.begin() + static_cast<std::ptrdiff_t>(i) + 1, Block::move());
      out.push_back(std::move(copy));
    }
    if (i + 1 < list.size() && !(list[i] == list[i + 1])) {
      Blocks copy = list;
      std::swap(copy[i], copy[i + 1]);
      out.push_back(std::move(copy));
    }
    switch (b.kind) {
      case BlockKind::Move:
        replaced(Block::turn_left());
        replaced(Block::turn_right());
        break;
      case BlockKind::TurnLeft:
        replaced(Block::turn_right());
        break;
      case BlockKind::TurnRight:
        replaced(Block::turn_left());
        break;
      case BlockKind::Repeat:
        for (int delta : {-1, 1}) {
          const int n = b.count + delta;
          if (n >= kMinRepeat && n <= kMaxRepeat) {
            Block nb = b;
            nb.count = n;
            replaced(std::move(nb));
          }
        }
        break;
      case BlockKind::If:
      case BlockKind::IfElse:
        for (Condition c : {Condition::PathAhead, Condition::PathLeft, Condition::PathRight}) {
          if (c == b.cond) continue;
          Block nb = b;
          nb.cond = c;
          replaced(std::move(nb));
        }
        break;
      case BlockKind::RepeatUntilGoal:
        break;
    }
    if (b.compound()) {
      for (Blocks& body : list_mutants(b.body, false)) {
        Block nb = b;
        nb.body = std::move(body);
        replaced(std::move(nb));
      }
      if (b.kind == BlockKind::IfElse) {
        for (Blocks& other : list_mutants(b.otherwise, false)) {
          Block nb = b;
          nb.otherwise = std::move(other);
          replaced(std::move(nb));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Program> single_edit_mutants(const Program& p) {
  std::vector<Program> out;
  std::set<std::string> seen{pretty_print(p)};
  for (Blocks& blocks : list_mutants(p.blocks, true)) {
    Program m(std::move(blocks));
    if (program_violation(m)) continue;
    if (seen.insert(pretty_print(m)).second) out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distractors

namespace {

std::vector<ChoiceContent> count_candidates(int correct) {
  std::vector<ChoiceContent> out;
  for (int delta : {-2, -1, 1, 2, 3, 4, 5}) {
    if (correct + delta >= 0) out.emplace_back(correct + delta);
  }
  return out;
}

std::vector<ChoiceContent> cell_candidates(const Item& core, Position correct, Rng& rng) {
  const Grid& g = core.grids.front();
  std::vector<ChoiceContent> principled;
  std::vector<ChoiceContent> neighbours;
  if (core.kind == ItemKind::TraceOutcome && core.start && !core.programs.empty()) {
    const Execution run = execute(g, *core.start, core.programs.front());
    const std::vector<Position> cells = visited_cells(*core.start, run.trace);
    // One step short, and one step past the true endpoint.
    if (cells.size() >= 2) principled.emplace_back(cells[cells.size() - 2]);
    const Position past = step_toward(run.outcome.final_state.pos, run.outcome.final_state.dir);
    if (g.in_bounds(past)) principled.emplace_back(past);
  }
  for (Direction d : kAllDirections) {
    const Position n = step_toward(correct, d);
    if (g.in_bounds(n)) neighbours.emplace_back(n);
  }
  rng.shuffle(principled);
  rng.shuffle(neighbours);
  std::vector<ChoiceContent> rest;
  for (const Position& p : g.free_cells()) {
    if (core.kind == ItemKind::GoalPlacementDesign && core.start && p == core.start->pos) continue;
    rest.emplace_back(p);
  }
  rng.shuffle(rest);
  std::vector<ChoiceContent> out = principled;
  out.insert(out.end(), neighbours.begin(), neighbours.end());
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

std::vector<ChoiceContent> program_candidates(const Item& core, const Program& correct, Rng& rng) {
  // Bug-finding distractors are edits of the buggy code; everything else
  // mutates the correct program.
  const Program& base =
      core.kind == ItemKind::BugFinding && !core.programs.empty() ? core.programs.front() : correct;
  std::vector<Program> mutants = single_edit_mutants(base);
  rng.shuffle(mutants);
  std::vector<ChoiceContent> out;
  for (Program& m : mutants) out.emplace_back(std::move(m));
  return out;
}

}  // namespace

std::vector<ChoiceContent> generate_distractors(const Item& core, const ChoiceContent& correct,
                                                Rng& rng) {
  std::vector<ChoiceContent> candidates;
  if (const int* n = std::get_if<int>(&correct)) {
    candidates = count_candidates(*n);
  } else if (const Position* p = std::get_if<Position>(&correct)) {
    candidates = cell_candidates(core, *p, rng);
  } else if (const Program* prog = std::get_if<Program>(&correct)) {
    candidates = program_candidates(core, *prog, rng);
  } else {
    throw GenerationExhausted("no distractor rule for this choice type");
  }

  const ChoiceOracle oracle(core);
  std::vector<ChoiceContent> picked;
  for (ChoiceContent& c : candidates) {
    if (c == correct) continue;
    if (std::find(picked.begin(), picked.end(), c) != picked.end()) continue;
    if (oracle.accepts(c)) continue;
    picked.push_back(std::move(c));
    if (picked.size() == 3) return picked;
  }
  throw GenerationExhausted("fewer than 3 distinct incorrect distractors");
}

// ---------------------------------------------------------------------------
// Items

namespace {

// Conditional programs that navigate by probing their surroundings.
std::vector<Program> navigation_templates() {
  const auto ahead = Condition::PathAhead;
  const auto left = Condition::PathLeft;
  const auto right = Condition::PathRight;
  const Block mv = Block::move(), tl = Block::turn_left(), tr = Block::turn_right();
  return {
      Program({Block::repeat_until_goal({Block::if_else(ahead, {mv}, {tr})})}),
      Program({Block::repeat_until_goal({Block::if_else(ahead, {mv}, {tl})})}),
      Program({Block::repeat_until_goal({Block::if_then(left, {tl}), mv})}),
      Program({Block::repeat_until_goal({Block::if_then(right, {tr}), mv})}),
      Program({Block::repeat_until_goal(
          {Block::if_else(ahead, {mv}, {Block::if_else(left, {tl}, {tr})})})}),
      Program({Block::repeat_until_goal({mv, Block::if_then(right, {tr})})}),
  };
}

std::string stem_for(ItemKind kind, std::optional<int> budget) {
  switch (kind) {
    case ItemKind::SolutionFinding:
      return "Which code takes the AVATAR to the GOAL on this grid?";
    case ItemKind::TraceOutcome:
      return "The AVATAR runs the code below on this grid. In which cell is the AVATAR when the "
             "code stops?";
    case ItemKind::BugFinding:
      return "The code below does not take the AVATAR to the GOAL. Which corrected code does?";
    case ItemKind::EquivalenceJudgment:
      return "Which code makes the AVATAR visit exactly the same cells, with the same result, as "
             "the code below?";
    case ItemKind::AvatarPlacementCount:
      return "The GOAL is fixed. In how many ways (cell and direction) can the AVATAR be placed "
             "so that the code below takes it to the GOAL?";
    case ItemKind::GoalPlacementDesign:
      return "The GOAL has not been placed yet. In which cell can the GOAL be placed so that the "
             "code below takes the AVATAR to it?";
    case ItemKind::WallDesignCount:
      return "In how many ways can you turn at most " + std::to_string(budget.value_or(0)) +
             " FREE cell(s) (not the AVATAR or GOAL cell) into WALL cells so that the code below "
             "still takes the AVATAR to the GOAL?";
    case ItemKind::FreeText:
      break;
  }
  return {};
}

struct Draft {
  Item core;
  ChoiceContent answer;
};

Program random_path_program(const Layout& layout, Rng& rng) {
  return path_program(layout.start, layout.path, rng.chance(0.5));
}

// Equivalent rewrites of `p`: unroll a top-level repeat, roll a run of moves,
// or replace a turn by three opposite turns.
std::vector<Program> equivalent_rewrites(const Program& p) {
  std::vector<Program> out;
  const Blocks& b = p.blocks;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].kind == BlockKind::Repeat && b[i].count * block_count(b[i].body) <= 12) {
      Blocks copy(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(i));
      for (int k = 0; k < b[i].count; ++k) copy.insert(copy.end(), b[i].body.begin(), b[i].body.end());
      copy.insert(copy.end(), b.begin() + static_cast<std::ptrdiff_t>(i) + 1, b.end());
      out.emplace_back(std::move(copy));
    }
    if (b[i].kind == BlockKind::Move) {
      std::size_t j = i;
      while (j < b.size() && b[j].kind == BlockKind::Move) ++j;
      if (j - i >= 2) {
        Blocks copy(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(i));
        copy.push_back(Block::repeat(static_cast<int>(j - i), {Block::move()}));
        copy.insert(copy.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
        out.emplace_back(std::move(copy));
      }
    }
    if (b[i].kind == BlockKind::TurnLeft || b[i].kind == BlockKind::TurnRight) {
      const Block opposite =
          b[i].kind == BlockKind::TurnLeft ? Block::turn_right() : Block::turn_left();
      Blocks copy(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(i));
      copy.insert(copy.end(), 3, opposite);
      copy.insert(copy.end(), b.begin() + static_cast<std::ptrdiff_t>(i) + 1, b.end());
      out.emplace_back(std::move(copy));
    }
  }
  return out;
}

Item base_item(const GenSpec& spec) {
  Item it;
  it.category = spec.category;
  it.kind = spec.kind;
  return it;
}

std::optional<Draft> draft_solution(const GenSpec& spec, Rng& rng) {
  auto layout = random_layout(rng, spec.width, spec.height, wall_density(spec.difficulty));
  if (!layout) return std::nullopt;
  Program solution = random_path_program(*layout, rng);
  if (program_band(block_count(solution)) != spec.difficulty) return std::nullopt;
  Item it = base_item(spec);
  it.grids = {layout->grid};
  it.start = layout->start;
  return Draft{std::move(it), std::move(solution)};
}

std::optional<Draft> draft_trace(const GenSpec& spec, Rng& rng) {
  auto layout = random_layout(rng, spec.width, spec.height, wall_density(spec.difficulty));
  if (!layout) return std::nullopt;
  // Walk toward some cell other than the goal; the goal may still interrupt.
  std::vector<Position> targets;
  for (const Position& p : layout->grid.free_cells()) {
    if (p != layout->start.pos && p != *layout->grid.goal()) targets.push_back(p);
  }
  if (targets.empty()) return std::nullopt;
  auto path = shortest_path(layout->grid, layout->start.pos, rng.pick(targets));
  if (!path) return std::nullopt;
  Program program = path_program(layout->start, *path, rng.chance(0.5));
  if (rng.chance(0.3)) {
    std::vector<Program> mutants = single_edit_mutants(program);
    if (!mutants.empty()) program = rng.pick(mutants);
  }
  if (program.blocks.empty() || program_band(block_count(program)) != spec.difficulty) {
    return std::nullopt;
  }
  const Execution run = execute(layout->grid, layout->start, program);
  Item it = base_item(spec);
  it.grids = {layout->grid};
  it.start = layout->start;
  it.programs = {program};
  return Draft{std::move(it), run.outcome.final_state.pos};
}

std::optional<Draft> draft_bug(const GenSpec& spec, Rng& rng) {
  auto draft = draft_solution(spec, rng);
  if (!draft) return std::nullopt;
  const Program& solution = std::get<Program>(draft->answer);
  std::vector<Program> bugs;
  for (Program& m : single_edit_mutants(solution)) {
    if (!m.blocks.empty() && !solves(draft->core.grids.front(), *draft->core.start, m)) {
      bugs.push_back(std::move(m));
    }
  }
  if (bugs.empty()) return std::nullopt;
  draft->core.programs = {rng.pick(bugs)};
  return draft;
}

std::optional<Draft> draft_equivalence(const GenSpec& spec, Rng& rng) {
  auto draft = draft_solution(spec, rng);
  if (!draft) return std::nullopt;
  const Program reference = std::get<Program>(draft->answer);
  const std::vector<Task> family{{draft->core.grids.front(), *draft->core.start}};
  std::vector<Program> rewrites;
  for (Program& r : equivalent_rewrites(reference)) {
    if (!(r == reference) && !program_violation(r) &&
        equivalent(reference, r, family, EquivalenceMode::Trace).equal) {
      rewrites.push_back(std::move(r));
    }
  }
  if (rewrites.empty()) return std::nullopt;
  draft->core.programs = {reference};
  draft->answer = rng.pick(rewrites);
  return draft;
}

std::optional<Draft> draft_avatar_count(const GenSpec& spec, Rng& rng) {
  auto layout = random_layout(rng, spec.width, spec.height, wall_density(spec.difficulty));
  if (!layout) return std::nullopt;
  const Program program = spec.difficulty == Difficulty::Hard && rng.chance(0.5)
                              ? rng.pick(navigation_templates())
                              : random_path_program(*layout, rng);
  const auto count = static_cast<int>(enumerate_avatar_starts(layout->grid, program).size());
  if (count < 1 || count_band(count) != spec.difficulty) return std::nullopt;
  Item it = base_item(spec);
  it.grids = {layout->grid};
  it.programs = {program};
  return Draft{std::move(it), count};
}

std::optional<Draft> draft_goal_design(const GenSpec& spec, Rng& rng) {
  auto layout = random_layout(rng, spec.width, spec.height, wall_density(spec.difficulty));
  if (!layout) return std::nullopt;
  const Program program = rng.chance(0.25) ? rng.pick(navigation_templates())
                                           : random_path_program(*layout, rng);
  if (program_band(block_count(program)) != spec.difficulty) return std::nullopt;
  Grid open = layout->grid;
  open.set_goal(std::nullopt);
  const std::set<Position> goals = enumerate_goal_cells(open, layout->start, program);
  if (goals.empty()) return std::nullopt;
  Item it = base_item(spec);
  it.grids = {open};
  it.start = layout->start;
  it.programs = {program};
  const std::vector<Position> options(goals.begin(), goals.end());
  return Draft{std::move(it), rng.pick(options)};
}

std::optional<Draft> draft_wall_count(const GenSpec& spec, Rng& rng) {
  auto layout = random_layout(rng, spec.width, spec.height, wall_density(spec.difficulty));
  if (!layout) return std::nullopt;
  // Wall off everything except the path and a few extra free cells.
  const std::set<Position> on_path(layout->path.begin(), layout->path.end());
  std::vector<Position> off_path;
  for (const Position& p : layout->grid.free_cells()) {
    if (!on_path.contains(p)) off_path.push_back(p);
  }
  rng.shuffle(off_path);
  const int budget = spec.difficulty == Difficulty::Hard ? 2 : 1;
  int extras = 0;
  switch (spec.difficulty) {
    case Difficulty::Easy: extras = rng.between(0, 2); break;
    case Difficulty::Medium: extras = rng.between(3, 5); break;
    case Difficulty::Hard: extras = rng.between(2, 5); break;
  }
  Grid g = layout->grid;
  for (std::size_t i = static_cast<std::size_t>(extras); i < off_path.size(); ++i) {
    g.set(off_path[i], CellKind::Wall);
  }
  const Program program = rng.chance(0.3) ? rng.pick(navigation_templates())
                                          : random_path_program(*layout, rng);
  if (!solves(g, layout->start, program)) return std::nullopt;
  const auto count =
      static_cast<long long>(count_wall_configurations(g, layout->start, program, budget));
  if (count_band(count) != spec.difficulty || count > 1000) return std::nullopt;
  Item it = base_item(spec);
  it.grids = {g};
  it.start = layout->start;
  it.programs = {program};
  it.wall_budget = budget;
  return Draft{std::move(it), static_cast<int>(count)};
}

std::optional<Draft> draft(const GenSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case ItemKind::SolutionFinding: return draft_solution(spec, rng);
    case ItemKind::TraceOutcome: return draft_trace(spec, rng);
    case ItemKind::BugFinding: return draft_bug(spec, rng);
    case ItemKind::EquivalenceJudgment: return draft_equivalence(spec, rng);
    case ItemKind::AvatarPlacementCount: return draft_avatar_count(spec, rng);
    case ItemKind::GoalPlacementDesign: return draft_goal_design(spec, rng);
    case ItemKind::WallDesignCount: return draft_wall_count(spec, rng);
    case ItemKind::FreeText: break;
  }
  return std::nullopt;
}

}  // namespace

Item generate_item(const GenSpec& spec, const std::string& id) {
  if (auto problem = spec_problem(spec)) throw ContractViolation(*problem);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)));
    auto d = draft(spec, rng);
    if (!d) continue;
    d->core.id = id;
    d->core.stem = stem_for(spec.kind, d->core.wall_budget);

    std::vector<ChoiceContent> contents;
    try {
      contents = generate_distractors(d->core, d->answer, rng);
    } catch (const GenerationExhausted&) {
      continue;
    }
    contents.push_back(d->answer);
    rng.shuffle(contents);
    for (std::size_t i = 0; i < contents.size(); ++i) {
      d->core.choices.push_back({kAllLabels[i], std::move(contents[i])});
      if (d->core.choices.back().content == d->answer) d->core.correct = kAllLabels[i];
    }
    // The oracle has to agree before the item leaves the generator.
    try {
      if (pick_correct_choice(d->core) != d->core.correct) continue;
    } catch (const ItemIntegrityError&) {
      continue;
    }
    return d->core;
  }
  throw GenerationExhausted("generation exhausted for " + std::string(kind_name(spec.kind)) +
                            " " + std::string(difficulty_name(spec.difficulty)) + " " +
                            std::to_string(spec.width) + "x" + std::to_string(spec.height) +
                            " seed " + std::to_string(spec.seed));
}

GenSpec spec_for(std::uint64_t seed, BloomCategory category, int index) {
  const std::vector<ItemKind> kinds = kinds_for(category);
  const int n = static_cast<int>(kinds.size());
  GenSpec spec;
  spec.seed = seed;
  spec.category = category;
  spec.kind = kinds[static_cast<std::size_t>(index % n)];
  spec.difficulty = static_cast<Difficulty>(index / n % 3);
  const int side = 4 + static_cast<int>(spec.difficulty);
  spec.width = side;
  spec.height = side;
  return spec;
}

ItemBank generate_bank(std::uint64_t seed, BankShape shape) {
  if (shape.applying_analyzing < 0 || shape.analyzing_evaluating < 0 ||
      shape.evaluating_creating < 0) {
    throw ContractViolation("bank shape counts must be non-negative");
  }
  ItemBank bank;
  bank.name = "ace-generated-" + std::to_string(seed);
  bank.version = "1";
  const int counts[] = {shape.applying_analyzing, shape.analyzing_evaluating,
                        shape.evaluating_creating};
  int number = 0;
  for (std::size_t c = 0; c < kAllCategories.size(); ++c) {
    for (int j = 0; j < counts[c]; ++j) {
      ++number;
      const GenSpec spec = spec_for(derive_seed(seed, static_cast<std::uint64_t>(number)),
                                    kAllCategories[c], j);
      bank.items.push_back(generate_item(spec, item_id(number)));
    }
  }
  return bank;
}

}  // namespace ace
