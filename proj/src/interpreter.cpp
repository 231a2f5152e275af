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

#include "ace/interpreter.hpp"

#include "ace/error.hpp"

namespace ace {

namespace {

Direction relative(Direction facing, Condition c) {
  switch (c) {
    case Condition::PathLeft: return turn(facing, Side::Left);
    case Condition::PathRight: return turn(facing, Side::Right);
    case Condition::PathAhead: break;
  }
  return facing;
}

class Machine {
 public:
  Machine(const Grid& g, const AvatarState& start, int step_limit)
      : grid_(g), state_(start), limit_(step_limit) {}

  Execution run(const Program& p) {
    if (at_goal()) {
      finish(OutcomeKind::GoalReached);
    } else if (run_blocks(p.blocks)) {
      finish(OutcomeKind::IncompleteStop);
    }
    result_.outcome.final_state = state_;
    return std::move(result_);
  }

 private:
  bool at_goal() const { return grid_.goal() && state_.pos == *grid_.goal(); }

  void finish(OutcomeKind k) {
    result_.outcome.kind = k;
    if (k == OutcomeKind::GoalReached) result_.outcome.at_step = steps_;
  }

  // Reserves the next step; false (with the outcome set) once the limit is spent.
  bool take_step() {
    if (steps_ >= limit_) {
      finish(OutcomeKind::StepLimitExceeded);
      return false;
    }
    ++steps_;
    return true;
  }

  void record(Action a) { result_.trace.push_back({steps_, a, state_}); }

  // Each returns true to keep going, false once execution has halted.
  bool run_blocks(const std::vector<Block>& blocks) {
    for (const Block& b : blocks) {
      if (!run_block(b)) return false;
    }
    return true;
  }

  bool run_block(const Block& b) {
    switch (b.kind) {
      case BlockKind::Move: return move();
      case BlockKind::TurnLeft:
      case BlockKind::TurnRight: {
        if (!take_step()) return false;
        const bool left = b.kind == BlockKind::TurnLeft;
        state_.dir = turn(state_.dir, left ? Side::Left : Side::Right);
        record({left ? ActionKind::TurnLeft : ActionKind::TurnRight});
        return true;
      }
      case BlockKind::Repeat:
        for (int i = 0; i < b.count; ++i) {
          if (!run_blocks(b.body)) return false;
        }
        return true;
      case BlockKind::RepeatUntilGoal:
        while (!at_goal()) {
          if (!run_blocks(b.body)) return false;
        }
        return true;
      case BlockKind::If:
      case BlockKind::IfElse: {
        if (!take_step()) return false;
        const bool clear = path_clear(grid_, state_, b.cond);
        record({ActionKind::CondEval, b.cond, clear});
        if (clear) return run_blocks(b.body);
        return run_blocks(b.otherwise);
      }
    }
    return true;
  }

  bool move() {
    if (!take_step()) return false;
    const Position target = step_toward(state_.pos, state_.dir);
    if (!grid_.is_free(target)) {
      record({ActionKind::Move});
      result_.outcome.kind = OutcomeKind::Crashed;
      result_.outcome.at_step = steps_;
      result_.outcome.attempted = target;
      result_.outcome.attempted_boundary = !grid_.in_bounds(target);
      return false;
    }
    state_.pos = target;
    record({ActionKind::Move});
    if (at_goal()) {
      finish(OutcomeKind::GoalReached);
      return false;
    }
    return true;
  }

  const Grid& grid_;
  AvatarState state_;
  int limit_;
  int steps_ = 0;
  Execution result_;
};

}  // namespace

bool path_clear(const Grid& g, const AvatarState& s, Condition c) {
  return g.is_free(step_toward(s.pos, relative(s.dir, c)));
}

std::string_view outcome_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::GoalReached: return "GoalReached";
    case OutcomeKind::Crashed: return "Crashed";
    case OutcomeKind::StepLimitExceeded: return "StepLimitExceeded";
    case OutcomeKind::IncompleteStop: return "IncompleteStop";
  }
  return "?";
}

Execution execute(const Grid& g, const AvatarState& start, const Program& p, int step_limit) {
  if (!g.valid_start(start)) {
    throw ContractViolation("avatar start is outside the grid or on a wall");
  }
  if (step_limit < 1) throw ContractViolation("step limit must be at least 1");
  return Machine(g, start, step_limit).run(p);
}

std::vector<Position> visited_cells(const AvatarState& start, const Trace& trace) {
  std::vector<Position> cells{start.pos};
  for (const TraceEvent& e : trace) {
    if (e.action.kind == ActionKind::Move && e.state_after.pos != cells.back()) {
      cells.push_back(e.state_after.pos);
    }
  }
  return cells;
}

}  // namespace ace
