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

// Deterministic execution of block programs on a grid.
//
// Every move, turn and condition evaluation costs one step. The run halts
// the moment the avatar enters the goal cell, or when a move would leave the
// grid or enter a wall (crash). A crashing move is recorded in the trace with
// the avatar left in place.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ace/maze.hpp"
#include "ace/program.hpp"

namespace ace {

inline constexpr int kDefaultStepLimit = 1000;

/// True iff the neighbour in the direction `c` names, relative to `s.dir`,
/// is inside the grid and free.
bool path_clear(const Grid& g, const AvatarState& s, Condition c);

enum class ActionKind { Move, TurnLeft, TurnRight, CondEval };

struct Action {
  ActionKind kind = ActionKind::Move;
  Condition cond = Condition::PathAhead;  // CondEval only
  bool result = false;                    // CondEval only

  friend bool operator==(const Action&, const Action&) = default;
};

struct TraceEvent {
  int step = 0;
  Action action;
  AvatarState state_after;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

using Trace = std::vector<TraceEvent>;

enum class OutcomeKind { GoalReached, Crashed, StepLimitExceeded, IncompleteStop };

std::string_view outcome_name(OutcomeKind k);

struct Outcome {
  OutcomeKind kind = OutcomeKind::IncompleteStop;
  /// Step of the goal entry or the crashing move; 0 otherwise (and 0 for a
  /// start that is already on the goal).
  int at_step = 0;
  /// Crashed only: the cell the avatar tried to enter, and whether it lies
  /// outside the grid.
  std::optional<Position> attempted;
  bool attempted_boundary = false;
  /// Avatar pose when execution stopped.
  AvatarState final_state;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct Execution {
  Outcome outcome;
  Trace trace;

  friend bool operator==(const Execution&, const Execution&) = default;
};

/// Runs `p` from `start`. Throws ContractViolation when `start` is off-grid or
/// on a wall, or when step_limit < 1.
Execution execute(const Grid& g, const AvatarState& start, const Program& p,
                  int step_limit = kDefaultStepLimit);

/// Cells occupied by the avatar in order: the start cell followed by the
/// destination of each successful move.
std::vector<Position> visited_cells(const AvatarState& start, const Trace& trace);

}  // namespace ace
