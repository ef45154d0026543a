// Copyright 2026 The trajgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRAJGAME_TYPES_HPP_
#define TRAJGAME_TYPES_HPP_

#include <Eigen/Dense>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace trajgame {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Point = Eigen::Vector2d;

// Joint action, agent-major: a = [agent 0 block | agent 1 block | ...].
using JointAction = Eigen::VectorXd;

// Game parameter vector theta; scenario modules define the named layout.
using GameParams = Eigen::VectorXd;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonFiniteUtilityError : Error {
  using Error::Error;
};
struct NonDifferentiableError : Error {
  using Error::Error;
};
struct InvalidActionError : Error {
  using Error::Error;
};
struct InfeasibleError : Error {
  using Error::Error;
};
struct SingularHessianError : Error {
  using Error::Error;
};
struct SingularKktError : Error {
  using Error::Error;
};
struct NoContainingSubspaceError : Error {
  using Error::Error;
};
struct NotIdentifiableError : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};

enum class MeasureKind {
  kCounting,  // sum over stages 0..T (driving)
  kDiracAtT,  // only the stage-T term counts (pedestrian)
};

// Discrete stage grid 0..T with step dt seconds.
struct TimeGrid {
  int num_steps = 0;  // T; stages are 0..T inclusive
  double dt = 0.2;
  MeasureKind measure = MeasureKind::kCounting;

  void Validate() const {
    if (num_steps < 3) throw ShapeError("TimeGrid: need num_steps >= 3");
    if (!(dt > 0.0)) throw ShapeError("TimeGrid: need dt > 0");
  }
};

// Observed positions per agent up to (and excluding) stage 0, step dt,
// oldest first; back() is the position at time -dt.
struct PastTrajectory {
  std::vector<std::vector<Point>> positions;
  double dt = 0.2;

  int num_agents() const { return static_cast<int>(positions.size()); }
  int length(int agent) const {
    return static_cast<int>(positions[agent].size());
  }
};

// Positions over stages 0..T plus the two pre-stage anchor positions per
// agent that state augmentation needs at t in {0, 1}.
struct JointTrajectory {
  // positions[agent][stage], stage 0..T.
  std::vector<std::vector<Point>> positions;
  // anchors[agent] = {position at t=-1, position at t=-2}.
  std::vector<std::array<Point, 2>> anchors;

  int num_agents() const { return static_cast<int>(positions.size()); }
  int num_steps() const {
    return positions.empty() ? 0 : static_cast<int>(positions[0].size()) - 1;
  }

  // Position at stage t, with t in {-2, -1} served from the anchors.
  const Point& at(int agent, int t) const {
    if (t >= 0) return positions[agent][static_cast<size_t>(t)];
    return anchors[agent][static_cast<size_t>(-t - 1)];
  }
};

// Anchor positions (t=-1, t=-2) per agent. Shorter pasts are
// back-extrapolated at constant velocity (a single sample extends as a
// standstill).
std::vector<std::array<Point, 2>> AnchorsFromPast(const PastTrajectory& past);

}  // namespace trajgame

#endif  // TRAJGAME_TYPES_HPP_
