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

#ifndef TRAJGAME_GAME_HPP_
#define TRAJGAME_GAME_HPP_

#include <cmath>

#include "trajgame/types.hpp"

namespace trajgame {

// A parametric trajectory game over a joint action a (agent-major, n
// agents with d dims each) and a parameter vector theta, exposing its
// potential function and the potential's analytic derivatives.
//
// All member functions are pure; instances are immutable after
// construction and freely shareable across threads.
class PotentialGame {
 public:
  virtual ~PotentialGame() = default;

  virtual int num_agents() const = 0;
  virtual int action_dim() const = 0;  // per agent
  virtual int param_dim() const = 0;
  int joint_dim() const { return num_agents() * action_dim(); }

  // mu-weighted sum of agent i's stage utilities along y = r(a).
  virtual double utility(int agent, const GameParams& theta,
                         const JointAction& a) const = 0;

  // Potential function phi(theta, a): common + sum of own terms.
  virtual double potential(const GameParams& theta,
                           const JointAction& a) const = 0;

  // grad_a phi, length n*d.
  virtual Vector potential_gradient(const GameParams& theta,
                                    const JointAction& a) const = 0;

  // H_a phi, symmetric (n*d) x (n*d).
  virtual Matrix potential_hessian(const GameParams& theta,
                                   const JointAction& a) const = 0;

  // J_theta grad_a phi, (n*d) x p.
  virtual Matrix mixed_jacobian(const GameParams& theta,
                                const JointAction& a) const = 0;
};

// Trajectory game whose stage utility splits into a term common to all
// agents, an own-state term, and an others-only term; the potential is the
// mu-weighted sum of common + sum of own terms. Subclasses provide the
// three stage terms and inherit consistent utility/potential values.
class CommonCoupledGame : public PotentialGame {
 public:
  double utility(int agent, const GameParams& theta,
                 const JointAction& a) const final;
  double potential(const GameParams& theta, const JointAction& a) const final;

 protected:
  virtual TimeGrid grid() const = 0;
  virtual JointTrajectory parametrize(const JointAction& a) const = 0;

  virtual double common_stage(int t, const GameParams& theta,
                              const JointTrajectory& y) const = 0;
  virtual double own_stage(int agent, int t, const GameParams& theta,
                           const JointTrajectory& y) const = 0;
  virtual double others_stage(int agent, int t, const GameParams& theta,
                              const JointTrajectory& y) const = 0;

 private:
  template <typename StageFn>
  double integrate(StageFn&& f) const {
    const TimeGrid g = grid();
    if (g.measure == MeasureKind::kDiracAtT) return f(g.num_steps);
    double sum = 0.0;
    for (int t = 0; t <= g.num_steps; ++t) sum += f(t);
    return sum;
  }
};

// |Delta u - Delta phi| for a unilateral move of agent i from a to
// (a_i_prime, a^{-i}); zero (up to rounding) for every potential game.
double CheckPotentialIdentity(const PotentialGame& game,
                              const GameParams& theta, const JointAction& a,
                              int agent, const Vector& a_i_prime);

// Replaces agent i's block of a with block (out-of-place helper).
JointAction WithAgentBlock(const PotentialGame& game, const JointAction& a,
                           int agent, const Vector& block);

inline void ThrowIfNotFinite(double value, const char* what) {
  if (!std::isfinite(value)) throw NonFiniteUtilityError(what);
}

}  // namespace trajgame

#endif  // TRAJGAME_GAME_HPP_
