#pragma once

#include "psdapf/errors.hpp"
#include "psdapf/types.hpp"

namespace psdapf {

/// Moving obstacle (the tracked human hand): pose and velocity.
struct ObstacleState {
  Vec3 position = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
};

/// A detected head/gaze turn: unit direction in the workspace, the turn angle
/// (radians, non-negative), and the arm displacement a quarter turn maps to.
struct TurnIntent {
  Vec3 direction = Vec3::Zero();
  double angle = 0.0;
  double arm_amp_max = 0.4;  // meters

  void validate() const;
};

struct Prediction {
  Vec3 pose = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
};

/// Extrapolates the hand pose along the turn direction; the displacement
/// scales linearly from zero at no turn to arm_amp_max at a quarter turn.
/// The angle is clamped to [0, pi/2] before use.
Vec3 predict_pose(const ObstacleState& obstacle, const TurnIntent& intent);

/// Velocity implied by reaching `pose` from the current obstacle position in
/// one control period. Throws ParamError for dt <= 0.
Vec3 predict_velocity(const Vec3& pose, const ObstacleState& obstacle, double dt);

Prediction predict(const ObstacleState& obstacle, const TurnIntent& intent, double dt);

}  // namespace psdapf
