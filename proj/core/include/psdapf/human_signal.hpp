#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "psdapf/errors.hpp"
#include "psdapf/types.hpp"

namespace psdapf {

/// Facial expression classes. The integer codes are part of the wire format
/// (trajectory CSV column `expr`) and must not change.
enum class ExpressionLabel : int {
  Expressionless = 0,
  Surprise = 1,
  Sad = 2,
  Happy = 3,
};

inline constexpr int kExpressionCount = 4;

std::string_view label_name(ExpressionLabel label);

/// The nine tracked facial action units, in wire order.
inline constexpr int kActionUnitCount = 9;
inline constexpr std::array<std::string_view, kActionUnitCount> kActionUnitIds = {
    "AU01", "AU02", "AU04", "AU06", "AU07", "AU12", "AU15", "AU17", "AU25"};

/// Per-frame action-unit intensity vector; each entry is dimensionless in [0, 5].
struct ActionUnitSample {
  std::array<double, kActionUnitCount> intensity{};

  /// Index into `intensity` for an AU identifier such as "AU12", or nullopt.
  static std::optional<int> index_of(std::string_view au_id);

  double at(std::string_view au_id) const;
  void set(std::string_view au_id, double value);

  /// Throws InputError unless every intensity is finite and in [0, 5].
  void validate() const;
};

/// Calibrated per-expression AU means plus the activation threshold that a
/// combination score must exceed before the expression is reported.
struct ExpressionProfile {
  std::array<std::array<double, kActionUnitCount>, kExpressionCount> mean{};
  std::array<double, kExpressionCount> threshold{1.0, 1.0, 1.0, 1.0};
};

/// Head position (camera frame, meters) and orientation (radians).
struct HeadPose {
  Vec3 position = Vec3::Zero();
  double pitch = 0.0;
  double yaw = 0.0;
  double roll = 0.0;
};

/// Raw gaze angles as reported by the capture tool (tool-native units).
struct GazeRaw {
  double horizontal = 0.0;
  double vertical = 0.0;
};

/// Maps a raw gaze reading onto a true turn angle: center offset and the
/// reading magnitude that corresponds to a quarter turn.
struct AngleCalibration {
  double center = 0.0;
  double max_abs = 1.0;
};

/// Fitted line mapping a turn angle (radians) to an arm displacement (meters).
struct TurnRegression {
  double alpha = 0.0;  // meters
  double beta = 0.0;   // meters per radian
};

/// One timestamped bundle of human signals.
struct HumanSignalFrame {
  double time = 0.0;  // seconds, non-negative, strictly increasing per stream
  ActionUnitSample aus;
  HeadPose head;
  GazeRaw gaze;
};

/// Per-expression sample lists for profile calibration, indexed by label code.
using ExpressionSamples = std::array<std::vector<ActionUnitSample>, kExpressionCount>;

/// Builds a profile by dropping one max and one min reading per AU and
/// averaging the rest. Every expression needs at least three samples;
/// a CalibrationError naming the expression is thrown otherwise.
ExpressionProfile calibrate_profile(const ExpressionSamples& samples,
                                    double activation_threshold = 1.0);

/// Scores each expression as the mean intensity of its three characteristic
/// AUs and returns the best-scoring expression whose score exceeds its
/// threshold; Expressionless when none does. Ties go to the lowest code.
ExpressionLabel classify_expression(const ActionUnitSample& sample,
                                    const ExpressionProfile& profile);

/// Converts a raw gaze/pose reading into a turn angle in radians:
/// (raw - center) / max_abs * pi/2.
double raw_to_angle(double raw, const AngleCalibration& cal);

/// One measured head turn: angle in degrees, arm displacement in meters.
struct TurnSample {
  double angle_deg = 0.0;
  double distance_m = 0.0;
};

using VolunteerSamples = std::vector<TurnSample>;

/// Nine-scale binned turn/displacement table. Scale labels are degrees;
/// an absent entry means no volunteer produced data at that scale.
struct TurnScaleTable {
  static constexpr std::array<double, 9> kScaleDeg = {5.0,  15.0, 25.0, 35.0, 45.0,
                                                      55.0, 65.0, 75.0, 85.0};
  std::array<std::optional<double>, 9> distance_m{};

  int present_count() const;
};

/// Bins per-volunteer samples onto the nine scales: nearest scale wins, the
/// median resolves multiple samples on one scale, and per-scale values are
/// averaged across volunteers. Angles must lie in (0, 90) degrees.
TurnScaleTable bin_turn_samples(const std::vector<VolunteerSamples>& per_volunteer);

/// Closed-form ordinary least squares line y = alpha + beta * x.
/// Throws FitError for fewer than two points or identical abscissae.
TurnRegression fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Closed-form least-squares line through the present scales, with the scale
/// angle converted to radians. Needs at least two distinct present scales.
TurnRegression fit_turn_regression(const TurnScaleTable& table);

/// Residual sum of squares of a fitted line over a point set.
double fit_residual_sse(const TurnRegression& reg, const std::vector<double>& x,
                        const std::vector<double>& y);

/// Forward evaluation of the fitted line, clamped at zero displacement.
double predict_arm_distance(double angle_rad, const TurnRegression& reg);

/// Attention-angle gate: below `head_gate` the head is treated as still and
/// the gaze angle is used; at or above it the head angle wins.
double effective_turn_angle(double head_yaw, double gaze_h, double head_gate);

}  // namespace psdapf
