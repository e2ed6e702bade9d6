#include "psdapf/human_signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace psdapf {
namespace {

// Characteristic AU index triples per expression (indices into kActionUnitIds).
//   Happy    = AU06 + AU07 + AU12
//   Sad      = AU04 + AU15 + AU17
//   Surprise = AU01 + AU02 + AU25
constexpr std::array<int, 3> kSurpriseAus = {0, 1, 8};
constexpr std::array<int, 3> kSadAus = {2, 6, 7};
constexpr std::array<int, 3> kHappyAus = {3, 4, 5};

double combo_score(const ActionUnitSample& sample, const std::array<int, 3>& aus) {
  return (sample.intensity[aus[0]] + sample.intensity[aus[1]] +
          sample.intensity[aus[2]]) /
         3.0;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

std::string_view label_name(ExpressionLabel label) {
  switch (label) {
    case ExpressionLabel::Expressionless:
      return "expressionless";
    case ExpressionLabel::Surprise:
      return "surprise";
    case ExpressionLabel::Sad:
      return "sad";
    case ExpressionLabel::Happy:
      return "happy";
  }
  return "unknown";
}

std::optional<int> ActionUnitSample::index_of(std::string_view au_id) {
  for (int i = 0; i < kActionUnitCount; ++i) {
    if (kActionUnitIds[i] == au_id) return i;
  }
  return std::nullopt;
}

double ActionUnitSample::at(std::string_view au_id) const {
  const auto idx = index_of(au_id);
  if (!idx) throw InputError("unknown action unit id: " + std::string(au_id));
  return intensity[*idx];
}

void ActionUnitSample::set(std::string_view au_id, double value) {
  const auto idx = index_of(au_id);
  if (!idx) throw InputError("unknown action unit id: " + std::string(au_id));
  intensity[*idx] = value;
}

void ActionUnitSample::validate() const {
  for (int i = 0; i < kActionUnitCount; ++i) {
    const double v = intensity[i];
    if (!std::isfinite(v) || v < 0.0 || v > 5.0) {
      throw InputError(std::string(kActionUnitIds[i]) +
                       " intensity must be finite and in [0, 5], got " +
                       std::to_string(v));
    }
  }
}

ExpressionProfile calibrate_profile(const ExpressionSamples& samples,
                                    double activation_threshold) {
  if (!(activation_threshold > 0.0)) {
    throw ParamError("activation threshold must be > 0");
  }
  ExpressionProfile profile;
  for (int e = 0; e < kExpressionCount; ++e) {
    const auto& list = samples[e];
    if (list.size() < 3) {
      throw CalibrationError(
          "calibration needs at least 3 samples for expression '" +
          std::string(label_name(static_cast<ExpressionLabel>(e))) + "', got " +
          std::to_string(list.size()));
    }
    for (const auto& s : list) s.validate();
    for (int au = 0; au < kActionUnitCount; ++au) {
      std::vector<double> values;
      values.reserve(list.size());
      for (const auto& s : list) values.push_back(s.intensity[au]);
      std::sort(values.begin(), values.end());
      // Drop one minimum and one maximum reading, average the remainder.
      const double sum = std::accumulate(values.begin() + 1, values.end() - 1, 0.0);
      profile.mean[e][au] = sum / static_cast<double>(values.size() - 2);
    }
    profile.threshold[e] = activation_threshold;
  }
  return profile;
}

ExpressionLabel classify_expression(const ActionUnitSample& sample,
                                    const ExpressionProfile& profile) {
  sample.validate();
  const std::array<double, kExpressionCount> score = {
      0.0,  // expressionless has no combination score
      combo_score(sample, kSurpriseAus),
      combo_score(sample, kSadAus),
      combo_score(sample, kHappyAus),
  };
  ExpressionLabel best = ExpressionLabel::Expressionless;
  double best_score = 0.0;
  for (int e = 1; e < kExpressionCount; ++e) {
    if (score[e] <= profile.threshold[e]) continue;
    // Strict > keeps the lowest code on ties.
    if (best == ExpressionLabel::Expressionless || score[e] > best_score) {
      best = static_cast<ExpressionLabel>(e);
      best_score = score[e];
    }
  }
  return best;
}

double raw_to_angle(double raw, const AngleCalibration& cal) {
  if (!(cal.max_abs > 0.0)) throw ParamError("angle calibration requires max_abs > 0");
  if (!std::isfinite(raw)) throw InputError("raw gaze reading is not finite");
  return (raw - cal.center) / cal.max_abs * kHalfPi;
}

int TurnScaleTable::present_count() const {
  int n = 0;
  for (const auto& v : distance_m) n += v.has_value() ? 1 : 0;
  return n;
}

TurnScaleTable bin_turn_samples(const std::vector<VolunteerSamples>& per_volunteer) {
  std::size_t total = 0;
  for (const auto& v : per_volunteer) total += v.size();
  if (total == 0) throw CalibrationError("no turn samples to bin");

  constexpr int kScales = 9;
  std::array<std::vector<double>, kScales> volunteer_values;  // per-scale, one per volunteer

  for (const auto& volunteer : per_volunteer) {
    std::array<std::vector<double>, kScales> bucket;
    for (const auto& s : volunteer) {
      if (!std::isfinite(s.angle_deg) || s.angle_deg <= 0.0 || s.angle_deg >= 90.0) {
        throw InputError("turn angle must lie in (0, 90) degrees, got " +
                         std::to_string(s.angle_deg));
      }
      if (!std::isfinite(s.distance_m)) {
        throw InputError("turn distance must be finite");
      }
      const auto idx = static_cast<int>(
          std::clamp<long>(std::lround((s.angle_deg - 5.0) / 10.0), 0, kScales - 1));
      bucket[idx].push_back(s.distance_m);
    }
    for (int i = 0; i < kScales; ++i) {
      if (!bucket[i].empty()) volunteer_values[i].push_back(median(bucket[i]));
    }
  }

  TurnScaleTable table;
  for (int i = 0; i < kScales; ++i) {
    const auto& vals = volunteer_values[i];
    if (vals.empty()) continue;
    table.distance_m[i] = std::accumulate(vals.begin(), vals.end(), 0.0) /
                          static_cast<double>(vals.size());
  }
  return table;
}

TurnRegression fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw FitError("x/y point counts differ");
  if (n < 2) {
    throw FitError("regression needs at least 2 points, got " + std::to_string(n));
  }
  const double x_mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double y_mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - x_mean) * (x[i] - x_mean);
    sxy += (x[i] - x_mean) * (y[i] - y_mean);
  }
  if (sxx <= 0.0) throw FitError("regression is degenerate: all abscissae identical");
  TurnRegression reg;
  reg.beta = sxy / sxx;
  reg.alpha = y_mean - reg.beta * x_mean;
  return reg;
}

TurnRegression fit_turn_regression(const TurnScaleTable& table) {
  std::vector<double> x;
  std::vector<double> y;
  for (int i = 0; i < 9; ++i) {
    if (!table.distance_m[i]) continue;
    x.push_back(deg2rad(TurnScaleTable::kScaleDeg[i]));
    y.push_back(*table.distance_m[i]);
  }
  if (x.size() < 2) {
    throw FitError("regression needs at least 2 present scales, got " +
                   std::to_string(x.size()));
  }
  return fit_line(x, y);
}

double fit_residual_sse(const TurnRegression& reg, const std::vector<double>& x,
                        const std::vector<double>& y) {
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    const double r = y[i] - (reg.alpha + reg.beta * x[i]);
    sse += r * r;
  }
  return sse;
}

double predict_arm_distance(double angle_rad, const TurnRegression& reg) {
  if (!std::isfinite(angle_rad)) throw InputError("turn angle is not finite");
  return std::max(0.0, reg.alpha + reg.beta * angle_rad);
}

double effective_turn_angle(double head_yaw, double gaze_h, double head_gate) {
  return std::abs(head_yaw) < head_gate ? gaze_h : head_yaw;
}

}  // namespace psdapf
