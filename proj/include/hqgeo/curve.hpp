#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hqgeo/heis_group.hpp"
#include "hqgeo/types.hpp"

namespace hqgeo {

struct CurveSample {
  double lambda = 0.0;
  HeisPoint point;
  std::optional<Vec7> velocity;  // d(coords)/d(lambda)
};

/// A discretized path on lambda in [0, 1], stored as smooth segments.
///
/// Within a segment lambda is strictly increasing. Consecutive segments share
/// their boundary lambda (and point); the boundary is stored once per segment
/// because the velocity may jump there.
class SampledCurve {
 public:
  using Segment = std::vector<CurveSample>;

  SampledCurve() = default;
  explicit SampledCurve(std::vector<Segment> segments);

  /// Degenerate curve sitting at p (two samples, zero velocity).
  static SampledCurve constant(const HeisPoint& p);

  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  std::size_t sample_count() const;
  bool has_velocities() const;

  const HeisPoint& start() const;
  const HeisPoint& end() const;

  /// Flattened samples in order (segment boundaries appear twice).
  std::vector<CurveSample> samples() const;

  /// Checks lambda ordering/endpoints; throws ErrorKind::Input on violation.
  void validate() const;

  /// Concatenate curves, reparametrizing each onto an equal share of [0, 1].
  static SampledCurve concatenate(std::span<const SampledCurve> parts);

 private:
  std::vector<Segment> segments_;
};

/// Image of the curve under the left translation tau_g (velocities pushed forward).
SampledCurve left_translate(const SampledCurve& c, const HeisPoint& g);

/// Image of the curve under the dilation D_delta.
SampledCurve dilate(const SampledCurve& c, double delta);

}  // namespace hqgeo
