#include "hqgeo/curve.hpp"

#include "hqgeo/error.hpp"

namespace hqgeo {

SampledCurve::SampledCurve(std::vector<Segment> segments) : segments_(std::move(segments)) {}

SampledCurve SampledCurve::constant(const HeisPoint& p) {
  Segment seg{{0.0, p, Vec7::Zero()}, {1.0, p, Vec7::Zero()}};
  return SampledCurve({seg});
}

std::size_t SampledCurve::sample_count() const {
  std::size_t n = 0;
  for (const auto& s : segments_) n += s.size();
  return n;
}

bool SampledCurve::has_velocities() const {
  for (const auto& seg : segments_)
    for (const auto& s : seg)
      if (!s.velocity) return false;
  return true;
}

const HeisPoint& SampledCurve::start() const {
  if (segments_.empty() || segments_.front().empty()) fail(ErrorKind::Input, "empty curve");
  return segments_.front().front().point;
}

const HeisPoint& SampledCurve::end() const {
  if (segments_.empty() || segments_.back().empty()) fail(ErrorKind::Input, "empty curve");
  return segments_.back().back().point;
}

std::vector<CurveSample> SampledCurve::samples() const {
  std::vector<CurveSample> out;
  out.reserve(sample_count());
  for (const auto& seg : segments_) out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

void SampledCurve::validate() const {
  if (segments_.empty()) fail(ErrorKind::Input, "curve has no segments");
  double prev_end = 0.0;
  for (std::size_t k = 0; k < segments_.size(); ++k) {
    const auto& seg = segments_[k];
    if (seg.size() < 2) fail(ErrorKind::Input, "curve segment needs at least two samples");
    if (seg.front().lambda != prev_end) fail(ErrorKind::Input, "curve segments are not contiguous in lambda");
    for (std::size_t i = 1; i < seg.size(); ++i)
      if (!(seg[i].lambda > seg[i - 1].lambda)) fail(ErrorKind::Input, "lambda must be strictly increasing");
    prev_end = seg.back().lambda;
  }
  if (prev_end != 1.0) fail(ErrorKind::Input, "curve must end at lambda = 1");
}

SampledCurve SampledCurve::concatenate(std::span<const SampledCurve> parts) {
  std::vector<Segment> out;
  const double n = static_cast<double>(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& seg : parts[p].segments()) {
      Segment mapped = seg;
      for (auto& s : mapped) {
        s.lambda = (static_cast<double>(p) + s.lambda) / n;
        if (s.velocity) *s.velocity *= n;
      }
      out.push_back(std::move(mapped));
    }
  }
  return SampledCurve(std::move(out));
}

SampledCurve left_translate(const SampledCurve& c, const HeisPoint& g) {
  std::vector<SampledCurve::Segment> out = c.segments();
  for (auto& seg : out) {
    for (auto& s : seg) {
      s.point = compose(g, s.point);
      if (s.velocity) {
        // d/dl [g * gamma] = (qdot, tdot + 2 Im(q_g conj(qdot)))
        const Quaternion qdot((*s.velocity)[0], (*s.velocity)[1], (*s.velocity)[2], (*s.velocity)[3]);
        const PureQuaternion twist = 2.0 * (g.q * qdot.conj()).im();
        (*s.velocity)[4] += twist.x;
        (*s.velocity)[5] += twist.y;
        (*s.velocity)[6] += twist.z;
      }
    }
  }
  return SampledCurve(std::move(out));
}

SampledCurve dilate(const SampledCurve& c, double delta) {
  std::vector<SampledCurve::Segment> out = c.segments();
  for (auto& seg : out) {
    for (auto& s : seg) {
      s.point = dilate(s.point, delta);
      if (s.velocity) {
        s.velocity->head<4>() *= delta;
        s.velocity->tail<3>() *= delta * delta;
      }
    }
  }
  return SampledCurve(std::move(out));
}

}  // namespace hqgeo
