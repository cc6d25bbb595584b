#include "hqgeo/heis_group.hpp"

#include <cmath>
#include <string>

#include "hqgeo/error.hpp"

namespace hqgeo {

namespace {

void require_unit(const Quaternion& u, const char* what) {
  if (!(std::abs(u.norm() - 1.0) < 1e-12))
    fail(ErrorKind::Parameter, std::string(what) + " parameter must be a unit quaternion");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

HeisPoint HeisPoint::from_coords(const Vec7& c) {
  return {{c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6]}};
}

Vec7 HeisPoint::coords() const {
  Vec7 c;
  c << q.w, q.x, q.y, q.z, t.x, t.y, t.z;
  return c;
}

MetricScale::MetricScale(double delta) : delta_(delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) fail(ErrorKind::Parameter, "dilation factor must be positive");
}

HeisPoint compose(const HeisPoint& a, const HeisPoint& b) {
  return {a.q + b.q, a.t + b.t + 2.0 * (a.q * b.q.conj()).im()};
}

HeisPoint invert(const HeisPoint& p) { return {-p.q, -p.t}; }

HeisPoint dilate(const HeisPoint& p, double delta) { return {p.q * delta, p.t * (delta * delta)}; }

HeisPoint apply(const Automorphism& map, const HeisPoint& p) {
  return std::visit(
      Overloaded{
          [&](const LeftTranslation& m) { return compose(m.by, p); },
          [&](const Rotation& m) {
            require_unit(m.u, "rotation");
            return HeisPoint{p.q * m.u, p.t};
          },
          [&](const Sp1Action& m) {
            require_unit(m.sigma, "Sp(1)");
            const Quaternion rotated = m.sigma * Quaternion(p.t) * m.sigma.conj();
            return HeisPoint{m.sigma * p.q, rotated.im()};
          },
          [&](const Inversion&) {
            const double q2 = p.q.norm2();
            const double gauge4 = q2 * q2 + p.t.norm2();
            if (!(gauge4 > 0.0)) fail(ErrorKind::Domain, "inversion is undefined at the origin");
            const Quaternion w = Quaternion(q2) - Quaternion(p.t);
            return HeisPoint{-(inverse(w) * p.q), -p.t / gauge4};
          },
          [&](const Dilation& m) { return dilate(p, m.scale.delta()); },
      },
      map);
}

double koranyi_gauge(const HeisPoint& p) { return std::sqrt(std::hypot(p.q.norm2(), p.t.norm())); }

HeisPoint relative(const HeisPoint& a, const HeisPoint& b) {
  // a^{-1} b with the a-a cancellation done before the product, so relative(a, a) is exact
  const Quaternion dq = b.q - a.q;
  return {dq, b.t - a.t - 2.0 * (a.q * dq.conj()).im()};
}

double koranyi_distance(const HeisPoint& a, const HeisPoint& b) { return koranyi_gauge(relative(a, b)); }

}  // namespace hqgeo
