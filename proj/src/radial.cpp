#include "gyro/radial.hpp"

#include <stdexcept>

namespace gyro {

namespace {

void require_radius(const Rational& r, const RadialModel& model) {
  if (r < 0 || r > model.bound())
    throw std::domain_error("radius " + to_string(r) + " outside [0, " + to_string(model.bound()) + "]");
}

}  // namespace

Rational radial_oplus(const Rational& r, const Rational& s, const RadialModel& model) {
  require_radius(r, model);
  require_radius(s, model);
  if (r == model.bound() || s == model.bound()) return model.bound();
  Rational out = (r + s) / (1 + r * s / (model.c * model.c));
  out.canonicalize();
  return out;
}

RadialBall::RadialBall(RadialModel model, Rational radius, bool closed)
    : model_(std::move(model)), radius_(std::move(radius)), closed_(closed) {
  radius_.canonicalize();
  require_radius(radius_, model_);
  if (!closed_ && radius_ == 0) throw std::domain_error("open ball of radius 0 is empty");
  if (closed_ && radius_ == model_.bound())
    throw std::domain_error("closed ball of radius " + gyro::to_string(radius_) + " leaves the carrier");
}

bool RadialBall::contains_norm(double norm) const {
  const double r = radius_.get_d();
  return closed_ ? norm <= r : norm < r;
}

std::string RadialBall::to_string() const {
  return std::string(closed_ ? "closed" : "open") + "(" + gyro::to_string(radius_) + ")";
}

RadialBall set_oplus(const RadialBall& a, const RadialBall& b) {
  if (!(a.model() == b.model())) throw std::invalid_argument("balls belong to different models");
  return {a.model(), radial_oplus(a.radius(), b.radius(), a.model()), a.closed() && b.closed()};
}

bool is_subset(const RadialBall& a, const RadialBall& b) {
  if (!(a.model() == b.model())) throw std::invalid_argument("balls belong to different models");
  if (a.closed() && !b.closed()) return a.radius() < b.radius();
  return a.radius() <= b.radius();
}

}  // namespace gyro
