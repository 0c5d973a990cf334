#pragma once

#include <string>

#include "gyro/rational.hpp"

namespace gyro {

/// Which analytic model a radial ball lives in. Möbius balls live in the
/// unit disk; Einstein balls in the c-ball.
struct RadialModel {
  enum class Kind { mobius, einstein };
  Kind kind = Kind::mobius;
  Rational c = 1;

  static RadialModel mobius() { return {}; }
  static RadialModel einstein(Rational c) { return {Kind::einstein, std::move(c)}; }

  const Rational& bound() const { return c; }
  std::string name() const { return kind == Kind::mobius ? "mobius" : "einstein"; }
  friend bool operator==(const RadialModel&, const RadialModel&) = default;
};

/// Radius of the sum of origin-centered balls of radii r and s:
/// (r + s) / (1 + r s / c²), with c = 1 for Möbius. A radius equal to c
/// stands for the open ball that is the whole carrier.
Rational radial_oplus(const Rational& r, const Rational& s, const RadialModel& model = RadialModel::mobius());

/// An origin-centered ball {x : |x| ≤ r} (closed) or {x : |x| < r} (open).
/// Always symmetric and gyration-invariant, since gyrations of both models
/// preserve the norm.
class RadialBall {
 public:
  RadialBall(RadialModel model, Rational radius, bool closed = true);

  static RadialBall origin(RadialModel model) { return {std::move(model), 0, true}; }
  static RadialBall whole(RadialModel model) {
    Rational c = model.bound();
    return {std::move(model), std::move(c), false};
  }

  bool is_whole() const { return !closed_ && radius_ == model_.bound(); }

  const RadialModel& model() const { return model_; }
  const Rational& radius() const { return radius_; }
  bool closed() const { return closed_; }

  bool contains_norm(double norm) const;
  std::string to_string() const;

  friend bool operator==(const RadialBall&, const RadialBall&) = default;

 private:
  RadialModel model_;
  Rational radius_;
  bool closed_;
};

/// Elementwise sum of two centered balls; closed iff both are closed.
RadialBall set_oplus(const RadialBall& a, const RadialBall& b);
inline RadialBall set_neg(const RadialBall& a) { return a; }

bool is_subset(const RadialBall& a, const RadialBall& b);

}  // namespace gyro
