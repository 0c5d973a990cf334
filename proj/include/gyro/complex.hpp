#pragma once

#include <cmath>
#include <ostream>

#include "gyro/scalar.hpp"

namespace gyro {

// std::complex is only specified for floating types, so the exact Möbius
// model needs its own pair type.
template <Scalar T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r, T i = T(0)) : re(std::move(r)), im(std::move(i)) {}

  Complex conj() const { return {re, -im}; }
  T norm2() const { return re * re + im * im; }

  Complex operator-() const { return {-re, -im}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const T& k, const Complex& a) { return {k * a.re, k * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T d = b.norm2();
    if (d == T(0)) throw std::domain_error("complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << '(' << z.re << ", " << z.im << ')';
  }
};

template <Scalar T>
double abs(const Complex<T>& z) {
  return std::hypot(scalar_to_double(z.re), scalar_to_double(z.im));
}

template <Scalar T>
double distance(const Complex<T>& a, const Complex<T>& b) {
  if constexpr (is_exact_v<T>) {
    Complex<T> d = a - b;
    return std::sqrt(scalar_to_double(d.norm2()));
  } else {
    return std::hypot(a.re - b.re, a.im - b.im);
  }
}

}  // namespace gyro
