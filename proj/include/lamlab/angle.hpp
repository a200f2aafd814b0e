#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lamlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A rational point of the circle R/Z, stored as a reduced fraction p/q with
// 0 <= p < q. Zero is 0/1.
//
// Denominators grow by a factor of the degree with every pullback, so both
// parts are arbitrary precision.
class Angle {
 public:
  Angle() : num_(0), den_(1) {}

  // Reduces p/q modulo 1 and to lowest terms. Throws InvalidArgument if q == 0.
  Angle(BigInt p, BigInt q);

  static Angle from_rational(const Rational& r);

  // Accepts "p/q" or a bare integer, optionally signed.
  static Angle parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }

  Rational value() const { return Rational(num_, den_); }
  double to_double() const;

  // "p/q", with "0/1" for zero.
  std::string str() const;

  // Circle addition and subtraction, both reduced mod 1.
  Angle operator+(const Angle& other) const;
  Angle operator-(const Angle& other) const;

  // The k-th of the d preimages under sigma_d: (p + k*q) / (d*q).
  Angle preimage(unsigned k, unsigned d = 3) const;

  friend bool operator==(const Angle& a, const Angle& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b);

 private:
  struct Reduced {};
  Angle(BigInt p, BigInt q, Reduced) : num_(std::move(p)), den_(std::move(q)) {}

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Angle& a);

// d * a mod 1.
Angle sigma(const Angle& a, unsigned d = 3);

// sigma_d^n(a).
Angle sigma_iter(const Angle& a, std::size_t n, unsigned d = 3);

// Length of the positively oriented arc from a to b, in [0, 1).
Rational arc_length(const Angle& from, const Angle& to);

// Shortest circle distance between two angles, in [0, 1/2].
Rational circle_distance(const Angle& a, const Angle& b);

struct OrbitSummary {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  // Preperiodic tail followed by exactly one full cycle.
  std::vector<Angle> points;

  const Angle& cycle_start() const { return points[preperiod]; }
};

// Exact forward orbit of a rational angle. Always terminates: the reduced
// denominators along the orbit are divisors of the starting denominator.
OrbitSummary orbit(const Angle& a, unsigned d = 3);

}  // namespace lamlab
