#include "lamlab/angle.hpp"

#include <cstdint>

#include <cctype>
#include <map>
#include <ostream>

#include "lamlab/errors.hpp"

namespace lamlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed angle '" + std::string(whole) + "'");
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Angle::Angle(BigInt p, BigInt q) {
  if (q == 0) throw InvalidArgument("zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  p %= q;
  if (p < 0) p += q;
  BigInt g = gcd(p, q);
  if (g == 0) g = 1;
  num_ = p / g;
  den_ = q / g;
  if (num_ == 0) den_ = 1;
}

Angle Angle::from_rational(const Rational& r) {
  return Angle(numerator(r), denominator(r));
}

Angle Angle::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Angle(parse_integer(s, text), 1);
  std::string_view den_text = s.substr(slash + 1);
  if (!all_digits(den_text)) throw ParseError("malformed angle '" + std::string(text) + "'");
  BigInt p = parse_integer(s.substr(0, slash), text);
  BigInt q(std::string{den_text});
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Angle(std::move(p), std::move(q));
}

double Angle::to_double() const { return static_cast<double>(value()); }

std::string Angle::str() const { return num_.str() + "/" + den_.str(); }

Angle Angle::operator+(const Angle& other) const {
  if (den_ == other.den_) return Angle(num_ + other.num_, den_);
  return Angle(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

Angle Angle::operator-(const Angle& other) const {
  if (den_ == other.den_) return Angle(num_ - other.num_, den_);
  return Angle(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

Angle Angle::preimage(unsigned k, unsigned d) const {
  // gcd(p + k*q, q) = 1, so only common factors with d can cancel.
  BigInt p = num_ + BigInt(k % d) * den_;
  BigInt q = den_ * d;
  unsigned g = d == 3 ? (p % 3 == 0 ? 3 : 1) : static_cast<unsigned>(gcd(p, BigInt(d)));
  if (g > 1) {
    p /= g;
    q /= g;
  }
  if (p == 0) q = 1;
  return Angle(std::move(p), std::move(q), Reduced{});
}

std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  // Single-limb denominators (and so numerators) compare in 128-bit words.
  const auto& ad = a.den_.backend();
  const auto& bd = b.den_.backend();
  if (ad.size() == 1 && bd.size() == 1 && sizeof(*ad.limbs()) == 8) {
    using u128 = unsigned __int128;
    const u128 lhs = u128(*a.num_.backend().limbs()) * *bd.limbs();
    const u128 rhs = u128(*b.num_.backend().limbs()) * *ad.limbs();
    return lhs <=> rhs;
  }
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Angle& a) { return os << a.str(); }

Angle sigma(const Angle& a, unsigned d) {
  // gcd(d*p mod q, q) = gcd(d, q) because p/q is reduced.
  BigInt p = (a.num() * d) % a.den();
  BigInt q = a.den();
  unsigned g = static_cast<unsigned>(gcd(q, BigInt(d)));
  if (g > 1) {
    p /= g;
    q /= g;
  }
  if (p == 0) return Angle();
  return Angle(std::move(p), std::move(q));
}

Angle sigma_iter(const Angle& a, std::size_t n, unsigned d) {
  Angle x = a;
  for (std::size_t i = 0; i < n; ++i) x = sigma(x, d);
  return x;
}

Rational arc_length(const Angle& from, const Angle& to) { return (to - from).value(); }

Rational circle_distance(const Angle& a, const Angle& b) {
  Rational len = arc_length(a, b);
  Rational other = Rational(1) - len;
  if (len == 0) return len;
  return len < other ? len : other;
}

OrbitSummary orbit(const Angle& a, unsigned d) {
  std::map<Angle, std::size_t> seen;
  OrbitSummary out;
  Angle x = a;
  while (true) {
    auto [it, inserted] = seen.emplace(x, out.points.size());
    if (!inserted) {
      out.preperiod = it->second;
      out.period = out.points.size() - it->second;
      return out;
    }
    out.points.push_back(x);
    x = sigma(x, d);
  }
}

}  // namespace lamlab
