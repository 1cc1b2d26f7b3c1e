#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace tricontact {

/// Comparison tolerance of the floating-point scalar backend. A session
/// constant: set it once before computing, never while values are live.
inline double& float_tolerance() {
  static double tol = 1e-9;
  return tol;
}

/// Arbitrary-precision rational number, the exact scalar backend.
/// Arithmetic never rounds and equality is decidable.
class Rational {
 public:
  using rep = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<std::int64_t>(n)) {}
  Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
  Rational(long long num, long long den);
  explicit Rational(rep v) : v_(std::move(v)) {}

  /// Accepts "p", "p/q" and plain decimals like "-0.25".
  static std::optional<Rational> parse(std::string_view text);

  const rep& raw() const { return v_; }
  double to_double() const { return v_.template convert_to<double>(); }
  std::string str() const;

  bool is_zero() const { return v_.is_zero(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(rep(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(rep(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(rep(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(rep(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  rep v_{};
};

template <class K>
struct scalar_ops;

template <>
struct scalar_ops<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool within(const Rational& a, const Rational& b, double) { return a == b; }
  static bool positive(const Rational& x) { return x > Rational(0); }
  static Rational abs(const Rational& x) { return x < Rational(0) ? -x : x; }
  /// Exact pivoting: the first nonzero entry wins.
  static bool better_pivot(const Rational& cand, const Rational& cur) {
    return cur.is_zero() && !cand.is_zero();
  }
  static std::optional<Rational> parse(std::string_view s) { return Rational::parse(s); }
  static std::string str(const Rational& x) { return x.str(); }
  static double to_double(const Rational& x) { return x.to_double(); }
};

template <>
struct scalar_ops<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x) { return std::fabs(x) <= float_tolerance(); }
  static bool equal(double a, double b) { return std::fabs(a - b) <= float_tolerance(); }
  static bool within(double a, double b, double tol) { return std::fabs(a - b) <= tol; }
  static bool positive(double x) { return x > 0.0; }
  static double abs(double x) { return std::fabs(x); }
  /// Partial pivoting: the entry of largest magnitude wins.
  static bool better_pivot(double cand, double cur) { return std::fabs(cand) > std::fabs(cur); }
  static std::optional<double> parse(std::string_view s);
  static std::string str(double x);
  static double to_double(double x) { return x; }
  static double sqrt(double x) { return std::sqrt(x); }
};

template <class K>
concept ScalarField = requires(const K& a, const K& b) {
  { scalar_ops<K>::is_zero(a) } -> std::convertible_to<bool>;
  { scalar_ops<K>::equal(a, b) } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  requires std::constructible_from<K, int>;
  requires std::copyable<K>;
};

}  // namespace tricontact
