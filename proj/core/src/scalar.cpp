#include "tricontact/scalar.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tricontact {

namespace {

using cpp_int = boost::multiprecision::cpp_int;

bool parse_integer(std::string_view s, cpp_int& out) {
  if (s.empty()) return false;
  std::size_t start = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    start = 1;
  }
  if (start == s.size()) return false;
  cpp_int value = 0;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
    value = value * 10 + (s[i] - '0');
  }
  out = negative ? cpp_int(-value) : value;
  return true;
}

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = rep(cpp_int(num), cpp_int(den));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(Rational::rep(a.v_ / b.v_));
}

std::optional<Rational> Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    cpp_int num, den;
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(rep(num, den));
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view head = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) return std::nullopt;
    bool negative = !head.empty() && head.front() == '-';
    cpp_int int_part = 0;
    if (!(head.empty() || head == "-" || head == "+")) {
      if (!parse_integer(head, int_part)) return std::nullopt;
    }
    cpp_int frac_part = 0, scale = 1;
    for (char ch : frac) {
      if (ch < '0' || ch > '9') return std::nullopt;
      frac_part = frac_part * 10 + (ch - '0');
      scale *= 10;
    }
    cpp_int abs_int = int_part < 0 ? cpp_int(-int_part) : int_part;
    cpp_int num = abs_int * scale + frac_part;
    if (negative) num = -num;
    return Rational(rep(num, scale));
  }

  cpp_int value;
  if (!parse_integer(text, value)) return std::nullopt;
  return Rational(rep(value));
}

std::string Rational::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.v_; }

std::optional<double> scalar_ops<double>::parse(std::string_view s) {
  if (auto exact = Rational::parse(s)) return exact->to_double();
  std::string buf(s);
  try {
    std::size_t used = 0;
    double value = std::stod(buf, &used);
    if (used != buf.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string scalar_ops<double>::str(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace tricontact
