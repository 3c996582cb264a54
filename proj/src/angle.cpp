#include "gatesmith/angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "gatesmith/errors.hpp"

namespace gatesmith {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

double parse_real(const std::string& s, std::string_view original) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(s, &consumed);
  } catch (const std::exception&) {
    throw PreconditionError("cannot parse angle '" + std::string(original) + "'");
  }
  if (consumed != s.size() || !std::isfinite(value)) {
    throw PreconditionError("cannot parse angle '" + std::string(original) + "'");
  }
  return value;
}

}  // namespace

double canonical_radians(double radians) {
  if (!std::isfinite(radians)) throw PreconditionError("angle must be finite");
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

Angle::Angle(double radians) : radians_(canonical_radians(radians)) {}

Angle Angle::from_pi_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw PreconditionError("zero denominator in pi fraction");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  // Reduce modulo 2pi exactly: num/den in [0, 2).
  const std::int64_t period = 2 * den;
  num %= period;
  if (num < 0) num += period;
  Angle a;
  a.exact_ = PiFraction{num, den};
  a.radians_ = canonical_radians(std::numbers::pi * static_cast<double>(num) /
                                 static_cast<double>(den));
  return a;
}

Angle Angle::parse(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw PreconditionError("empty angle");
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return Angle(parse_real(s, text));

  // Forms: [sign][p][*]pi[/q]  or  p/q*pi
  std::string before = s.substr(0, pos);
  std::string after = s.substr(pos + 2);
  if (!before.empty() && before.back() == '*') before.pop_back();

  std::int64_t num = 1;
  std::int64_t den = 1;
  if (before.empty() || before == "+") {
    num = 1;
  } else if (before == "-") {
    num = -1;
  } else if (auto slash = before.find('/'); slash != std::string::npos) {
    auto p = parse_int(std::string_view(before).substr(0, slash));
    auto q = parse_int(std::string_view(before).substr(slash + 1));
    if (!p || !q) throw PreconditionError("cannot parse angle '" + std::string(text) + "'");
    num = *p;
    den = *q;
  } else if (auto p = parse_int(before)) {
    num = *p;
  } else {
    // Real coefficient times pi: not exact.
    return Angle(parse_real(before, text) * std::numbers::pi /
                 (after.empty() ? 1.0 : parse_real(after.substr(1), text)));
  }
  if (!after.empty()) {
    if (after.front() != '/') throw PreconditionError("cannot parse angle '" + std::string(text) + "'");
    auto q = parse_int(std::string_view(after).substr(1));
    if (!q) throw PreconditionError("cannot parse angle '" + std::string(text) + "'");
    den *= *q;
  }
  if (den == 0) throw PreconditionError("zero denominator in angle '" + std::string(text) + "'");
  return from_pi_fraction(num, den);
}

bool Angle::is_multiple_of(std::int64_t parts, double tol) const {
  // multiple of pi/parts
  if (exact_) return (exact_->num * parts) % exact_->den == 0;
  const double unit = std::numbers::pi / static_cast<double>(parts);
  const double ratio = radians_ / unit;
  return std::abs(ratio - std::round(ratio)) * unit <= tol;
}

bool Angle::is_multiple_of_half_pi(double tol) const { return is_multiple_of(2, tol); }

bool Angle::is_multiple_of_quarter_pi(double tol) const { return is_multiple_of(4, tol); }

Angle Angle::operator-() const {
  if (exact_) return from_pi_fraction(-exact_->num, exact_->den);
  return Angle(-radians_);
}

std::string Angle::to_string() const {
  std::ostringstream os;
  if (exact_) {
    if (exact_->num == 0) return "0";
    if (exact_->num != 1) os << exact_->num << "*";
    os << "pi";
    if (exact_->den != 1) os << "/" << exact_->den;
    return os.str();
  }
  os.precision(17);
  os << radians_;
  return os.str();
}

}  // namespace gatesmith
