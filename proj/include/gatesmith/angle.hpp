#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gatesmith {

/// Tolerance used by the angle classification predicates.
inline constexpr double kAngleTolerance = 1e-9;

/// Exact rational multiple of pi, p/q * pi with q > 0 and gcd(p, q) = 1.
struct PiFraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const PiFraction&, const PiFraction&) = default;
};

/// An angle in radians, canonicalized to [0, 2pi).
///
/// Angles constructed from an exact pi fraction remember it, so that the
/// classification predicates become exact rather than tolerance based.
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians);
  static Angle from_pi_fraction(std::int64_t num, std::int64_t den);

  /// Parses "0.5", "-1e-3", "pi", "-pi/4", "3*pi/4", "3pi/4", "2/3*pi".
  static Angle parse(std::string_view text);

  double radians() const { return radians_; }
  const std::optional<PiFraction>& exact() const { return exact_; }

  bool is_multiple_of_half_pi(double tol = kAngleTolerance) const;
  bool is_multiple_of_quarter_pi(double tol = kAngleTolerance) const;

  Angle operator-() const;

  std::string to_string() const;

 private:
  bool is_multiple_of(std::int64_t parts, double tol) const;

  double radians_ = 0.0;
  std::optional<PiFraction> exact_;
};

/// Maps any finite real to [0, 2pi).
double canonical_radians(double radians);

}  // namespace gatesmith
