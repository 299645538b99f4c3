#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace medianforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" (or "p") for a rational in lowest terms.
std::string to_string(const Rational& r);
/// Parses "p/q" or "p"; throws InputError.
Rational parse_rational(std::string_view text);
BigInt floor_of(const Rational& r);
Rational frac(const Rational& r);

/// Orientation-preserving piecewise-linear circle homeomorphism with exact
/// rational data.
///
/// The map is stored through a lift F with F(x + 1) = F(x) + 1: breakpoint
/// b[i] in [0,1) is sent to values[i] = F(b[i]), and F is linear between
/// consecutive breakpoints (the last piece runs from b[k-1] to b[0] + 1).
/// The canonical form keeps only breakpoints with distinct one-sided slopes,
/// or the single breakpoint 0 for a rotation, and picks the lift with
/// values[0] in [0,1).
class PLCircleHomeo {
 public:
  /// Throws InputError unless breakpoints are strictly increasing in [0,1)
  /// and values strictly increasing with values.back() < values.front() + 1.
  PLCircleHomeo(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static PLCircleHomeo identity();
  static PLCircleHomeo rotation(const Rational& angle);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }

  /// F(x) for any rational x.
  Rational lift(const Rational& x) const;
  /// Image on the circle, in [0,1).
  Rational operator()(const Rational& x) const { return frac(lift(x)); }
  Rational left_slope(const Rational& x) const;
  Rational right_slope(const Rational& x) const;

  PLCircleHomeo inverse() const;

  friend bool operator==(const PLCircleHomeo&, const PLCircleHomeo&) = default;

 private:
  Rational slope(std::size_t piece) const;
  std::size_t piece_at(const Rational& t) const;

  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

/// f ∘ g, normalized.
PLCircleHomeo compose(const PLCircleHomeo& f, const PLCircleHomeo& g);

/// g^n for n >= 0.
PLCircleHomeo power(const PLCircleHomeo& g, std::size_t n);

/// Points where the left and right slopes differ, sorted.
std::vector<Rational> sing(const PLCircleHomeo& g);

/// Image of (x, r) in S^1 x (0, inf): (g(x), g'(x-) r / g'(x+)).
std::pair<Rational, Rational> act(const PLCircleHomeo& g, const Rational& x, const Rational& r);

/// Sizes of S \ gS and gS \ S for S = S^1 x {1}, computed from the action
/// above without materializing S.
struct Commensuration {
  std::size_t s_minus_gs = 0;
  std::size_t gs_minus_s = 0;
};

Commensuration commensuration(const PLCircleHomeo& g);

/// |S △ gS| = 2 #Sing(g). Checks both one-sided differences against
/// #Sing(g) and that S \ g^{-1}S is Sing(g) x {1}; raises InternalError on
/// disagreement.
std::size_t orbit_distance(const PLCircleHomeo& g);

enum class Growth { Bounded, Linear };

std::string to_string(Growth g);

struct GrowthReport {
  std::vector<std::size_t> sing_counts;  // entry n-1 is #Sing(g^n)
  Growth growth = Growth::Bounded;
  std::optional<long> k;                 // set when growth is linear
};

struct GrowthOptions {
  std::size_t max_breakpoints = 200'000;
  std::size_t max_bits = 1'000'000;  // per numerator or denominator
};

/// #Sing(g^n) for n = 1..n_max by exact composition, classified as bounded or
/// linear. Throws InputError for n_max < 8 and ResourceError past the limits.
GrowthReport growth_profile(const PLCircleHomeo& g, std::size_t n_max, const GrowthOptions& options = {});

/// Bounded when the last quarter of the sequence is constant or never exceeds
/// the first half's maximum; otherwise linear with
/// K = round(2 (s(n_max) - s(h)) / (n_max - h)), h = ceil(n_max / 2).
GrowthReport classify_growth(std::vector<std::size_t> sing_counts);

}  // namespace medianforge
