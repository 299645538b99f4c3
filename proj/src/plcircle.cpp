#include "medianforge/plcircle.hpp"

#include <algorithm>
#include <cctype>

#include "medianforge/errors.hpp"

namespace medianforge {

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto integer = [&](std::string_view part) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw InputError("malformed rational '" + std::string(text) + "'");
    for (std::size_t j = i; j < part.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(part[j]))) {
        throw InputError("malformed rational '" + std::string(text) + "'");
      }
    }
    return BigInt(std::string(part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(integer(text));
  const BigInt den = integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(integer(text.substr(0, slash)), den);
}

BigInt floor_of(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);  // positive
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Rational frac(const Rational& r) { return r - Rational(floor_of(r)); }

namespace {

std::size_t msb_bits(const Rational& r) {
  const BigInt num = abs(boost::multiprecision::numerator(r));
  const BigInt den = boost::multiprecision::denominator(r);
  const std::size_t num_bits = num == 0 ? 0 : boost::multiprecision::msb(num) + 1;
  return std::max(num_bits, static_cast<std::size_t>(boost::multiprecision::msb(den) + 1));
}

// Canonical form of a valid lift sample: drop breakpoints with equal one-sided
// slopes, fall back to {0} for rotations, shift the lift so values[0] in [0,1).
std::pair<std::vector<Rational>, std::vector<Rational>> normalize(std::vector<Rational> b, std::vector<Rational> y) {
  const std::size_t k = b.size();
  auto slope = [&](std::size_t i) {
    const std::size_t j = (i + 1) % k;
    const Rational dy = (j == 0 ? y[0] + 1 : y[j]) - y[i];
    const Rational dx = (j == 0 ? b[0] + 1 : b[j]) - b[i];
    return dy / dx;
  };
  std::vector<Rational> slopes(k);
  for (std::size_t i = 0; i < k; ++i) slopes[i] = slope(i);
  std::vector<Rational> nb;
  std::vector<Rational> ny;
  for (std::size_t i = 0; i < k; ++i) {
    if (slopes[(i + k - 1) % k] != slopes[i]) {
      nb.push_back(b[i]);
      ny.push_back(y[i]);
    }
  }
  if (nb.empty()) {
    // Rotation: F(0) = y[0] - b[0] since the slope is 1 everywhere.
    nb.push_back(Rational(0));
    ny.push_back(y[0] - b[0]);
  }
  const Rational shift(floor_of(ny[0]));
  for (auto& v : ny) v -= shift;
  return {std::move(nb), std::move(ny)};
}

}  // namespace

PLCircleHomeo::PLCircleHomeo(std::vector<Rational> breakpoints, std::vector<Rational> values) {
  if (breakpoints.empty()) throw InputError("at least one breakpoint is required");
  if (breakpoints.size() != values.size()) throw InputError("breakpoints and values differ in length");
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (breakpoints[i] < 0 || breakpoints[i] >= 1) throw InputError("breakpoint outside [0,1)");
    if (i > 0 && breakpoints[i] <= breakpoints[i - 1]) throw InputError("breakpoints not strictly increasing");
    if (i > 0 && values[i] <= values[i - 1]) throw InputError("values not strictly increasing");
  }
  if (values.back() >= values.front() + 1) throw InputError("values span a window of length >= 1");
  auto [b, y] = normalize(std::move(breakpoints), std::move(values));
  breakpoints_ = std::move(b);
  values_ = std::move(y);
}

PLCircleHomeo PLCircleHomeo::identity() { return rotation(Rational(0)); }

PLCircleHomeo PLCircleHomeo::rotation(const Rational& angle) { return PLCircleHomeo({Rational(0)}, {frac(angle)}); }

Rational PLCircleHomeo::slope(std::size_t i) const {
  const std::size_t k = breakpoints_.size();
  const std::size_t j = (i + 1) % k;
  const Rational dy = (j == 0 ? values_[0] + 1 : values_[j]) - values_[i];
  const Rational dx = (j == 0 ? breakpoints_[0] + 1 : breakpoints_[j]) - breakpoints_[i];
  return dy / dx;
}

// Piece whose half-open domain [b[i], b[i+1]) contains t in [0,1); the last
// piece also covers [0, b[0]).
std::size_t PLCircleHomeo::piece_at(const Rational& t) const {
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.begin()) return breakpoints_.size() - 1;
  return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

Rational PLCircleHomeo::lift(const Rational& x) const {
  const BigInt n = floor_of(x);
  const Rational t = x - Rational(n);
  const std::size_t i = piece_at(t);
  Rational start = breakpoints_[i];
  Rational value = values_[i];
  if (t < breakpoints_.front()) {
    start -= 1;
    value -= 1;
  }
  return value + slope(i) * (t - start) + Rational(n);
}

Rational PLCircleHomeo::right_slope(const Rational& x) const { return slope(piece_at(frac(x))); }

Rational PLCircleHomeo::left_slope(const Rational& x) const {
  const Rational t = frac(x);
  const std::size_t i = piece_at(t);
  if (breakpoints_[i] == t) return slope((i + breakpoints_.size() - 1) % breakpoints_.size());
  return slope(i);
}

PLCircleHomeo PLCircleHomeo::inverse() const {
  std::vector<std::pair<Rational, Rational>> points;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const BigInt shift = floor_of(values_[i]);
    points.emplace_back(values_[i] - Rational(shift), breakpoints_[i] - Rational(shift));
  }
  std::sort(points.begin(), points.end());
  std::vector<Rational> b;
  std::vector<Rational> y;
  for (auto& [x, v] : points) {
    b.push_back(std::move(x));
    y.push_back(std::move(v));
  }
  return PLCircleHomeo(std::move(b), std::move(y));
}

PLCircleHomeo compose(const PLCircleHomeo& f, const PLCircleHomeo& g) {
  // f∘g is linear between consecutive points of Breaks(g) ∪ g^{-1}(Breaks(f)).
  const PLCircleHomeo g_inv = g.inverse();
  std::vector<Rational> points = g.breakpoints();
  for (const auto& b : f.breakpoints()) points.push_back(g_inv(b));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Rational> values;
  values.reserve(points.size());
  for (const auto& x : points) values.push_back(f.lift(g.lift(x)));
  return PLCircleHomeo(std::move(points), std::move(values));
}

PLCircleHomeo power(const PLCircleHomeo& g, std::size_t n) {
  PLCircleHomeo result = PLCircleHomeo::identity();
  PLCircleHomeo base = g;
  while (n > 0) {
    if (n & 1U) result = compose(result, base);
    n >>= 1U;
    if (n > 0) base = compose(base, base);
  }
  return result;
}

std::vector<Rational> sing(const PLCircleHomeo& g) {
  std::vector<Rational> out;
  for (const auto& b : g.breakpoints()) {
    if (g.left_slope(b) != g.right_slope(b)) out.push_back(b);
  }
  return out;
}

std::pair<Rational, Rational> act(const PLCircleHomeo& g, const Rational& x, const Rational& r) {
  return {g(x), g.left_slope(x) * r / g.right_slope(x)};
}

Commensuration commensuration(const PLCircleHomeo& g) {
  // Only points of Sing(g) change height under the action, so S △ gS is
  // read off from their images.
  Commensuration c;
  std::vector<std::pair<Rational, Rational>> moved;
  for (const auto& x : sing(g)) moved.push_back(act(g, x, Rational(1)));
  for (const auto& [y, r] : moved) {
    if (r != 1) ++c.gs_minus_s;  // (g(x), r) with r != 1 lies off S
    // (y, 1) is in gS only when y = g(x') for a regular x'; y = g(x) with x
    // singular, and g is injective, so (y, 1) is missing from gS.
    ++c.s_minus_gs;
  }
  return c;
}

std::size_t orbit_distance(const PLCircleHomeo& g) {
  const auto singular = sing(g);
  const Commensuration c = commensuration(g);
  if (c.s_minus_gs != singular.size() || c.gs_minus_s != singular.size()) {
    throw InternalError("one-sided differences of S and gS disagree with #Sing(g)");
  }
  // S \ g^{-1}S = Sing(g) x {1}, equivalently Sing(g^{-1}) = g(Sing(g)).
  std::vector<Rational> image;
  for (const auto& x : singular) image.push_back(g(x));
  std::sort(image.begin(), image.end());
  if (image != sing(g.inverse())) throw InternalError("Sing(g^-1) differs from g(Sing(g))");
  return 2 * singular.size();
}

std::string to_string(Growth g) { return g == Growth::Bounded ? "bounded" : "linear"; }

GrowthReport classify_growth(std::vector<std::size_t> s) {
  GrowthReport report;
  const std::size_t n_max = s.size();
  if (n_max < 8) throw InputError("growth classification needs at least 8 terms");
  const std::size_t quarter_start = n_max - n_max / 4;  // index of the first tail term
  const std::size_t half = (n_max + 1) / 2;           // ceil(n_max / 2)
  const bool constant_tail = std::all_of(s.begin() + static_cast<std::ptrdiff_t>(quarter_start), s.end(),
                                         [&](std::size_t v) { return v == s.back(); });
  const std::size_t head_max = *std::max_element(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(half));
  const std::size_t tail_max = *std::max_element(s.begin() + static_cast<std::ptrdiff_t>(quarter_start), s.end());
  if (constant_tail || tail_max <= head_max) {
    report.growth = Growth::Bounded;
  } else {
    report.growth = Growth::Linear;
    const Rational rise = Rational(static_cast<long>(s[n_max - 1])) - Rational(static_cast<long>(s[half - 1]));
    const Rational k = 2 * rise / Rational(static_cast<long>(n_max - half));
    // Round half away from zero.
    const Rational shifted = k >= 0 ? k + Rational(1, 2) : k - Rational(1, 2);
    BigInt rounded = k >= 0 ? floor_of(shifted) : -floor_of(-shifted);
    report.k = rounded.convert_to<long>();
  }
  report.sing_counts = std::move(s);
  return report;
}

GrowthReport growth_profile(const PLCircleHomeo& g, std::size_t n_max, const GrowthOptions& options) {
  if (n_max < 8) throw InputError("n_max must be at least 8");
  std::vector<std::size_t> counts;
  counts.reserve(n_max);
  PLCircleHomeo current = g;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1) current = compose(g, current);
    if (current.breakpoints().size() > options.max_breakpoints) {
      throw ResourceError("g^" + std::to_string(n) + " has more than " + std::to_string(options.max_breakpoints) +
                          " breakpoints");
    }
    for (const auto& v : current.values()) {
      if (msb_bits(v) > options.max_bits) {
        throw ResourceError("rational data of g^" + std::to_string(n) + " exceeds " +
                            std::to_string(options.max_bits) + " bits");
      }
    }
    counts.push_back(sing(current).size());
  }
  return classify_growth(std::move(counts));
}

}  // namespace medianforge
