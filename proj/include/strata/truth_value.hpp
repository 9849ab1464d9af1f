#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace strata {

using Level = std::uint32_t;

/// Level assigned to the middle value 0. Strictly above every finite level.
inline constexpr Level kInfiniteLevel = std::numeric_limits<Level>::max();

/// Default ceiling on finite levels. Negation increments levels, so anything
/// beyond this is treated as a runaway computation.
inline constexpr Level kDefaultLevelCap = Level{1} << 16;

class LevelOverflow : public std::runtime_error {
 public:
  explicit LevelOverflow(Level level)
      : std::runtime_error("truth value level " + std::to_string(level) +
                           " exceeds the configured cap") {}
};

enum class Polarity : std::uint8_t { F, Zero, T };

/// An element of the infinite-valued truth domain
///   F0 < F1 < F2 < ... < 0 < ... < T2 < T1 < T0.
class TruthValue {
 public:
  constexpr TruthValue() = default;

  static constexpr TruthValue f(Level level) { return {Polarity::F, level}; }
  static constexpr TruthValue t(Level level) { return {Polarity::T, level}; }
  static constexpr TruthValue zero() { return {Polarity::Zero, kInfiniteLevel}; }

  constexpr Polarity polarity() const { return polarity_; }
  /// Finite level for F/T values, kInfiniteLevel for 0.
  constexpr Level level() const { return level_; }

  constexpr bool is_false() const { return polarity_ == Polarity::F; }
  constexpr bool is_true() const { return polarity_ == Polarity::T; }
  constexpr bool is_zero() const { return polarity_ == Polarity::Zero; }

  friend constexpr bool operator==(TruthValue, TruthValue) = default;

  friend constexpr std::strong_ordering operator<=>(TruthValue a, TruthValue b) {
    if (a.polarity_ != b.polarity_) return a.polarity_ <=> b.polarity_;
    switch (a.polarity_) {
      case Polarity::F: return a.level_ <=> b.level_;
      case Polarity::T: return b.level_ <=> a.level_;
      case Polarity::Zero: break;
    }
    return std::strong_ordering::equal;
  }

 private:
  constexpr TruthValue(Polarity p, Level l) : polarity_(p), level_(l) {}

  Polarity polarity_ = Polarity::F;
  Level level_ = 0;
};

inline constexpr TruthValue kBottomValue = TruthValue::f(0);
inline constexpr TruthValue kTopValue = TruthValue::t(0);

/// Three-way comparison in the total order of truth values.
constexpr std::strong_ordering compare(TruthValue a, TruthValue b) { return a <=> b; }

/// Negation: F_a -> T_{a+1}, T_a -> F_{a+1}, 0 -> 0.
TruthValue negate(TruthValue v, Level cap = kDefaultLevelCap);

constexpr TruthValue join(TruthValue a, TruthValue b) { return a < b ? b : a; }
constexpr TruthValue meet(TruthValue a, TruthValue b) { return a < b ? a : b; }

/// a =_alpha b on a single coordinate: equal when either level is at most
/// alpha, otherwise both levels exceed alpha.
constexpr bool equivalent_at(TruthValue a, TruthValue b, Level alpha) {
  if (a.level() <= alpha || b.level() <= alpha) return a == b;
  return true;
}

/// a sqsubseteq_alpha b on a single coordinate.
constexpr bool below_at(TruthValue a, TruthValue b, Level alpha) {
  // Values below stratum alpha must agree exactly.
  if ((a.level() < alpha || b.level() < alpha) && a != b) return false;
  if (b == TruthValue::f(alpha) && a != b) return false;
  if (a == TruthValue::t(alpha) && a != b) return false;
  return true;
}

/// Least value equivalent to v at stratum alpha.
constexpr TruthValue restrict_value(TruthValue v, Level alpha) {
  return v.level() <= alpha ? v : TruthValue::f(alpha + 1);
}

/// `F0`, `T3`, `0`.
std::string to_string(TruthValue v);
/// Inverse of to_string; throws std::invalid_argument on malformed input.
TruthValue parse_truth_value(std::string_view text);

void to_json(nlohmann::json& j, const TruthValue& v);
void from_json(const nlohmann::json& j, TruthValue& v);

}  // namespace strata
