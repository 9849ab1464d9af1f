#include "strata/truth_value.hpp"

#include <charconv>

namespace strata {

TruthValue negate(TruthValue v, Level cap) {
  if (v.is_zero()) return v;
  const Level next = v.level() + 1;
  if (next > cap || next == kInfiniteLevel) throw LevelOverflow(next);
  return v.is_false() ? TruthValue::t(next) : TruthValue::f(next);
}

std::string to_string(TruthValue v) {
  switch (v.polarity()) {
    case Polarity::F: return "F" + std::to_string(v.level());
    case Polarity::T: return "T" + std::to_string(v.level());
    case Polarity::Zero: break;
  }
  return "0";
}

TruthValue parse_truth_value(std::string_view text) {
  if (text == "0") return TruthValue::zero();
  if (text.size() < 2 || (text[0] != 'F' && text[0] != 'T')) {
    throw std::invalid_argument("malformed truth value '" + std::string(text) + "'");
  }
  Level level = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, level);
  if (ec != std::errc{} || ptr != last || level == kInfiniteLevel) {
    throw std::invalid_argument("malformed truth value '" + std::string(text) + "'");
  }
  return text[0] == 'F' ? TruthValue::f(level) : TruthValue::t(level);
}

void to_json(nlohmann::json& j, const TruthValue& v) {
  switch (v.polarity()) {
    case Polarity::F: j = {{"polarity", "F"}, {"level", v.level()}}; return;
    case Polarity::T: j = {{"polarity", "T"}, {"level", v.level()}}; return;
    case Polarity::Zero: j = {{"polarity", "0"}}; return;
  }
}

void from_json(const nlohmann::json& j, TruthValue& v) {
  const auto polarity = j.at("polarity").get<std::string>();
  if (polarity == "0") {
    v = TruthValue::zero();
  } else if (polarity == "F") {
    v = TruthValue::f(j.at("level").get<Level>());
  } else if (polarity == "T") {
    v = TruthValue::t(j.at("level").get<Level>());
  } else {
    throw std::invalid_argument("unknown polarity '" + polarity + "'");
  }
}

}  // namespace strata
