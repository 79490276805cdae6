#pragma once

#include "radixforge/analysis.hpp"
#include "radixforge/cylinders.hpp"
#include "radixforge/representations.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace radixforge::io {

using nlohmann::json;

/// {"s":3,"pre":[0,0,2],"per":[0]}
json to_json(const DigitWord& word);
DigitWord word_from_json(const json& j);

/// {"s":2,"k":2,"index":"5"}; the index is a decimal string so it survives
/// arbitrary precision.
json to_json(const BlockOp& op);
/// Accepts {"s","k","index"} or {"s","k","table":[[digits],...]}. A missing
/// "s" falls back to `default_base` when positive.
BlockOp op_from_json(const json& j, int default_base = 0);

/// {"s":2,"pre":[op...],"per":[op...]}
json to_json(const OperatorSchedule& schedule);
OperatorSchedule schedule_from_json(const json& j);
OperatorSchedule load_schedule(const std::string& path);

/// {"intervals":[["1/27","2/27"],...],"points":[...],"measure":"2/27"}; the
/// inexact case adds "exact":false with inner and outer measures.
json to_json(const ImageSet& image);

/// {"kind":"s-rational","images":[word,word],"equal":true,...}
json to_json(const PointClassification& classification);

json to_json(const Cylinder& cylinder);

/// Membership pattern in the word text form without base, e.g. "(10)" for odd
/// positions or "1(0)" for the first position only.
SignPattern parse_sign_pattern(std::string_view text);
std::string to_string(const SignPattern& pattern);

/// Comma-separated integers with an optional parenthesized period:
/// "1,2(0)" or "(2,3)".
EventuallyPeriodic<int> parse_int_sequence(std::string_view text);

/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(std::string_view text);

std::string_view to_string(Monotonicity kind);
std::string_view to_string(Arrangement arrangement);

}  // namespace radixforge::io
