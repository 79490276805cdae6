#include "radixforge/io.hpp"

#include <fstream>
#include <stdexcept>

namespace radixforge::io {

namespace {

std::vector<Digit> digits_from_json(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array()) {
    throw std::invalid_argument(std::string("missing digit array '") + field + "'");
  }
  std::vector<Digit> out;
  for (const auto& d : j.at(field)) {
    if (!d.is_number_integer()) throw std::invalid_argument("digits must be integers");
    out.push_back(d.get<Digit>());
  }
  return out;
}

int int_field(const json& j, const char* field, int fallback) {
  if (j.contains(field)) {
    if (!j.at(field).is_number_integer()) {
      throw std::invalid_argument(std::string("field '") + field + "' must be an integer");
    }
    return j.at(field).get<int>();
  }
  if (fallback > 0) return fallback;
  throw std::invalid_argument(std::string("missing field '") + field + "'");
}

std::vector<BlockOp> ops_from_json(const json& j, const char* field, int base) {
  std::vector<BlockOp> out;
  if (!j.contains(field)) return out;
  if (!j.at(field).is_array()) {
    throw std::invalid_argument(std::string("schedule field '") + field + "' must be an array");
  }
  for (const auto& op : j.at(field)) out.push_back(op_from_json(op, base));
  return out;
}

json ops_to_json(const std::vector<BlockOp>& ops) {
  json out = json::array();
  for (const BlockOp& op : ops) out.push_back(to_json(op));
  return out;
}

json image_point_json(const ImagePoint& point) {
  return json{{"word", point.word.str()},
              {"value", radixforge::to_string(point.value)},
              {"pseudo_rational", point.pseudo_rational}};
}

}  // namespace

json to_json(const DigitWord& word) {
  return json{{"s", word.base()}, {"pre", word.pre()}, {"per", word.per()}};
}

DigitWord word_from_json(const json& j) {
  return DigitWord(int_field(j, "s", 0), digits_from_json(j, "pre"), digits_from_json(j, "per"));
}

json to_json(const BlockOp& op) {
  return json{{"s", op.base()}, {"k", op.length()}, {"index", radixforge::to_string(op.index())}};
}

BlockOp op_from_json(const json& j, int default_base) {
  if (!j.is_object()) throw std::invalid_argument("operator must be a JSON object");
  const int base = int_field(j, "s", default_base);
  const int length = int_field(j, "k", 0);
  if (j.contains("index")) {
    const auto& idx = j.at("index");
    std::string text;
    if (idx.is_string()) {
      text = idx.get<std::string>();
    } else if (idx.is_number_unsigned() || idx.is_number_integer()) {
      text = idx.dump();
    } else {
      throw std::invalid_argument("operator index must be a decimal string");
    }
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("malformed operator index '" + text + "'");
    }
    return BlockOp::from_index(base, length, BigInt(text, 10));
  }
  if (j.contains("table")) {
    std::vector<TupleRank> table;
    for (const auto& tuple : j.at("table")) {
      std::vector<Digit> digits;
      if (tuple.is_array()) {
        for (const auto& d : tuple) digits.push_back(d.get<Digit>());
      } else {
        digits.push_back(tuple.get<Digit>());
      }
      if (digits.size() != static_cast<std::size_t>(length)) {
        throw std::invalid_argument("operator table entries must have k digits");
      }
      table.push_back(tuple_rank(digits, base));
    }
    return BlockOp::from_table(base, length, std::move(table));
  }
  throw std::invalid_argument("operator needs an 'index' or a 'table'");
}

json to_json(const OperatorSchedule& schedule) {
  return json{{"s", schedule.base()},
              {"pre", ops_to_json(schedule.pre())},
              {"per", ops_to_json(schedule.per())}};
}

OperatorSchedule schedule_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("schedule must be a JSON object");
  const int base = int_field(j, "s", 0);
  return OperatorSchedule(base, ops_from_json(j, "pre", base), ops_from_json(j, "per", base));
}

OperatorSchedule load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open schedule file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("schedule file '" + path + "' is not valid JSON: " + e.what());
  }
  return schedule_from_json(j);
}

json to_json(const ImageSet& image) {
  json intervals = json::array();
  for (const auto& [lo, hi] : image.intervals) {
    intervals.push_back({radixforge::to_string(lo), radixforge::to_string(hi)});
  }
  json points = json::array();
  for (const Rational& p : image.points) points.push_back(radixforge::to_string(p));
  json out{{"intervals", intervals},
           {"points", points},
           {"measure", radixforge::to_string(image.measure)}};
  if (!image.exact) {
    out["exact"] = false;
    out["inner_measure"] = radixforge::to_string(image.inner_measure);
    out["outer_measure"] = radixforge::to_string(image.outer_measure);
  }
  return out;
}

json to_json(const PointClassification& c) {
  json images = json::array();
  json details = json::array();
  for (const ImagePoint& p : c.images) {
    images.push_back(p.word.str());
    details.push_back(image_point_json(p));
  }
  json preimages = json::array();
  for (const DigitWord& w : c.preimages) preimages.push_back(w.str());
  return json{{"kind", c.kind == PointKind::SAdicRational ? "s-rational" : "s-irrational"},
              {"preimages", preimages},
              {"images", images},
              {"values", [&] {
                 json v = json::array();
                 for (const ImagePoint& p : c.images) v.push_back(radixforge::to_string(p.value));
                 return v;
               }()},
              {"pseudo_rational", [&] {
                 json v = json::array();
                 for (const ImagePoint& p : c.images) v.push_back(p.pseudo_rational);
                 return v;
               }()},
              {"equal", c.equal}};
}

json to_json(const Cylinder& c) {
  json digits = json::array();
  for (const Digit d : c.digits) digits.push_back(d);
  return json{{"s", c.base},
              {"digits", digits},
              {"rank", c.rank()},
              {"interval", {radixforge::to_string(c.lower), radixforge::to_string(c.upper)}},
              {"length", radixforge::to_string(c.length())}};
}

SignPattern parse_sign_pattern(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw std::invalid_argument("malformed sign pattern '" + std::string(text) +
                                "': expected pre(per) over 0/1");
  }
  SignPattern pattern;
  auto fill = [&](std::string_view part, std::vector<bool>& out) {
    for (const char c : part) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("malformed sign pattern '" + std::string(text) + "'");
      }
      out.push_back(c == '1');
    }
  };
  fill(text.substr(0, open), pattern.pre);
  fill(text.substr(open + 1, text.size() - open - 2), pattern.per);
  if (pattern.per.empty()) throw std::invalid_argument("sign pattern period must be nonempty");
  return pattern;
}

std::string to_string(const SignPattern& pattern) {
  std::string out;
  for (const bool b : pattern.pre) out += b ? '1' : '0';
  out += '(';
  for (const bool b : pattern.per) out += b ? '1' : '0';
  out += ')';
  return out;
}

EventuallyPeriodic<int> parse_int_sequence(std::string_view text) {
  auto parse_list = [&](std::string_view part) {
    std::vector<int> out;
    if (part.empty()) return out;
    std::size_t start = 0;
    while (true) {
      const auto comma = part.find(',', start);
      const auto item = part.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                           : comma - start);
      if (item.empty() || item.size() > 9 ||
          item.find_first_not_of("0123456789") != std::string_view::npos) {
        throw std::invalid_argument("malformed integer sequence '" + std::string(text) + "'");
      }
      out.push_back(std::stoi(std::string(item)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw std::invalid_argument("malformed integer sequence '" + std::string(text) +
                                "': expected pre(per)");
  }
  EventuallyPeriodic<int> seq{parse_list(text.substr(0, open)),
                              parse_list(text.substr(open + 1, text.size() - open - 2))};
  if (seq.per.empty()) throw std::invalid_argument("sequence period must be nonempty");
  return seq;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view to_string(Monotonicity kind) {
  switch (kind) {
    case Monotonicity::StrictlyIncreasing: return "strictly-increasing";
    case Monotonicity::StrictlyDecreasing: return "strictly-decreasing";
    case Monotonicity::PiecewiseMonotone: return "piecewise-monotone";
    case Monotonicity::NonMonotone: return "non-monotone";
  }
  return "unknown";
}

std::string_view to_string(Arrangement arrangement) {
  switch (arrangement) {
    case Arrangement::LeftToRight: return "left-to-right";
    case Arrangement::RightToLeft: return "right-to-left";
    case Arrangement::Mixed: return "mixed";
  }
  return "unknown";
}

}  // namespace radixforge::io
