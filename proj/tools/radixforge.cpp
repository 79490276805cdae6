// radixforge: command-line front-end for pseudo-s-adic numeral systems.
//
// Exit status: 0 on success, 1 on a domain error, 2 on a parse error.

#include "radixforge/analysis.hpp"
#include "radixforge/cylinders.hpp"
#include "radixforge/fixtures.hpp"
#include "radixforge/io.hpp"
#include "radixforge/representations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace rf = radixforge;
using nlohmann::json;

namespace {

// Malformed user input, as opposed to a domain violation.
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto parsed(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw ParseFailure(what + ": " + e.what());
  }
}

rf::Rational rational_arg(const std::string& text) {
  return parsed("malformed rational '" + text + "'", [&] { return rf::parse_rational(text); });
}

rf::DigitWord word_arg(const std::string& text) {
  return parsed("malformed word '" + text + "'", [&] { return rf::parse_word(text); });
}

rf::OperatorSchedule schedule_arg(const std::string& path) {
  return parsed("bad schedule file '" + path + "'", [&] { return rf::io::load_schedule(path); });
}

rf::SignPattern pattern_arg(const std::string& text) {
  return parsed("malformed sign pattern '" + text + "'",
                [&] { return rf::io::parse_sign_pattern(text); });
}

std::vector<rf::Digit> digits_arg(const std::string& text, int base) {
  return parsed("malformed digits '" + text + "'", [&] {
    if (text.empty()) return std::vector<rf::Digit>{};
    return rf::parse_word(std::to_string(base) + ":" + text + "(0)").pre();
  });
}

// "p0,p1;q0,q1" per position, optionally "pre(per)" over ';'-separated vectors.
rf::ProbabilityModel probability_arg(const std::string& text) {
  return parsed("malformed probabilities '" + text + "'", [&] {
    auto vectors = [](const std::string& part) {
      std::vector<std::vector<rf::Rational>> out;
      std::stringstream ss(part);
      std::string item;
      while (std::getline(ss, item, ';')) out.push_back(rf::io::parse_rational_list(item));
      return out;
    };
    const auto open = text.find('(');
    if (open == std::string::npos) {
      auto list = vectors(text);
      if (list.size() != 1) throw std::invalid_argument("use pre(per) for per-position vectors");
      return rf::ProbabilityModel(std::move(list.front()));
    }
    if (text.back() != ')') throw std::invalid_argument("expected pre(per)");
    rf::EventuallyPeriodic<std::vector<rf::Rational>> seq;
    if (open > 0) seq.pre = vectors(text.substr(0, open));
    seq.per = vectors(text.substr(open + 1, text.size() - open - 2));
    return rf::ProbabilityModel(std::move(seq));
  });
}

// s^rank must stay within 2^RADIXFORGE_MAX_RANK (default 20).
void check_enumeration(int base, std::size_t rank) {
  int cap = 20;
  if (const char* env = std::getenv("RADIXFORGE_MAX_RANK")) {
    try {
      cap = std::stoi(env);
    } catch (const std::exception&) {
      throw ParseFailure("RADIXFORGE_MAX_RANK must be an integer");
    }
  }
  if (rf::ipow(static_cast<std::uint64_t>(base), rank) > rf::ipow(2, static_cast<std::uint64_t>(cap))) {
    throw std::domain_error("rank " + std::to_string(rank) + " exceeds RADIXFORGE_MAX_RANK=" +
                            std::to_string(cap) + " for base " + std::to_string(base));
  }
}

struct Output {
  std::string format = "plain";
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::domain_error("cannot write output file '" + path + "'");
    out << text;
  }
  [[nodiscard]] bool json() const { return format == "json"; }
};

void add_output_flags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  cmd->add_option("--output,-o", out.path, "Write the result to a file");
}

std::string line(const std::string& s) { return s + "\n"; }
std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radixforge: exact pseudo-s-adic numeral systems"};
  app.require_subcommand(1);
  Output out;
  std::function<void()> action;

  std::string x_text, word_text, schedule_path, nb_text, digits_text, q_text, p_text;
  std::string interval_text, expand_text;
  int base = 0;
  std::size_t depth = 0, rank = 0, blocks = 0, grid = 16;
  bool inverse_flag = false, children_flag = false, image_flag = false, bounds_flag = false;
  bool fd_flag = false;

  auto* expand_cmd = app.add_subcommand("expand", "Canonical s-adic expansion of a rational");
  expand_cmd->add_option("--x", x_text, "Rational in [0,1]")->required();
  expand_cmd->add_option("--base,-s", base, "Base s >= 2")->required();
  add_output_flags(expand_cmd, out);
  expand_cmd->callback([&] {
    action = [&] {
      const auto word = rf::expand(rational_arg(x_text), base);
      out.emit(out.json() ? dump(rf::io::to_json(word)) : line(word.str()));
    };
  });

  auto* eval_cmd = app.add_subcommand("eval", "Exact value of a digit word");
  eval_cmd->add_option("--word,-w", word_text, "Word s:pre(per)")->required();
  add_output_flags(eval_cmd, out);
  eval_cmd->callback([&] {
    action = [&] {
      const auto value = rf::evaluate(word_arg(word_text));
      out.emit(out.json() ? dump({{"value", rf::to_string(value)},
                                  {"decimal", rf::to_decimal(value)}})
                          : line(rf::to_string(value)));
    };
  });

  auto* transform_cmd = app.add_subcommand("transform", "Pseudo-s-adic digits of a word");
  transform_cmd->add_option("--word,-w", word_text, "Word s:pre(per)")->required();
  transform_cmd->add_option("--schedule", schedule_path, "Schedule JSON file")->required();
  transform_cmd->add_flag("--inverse", inverse_flag, "Apply the inverse schedule");
  add_output_flags(transform_cmd, out);
  transform_cmd->callback([&] {
    action = [&] {
      const auto word = word_arg(word_text);
      const auto sch = schedule_arg(schedule_path);
      const auto result = inverse_flag ? rf::inverse_transform(word, sch) : rf::transform(word, sch);
      out.emit(out.json() ? dump(rf::io::to_json(result)) : line(result.str()));
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Images of both expansions of a point");
  classify_cmd->add_option("--x", x_text, "Rational in [0,1]")->required();
  classify_cmd->add_option("--schedule", schedule_path, "Schedule JSON file")->required();
  add_output_flags(classify_cmd, out);
  classify_cmd->callback([&] {
    action = [&] {
      const auto x = rational_arg(x_text);
      const auto c = rf::classify_point(x, schedule_arg(schedule_path));
      const json j = rf::io::to_json(c);
      if (out.json()) {
        out.emit(dump(j));
        return;
      }
      std::string text = "kind " + j["kind"].get<std::string>() + "\n";
      for (const auto& p : c.images) {
        text += "image " + p.word.str() + " = " + rf::to_string(p.value) +
                (p.pseudo_rational ? " (pseudo-rational)\n" : "\n");
      }
      text += std::string("equal ") + (c.equal ? "true" : "false") + "\n";
      out.emit(text);
    };
  });

  auto* cylinder_cmd = app.add_subcommand("cylinder", "Endpoints of a cylinder");
  cylinder_cmd->add_option("--digits,-d", digits_text, "Base digits, e.g. 002")->required();
  cylinder_cmd->add_option("--base,-s", base, "Base s (plain s-adic cylinder)");
  cylinder_cmd->add_option("--schedule", schedule_path, "Schedule JSON file (pseudo cylinder)");
  cylinder_cmd->add_flag("--children", children_flag, "List the children");
  cylinder_cmd->add_flag("--image", image_flag, "Map an s-adic cylinder through the schedule");
  add_output_flags(cylinder_cmd, out);
  cylinder_cmd->callback([&] {
    action = [&] {
      std::optional<rf::OperatorSchedule> sch;
      if (!schedule_path.empty()) sch = schedule_arg(schedule_path);
      const int s = sch ? sch->base() : base;
      if (s < 2) throw ParseFailure("cylinder needs --base or --schedule");
      const auto digits = digits_arg(digits_text, s);
      std::vector<rf::Cylinder> result;
      if (image_flag) {
        if (!sch) throw ParseFailure("--image needs --schedule");
        result.push_back(rf::image_of_cylinder(rf::cylinder_interval(digits, *sch), *sch));
      } else {
        result.push_back(sch ? rf::cylinder_interval(digits, *sch) : rf::cylinder_interval(digits, s));
      }
      if (children_flag) {
        result = sch ? rf::children(result.front(), *sch) : rf::children(result.front());
      }
      if (out.json()) {
        json arr = json::array();
        for (const auto& c : result) arr.push_back(rf::io::to_json(c));
        out.emit(dump(result.size() == 1 && !children_flag ? arr[0] : arr));
        return;
      }
      std::string text;
      for (const auto& c : result) {
        std::string d;
        for (std::size_t i = 0; i < c.digits.size(); ++i) {
          if (s > 10 && i > 0) d += ',';
          d += std::to_string(c.digits[i]);
        }
        text += "[" + d + "] [" + rf::to_string(c.lower) + ", " + rf::to_string(c.upper) +
                "] length " + rf::to_string(c.length()) + "\n";
      }
      out.emit(text);
    };
  });

  auto* image_cmd = app.add_subcommand("image", "Image of an interval under the pseudo map");
  image_cmd->add_option("--interval", interval_text, "a:b with rational endpoints")->required();
  image_cmd->add_option("--schedule", schedule_path, "Schedule JSON file")->required();
  image_cmd->add_option("--depth", depth, "Resolution depth (a block boundary)")
      ->required()
      ->check(CLI::PositiveNumber);
  add_output_flags(image_cmd, out);
  image_cmd->callback([&] {
    action = [&] {
      const auto colon = interval_text.find(':');
      if (colon == std::string::npos) throw ParseFailure("interval must be a:b");
      const auto a = rational_arg(interval_text.substr(0, colon));
      const auto b = rational_arg(interval_text.substr(colon + 1));
      const auto sch = schedule_arg(schedule_path);
      check_enumeration(sch.base(), depth);
      const auto image = rf::image_of_interval(a, b, sch, depth);
      if (out.json()) {
        out.emit(dump(rf::io::to_json(image)));
        return;
      }
      std::string text;
      for (const auto& [lo, hi] : image.intervals) {
        text += "interval [" + rf::to_string(lo) + ", " + rf::to_string(hi) + "]\n";
      }
      for (const auto& p : image.points) text += "point " + rf::to_string(p) + "\n";
      text += "measure " + rf::to_string(image.measure) + "\n";
      if (!image.exact) {
        text += "inexact inner " + rf::to_string(image.inner_measure) + " outer " +
                rf::to_string(image.outer_measure) + "\n";
      }
      out.emit(text);
    };
  });

  auto* adjacency_cmd = app.add_subcommand("adjacency", "Placement of rank-n pseudo cylinders");
  adjacency_cmd->add_option("--schedule", schedule_path, "Schedule JSON file")->required();
  adjacency_cmd->add_option("--rank", rank, "Rank n (a block boundary)")->required();
  add_output_flags(adjacency_cmd, out);
  adjacency_cmd->callback([&] {
    action = [&] {
      const auto sch = schedule_arg(schedule_path);
      check_enumeration(sch.base(), rank);
      const auto profile = rf::adjacency_profile(sch, rank);
      const std::string kind(rf::io::to_string(profile.arrangement));
      if (out.json()) {
        out.emit(dump({{"rank", profile.rank},
                       {"image_position", profile.image_position},
                       {"arrangement", kind}}));
        return;
      }
      std::string positions;
      for (const auto p : profile.image_position) {
        positions += (positions.empty() ? "" : ",") + std::to_string(p);
      }
      out.emit(line(kind + " " + positions));
    };
  });

  auto* continuity_cmd = app.add_subcommand("continuity", "Jump of the pseudo map at a point");
  continuity_cmd->add_option("--x", x_text, "Rational in [0,1]")->required();
  continuity_cmd->add_option("--schedule", schedule_path, "Schedule JSON file")->required();
  add_output_flags(continuity_cmd, out);
  continuity_cmd->callback([&] {
    action = [&] {
      const auto x = rational_arg(x_text);
      const auto report = rf::continuity_classify(x, schedule_arg(schedule_path));
      if (out.json()) {
        out.emit(dump({{"continuous", report.continuous},
                       {"jump", rf::to_string(report.jump)},
                       {"left_limit", rf::to_string(report.left_limit)},
                       {"right_limit", rf::to_string(report.right_limit)}}));
        return;
      }
      out.emit(report.continuous ? line("continuous")
                                 : line("jump " + rf::to_string(report.jump) + " (left " +
                                        rf::to_string(report.left_limit) + ", right " +
                                        rf::to_string(report.right_limit) + ")"));
    };
  });

  auto* monotonicity_cmd = app.add_subcommand("monotonicity", "Monotonicity class of the pseudo map");
  monotonicity_cmd->add_option("--schedule", schedule_path, "Schedule JSON file")->required();
  monotonicity_cmd->add_option("--rank", rank, "Scan depth (a block boundary)")->required();
  add_output_flags(monotonicity_cmd, out);
  monotonicity_cmd->callback([&] {
    action = [&] {
      const auto sch = schedule_arg(schedule_path);
      check_enumeration(sch.base(), rank);
      const auto report = rf::monotonicity_scan(sch, rank);
      const std::string kind(rf::io::to_string(report.kind));
      json witness = nullptr;
      std::string witness_text;
      if (report.witness) {
        witness = json::array();
        for (const auto& x : *report.witness) {
          witness.push_back(rf::to_string(x));
          witness_text += " " + rf::to_string(x);
        }
      }
      out.emit(out.json() ? dump({{"kind", kind}, {"witness", witness}})
                          : line(kind + (report.witness ? " witness" + witness_text : "")));
    };
  });

  auto* distance_cmd = app.add_subcommand("distance", "Search for a distance counterexample");
  distance_cmd->add_option("--schedule", schedule_path, "Schedule JSON file")->required();
  distance_cmd->add_option("--rank", rank, "Search depth (a block boundary)")->required();
  add_output_flags(distance_cmd, out);
  distance_cmd->callback([&] {
    action = [&] {
      const auto sch = schedule_arg(schedule_path);
      check_enumeration(sch.base(), rank);
      const auto pair = rf::distance_counterexample(sch, rank);
      if (out.json()) {
        out.emit(dump(pair ? json{rf::to_string(pair->first), rf::to_string(pair->second)}
                           : json(nullptr)));
        return;
      }
      out.emit(pair ? line(rf::to_string(pair->first) + " " + rf::to_string(pair->second))
                    : line("none"));
    };
  });

  auto* integral_cmd = app.add_subcommand("integral", "Partition sum of the Lebesgue integral");
  integral_cmd->add_option("--schedule", schedule_path, "Schedule JSON file")->required();
  integral_cmd->add_option("--blocks", blocks, "Number of blocks n")->required()->check(CLI::PositiveNumber);
  add_output_flags(integral_cmd, out);
  integral_cmd->callback([&] {
    action = [&] {
      const auto sch = schedule_arg(schedule_path);
      const std::size_t k = sch.block_start(blocks);
      check_enumeration(sch.base(), k);
      const auto value = rf::partition_integral(sch, blocks);
      out.emit(out.json() ? dump({{"rank", k},
                                  {"value", rf::to_string(value)},
                                  {"closed_form", rf::to_string(rf::partition_integral_closed_form(sch.base(), k))}})
                          : line(rf::to_string(value)));
    };
  });

  auto* dist_cmd = app.add_subcommand("dist", "F_eta or f_D on the grid j/N as CSV");
  dist_cmd->add_option("--p", p_text, "Probabilities p0,p1,... or pre(per) over ';'")->required();
  dist_cmd->add_option("--schedule", schedule_path, "Schedule JSON file");
  dist_cmd->add_flag("--fd", fd_flag, "Emit f_D = F_eta o f (needs --schedule)");
  dist_cmd->add_option("--grid", grid, "Grid size N")->check(CLI::PositiveNumber);
  add_output_flags(dist_cmd, out);
  dist_cmd->callback([&] {
    action = [&] {
      const auto p = probability_arg(p_text);
      std::optional<rf::OperatorSchedule> sch;
      if (!schedule_path.empty()) sch = schedule_arg(schedule_path);
      if (fd_flag && !sch) throw ParseFailure("--fd needs --schedule");
      std::string text = "x,value,x_decimal,value_decimal\n";
      json rows = json::array();
      for (std::size_t j = 0; j <= grid; ++j) {
        rf::Rational x(rf::BigInt(static_cast<unsigned long>(j)),
                       rf::BigInt(static_cast<unsigned long>(grid)));
        x.canonicalize();
        const rf::Rational y = fd_flag ? rf::salem_type(x, p, *sch)
                               : sch   ? rf::distribution_function(x, p, *sch)
                                       : rf::distribution_function(x, p);
        text += rf::to_string(x) + "," + rf::to_string(y) + "," + rf::to_decimal(x) + "," +
                rf::to_decimal(y) + "\n";
        rows.push_back({rf::to_string(x), rf::to_string(y)});
      }
      out.emit(out.json() ? dump(rows) : text);
    };
  });

  auto* nega_cmd = app.add_subcommand("nega", "Nega-s-adic value of a digit word");
  nega_cmd->add_option("--word,-w", word_text, "Word s:pre(per)")->required();
  add_output_flags(nega_cmd, out);
  nega_cmd->callback([&] {
    action = [&] {
      const auto value = rf::nega_value(word_arg(word_text));
      out.emit(out.json() ? dump({{"value", rf::to_string(value)}}) : line(rf::to_string(value)));
    };
  });

  auto* quasi_cmd = app.add_subcommand("quasinega", "Quasi-nega-s-adic value, bounds or expansion");
  quasi_cmd->add_option("--nb", nb_text, "Sign pattern over 0/1, e.g. (10)")->required();
  quasi_cmd->add_option("--word,-w", word_text, "Word s:pre(per)");
  quasi_cmd->add_option("--base,-s", base, "Base s for --bounds or --expand");
  quasi_cmd->add_flag("--bounds", bounds_flag, "Print [a'_0, a''_0]");
  quasi_cmd->add_option("--expand", expand_text, "Rational in [a'_0, a''_0] to expand");
  add_output_flags(quasi_cmd, out);
  quasi_cmd->callback([&] {
    action = [&] {
      const auto nb = pattern_arg(nb_text);
      if (bounds_flag || !expand_text.empty()) {
        if (base < 2) throw ParseFailure("--bounds and --expand need --base");
        if (bounds_flag) {
          const auto [lo, hi] = rf::quasi_bounds(base, nb);
          out.emit(out.json() ? dump({rf::to_string(lo), rf::to_string(hi)})
                              : line("[" + rf::to_string(lo) + ", " + rf::to_string(hi) + "]"));
        } else {
          const auto word = rf::quasi_nega_expand(rational_arg(expand_text), base, nb);
          out.emit(out.json() ? dump(rf::io::to_json(word)) : line(word.str()));
        }
        return;
      }
      if (word_text.empty()) throw ParseFailure("quasinega needs --word, --bounds or --expand");
      const auto value = rf::quasi_nega_value(word_arg(word_text), nb);
      out.emit(out.json() ? dump({{"value", rf::to_string(value)}}) : line(rf::to_string(value)));
    };
  });

  auto* cantor_cmd = app.add_subcommand("cantor", "Value of a (signed) Cantor series");
  cantor_cmd->add_option("--digits,-d", digits_text, "Digits pre(per), comma separated")->required();
  cantor_cmd->add_option("--q", q_text, "Bases q_n as pre(per), comma separated")->required();
  cantor_cmd->add_option("--nb", nb_text, "Optional sign pattern over 0/1");
  add_output_flags(cantor_cmd, out);
  cantor_cmd->callback([&] {
    action = [&] {
      const auto digits = parsed("malformed digits '" + digits_text + "'",
                                 [&] { return rf::io::parse_int_sequence(digits_text); });
      const auto qs = parsed("malformed bases '" + q_text + "'",
                             [&] { return rf::io::parse_int_sequence(q_text); });
      std::optional<rf::SignPattern> nb;
      if (!nb_text.empty()) nb = pattern_arg(nb_text);
      const auto value = rf::cantor_value(digits, qs, nb);
      out.emit(out.json() ? dump({{"value", rf::to_string(value)}}) : line(rf::to_string(value)));
    };
  });

  auto* fixtures_cmd = app.add_subcommand("paper-fixtures", "Run every pinned worked example");
  add_output_flags(fixtures_cmd, out);
  int fixture_status = 0;
  fixtures_cmd->callback([&] {
    action = [&] {
      std::string text;
      json results = json::array();
      for (const auto& check : rf::fixtures::paper_checks()) {
        bool ok = false;
        try {
          ok = check.run();
        } catch (const std::exception&) {
          ok = false;
        }
        if (!ok) fixture_status = 1;
        text += std::string(ok ? "PASS " : "FAIL ") + check.name + "\n";
        results.push_back({{"name", check.name}, {"pass", ok}});
      }
      out.emit(out.json() ? dump(results) : text);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    action();
  } catch (const ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return fixture_status;
}
