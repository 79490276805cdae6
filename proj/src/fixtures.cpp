#include "radixforge/fixtures.hpp"

#include "radixforge/analysis.hpp"
#include "radixforge/cylinders.hpp"
#include "radixforge/representations.hpp"

namespace radixforge::fixtures {

namespace {

Rational q(const char* text) { return parse_rational(text); }

}  // namespace

BlockOp example_pair_op() { return BlockOp::from_table(2, 2, {2, 3, 0, 1}); }

BlockOp example_septenary_op() { return BlockOp::from_table(7, 1, {3, 5, 6, 4, 0, 2, 1}); }

BlockOp ternary_swap_op() { return BlockOp::from_index(3, 1, 1); }

OperatorSchedule nega_binary_schedule() {
  return OperatorSchedule(2, {}, {BlockOp::complement(2, 1), BlockOp::identity(2, 1)});
}

std::vector<Check> paper_checks() {
  std::vector<Check> checks;
  auto add = [&](std::string name, std::function<bool()> run) {
    checks.push_back({std::move(name), std::move(run)});
  };

  add("ternary operator table theta_{1,0..5}", [] {
    const std::vector<std::vector<TupleRank>> rows{{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int i = 0; i < 6; ++i) {
      if (BlockOp::from_index(3, 1, i).table() != rows[static_cast<std::size_t>(i)]) return false;
    }
    return true;
  });
  add("identity and complement anchors", [] {
    for (const auto& [s, k] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {7, 1}}) {
      const std::size_t n = BlockOp::identity(s, k).size();
      if (!BlockOp::from_index(s, k, 0).is_identity()) return false;
      if (!BlockOp::from_index(s, k, factorial(n) - 1).is_complement()) return false;
    }
    return true;
  });
  add("pair converter maps 11 to 01", [] {
    return example_pair_op().apply({1, 1}) == std::vector<Digit>{0, 1};
  });
  add("pair converter: 2:1110011001(11) -> 2:0100110011(01)", [] {
    return transform(parse_word("2:1110011001(11)"),
                     OperatorSchedule::constant(example_pair_op()))
               .str() == "2:0100110011(01)";
  });
  add("septenary converter maps 1 to 5", [] {
    return example_septenary_op().apply({1}) == std::vector<Digit>{5};
  });
  add("septenary converter: 7:3455142(1) -> 7:4022506(5)", [] {
    return transform(parse_word("7:3455142(1)"),
                     OperatorSchedule::constant(example_septenary_op()))
               .str() == "7:4022506(5)";
  });
  add("septenary converter has order 12 with cycles {0,3,4} and {1,2,5,6}", [] {
    const BlockOp op = example_septenary_op();
    const BlockOp cube = power(op, 3);
    const BlockOp fourth = power(op, 4);
    for (const TupleRank a : {0U, 3U, 4U}) {
      if (cube(a) != a || op(a) == a) return false;
    }
    for (const TupleRank a : {1U, 2U, 5U, 6U}) {
      if (fourth(a) != a || power(op, 2)(a) == a) return false;
    }
    return op_order(op) == 12;
  });
  add("2/27 = 3:002(0) = 3:001(2)", [] {
    const DigitWord w = expand(q("2/27"), 3);
    const auto dual = dual_form(w);
    return w.str() == "3:002(0)" && dual && dual->str() == "3:001(2)" &&
           evaluate(*dual) == q("2/27");
  });
  add("binary rational 1/2 = 2:1(0) = 2:0(1)", [] {
    const auto dual = dual_form(parse_word("2:1(0)"));
    return dual && dual->str() == "2:0(1)";
  });
  add("ternary swap is an involution", [] {
    const BlockOp op = ternary_swap_op();
    return compose(op, op).is_identity();
  });
  add("distance lemma: |f(4/9) - f(1/3)| = 2/9 != 1/9", [] {
    const auto sch = OperatorSchedule::constant(ternary_swap_op());
    const Rational y1 = pseudo_value(q("1/3"), sch);
    const Rational y2 = pseudo_value(q("4/9"), sch);
    return y1 == q("2/3") && y2 == q("8/9") && y2 - y1 == q("2/9") &&
           q("4/9") - q("1/3") == q("1/9");
  });
  add("cylinder 3:002 has length 1/27", [] {
    const Cylinder c = cylinder_interval({0, 0, 2}, 3);
    return c.lower == q("2/27") && c.upper == q("1/9") && c.length() == q("1/27");
  });
  add("f(cylinder 002) = 001 and f(cylinder 010) = 020", [] {
    const auto sch = OperatorSchedule::constant(ternary_swap_op());
    return image_of_cylinder(cylinder_interval({0, 0, 2}, 3), sch).digits ==
               std::vector<Digit>{0, 0, 1} &&
           image_of_cylinder(cylinder_interval({0, 1, 0}, 3), sch).digits ==
               std::vector<Digit>{0, 2, 0};
  });
  add("f([2/27, 4/27]) = [1/27,2/27] u [6/27,7/27] u {5/54, 8/27}", [] {
    const ImageSet image = image_of_interval(q("2/27"), q("4/27"),
                                             OperatorSchedule::constant(ternary_swap_op()), 3);
    const std::vector<std::pair<Rational, Rational>> intervals{{q("1/27"), q("2/27")},
                                                               {q("6/27"), q("7/27")}};
    return image.exact && image.intervals == intervals &&
           image.points == std::vector<Rational>{q("5/54"), q("8/27")} &&
           image.measure == q("2/27");
  });
  add("nega-binary range [-2/3, 1/3]", [] {
    const auto [lo, hi] = quasi_bounds(2, odd_positions());
    return lo == q("-2/3") && hi == q("1/3") && nega_value(parse_word("2:(10)")) == q("-2/3") &&
           nega_value(parse_word("2:(01)")) == q("1/3");
  });
  add("pseudo-binary rank-2 cylinders have length 1/4", [] {
    const auto sch = OperatorSchedule::constant(example_pair_op());
    const auto kids = children(cylinder_interval({}, sch), sch);
    if (kids.size() != 4) return false;
    for (const Cylinder& c : kids) {
      if (c.length() != q("1/4")) return false;
    }
    return true;
  });
  add("identity cylinders are left-to-right situated", [] {
    const auto sch = OperatorSchedule::identity(3);
    for (std::size_t n = 1; n <= 4; ++n) {
      if (adjacency_profile(sch, n).arrangement != Arrangement::LeftToRight) return false;
    }
    return true;
  });
  add("nega-binary rank-1 cylinders are right-to-left situated", [] {
    return adjacency_profile(nega_binary_schedule(), 1).arrangement == Arrangement::RightToLeft;
  });
  add("f = x is strictly increasing and f = 1-x strictly decreasing", [] {
    return monotonicity_scan(OperatorSchedule::identity(2, 2), 4).kind ==
               Monotonicity::StrictlyIncreasing &&
           monotonicity_scan(OperatorSchedule::complement(2, 2), 4).kind ==
               Monotonicity::StrictlyDecreasing;
  });
  add("f = 1-x preserves distances", [] {
    return !distance_counterexample(OperatorSchedule::complement(2, 1), 6);
  });
  add("integral partition sum at K=1 is 1/4 and at K=3 is 7/16", [] {
    const auto sch = OperatorSchedule::constant(BlockOp::complement(2, 1));
    return partition_integral(sch, 1) == q("1/4") && partition_integral(sch, 3) == q("7/16");
  });
  return checks;
}

}  // namespace radixforge::fixtures
