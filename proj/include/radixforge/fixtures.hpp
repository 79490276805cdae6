#pragma once

#include "radixforge/schedule.hpp"

#include <functional>
#include <string>
#include <vector>

namespace radixforge::fixtures {

/// k=2 binary converter 00->10, 01->11, 10->00, 11->01.
BlockOp example_pair_op();
/// s=7 converter 0123456 -> 3564021.
BlockOp example_septenary_op();
/// Ternary converter swapping 1 and 2.
BlockOp ternary_swap_op();
/// Complement on odd positions, identity on even ones (k=1 blocks).
OperatorSchedule nega_binary_schedule();

struct Check {
  std::string name;
  std::function<bool()> run;
};

/// Every worked example of the source material, as self-checking cases.
std::vector<Check> paper_checks();

}  // namespace radixforge::fixtures
