#pragma once

#include <string_view>
#include <vector>

#include "tower.hpp"

namespace rvt {

enum class StepVerdict {
  Continue,          // covector translated one level down
  Vertical,          // covector is the uniformizing entry: Baby Monster found
  NotAPlane,         // translated covector names an unoccupied slot
  LineNotContained,  // the chosen direction does not lie in the plane
  ReachedBase        // descent ran out of levels without finding a vertical
};

std::string_view verdict_name(StepVerdict v);

// One step of the backward descent: at `level`, the coframe entry
// d(covector) is identically zero on the candidate plane.
struct DescentStep {
  int level;
  CoordRef covector;
  StepVerdict verdict;
};

struct TraceOutcome {
  bool exists = false;
  // When exists: the plane is delta(birth, steps) with birth + steps = k.
  int birth = 0;
  int steps = 0;
  // When absent: the terminal verdict and the level it occurred at
  // (0 for ReachedBase).
  StepVerdict reason = StepVerdict::ReachedBase;
  int reason_level = 0;
  std::vector<DescentStep> log;
};

// Backward critical-hyperplane method, independent of the forward ledger:
// starting from the slot's vanishing covector at the top level, rewrite it
// one level down at a time (a fiber coordinate quotient vanishes iff its
// numerator covector vanishes below) until the covector is a uniformizing
// entry (a vertical plane: the Baby Monster is found) or a contradiction is
// reached.  Slot occupancy at intermediate levels is decided by recursive
// traces of the corresponding prefixes, not by the forward engine.
//
// Requires a nonempty word and slot T1 or T2.
TraceOutcome trace(const ValidWord& word, PlaneSlot slot);

}  // namespace rvt
