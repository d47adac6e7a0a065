#include "trace.hpp"

#include <stdexcept>

namespace rvt {

std::string_view verdict_name(StepVerdict v) {
  switch (v) {
    case StepVerdict::Continue:
      return "continue";
    case StepVerdict::Vertical:
      return "vertical";
    case StepVerdict::NotAPlane:
      return "not_a_plane";
    case StepVerdict::LineNotContained:
      return "line_not_contained";
    case StepVerdict::ReachedBase:
      return "reached_base";
  }
  return "?";
}

namespace {

struct DescentContext {
  std::span<const Letter> word;
  const std::vector<ChartLevel>& charts;
};

PlaneSlot slot_of_coordinate(const DescentContext& ctx, int level, CoordRef c) {
  if (c == ctx.charts[static_cast<std::size_t>(level - 1)].denominator)
    return PlaneSlot::V;
  if (c == CoordRef::fiber(level, FiberAxis::U)) return PlaneSlot::T1;
  if (c == CoordRef::fiber(level, FiberAxis::V)) return PlaneSlot::T2;
  throw std::logic_error("trace: coordinate is not in the level coframe");
}

// Decides the slot question at `level` for slot T1 or T2; `with_log` is
// false for the recursive occupancy queries.
TraceOutcome descend(const DescentContext& ctx, int start_level,
                     PlaneSlot slot, bool with_log) {
  TraceOutcome out;
  CoordRef c = CoordRef::fiber(
      start_level, slot == PlaneSlot::T1 ? FiberAxis::U : FiberAxis::V);
  int level = start_level;
  if (with_log) out.log.push_back({level, c, StepVerdict::Continue});

  auto close = [&](StepVerdict v) {
    if (with_log) out.log.back().verdict = v;
  };

  while (true) {
    const ChartLevel& chart = ctx.charts[static_cast<std::size_t>(level - 1)];
    if (c == chart.denominator) {
      // The candidate is the vertical plane at this level; every containment
      // along the way has already been checked during the descent.
      close(StepVerdict::Vertical);
      out.exists = true;
      out.birth = level;
      out.steps = start_level - level;
      return out;
    }

    const CoordRef numerator =
        c == CoordRef::fiber(level, FiberAxis::U) ? chart.numerator_x
                                                  : chart.numerator_y;
    if (level == 1) {
      // The numerator is a base coordinate; there are no critical planes in
      // the full tangent distribution of the base.
      close(StepVerdict::ReachedBase);
      out.reason = StepVerdict::ReachedBase;
      out.reason_level = 0;
      return out;
    }

    const PlaneSlot below = slot_of_coordinate(ctx, level - 1, numerator);
    const bool occupied =
        below == PlaneSlot::V ||
        descend(ctx, level - 1, below, /*with_log=*/false).exists;
    if (!occupied) {
      if (with_log)
        out.log.push_back({level - 1, numerator, StepVerdict::NotAPlane});
      out.reason = StepVerdict::NotAPlane;
      out.reason_level = level - 1;
      return out;
    }
    // The letter at `level` classifies the direction chosen one level below;
    // the plane passes through the new point only if that direction lies in
    // it.
    const Letter letter = ctx.word[static_cast<std::size_t>(level - 1)];
    if (!membership(letter).contains(below)) {
      if (with_log)
        out.log.push_back(
            {level - 1, numerator, StepVerdict::LineNotContained});
      out.reason = StepVerdict::LineNotContained;
      out.reason_level = level - 1;
      return out;
    }

    if (with_log)
      out.log.push_back({level - 1, numerator, StepVerdict::Continue});
    c = numerator;
    --level;
  }
}

}  // namespace

TraceOutcome trace(const ValidWord& word, PlaneSlot slot) {
  if (word.size() == 0)
    throw std::invalid_argument("trace: word must be nonempty");
  if (slot == PlaneSlot::V)
    throw std::invalid_argument("trace: slot must be T1 or T2");
  const TowerState tower = build_tower(word);
  DescentContext ctx{word.word().letters(), tower.charts()};
  return descend(ctx, static_cast<int>(word.size()), slot, /*with_log=*/true);
}

}  // namespace rvt
