#include "tower.hpp"

#include <stdexcept>

namespace rvt {

std::string CoordRef::name() const {
  if (is_base()) {
    switch (base_axis()) {
      case BaseAxis::X:
        return "x";
      case BaseAxis::Y:
        return "y";
      case BaseAxis::Z:
        return "z";
    }
  }
  std::string out = fiber_axis() == FiberAxis::U ? "u" : "v";
  out += std::to_string(level_);
  return out;
}

std::string CoordRef::covector() const { return "d" + name(); }

std::string ChartLevel::u_definition() const {
  return "u" + std::to_string(level) + " = " + numerator_x.covector() + "/" +
         denominator.covector();
}

std::string ChartLevel::v_definition() const {
  return "v" + std::to_string(level) + " = " + numerator_y.covector() + "/" +
         denominator.covector();
}

std::string_view slot_name(PlaneSlot s) {
  switch (s) {
    case PlaneSlot::V:
      return "V";
    case PlaneSlot::T1:
      return "T1";
    case PlaneSlot::T2:
      return "T2";
  }
  return "?";
}

std::optional<PlaneSlot> slot_from_name(std::string_view name) {
  auto upper = [](char c) {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
  };
  if (name.size() == 1 && upper(name[0]) == 'V') return PlaneSlot::V;
  if (name.size() == 2 && upper(name[0]) == 'T') {
    if (name[1] == '1') return PlaneSlot::T1;
    if (name[1] == '2') return PlaneSlot::T2;
  }
  return std::nullopt;
}

SlotSet membership(Letter a) {
  switch (a) {
    case Letter::R:
      return {};
    case Letter::V:
      return {PlaneSlot::V};
    case Letter::T1:
      return {PlaneSlot::T1};
    case Letter::T2:
      return {PlaneSlot::T2};
    case Letter::L1:
      return {PlaneSlot::V, PlaneSlot::T1};
    case Letter::L2:
      return {PlaneSlot::T1, PlaneSlot::T2};
    case Letter::L3:
      return {PlaneSlot::V, PlaneSlot::T2};
  }
  return {};
}

std::array<CoordRef, 3> TowerState::coframe(int level) const {
  if (level == 0)
    return {CoordRef::base(BaseAxis::X), CoordRef::base(BaseAxis::Y),
            CoordRef::base(BaseAxis::Z)};
  return {chart(level).denominator, CoordRef::fiber(level, FiberAxis::U),
          CoordRef::fiber(level, FiberAxis::V)};
}

SlotSet TowerState::configuration_at(int level) const {
  SlotSet out;
  if (level == 0) return out;
  for (PlaneSlot s : kAllSlots)
    if (record(level, s)) out.insert(s);
  return out;
}

std::variant<TowerState, InadmissibleLetter> TowerState::extend(
    Letter a) const {
  const int top = level();
  const SlotSet required = membership(a);
  const SlotSet occupied = configuration_at(top);
  for (PlaneSlot s : kAllSlots)
    if (required.contains(s) && !occupied.contains(s))
      return InadmissibleLetter{a, s};

  const int k = top + 1;
  const std::array<CoordRef, 3> frame = coframe(top);

  // The letter forces the coframe entries of its planes to vanish on the
  // chosen direction; the new uniformizing coordinate is the leftmost entry
  // not forced to vanish, and the numerators keep coframe order.
  const std::array<bool, 3> vanishes{required.contains(PlaneSlot::V),
                                     required.contains(PlaneSlot::T1),
                                     required.contains(PlaneSlot::T2)};
  int denom = -1;
  for (int i = 0; i < 3 && denom < 0; ++i)
    if (!vanishes[i]) denom = i;
  if (denom < 0) throw std::logic_error("extend: no nonvanishing coframe entry");

  std::array<CoordRef, 2> numerators{frame[0], frame[0]};
  int n = 0;
  for (int i = 0; i < 3; ++i)
    if (i != denom) numerators[n++] = frame[i];
  ChartLevel chart{k, frame[denom], numerators[0], numerators[1]};

  Ledger next{};
  next[static_cast<std::size_t>(PlaneSlot::V)] = PlaneRecord{PlaneSlot::V, k, 0};
  if (top >= 1) {
    for (PlaneSlot s : kAllSlots) {
      const auto& rec = record(top, s);
      if (!rec || !required.contains(s)) continue;
      // The surviving plane's vanishing coordinate is its coframe entry; it
      // cannot be the new denominator, so it lands on a numerator slot.
      const CoordRef vanishing = frame[static_cast<std::size_t>(s)];
      PlaneSlot target;
      if (vanishing == chart.numerator_x)
        target = PlaneSlot::T1;
      else if (vanishing == chart.numerator_y)
        target = PlaneSlot::T2;
      else
        throw std::logic_error("extend: surviving plane lost its coordinate");
      auto& cell = next[static_cast<std::size_t>(target)];
      if (cell) throw std::logic_error("extend: slot collision");
      cell = PlaneRecord{target, rec->birth, rec->steps + 1};
    }
  }

  TowerState out = *this;
  out.word_.push_back(a);
  out.charts_.push_back(chart);
  out.ledgers_.push_back(next);
  return out;
}

TowerState build_tower(const ValidWord& word) {
  TowerState state;
  for (Letter a : word.word()) {
    auto next = state.extend(a);
    if (std::holds_alternative<InadmissibleLetter>(next))
      throw std::logic_error(
          "build_tower: admissible word rejected by prolongation");
    state = std::move(std::get<TowerState>(next));
  }
  return state;
}

std::vector<LevelReport> analyze(const ValidWord& word) {
  const TowerState tower = build_tower(word);
  std::vector<LevelReport> rows;
  rows.reserve(word.size());
  std::string prefix;
  for (int i = 1; i <= tower.level(); ++i) {
    Letter letter = word.word()[static_cast<std::size_t>(i - 1)];
    prefix += letter_name(letter);
    LevelReport row{i,
                    letter,
                    prefix,
                    tower.chart(i),
                    tower.coframe(i - 1),
                    tower.configuration_at(i),
                    {}};
    for (PlaneSlot s : kAllSlots)
      if (const auto& rec = tower.record(i, s)) row.planes.push_back(*rec);
    rows.push_back(std::move(row));
  }
  return rows;
}

SlotSet configuration(const ValidWord& word) {
  if (word.size() == 0)
    throw std::invalid_argument("configuration: word must be nonempty");
  const TowerState tower = build_tower(word);
  return tower.configuration_at(tower.level());
}

LetterSet derived_successors(const ValidWord& word) {
  // A letter is admissible exactly when every plane it requires is present;
  // a line requires both of its defining planes.  Over a nonempty word this
  // reduces to: R and V always, T1/L1 with T1, T2/L3 with T2, L2 with both.
  // Over the empty word no planes exist and only R remains.
  const TowerState tower = build_tower(word);
  const SlotSet present = tower.configuration_at(tower.level());
  LetterSet out;
  for (Letter a : kAllLetters) {
    const SlotSet required = membership(a);
    bool admissible = true;
    for (PlaneSlot s : kAllSlots)
      if (required.contains(s) && !present.contains(s)) admissible = false;
    if (admissible) out.insert(a);
  }
  return out;
}

std::optional<PlaneRecord> birth_data(const ValidWord& word, PlaneSlot s) {
  if (word.size() == 0) return std::nullopt;
  const TowerState tower = build_tower(word);
  return tower.record(tower.level(), s);
}

}  // namespace rvt
