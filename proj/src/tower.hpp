#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "word.hpp"

namespace rvt {

// ---------------------------------------------------------------------------
// Coordinates and charts
//
// Kumpera-Ruiz coordinates on level k are (x, y, z, u_1, v_1, ..., u_k, v_k).
// Each level i >= 1 defines its fiber coordinates as covector quotients
//   u_i = dX/dD,  v_i = dY/dD
// where {D, X, Y} are exactly the three coframe coordinates of level i-1
// (for i = 1 these are x, y, z).  D is the uniformizing coordinate of the
// level; the distribution at level i is then coframed by [dD : du_i : dv_i].
// ---------------------------------------------------------------------------

enum class BaseAxis : std::uint8_t { X = 0, Y = 1, Z = 2 };
enum class FiberAxis : std::uint8_t { U = 0, V = 1 };

class CoordRef {
 public:
  static constexpr CoordRef base(BaseAxis axis) {
    return CoordRef{0, static_cast<std::uint8_t>(axis)};
  }
  static constexpr CoordRef fiber(int level, FiberAxis axis) {
    return CoordRef{level, static_cast<std::uint8_t>(axis)};
  }

  constexpr bool is_base() const { return level_ == 0; }
  constexpr int level() const { return level_; }
  constexpr BaseAxis base_axis() const { return static_cast<BaseAxis>(axis_); }
  constexpr FiberAxis fiber_axis() const {
    return static_cast<FiberAxis>(axis_);
  }

  std::string name() const;      // "x", "y", "z", "u3", "v2", ...
  std::string covector() const;  // "dx", "du3", ...

  friend constexpr bool operator==(CoordRef, CoordRef) = default;

 private:
  constexpr CoordRef(int level, std::uint8_t axis)
      : level_(level), axis_(axis) {}
  int level_;
  std::uint8_t axis_;
};

// One level of the canonical chart: u_i = dX/dD, v_i = dY/dD.
struct ChartLevel {
  int level;
  CoordRef denominator;  // the uniformizing coordinate of this level
  CoordRef numerator_x;
  CoordRef numerator_y;

  std::string u_definition() const;  // "u3 = du1/dv2"
  std::string v_definition() const;  // "v3 = du2/dv2"
};

// ---------------------------------------------------------------------------
// Critical-plane slots and ledgers
//
// At level i the distribution plane carries up to three critical planes,
// identified with the vanishing coframe entry:
//   V  <-> {dD = 0}   (the vertical plane; always present),
//   T1 <-> {du_i = 0},
//   T2 <-> {dv_i = 0}.
// An occupied slot holds the birth data of the Baby Monster realizing it:
// the plane is delta(birth, steps), the steps-fold prolongation of the
// vertical plane born at level `birth`, with birth + steps = i.
// ---------------------------------------------------------------------------

enum class PlaneSlot : std::uint8_t { V = 0, T1 = 1, T2 = 2 };

inline constexpr std::array<PlaneSlot, 3> kAllSlots{
    PlaneSlot::V, PlaneSlot::T1, PlaneSlot::T2};

std::string_view slot_name(PlaneSlot s);
std::optional<PlaneSlot> slot_from_name(std::string_view name);

class SlotSet {
 public:
  constexpr SlotSet() = default;
  constexpr SlotSet(std::initializer_list<PlaneSlot> slots) {
    for (PlaneSlot s : slots) insert(s);
  }
  constexpr void insert(PlaneSlot s) { bits_ |= mask(s); }
  constexpr bool contains(PlaneSlot s) const { return (bits_ & mask(s)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  friend constexpr bool operator==(SlotSet, SlotSet) = default;

 private:
  static constexpr std::uint8_t mask(PlaneSlot s) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s));
  }
  std::uint8_t bits_ = 0;
};

// Critical planes containing the direction chosen by a letter: the letter
// records exactly which planes (or their pairwise-intersection lines) the
// direction lies in.
SlotSet membership(Letter a);

struct PlaneRecord {
  PlaneSlot slot;
  int birth;  // level at which the Baby Monster was born
  int steps;  // prolongation count; the plane is delta(birth, steps)

  friend bool operator==(const PlaneRecord&, const PlaneRecord&) = default;
};

struct InadmissibleLetter {
  Letter letter;
  PlaneSlot missing_slot;
};

// ---------------------------------------------------------------------------
// Forward prolongation engine
// ---------------------------------------------------------------------------

class TowerState {
 public:
  using Ledger = std::array<std::optional<PlaneRecord>, 3>;  // by slot

  // Base dimension and distribution rank are fixed; every level adds one
  // projective-plane fiber, so dim M^level = kBaseDim + level * (kRank - 1).
  static constexpr int kBaseDim = 3;
  static constexpr int kRank = 3;
  static constexpr int dimension(int level) {
    return kBaseDim + level * (kRank - 1);
  }

  // Level-0 state: base coordinates only, no fibers, no critical planes.
  TowerState() = default;

  // Prolongs by one letter.  Admissible iff every plane the letter requires
  // is occupied at the current top level.
  std::variant<TowerState, InadmissibleLetter> extend(Letter a) const;

  int level() const { return static_cast<int>(charts_.size()); }
  const RvtWord& word() const { return word_; }
  const std::vector<ChartLevel>& charts() const { return charts_; }
  const ChartLevel& chart(int level) const { return charts_[level - 1]; }
  const Ledger& ledger(int level) const { return ledgers_[level - 1]; }

  const std::optional<PlaneRecord>& record(int level, PlaneSlot s) const {
    return ledgers_[level - 1][static_cast<std::size_t>(s)];
  }

  // Occupied slots at a level (empty set for level 0).
  SlotSet configuration_at(int level) const;

  // The three coframe coordinates of a level, in coframe order
  // [dD : du : dv]; level 0 yields (x, y, z).
  std::array<CoordRef, 3> coframe(int level) const;

 private:
  RvtWord word_;
  std::vector<ChartLevel> charts_;
  std::vector<Ledger> ledgers_;
};

// Builds the tower for an admissible word.  Cannot fail: admissibility of
// every letter along the way is exactly what validation guarantees.
TowerState build_tower(const ValidWord& word);

// ---------------------------------------------------------------------------
// Stratum queries
// ---------------------------------------------------------------------------

struct LevelReport {
  int level;
  Letter letter;
  std::string prefix;  // code of the projected point at this level
  ChartLevel chart;
  std::array<CoordRef, 3> fiber_coords;  // coframe of the level below
  SlotSet configuration;
  std::vector<PlaneRecord> planes;  // occupied slots, V then T1 then T2
};

// Per-level report for the whole word (one row per level).
std::vector<LevelReport> analyze(const ValidWord& word);

// Occupied slots at the top level; requires a nonempty word.
SlotSet configuration(const ValidWord& word);

// Letters that can extend the word, derived from the configuration: R and V
// always; T1/T2 when the plane is present; a line when both of its defining
// planes are present (distinct planes of the distribution meet in a line).
LetterSet derived_successors(const ValidWord& word);

// Ledger record in the given slot at the top level, or nullopt when absent.
std::optional<PlaneRecord> birth_data(const ValidWord& word, PlaneSlot s);

}  // namespace rvt
