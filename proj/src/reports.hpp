#pragma once

#include <string>

#include "json.hpp"
#include "enumeration.hpp"
#include "tower.hpp"
#include "trace.hpp"

namespace rvt::reports {

// "delta(birth, steps)" -- the text form of a plane's birth data.
std::string delta_string(const PlaneRecord& record);

// "[du1 : du2 : dv2]" -- homogeneous fiber coordinates from a coframe.
std::string coframe_string(const std::array<CoordRef, 3>& coords);

// Space separated canonical letters, e.g. "R V T2 L3".
std::string letters_line(LetterSet letters);

// Per-level analysis of an admissible word.
nlohmann::json analysis_json(const ValidWord& word);
std::string analysis_text(const ValidWord& word);

// Backward descent log and outcome for slot T1 or T2.
nlohmann::json trace_json(const ValidWord& word, PlaneSlot slot);
std::string trace_text(const ValidWord& word, PlaneSlot slot);

// Enumeration cross-check, one line per level.
std::string verify_text(const VerifyReport& report);

// Markdown tables computed from the engines: the spelling rules, the
// critical-plane configurations by last letter, and the birth-data formulas
// for the base-case code patterns.  Deterministic output.
std::string tables_markdown();

}  // namespace rvt::reports
