#include "reports.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace rvt::reports {

namespace {

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string configuration_string(SlotSet set) {
  std::vector<std::string> names;
  for (PlaneSlot s : kAllSlots)
    if (set.contains(s)) names.emplace_back(slot_name(s));
  return join(names, ", ");
}

std::string planes_string(const std::vector<PlaneRecord>& planes) {
  std::vector<std::string> parts;
  for (const PlaneRecord& p : planes)
    parts.push_back(std::string(slot_name(p.slot)) + "=" + delta_string(p));
  return join(parts, ", ");
}

std::string coordinates_tuple(int level) {
  std::string out = "(x, y, z";
  for (int i = 1; i <= level; ++i) {
    out += ", u" + std::to_string(i);
    out += ", v" + std::to_string(i);
  }
  out += ")";
  return out;
}

std::string chart_string(const ChartLevel& chart) {
  return chart.u_definition() + ", " + chart.v_definition();
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size())
        line += std::string(widths[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string delta_string(const PlaneRecord& record) {
  return "delta(" + std::to_string(record.birth) + "," +
         std::to_string(record.steps) + ")";
}

std::string coframe_string(const std::array<CoordRef, 3>& coords) {
  return "[" + coords[0].covector() + " : " + coords[1].covector() + " : " +
         coords[2].covector() + "]";
}

std::string letters_line(LetterSet letters) {
  std::vector<std::string> names;
  for (Letter a : letters) names.emplace_back(letter_name(a));
  return join(names, " ");
}

nlohmann::json analysis_json(const ValidWord& word) {
  const std::vector<LevelReport> rows = analyze(word);
  nlohmann::json levels = nlohmann::json::array();
  for (const LevelReport& row : rows) {
    nlohmann::json planes = nlohmann::json::array();
    for (const PlaneRecord& p : row.planes)
      planes.push_back({{"slot", slot_name(p.slot)},
                        {"birth", p.birth},
                        {"steps", p.steps}});
    nlohmann::json configuration = nlohmann::json::array();
    for (PlaneSlot s : kAllSlots)
      if (row.configuration.contains(s)) configuration.push_back(slot_name(s));
    levels.push_back({{"level", row.level},
                      {"letter", letter_name(row.letter)},
                      {"prefix", row.prefix},
                      {"coordinates", coordinates_tuple(row.level)},
                      {"fiber_coords", coframe_string(row.fiber_coords)},
                      {"chart",
                       {{"denominator", row.chart.denominator.name()},
                        {"u", row.chart.u_definition()},
                        {"v", row.chart.v_definition()}}},
                      {"configuration", configuration},
                      {"planes", planes}});
  }
  return {{"word", word.word().to_string()},
          {"base", {{"coordinates", {"x", "y", "z"}}}},
          {"levels", levels}};
}

std::string analysis_text(const ValidWord& word) {
  const std::vector<LevelReport> rows = analyze(word);
  std::string out = "word: " + word.word().to_string() + "\n";
  out += "base coordinates: (x, y, z)\n";
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"level", "letter", "chart", "fiber coords", "configuration",
                   "planes", "prefix"});
  for (const LevelReport& row : rows)
    cells.push_back({std::to_string(row.level),
                     std::string(letter_name(row.letter)),
                     chart_string(row.chart), coframe_string(row.fiber_coords),
                     configuration_string(row.configuration),
                     planes_string(row.planes), row.prefix});
  out += aligned_table(cells);
  return out;
}

nlohmann::json trace_json(const ValidWord& word, PlaneSlot slot) {
  const TraceOutcome outcome = trace(word, slot);
  nlohmann::json steps = nlohmann::json::array();
  for (const DescentStep& step : outcome.log)
    steps.push_back({{"level", step.level},
                     {"covector", step.covector.covector()},
                     {"verdict", verdict_name(step.verdict)}});
  nlohmann::json result;
  if (outcome.exists) {
    result = {{"exists", true},
              {"birth", outcome.birth},
              {"steps", outcome.steps}};
  } else {
    result = {{"exists", false}, {"reason", verdict_name(outcome.reason)}};
    if (outcome.reason != StepVerdict::ReachedBase)
      result["level"] = outcome.reason_level;
  }
  return {{"word", word.word().to_string()},
          {"slot", slot_name(slot)},
          {"steps", steps},
          {"outcome", result}};
}

std::string trace_text(const ValidWord& word, PlaneSlot slot) {
  const TraceOutcome outcome = trace(word, slot);
  std::string out = "word: " + word.word().to_string() + "\n";
  out += "slot: " + std::string(slot_name(slot)) + "\n";
  for (const DescentStep& step : outcome.log) {
    out += "  level " + std::to_string(step.level) + ": " +
           step.covector.covector() + " -> " +
           std::string(verdict_name(step.verdict)) + "\n";
  }
  if (outcome.exists) {
    out += "outcome: exists delta(" + std::to_string(outcome.birth) + "," +
           std::to_string(outcome.steps) + ")\n";
  } else {
    out += "outcome: absent (" + std::string(verdict_name(outcome.reason));
    if (outcome.reason != StepVerdict::ReachedBase)
      out += " at level " + std::to_string(outcome.reason_level);
    out += ")\n";
  }
  return out;
}

std::string verify_text(const VerifyReport& report) {
  std::string out;
  for (const CountCheck& check : report.checks) {
    out += "k=" + std::to_string(check.k) + ": enumerated " +
           std::to_string(check.enumerated) + ", computed " +
           check.computed.to_string() + ", " +
           (check.match ? "ok" : "MISMATCH") + "\n";
  }
  out += report.all_match
             ? "all levels match\n"
             : "first mismatch at k=" + std::to_string(report.first_mismatch) +
                   "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Generated tables
// ---------------------------------------------------------------------------

namespace {

ValidWord must_parse(const std::string& text) {
  auto parsed = parse_word(text);
  if (std::holds_alternative<ParseError>(parsed))
    throw std::logic_error("tables: bad fixture word " + text);
  auto valid = ValidWord::make(std::get<RvtWord>(std::move(parsed)));
  if (std::holds_alternative<RuleViolation>(valid))
    throw std::logic_error("tables: inadmissible fixture word " + text);
  return std::get<ValidWord>(std::move(valid));
}

// Shortest admissible word ending with each letter.
const std::array<std::pair<Letter, const char*>, 7> kRepresentatives{{
    {Letter::R, "R"},
    {Letter::V, "RV"},
    {Letter::T1, "RVT1"},
    {Letter::T2, "RVL1T2"},
    {Letter::L1, "RVL1"},
    {Letter::L2, "RVL1L2"},
    {Letter::L3, "RVL1L3"},
}};

std::string letters_cell(LetterSet set) {
  std::vector<std::string> names;
  for (Letter a : set) names.emplace_back(letter_name(a));
  return names.empty() ? "(none)" : join(names, ", ");
}

std::string spelling_rules_section() {
  std::string out = "## Spelling rules\n\n";
  out += "| Letter | Can be followed by | Cannot be followed by |\n";
  out += "|---|---|---|\n";
  for (const auto& [letter, rep] : kRepresentatives) {
    const ValidWord word = must_parse(rep);
    if (word.word().back() != letter)
      throw std::logic_error("tables: representative has wrong last letter");
    const LetterSet can = derived_successors(word);
    LetterSet cannot;
    for (Letter a : kAllLetters)
      if (!can.contains(a)) cannot.insert(a);
    out += "| " + std::string(letter_name(letter)) + " | " +
           letters_cell(can) + " | " + letters_cell(cannot) + " |\n";
  }
  return out;
}

std::string configurations_section() {
  const std::array<std::pair<std::string, std::vector<Letter>>, 4> groups{{
      {"R", {Letter::R}},
      {"V or T1", {Letter::V, Letter::T1}},
      {"T2", {Letter::T2}},
      {"L1, L2, or L3", {Letter::L1, Letter::L2, Letter::L3}},
  }};
  std::string out = "## Critical plane configurations\n\n";
  out += "| Last letter | Critical planes present |\n";
  out += "|---|---|\n";
  for (const auto& [label, members] : groups) {
    bool first = true;
    SlotSet config;
    for (Letter member : members) {
      const char* rep = nullptr;
      for (const auto& [letter, text] : kRepresentatives)
        if (letter == member) rep = text;
      if (rep == nullptr)
        throw std::logic_error("tables: missing representative word");
      const SlotSet found = configuration(must_parse(rep));
      if (first) {
        config = found;
        first = false;
      } else if (found != config) {
        throw std::logic_error("tables: configuration differs within a class");
      }
    }
    out += "| " + label + " | " + configuration_string(config) + " |\n";
  }
  return out;
}

// One column of a base-case pattern row: birth data sampled over prefixes
// and repetition counts, then expressed relative to the word length k.
struct ColumnSample {
  int m;
  int k;
  std::optional<PlaneRecord> record;
};

std::string fit_column(const std::vector<ColumnSample>& samples, bool has_m) {
  bool any_absent = false;
  bool any_present = false;
  for (const ColumnSample& s : samples)
    (s.record ? any_present : any_absent) = true;
  if (any_absent && any_present)
    throw std::logic_error("tables: column mixes present and absent planes");
  if (any_absent) return "none";

  for (const ColumnSample& s : samples)
    if (s.record->birth + s.record->steps != s.k)
      throw std::logic_error("tables: birth plus steps is not the level");

  const int first_steps = samples.front().record->steps;
  const bool constant_steps =
      std::all_of(samples.begin(), samples.end(), [&](const ColumnSample& s) {
        return s.record->steps == first_steps;
      });
  if (constant_steps) {
    return "delta(k-" + std::to_string(first_steps) + ", " +
           std::to_string(first_steps) + ")";
  }
  if (has_m) {
    const int offset = first_steps - samples.front().m;
    const bool affine =
        std::all_of(samples.begin(), samples.end(), [&](const ColumnSample& s) {
          return s.record->steps == s.m + offset;
        });
    if (affine) {
      return "delta(k-m-" + std::to_string(offset) + ", m+" +
             std::to_string(offset) + ")";
    }
  }
  throw std::logic_error("tables: birth data does not fit a pattern");
}

struct PatternFamily {
  std::string label;
  std::vector<Letter> head;  // between the prefix and the T1 run
  std::vector<Letter> tail;  // after the T1 run
  bool has_m;
  int m_min;
  std::vector<std::string> prefixes;
};

RvtWord family_word(const PatternFamily& family, const std::string& prefix,
                    int m) {
  auto parsed = parse_word(prefix);
  RvtWord word = std::get<RvtWord>(std::move(parsed));
  for (Letter a : family.head) word.push_back(a);
  for (int i = 0; i < m; ++i) word.push_back(Letter::T1);
  for (Letter a : family.tail) word.push_back(a);
  return word;
}

std::string base_cases_section() {
  std::vector<PatternFamily> families;
  const std::array<Letter, 3> last_letters{Letter::T2, Letter::L2, Letter::L3};
  for (Letter last : last_letters) {
    const std::string lname{letter_name(last)};
    families.push_back({"λ V T1^m L1 " + lname + " (m >= 0)",
                        {Letter::V},
                        {Letter::L1, last},
                        true,
                        0,
                        {"R", "RVL1"}});
    families.push_back({"λ L1 T1^m L1 " + lname + " (m >= 1)",
                        {Letter::L1},
                        {Letter::L1, last},
                        true,
                        1,
                        {"RV", "RVL1"}});
    families.push_back({"λ L1 L1 " + lname,
                        {Letter::L1},
                        {Letter::L1, last},
                        false,
                        0,
                        {"RV", "RVL1"}});
  }

  std::string out = "## Birth data for base-case code patterns\n\n";
  out +=
      "For a word of length k matching the pattern (λ is any admissible "
      "prefix), the planes present at the top level carry the birth data "
      "below; \"none\" means the plane does not occur.\n\n";
  out += "| Code pattern | T1 | T2 |\n";
  out += "|---|---|---|\n";
  for (const PatternFamily& family : families) {
    std::vector<ColumnSample> t1_samples;
    std::vector<ColumnSample> t2_samples;
    const int m_max = family.has_m ? family.m_min + 3 : family.m_min;
    for (const std::string& prefix : family.prefixes) {
      for (int m = family.m_min; m <= m_max; ++m) {
        auto valid = ValidWord::make(family_word(family, prefix, m));
        if (std::holds_alternative<RuleViolation>(valid))
          throw std::logic_error("tables: pattern instance is inadmissible");
        const ValidWord& word = std::get<ValidWord>(valid);
        const int k = static_cast<int>(word.size());
        t1_samples.push_back({m, k, birth_data(word, PlaneSlot::T1)});
        t2_samples.push_back({m, k, birth_data(word, PlaneSlot::T2)});
      }
    }
    out += "| " + family.label + " | " +
           fit_column(t1_samples, family.has_m) + " | " +
           fit_column(t2_samples, family.has_m) + " |\n";
  }
  return out;
}

}  // namespace

std::string tables_markdown() {
  std::string out = "# Generated reference tables\n\n";
  out += spelling_rules_section();
  out += "\n";
  out += configurations_section();
  out += "\n";
  out += base_cases_section();
  return out;
}

}  // namespace rvt::reports
