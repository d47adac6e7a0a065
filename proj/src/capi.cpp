#include "rvt/rvt.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "enumeration.hpp"
#include "reports.hpp"
#include "tower.hpp"
#include "trace.hpp"
#include "word.hpp"

struct rvt_word {
  rvt::RvtWord word;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rvt_status emit_string(const std::string& s, char** out) {
  if (out == nullptr) return RVT_ERROR_ARGUMENT;
  *out = dup_string(s);
  return *out == nullptr ? RVT_ERROR_INTERNAL : RVT_OK;
}

void copy_letter(char (&dst)[4], std::string_view name) {
  std::snprintf(dst, sizeof(dst), "%.*s", static_cast<int>(name.size()),
                name.data());
}

std::optional<rvt::PlaneSlot> to_slot(rvt_slot slot) {
  switch (slot) {
    case RVT_SLOT_V:
      return rvt::PlaneSlot::V;
    case RVT_SLOT_T1:
      return rvt::PlaneSlot::T1;
    case RVT_SLOT_T2:
      return rvt::PlaneSlot::T2;
  }
  return std::nullopt;
}

std::optional<rvt::ValidWord> valid_of(const rvt_word* word) {
  auto result = rvt::ValidWord::make(word->word);
  if (std::holds_alternative<rvt::RuleViolation>(result)) return std::nullopt;
  return std::get<rvt::ValidWord>(std::move(result));
}

template <typename Fn>
rvt_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument&) {
    return RVT_ERROR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return RVT_ERROR_INTERNAL;
  } catch (...) {
    return RVT_ERROR_INTERNAL;
  }
}

}  // namespace

extern "C" {

rvt_status rvt_word_parse(const char* text, rvt_word** out,
                          rvt_parse_error* error) {
  if (text == nullptr || out == nullptr) return RVT_ERROR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    auto parsed = rvt::parse_word(text);
    if (std::holds_alternative<rvt::ParseError>(parsed)) {
      const auto& e = std::get<rvt::ParseError>(parsed);
      if (error != nullptr) {
        error->position = e.position;
        std::snprintf(error->message, sizeof(error->message), "%s",
                      e.message.c_str());
      }
      return RVT_ERROR_PARSE;
    }
    *out = new rvt_word{std::get<rvt::RvtWord>(std::move(parsed))};
    return RVT_OK;
  });
}

void rvt_word_free(rvt_word* word) { delete word; }

size_t rvt_word_length(const rvt_word* word) {
  return word == nullptr ? 0 : word->word.size();
}

rvt_status rvt_word_string(const rvt_word* word, char** out) {
  if (word == nullptr) return RVT_ERROR_ARGUMENT;
  return emit_string(word->word.to_string(), out);
}

rvt_status rvt_word_validate(const rvt_word* word, rvt_violation* violation) {
  if (word == nullptr) return RVT_ERROR_ARGUMENT;
  const auto result = rvt::validate(word->word);
  if (!result) return RVT_OK;
  if (violation != nullptr) {
    violation->position = result->position;
    violation->rule = result->rule_id;
    copy_letter(violation->offending, rvt::letter_name(result->offending));
    if (result->preceding)
      copy_letter(violation->preceding, rvt::letter_name(*result->preceding));
    else
      violation->preceding[0] = '\0';
  }
  return RVT_ERROR_SPELLING;
}

rvt_status rvt_random_admissible(size_t length, uint64_t seed,
                                 rvt_word** out) {
  if (out == nullptr || length < 1) return RVT_ERROR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    *out = new rvt_word{rvt::random_admissible(length, seed)};
    return RVT_OK;
  });
}

rvt_status rvt_letter_successors(const char* letter, char** out) {
  if (letter == nullptr) return RVT_ERROR_ARGUMENT;
  const auto a = rvt::letter_from_name(letter);
  if (!a) return RVT_ERROR_ARGUMENT;
  return emit_string(rvt::reports::letters_line(rvt::successors_of_letter(*a)),
                     out);
}

rvt_status rvt_word_successors(const rvt_word* word, char** out) {
  if (word == nullptr) return RVT_ERROR_ARGUMENT;
  return guarded([&] {
    const auto valid = valid_of(word);
    if (!valid) return RVT_ERROR_SPELLING;
    return emit_string(
        rvt::reports::letters_line(rvt::derived_successors(*valid)), out);
  });
}

rvt_status rvt_configuration(const rvt_word* word, int* v_present,
                             int* t1_present, int* t2_present) {
  if (word == nullptr || word->word.empty()) return RVT_ERROR_ARGUMENT;
  return guarded([&] {
    const auto valid = valid_of(word);
    if (!valid) return RVT_ERROR_SPELLING;
    const rvt::SlotSet config = rvt::configuration(*valid);
    if (v_present != nullptr)
      *v_present = config.contains(rvt::PlaneSlot::V) ? 1 : 0;
    if (t1_present != nullptr)
      *t1_present = config.contains(rvt::PlaneSlot::T1) ? 1 : 0;
    if (t2_present != nullptr)
      *t2_present = config.contains(rvt::PlaneSlot::T2) ? 1 : 0;
    return RVT_OK;
  });
}

rvt_status rvt_birth_data(const rvt_word* word, rvt_slot slot, int* present,
                          int* birth, int* steps) {
  if (word == nullptr || present == nullptr) return RVT_ERROR_ARGUMENT;
  const auto s = to_slot(slot);
  if (!s) return RVT_ERROR_ARGUMENT;
  return guarded([&] {
    const auto valid = valid_of(word);
    if (!valid) return RVT_ERROR_SPELLING;
    const auto record = rvt::birth_data(*valid, *s);
    *present = record.has_value() ? 1 : 0;
    if (record) {
      if (birth != nullptr) *birth = record->birth;
      if (steps != nullptr) *steps = record->steps;
    }
    return RVT_OK;
  });
}

rvt_status rvt_analyze_render(const rvt_word* word, rvt_format format,
                              char** out) {
  if (word == nullptr) return RVT_ERROR_ARGUMENT;
  return guarded([&] {
    const auto valid = valid_of(word);
    if (!valid) return RVT_ERROR_SPELLING;
    if (format == RVT_FORMAT_JSON)
      return emit_string(rvt::reports::analysis_json(*valid).dump(2), out);
    if (format == RVT_FORMAT_TEXT)
      return emit_string(rvt::reports::analysis_text(*valid), out);
    return RVT_ERROR_ARGUMENT;
  });
}

rvt_status rvt_trace_outcome(const rvt_word* word, rvt_slot slot, int* exists,
                             int* birth, int* steps) {
  if (word == nullptr || exists == nullptr || word->word.empty())
    return RVT_ERROR_ARGUMENT;
  const auto s = to_slot(slot);
  if (!s || *s == rvt::PlaneSlot::V) return RVT_ERROR_ARGUMENT;
  return guarded([&] {
    const auto valid = valid_of(word);
    if (!valid) return RVT_ERROR_SPELLING;
    const rvt::TraceOutcome outcome = rvt::trace(*valid, *s);
    *exists = outcome.exists ? 1 : 0;
    if (outcome.exists) {
      if (birth != nullptr) *birth = outcome.birth;
      if (steps != nullptr) *steps = outcome.steps;
    }
    return RVT_OK;
  });
}

rvt_status rvt_trace_render(const rvt_word* word, rvt_slot slot,
                            rvt_format format, char** out) {
  if (word == nullptr || word->word.empty()) return RVT_ERROR_ARGUMENT;
  const auto s = to_slot(slot);
  if (!s || *s == rvt::PlaneSlot::V) return RVT_ERROR_ARGUMENT;
  return guarded([&] {
    const auto valid = valid_of(word);
    if (!valid) return RVT_ERROR_SPELLING;
    if (format == RVT_FORMAT_JSON)
      return emit_string(rvt::reports::trace_json(*valid, *s).dump(2), out);
    if (format == RVT_FORMAT_TEXT)
      return emit_string(rvt::reports::trace_text(*valid, *s), out);
    return RVT_ERROR_ARGUMENT;
  });
}

rvt_status rvt_count(size_t length, char** decimal_out) {
  return guarded([&] {
    return emit_string(rvt::count_words(length).to_string(), decimal_out);
  });
}

rvt_status rvt_enumerate(size_t length, const char* prefix,
                         rvt_word_visitor visit, void* user) {
  if (visit == nullptr || length < 1) return RVT_ERROR_ARGUMENT;
  return guarded([&]() -> rvt_status {
    std::string buffer;
    const rvt::WordVisitor bridge =
        [&](std::span<const rvt::Letter> letters) {
          buffer.clear();
          for (rvt::Letter a : letters) buffer += rvt::letter_name(a);
          return visit(buffer.c_str(), user) == 0;
        };
    if (prefix == nullptr || *prefix == '\0') {
      rvt::enumerate_words(length, bridge);
      return RVT_OK;
    }
    auto parsed = rvt::parse_word(prefix);
    if (std::holds_alternative<rvt::ParseError>(parsed))
      return RVT_ERROR_PARSE;
    auto valid = rvt::ValidWord::make(std::get<rvt::RvtWord>(std::move(parsed)));
    if (std::holds_alternative<rvt::RuleViolation>(valid))
      return RVT_ERROR_SPELLING;
    const auto& p = std::get<rvt::ValidWord>(valid);
    if (p.size() > length) return RVT_ERROR_ARGUMENT;
    rvt::enumerate_words_from(p, length, bridge);
    return RVT_OK;
  });
}

rvt_status rvt_verify_counts(size_t max_length, int* ok, char** report_out) {
  if (ok == nullptr) return RVT_ERROR_ARGUMENT;
  return guarded([&] {
    const rvt::VerifyReport report = rvt::verify_counts(max_length);
    *ok = report.all_match ? 1 : 0;
    if (report_out != nullptr)
      return emit_string(rvt::reports::verify_text(report), report_out);
    return RVT_OK;
  });
}

rvt_status rvt_tables_markdown(char** out) {
  return guarded([&] { return emit_string(rvt::reports::tables_markdown(), out); });
}

void rvt_string_free(char* s) { std::free(s); }

}  // extern "C"
