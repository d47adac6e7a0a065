// rvt: command line front end for librvt (linked through the C API only).
//
// Exit codes: 0 success, 1 domain-level negative result (invalid word,
// absent plane), 2 usage or parse error.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "rvt/rvt.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct WordDeleter {
  void operator()(rvt_word* w) const { rvt_word_free(w); }
};
using WordHandle = std::unique_ptr<rvt_word, WordDeleter>;

struct StringDeleter {
  void operator()(char* s) const { rvt_string_free(s); }
};
using StringHandle = std::unique_ptr<char, StringDeleter>;

bool json_format(const std::string& format) { return format == "json"; }

// Parses a word argument; on failure reports on stderr (and a JSON document
// on stdout when requested) and returns null.
WordHandle parse_or_report(const std::string& text, bool as_json) {
  rvt_word* raw = nullptr;
  rvt_parse_error error{};
  const rvt_status status = rvt_word_parse(text.c_str(), &raw, &error);
  if (status == RVT_OK) return WordHandle{raw};
  if (as_json) {
    std::printf(
        "{\n  \"error\": {\n    \"message\": \"%s\",\n    \"position\": "
        "%zu\n  }\n}\n",
        error.message, error.position);
  }
  std::fprintf(stderr, "error: cannot parse '%s': %s (position %zu)\n",
               text.c_str(), error.message, error.position);
  return nullptr;
}

int run_validate(const std::string& text, const std::string& format) {
  const bool as_json = json_format(format);
  WordHandle word = parse_or_report(text, as_json);
  if (!word) return kExitUsage;
  StringHandle canonical;
  {
    char* raw = nullptr;
    rvt_word_string(word.get(), &raw);
    canonical.reset(raw);
  }
  rvt_violation violation{};
  const rvt_status status = rvt_word_validate(word.get(), &violation);
  if (status == RVT_OK) {
    if (as_json)
      std::printf("{\n  \"valid\": true,\n  \"word\": \"%s\"\n}\n",
                  canonical.get());
    else
      std::printf("valid\n");
    return kExitOk;
  }
  if (as_json) {
    std::printf(
        "{\n  \"valid\": false,\n  \"word\": \"%s\",\n  \"violation\": {\n"
        "    \"position\": %zu,\n    \"rule\": %d,\n    \"offending\": "
        "\"%s\",\n    \"preceding\": \"%s\"\n  }\n}\n",
        canonical.get(), violation.position, violation.rule,
        violation.offending, violation.preceding);
  } else if (violation.rule == 1) {
    std::printf("invalid: rule 1 violated at position 1: word must begin with R (found %s)\n",
                violation.offending);
  } else {
    std::printf("invalid: rule %d violated at position %zu: %s cannot be followed by %s\n",
                violation.rule, violation.position, violation.preceding,
                violation.offending);
  }
  return kExitNegative;
}

int run_successors(const std::string& text, const std::string& letter,
                   const std::string& format) {
  const bool as_json = json_format(format);
  char* raw = nullptr;
  if (!letter.empty()) {
    if (rvt_letter_successors(letter.c_str(), &raw) != RVT_OK) {
      std::fprintf(stderr, "error: '%s' is not a letter\n", letter.c_str());
      return kExitUsage;
    }
  } else {
    WordHandle word = parse_or_report(text, as_json);
    if (!word) return kExitUsage;
    const rvt_status status = rvt_word_successors(word.get(), &raw);
    if (status == RVT_ERROR_SPELLING) {
      std::fprintf(stderr, "error: word is not admissible\n");
      return kExitNegative;
    }
    if (status != RVT_OK) return kExitUsage;
  }
  StringHandle line{raw};
  if (as_json) {
    std::string items;
    std::string current;
    for (const char* p = line.get();; ++p) {
      if (*p == ' ' || *p == '\0') {
        if (!current.empty()) {
          if (!items.empty()) items += ", ";
          items += "\"" + current + "\"";
          current.clear();
        }
        if (*p == '\0') break;
      } else {
        current += *p;
      }
    }
    std::printf("{\n  \"successors\": [%s]\n}\n", items.c_str());
  } else {
    std::printf("%s\n", line.get());
  }
  return kExitOk;
}

// Shared shape of analyze/trace: render through the C API, mapping spelling
// failures to exit 1.
int run_render(const rvt_word* word, rvt_status status, char* raw) {
  if (status == RVT_ERROR_SPELLING) {
    rvt_violation violation{};
    rvt_word_validate(word, &violation);
    std::fprintf(stderr,
                 "error: word is not admissible (rule %d at position %zu)\n",
                 violation.rule, violation.position);
    return kExitNegative;
  }
  if (status != RVT_OK || raw == nullptr) {
    std::fprintf(stderr, "error: internal failure\n");
    return kExitUsage;
  }
  StringHandle out{raw};
  std::fputs(out.get(), stdout);
  const size_t len = std::char_traits<char>::length(out.get());
  if (len == 0 || out.get()[len - 1] != '\n') std::fputc('\n', stdout);
  return kExitOk;
}

int run_analyze(const std::string& text, const std::string& format) {
  const bool as_json = json_format(format);
  WordHandle word = parse_or_report(text, as_json);
  if (!word) return kExitUsage;
  char* raw = nullptr;
  const rvt_status status = rvt_analyze_render(
      word.get(), as_json ? RVT_FORMAT_JSON : RVT_FORMAT_TEXT, &raw);
  return run_render(word.get(), status, raw);
}

int run_trace(const std::string& text, const std::string& slot_text,
              const std::string& format) {
  const bool as_json = json_format(format);
  rvt_slot slot;
  if (slot_text == "T1" || slot_text == "t1")
    slot = RVT_SLOT_T1;
  else if (slot_text == "T2" || slot_text == "t2")
    slot = RVT_SLOT_T2;
  else {
    std::fprintf(stderr, "error: slot must be T1 or T2\n");
    return kExitUsage;
  }
  WordHandle word = parse_or_report(text, as_json);
  if (!word) return kExitUsage;
  if (rvt_word_length(word.get()) == 0) {
    std::fprintf(stderr, "error: word must be nonempty\n");
    return kExitUsage;
  }
  char* raw = nullptr;
  const rvt_status status = rvt_trace_render(
      word.get(), slot, as_json ? RVT_FORMAT_JSON : RVT_FORMAT_TEXT, &raw);
  const int code = run_render(word.get(), status, raw);
  if (code != kExitOk) return code;
  int exists = 0;
  rvt_trace_outcome(word.get(), slot, &exists, nullptr, nullptr);
  return exists != 0 ? kExitOk : kExitNegative;
}

int run_count(size_t k, bool upto, const std::string& format) {
  const bool as_json = json_format(format);
  const size_t first = upto ? 1 : k;
  if (as_json) std::printf("{\n  \"counts\": [\n");
  for (size_t level = first; level <= k; ++level) {
    char* raw = nullptr;
    if (rvt_count(level, &raw) != RVT_OK) return kExitUsage;
    StringHandle count{raw};
    if (as_json)
      std::printf("    { \"k\": %zu, \"count\": \"%s\" }%s\n", level,
                  count.get(), level < k ? "," : "");
    else
      std::printf("%s\n", count.get());
  }
  if (as_json) std::printf("  ]\n}\n");
  return kExitOk;
}

int run_enumerate(size_t k, const std::string& format) {
  if (k < 1) {
    std::fprintf(stderr, "error: length must be >= 1\n");
    return kExitUsage;
  }
  if (json_format(format)) {
    std::printf("[");
    struct State {
      bool first = true;
    } state;
    rvt_enumerate(
        k, nullptr,
        [](const char* word, void* user) {
          auto* s = static_cast<State*>(user);
          std::printf("%s\n  \"%s\"", s->first ? "" : ",", word);
          s->first = false;
          return 0;
        },
        &state);
    std::printf("%s]\n", state.first ? "" : "\n");
  } else {
    rvt_enumerate(
        k, nullptr,
        [](const char* word, void*) {
          std::printf("%s\n", word);
          return 0;
        },
        nullptr);
  }
  return kExitOk;
}

int run_tables() {
  char* raw = nullptr;
  if (rvt_tables_markdown(&raw) != RVT_OK) return kExitUsage;
  StringHandle out{raw};
  std::fputs(out.get(), stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "RVT codes for the Monster tower over three-space: validate words "
      "against the spelling rules, reconstruct canonical charts and critical "
      "planes, trace Baby Monster births, count and enumerate admissible "
      "words."};
  app.require_subcommand(1);

  std::string word_text;
  std::string format = "text";
  std::string letter;
  std::string slot;
  size_t level = 0;
  bool upto = false;

  auto* validate = app.add_subcommand("validate", "Check spelling rules");
  validate->add_option("word", word_text, "RVT word, e.g. RVL1T2");
  validate->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* successors =
      app.add_subcommand("successors", "Admissible next letters");
  successors->add_option("word", word_text, "RVT word");
  successors->add_option("--letter", letter,
                         "query the successor table for one letter instead");
  successors->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* analyze =
      app.add_subcommand("analyze", "Per-level charts, configurations, planes");
  analyze->add_option("word", word_text, "RVT word")->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* trace = app.add_subcommand(
      "trace", "Backward critical-hyperplane trace of a plane slot");
  trace->add_option("word", word_text, "RVT word")->required();
  trace->add_option("slot", slot, "T1 or T2")->required();
  trace->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* count =
      app.add_subcommand("count", "Number of admissible words of a length");
  count->add_option("k", level, "word length")->required();
  count->add_flag("--upto", upto, "print counts for 1..k, one per line");
  count->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* enumerate =
      app.add_subcommand("enumerate", "Stream admissible words of a length");
  enumerate->add_option("k", level, "word length")->required();
  enumerate->add_option("--format", format, "text (one word per line) or json")
      ->check(CLI::IsMember({"text", "json"}));

  app.add_subcommand("tables",
                     "Regenerate the reference tables from the engines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (app.got_subcommand("validate")) return run_validate(word_text, format);
  if (app.got_subcommand("successors"))
    return run_successors(word_text, letter, format);
  if (app.got_subcommand("analyze")) return run_analyze(word_text, format);
  if (app.got_subcommand("trace")) return run_trace(word_text, slot, format);
  if (app.got_subcommand("count")) return run_count(level, upto, format);
  if (app.got_subcommand("enumerate")) return run_enumerate(level, format);
  if (app.got_subcommand("tables")) return run_tables();
  return kExitUsage;
}
