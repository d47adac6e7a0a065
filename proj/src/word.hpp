#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "letters.hpp"

namespace rvt {

// A word over the seven-letter alphabet.  Its length equals the tower level
// of the points it encodes; the empty word denotes the base point stratum.
class RvtWord {
 public:
  RvtWord() = default;
  explicit RvtWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit RvtWord(std::span<const Letter> letters)
      : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter back() const { return letters_.back(); }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  void push_back(Letter a) { letters_.push_back(a); }

  std::string to_string() const;

  friend bool operator==(const RvtWord&, const RvtWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct ParseError {
  std::size_t position;  // 1-based character index of the offending token
  std::string message;
};

// Greedy left-to-right tokenization.  Lowercase is canonicalized; spaces
// between tokens are ignored.  Spelling rules are not checked here.
std::variant<RvtWord, ParseError> parse_word(std::string_view text);

struct RuleViolation {
  std::size_t position;  // 1-based letter index
  std::optional<Letter> preceding;
  Letter offending;
  int rule_id;  // 1..5

  friend bool operator==(const RuleViolation&, const RuleViolation&) = default;
};

// First (leftmost) spelling violation, or nullopt when the word is
// admissible.  The empty word is admissible.
std::optional<RuleViolation> validate(const RvtWord& word);

std::string violation_message(const RuleViolation& v);

// Witness that a word passed validation; stratification operations take
// this instead of re-checking.
class ValidWord {
 public:
  static std::variant<ValidWord, RuleViolation> make(RvtWord word);

  const RvtWord& word() const { return word_; }
  std::size_t size() const { return word_.size(); }

 private:
  explicit ValidWord(RvtWord word) : word_(std::move(word)) {}
  RvtWord word_;
};

// Deterministic admissible word of length k >= 1 for a given seed; letters
// are drawn uniformly from the admissible successors at each step.
RvtWord random_admissible(std::size_t k, std::uint64_t seed);

}  // namespace rvt
