#include "word.hpp"

#include <cctype>
#include <random>
#include <stdexcept>

namespace rvt {

std::string RvtWord::to_string() const {
  std::string out;
  out.reserve(letters_.size() * 2);
  for (Letter a : letters_) out += letter_name(a);
  return out;
}

std::variant<RvtWord, ParseError> parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    char raw = text[i];
    if (std::isspace(static_cast<unsigned char>(raw))) {
      ++i;
      continue;
    }
    char c = static_cast<char>(
        std::toupper(static_cast<unsigned char>(raw)));
    std::size_t pos = i + 1;  // 1-based token start
    switch (c) {
      case 'R':
        letters.push_back(Letter::R);
        ++i;
        break;
      case 'V':
        letters.push_back(Letter::V);
        ++i;
        break;
      case 'T': {
        if (i + 1 >= text.size())
          return ParseError{pos, "dangling 'T': expected subscript '1' or '2'"};
        char sub = text[i + 1];
        if (sub == '1')
          letters.push_back(Letter::T1);
        else if (sub == '2')
          letters.push_back(Letter::T2);
        else
          return ParseError{pos, std::string("'") + sub +
                                     "' is not a valid 'T' subscript"};
        i += 2;
        break;
      }
      case 'L': {
        if (i + 1 >= text.size())
          return ParseError{
              pos, "dangling 'L': expected subscript '1', '2' or '3'"};
        char sub = text[i + 1];
        if (sub == '1')
          letters.push_back(Letter::L1);
        else if (sub == '2')
          letters.push_back(Letter::L2);
        else if (sub == '3')
          letters.push_back(Letter::L3);
        else
          return ParseError{pos, std::string("'") + sub +
                                     "' is not a valid 'L' subscript"};
        i += 2;
        break;
      }
      default:
        return ParseError{pos,
                          std::string("unexpected character '") + raw + "'"};
    }
  }
  return RvtWord{std::move(letters)};
}

std::optional<RuleViolation> validate(const RvtWord& word) {
  if (word.empty()) return std::nullopt;
  if (word[0] != Letter::R)
    return RuleViolation{1, std::nullopt, word[0], 1};
  for (std::size_t i = 1; i < word.size(); ++i) {
    Letter prev = word[i - 1];
    if (!successors_of_letter(prev).contains(word[i]))
      return RuleViolation{i + 1, prev, word[i], rule_for_predecessor(prev)};
  }
  return std::nullopt;
}

std::string violation_message(const RuleViolation& v) {
  std::string msg = "rule " + std::to_string(v.rule_id) +
                    " violated at position " + std::to_string(v.position) +
                    ": ";
  if (v.rule_id == 1) {
    msg += "word must begin with R (found ";
    msg += letter_name(v.offending);
    msg += ")";
  } else {
    msg += letter_name(*v.preceding);
    msg += " cannot be followed by ";
    msg += letter_name(v.offending);
  }
  return msg;
}

std::variant<ValidWord, RuleViolation> ValidWord::make(RvtWord word) {
  if (auto v = validate(word)) return *v;
  return ValidWord{std::move(word)};
}

RvtWord random_admissible(std::size_t k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_admissible: length must be >= 1");
  // mt19937_64 with modulo selection keeps the draw reproducible across
  // standard libraries (uniform_int_distribution is not portable).
  std::mt19937_64 gen(seed);
  std::vector<Letter> letters;
  letters.reserve(k);
  letters.push_back(Letter::R);
  while (letters.size() < k) {
    LetterSet next = successors_of_letter(letters.back());
    std::vector<Letter> pool(next.begin(), next.end());
    letters.push_back(pool[gen() % pool.size()]);
  }
  return RvtWord{std::move(letters)};
}

}  // namespace rvt
