#include "letters.hpp"

namespace rvt {

std::string_view letter_name(Letter a) {
  switch (a) {
    case Letter::R:
      return "R";
    case Letter::V:
      return "V";
    case Letter::T1:
      return "T1";
    case Letter::T2:
      return "T2";
    case Letter::L1:
      return "L1";
    case Letter::L2:
      return "L2";
    case Letter::L3:
      return "L3";
  }
  return "?";
}

std::optional<Letter> letter_from_name(std::string_view name) {
  auto upper = [](char c) {
    return (c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c;
  };
  if (name.size() == 1) {
    switch (upper(name[0])) {
      case 'R':
        return Letter::R;
      case 'V':
        return Letter::V;
      default:
        return std::nullopt;
    }
  }
  if (name.size() == 2) {
    char head = upper(name[0]);
    char sub = name[1];
    if (head == 'T' && sub == '1') return Letter::T1;
    if (head == 'T' && sub == '2') return Letter::T2;
    if (head == 'L' && sub == '1') return Letter::L1;
    if (head == 'L' && sub == '2') return Letter::L2;
    if (head == 'L' && sub == '3') return Letter::L3;
  }
  return std::nullopt;
}

LetterSet successors_of_letter(Letter a) {
  switch (a) {
    case Letter::R:
      return {Letter::R, Letter::V};
    case Letter::V:
    case Letter::T1:
      return {Letter::R, Letter::V, Letter::T1, Letter::L1};
    case Letter::T2:
      return {Letter::R, Letter::V, Letter::T2, Letter::L3};
    case Letter::L1:
    case Letter::L2:
    case Letter::L3:
      return LetterSet::all();
  }
  return {};
}

int rule_for_predecessor(Letter a) {
  switch (a) {
    case Letter::R:
      return 2;
    case Letter::V:
    case Letter::T1:
      return 3;
    case Letter::T2:
      return 4;
    default:
      return 5;
  }
}

}  // namespace rvt
