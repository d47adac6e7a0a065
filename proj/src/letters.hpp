#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string_view>

namespace rvt {

// The seven letters of an RVT code, in canonical order.  The order doubles
// as the lexicographic order used by enumeration: R < V < T1 < T2 < L1 <
// L2 < L3.
enum class Letter : std::uint8_t { R, V, T1, T2, L1, L2, L3 };

inline constexpr std::array<Letter, 7> kAllLetters{
    Letter::R,  Letter::V,  Letter::T1, Letter::T2,
    Letter::L1, Letter::L2, Letter::L3};

std::string_view letter_name(Letter a);

// Accepts canonical names case-insensitively ("t1" -> T1).
std::optional<Letter> letter_from_name(std::string_view name);

// Small set of letters, iterable in canonical order.
class LetterSet {
 public:
  constexpr LetterSet() = default;
  constexpr LetterSet(std::initializer_list<Letter> letters) {
    for (Letter a : letters) insert(a);
  }

  static constexpr LetterSet all() {
    LetterSet s;
    s.bits_ = 0x7f;
    return s;
  }

  constexpr void insert(Letter a) { bits_ |= mask(a); }
  constexpr bool contains(Letter a) const { return (bits_ & mask(a)) != 0; }
  constexpr int size() const {
    int n = 0;
    for (Letter a : kAllLetters) n += contains(a) ? 1 : 0;
    return n;
  }
  constexpr bool empty() const { return bits_ == 0; }

  friend constexpr bool operator==(LetterSet, LetterSet) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Letter;
    using difference_type = std::ptrdiff_t;
    using pointer = const Letter*;
    using reference = Letter;

    constexpr iterator() = default;
    constexpr iterator(std::uint8_t bits, int pos) : bits_(bits), pos_(pos) {
      advance();
    }
    constexpr Letter operator*() const { return static_cast<Letter>(pos_); }
    constexpr iterator& operator++() {
      ++pos_;
      advance();
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator& o) const {
      return pos_ == o.pos_;
    }
    constexpr bool operator!=(const iterator& o) const {
      return pos_ != o.pos_;
    }

   private:
    constexpr void advance() {
      while (pos_ < 7 && (bits_ & (1u << pos_)) == 0) ++pos_;
    }
    std::uint8_t bits_ = 0;
    int pos_ = 7;
  };

  constexpr iterator begin() const { return {bits_, 0}; }
  constexpr iterator end() const { return {bits_, 7}; }

 private:
  static constexpr std::uint8_t mask(Letter a) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(a));
  }
  std::uint8_t bits_ = 0;
};

// The "can be followed by" column of the spelling-rule table.
LetterSet successors_of_letter(Letter a);

// Spelling rule governing what may follow the given letter: R -> 2,
// V/T1 -> 3, T2 -> 4, lines -> 5.
int rule_for_predecessor(Letter a);

}  // namespace rvt
