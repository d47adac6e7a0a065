#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bigint.hpp"
#include "word.hpp"

namespace rvt {

// Admissible words fall into four classes by last letter, matching the four
// critical-plane configurations: {R}, {V, T1}, {T2}, {L1, L2, L3}.  Letters
// in a class share their successor set, so counting closes over the classes.
enum class WordClass : std::uint8_t { R = 0, VT1 = 1, T2 = 2, L = 3 };

WordClass word_class(Letter a);

// Exact per-class word counts at one level.
struct StateVector {
  std::array<BigUint, 4> counts;
  BigUint total() const;
};

// transitions[from][to] = number of letters taking class `from` to class
// `to`; derived from the successor table, with row sums 2, 4, 4, 7.
struct TransferMatrix {
  std::array<std::array<std::uint32_t, 4>, 4> transitions;
  static TransferMatrix derive();
  StateVector apply(const StateVector& v) const;
};

// Number of admissible words of exactly length k (1 for k = 0: the empty
// word), via transfer-matrix iteration from the single length-1 word.
BigUint count_words(std::size_t k);

// Visitor receives each word once, in lexicographic order under the letter
// order R < V < T1 < T2 < L1 < L2 < L3; return false to stop.  Depth-first
// and streaming: memory stays flat in the count of words.
using WordVisitor = std::function<bool(std::span<const Letter>)>;

// All admissible words of length k >= 1.
void enumerate_words(std::size_t k, const WordVisitor& visit);

// Admissible words of length k extending a given admissible prefix.
// Disjoint prefixes yield disjoint streams whose union, over all admissible
// prefixes of a fixed length, is the full stream.
void enumerate_words_from(const ValidWord& prefix, std::size_t k,
                          const WordVisitor& visit);

struct CountCheck {
  std::size_t k;
  std::uint64_t enumerated;
  BigUint computed;
  bool match;
};

struct VerifyReport {
  std::vector<CountCheck> checks;
  bool all_match = true;
  // First level with a discrepancy (meaningful when !all_match).
  std::size_t first_mismatch = 0;
};

// Cross-checks streamed enumeration against transfer-matrix counts for
// 1 <= k <= k_max.  k_max must not exceed `bound` (enumeration cost grows
// roughly fourfold per level).
VerifyReport verify_counts(std::size_t k_max, std::size_t bound = 12);

}  // namespace rvt
