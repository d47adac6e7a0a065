#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "enumeration.hpp"

using namespace rvt;

namespace {

// Brute-force oracle: expand every chain of successor-table letters of a
// given length, independently of the transfer matrix and of the streaming
// enumerator.
std::uint64_t oracle_count_from(Letter last, std::size_t remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  for (Letter next : successors_of_letter(last))
    total += oracle_count_from(next, remaining - 1);
  return total;
}

std::uint64_t oracle_count(std::size_t k) {
  if (k == 0) return 1;
  return oracle_count_from(Letter::R, k - 1);
}

std::vector<std::string> collect(std::size_t k) {
  std::vector<std::string> out;
  enumerate_words(k, [&](std::span<const Letter> letters) {
    out.push_back(RvtWord{letters}.to_string());
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("frozen counts from the brute-force oracle") {
  CHECK(oracle_count(0) == 1);
  CHECK(oracle_count(1) == 1);
  CHECK(oracle_count(2) == 2);
  CHECK(oracle_count(3) == 6);
  CHECK(oracle_count(4) == 23);
  CHECK(oracle_count(5) == 98);
}

TEST_CASE("transfer-matrix counts match the oracle") {
  for (std::size_t k = 0; k <= 10; ++k)
    CHECK(count_words(k) == BigUint{oracle_count(k)});
}

TEST_CASE("transfer matrix rows sum to the successor counts") {
  const TransferMatrix m = TransferMatrix::derive();
  const std::array<std::uint32_t, 4> expected_row_sums{2, 4, 4, 7};
  for (std::size_t from = 0; from < 4; ++from) {
    std::uint32_t sum = 0;
    for (std::size_t to = 0; to < 4; ++to) sum += m.transitions[from][to];
    CHECK(sum == expected_row_sums[from]);
  }
}

TEST_CASE("enumeration order is lexicographic in the letter order") {
  CHECK(collect(1) == std::vector<std::string>{"R"});
  CHECK(collect(2) == std::vector<std::string>{"RR", "RV"});
  CHECK(collect(3) == std::vector<std::string>{"RRR", "RRV", "RVR", "RVV",
                                               "RVT1", "RVL1"});
  for (std::size_t k = 1; k <= 6; ++k)
    CHECK(collect(k).front() == std::string(k, 'R'));
}

TEST_CASE("every enumerated word is admissible and counted once") {
  for (std::size_t k = 1; k <= 6; ++k) {
    std::uint64_t streamed = 0;
    std::vector<Letter> previous;
    enumerate_words(k, [&](std::span<const Letter> letters) {
      ++streamed;
      const RvtWord w{letters};
      CHECK(!validate(w));
      if (!previous.empty()) {
        // Strictly increasing in the letter order.
        const std::vector<Letter> current(letters.begin(), letters.end());
        CHECK(std::lexicographical_compare(previous.begin(), previous.end(),
                                           current.begin(), current.end()));
      }
      previous.assign(letters.begin(), letters.end());
      return true;
    });
    CHECK(BigUint{streamed} == count_words(k));
  }
}

TEST_CASE("enumeration stops early when the visitor declines") {
  int visits = 0;
  enumerate_words(4, [&](std::span<const Letter>) { return ++visits < 5; });
  CHECK(visits == 5);
}

TEST_CASE("prefix streams partition the full stream") {
  // Partition level-5 words by their length-2 prefix.
  std::vector<std::string> merged;
  for (const char* prefix : {"RR", "RV"}) {
    auto parsed = parse_word(prefix);
    auto valid = ValidWord::make(std::get<RvtWord>(std::move(parsed)));
    enumerate_words_from(std::get<ValidWord>(valid), 5,
                         [&](std::span<const Letter> letters) {
                           merged.push_back(RvtWord{letters}.to_string());
                           return true;
                         });
  }
  CHECK(merged == collect(5));

  // A prefix equal to the requested length yields exactly itself ("RVL1"
  // is three letters).
  auto parsed = parse_word("RVL1");
  auto valid = ValidWord::make(std::get<RvtWord>(std::move(parsed)));
  std::vector<std::string> same_length;
  enumerate_words_from(std::get<ValidWord>(valid), 3,
                       [&](std::span<const Letter> letters) {
                         same_length.push_back(RvtWord{letters}.to_string());
                         return true;
                       });
  CHECK(same_length == std::vector<std::string>{"RVL1"});
  CHECK_THROWS_AS(
      enumerate_words_from(std::get<ValidWord>(valid), 2, [](auto) {
        return true;
      }),
      std::invalid_argument);
}

TEST_CASE("growth stays between doubling and the alphabet bound") {
  BigUint previous = count_words(1);
  for (std::size_t k = 2; k <= 40; ++k) {
    const BigUint current = count_words(k);
    BigUint doubled = previous;
    doubled.mul_small(2);
    BigUint capped = previous;
    capped.mul_small(7);
    CHECK(doubled <= current);
    CHECK(current <= capped);
    previous = current;
  }
}

TEST_CASE("verify_counts cross-checks enumeration against counting") {
  const VerifyReport report = verify_counts(6);
  CHECK(report.all_match);
  CHECK(report.checks.size() == 6);
  CHECK(report.checks[3].enumerated == 23);

  const VerifyReport vacuous = verify_counts(0);
  CHECK(vacuous.all_match);
  CHECK(vacuous.checks.empty());

  CHECK_THROWS_AS(verify_counts(13), std::invalid_argument);
  CHECK_NOTHROW(verify_counts(13, 20));
}

TEST_CASE("word classes partition the alphabet") {
  CHECK(word_class(Letter::R) == WordClass::R);
  CHECK(word_class(Letter::V) == WordClass::VT1);
  CHECK(word_class(Letter::T1) == WordClass::VT1);
  CHECK(word_class(Letter::T2) == WordClass::T2);
  CHECK(word_class(Letter::L1) == WordClass::L);
  CHECK(word_class(Letter::L2) == WordClass::L);
  CHECK(word_class(Letter::L3) == WordClass::L);
}

TEST_CASE("exact arithmetic survives limb carries") {
  CHECK(BigUint{0}.to_string() == "0");
  CHECK(BigUint{999999999}.to_string() == "999999999");
  BigUint a{999999999};
  a += BigUint{1};
  CHECK(a.to_string() == "1000000000");
  BigUint b{123456789};
  b.mul_small(1000000000 - 1);
  CHECK(b.to_string() == "123456788876543211");
  BigUint c{18446744073709551615ull};
  CHECK(c.to_string() == "18446744073709551615");
  c += c;
  CHECK(c.to_string() == "36893488147419103230");
  CHECK(BigUint{5} < BigUint{7});
  CHECK(BigUint{1000000000} > BigUint{999999999});

  // Far beyond 64 bits: the count at level 40 needs exact arithmetic.
  const std::string big = count_words(40).to_string();
  CHECK(big.size() >= 20);
}
