#include "enumeration.hpp"

#include <stdexcept>

namespace rvt {

WordClass word_class(Letter a) {
  switch (a) {
    case Letter::R:
      return WordClass::R;
    case Letter::V:
    case Letter::T1:
      return WordClass::VT1;
    case Letter::T2:
      return WordClass::T2;
    default:
      return WordClass::L;
  }
}

BigUint StateVector::total() const {
  BigUint sum;
  for (const BigUint& c : counts) sum += c;
  return sum;
}

TransferMatrix TransferMatrix::derive() {
  TransferMatrix m{};
  std::array<bool, 4> seen{};
  std::array<LetterSet, 4> class_successors{};
  for (Letter a : kAllLetters) {
    const auto cls = static_cast<std::size_t>(word_class(a));
    const LetterSet succ = successors_of_letter(a);
    if (seen[cls] && class_successors[cls] != succ)
      throw std::logic_error(
          "transfer matrix: letters of one class disagree on successors");
    seen[cls] = true;
    class_successors[cls] = succ;
  }
  for (std::size_t from = 0; from < 4; ++from)
    for (Letter b : class_successors[from])
      ++m.transitions[from][static_cast<std::size_t>(word_class(b))];
  return m;
}

StateVector TransferMatrix::apply(const StateVector& v) const {
  StateVector next;
  for (std::size_t from = 0; from < 4; ++from) {
    for (std::size_t to = 0; to < 4; ++to) {
      const std::uint32_t weight = transitions[from][to];
      if (weight == 0) continue;
      BigUint term = v.counts[from];
      term.mul_small(weight);
      next.counts[to] += term;
    }
  }
  return next;
}

BigUint count_words(std::size_t k) {
  if (k == 0) return BigUint{1};
  const TransferMatrix m = TransferMatrix::derive();
  StateVector state;
  state.counts[static_cast<std::size_t>(WordClass::R)] = BigUint{1};
  for (std::size_t level = 1; level < k; ++level) state = m.apply(state);
  return state.total();
}

namespace {

bool expand(std::vector<Letter>& stack, std::size_t k,
            const WordVisitor& visit) {
  if (stack.size() == k) return visit(stack);
  const LetterSet candidates = stack.empty()
                                   ? LetterSet{Letter::R}
                                   : successors_of_letter(stack.back());
  for (Letter a : candidates) {
    stack.push_back(a);
    const bool keep_going = expand(stack, k, visit);
    stack.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void enumerate_words(std::size_t k, const WordVisitor& visit) {
  if (k < 1) throw std::invalid_argument("enumerate_words: length must be >= 1");
  std::vector<Letter> stack;
  stack.reserve(k);
  expand(stack, k, visit);
}

void enumerate_words_from(const ValidWord& prefix, std::size_t k,
                          const WordVisitor& visit) {
  if (prefix.size() > k)
    throw std::invalid_argument("enumerate_words_from: prefix longer than k");
  if (prefix.size() == 0) {
    enumerate_words(k, visit);
    return;
  }
  std::vector<Letter> stack(prefix.word().begin(), prefix.word().end());
  stack.reserve(k);
  expand(stack, k, visit);
}

VerifyReport verify_counts(std::size_t k_max, std::size_t bound) {
  if (k_max > bound)
    throw std::invalid_argument("verify_counts: k_max exceeds configured bound");
  VerifyReport report;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::uint64_t streamed = 0;
    enumerate_words(k, [&](std::span<const Letter>) {
      ++streamed;
      return true;
    });
    BigUint computed = count_words(k);
    const bool match = computed == BigUint{streamed};
    if (!match && report.all_match) {
      report.all_match = false;
      report.first_mismatch = k;
    }
    report.checks.push_back({k, streamed, std::move(computed), match});
  }
  return report;
}

}  // namespace rvt
