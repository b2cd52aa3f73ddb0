#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "ncc/errors.hpp"

namespace ncc {

/// Word a_1 ... a_n in non-commuting variables, letters are 1-based variable
/// indices. The empty word is the unit.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  /// a_V for a set of 1-based positions given in increasing order.
  Word restrict(const std::vector<int>& positions) const {
    std::vector<int> out;
    out.reserve(positions.size());
    for (int p : positions) {
      if (p < 1 || static_cast<std::size_t>(p) > letters_.size())
        throw DimensionError("position outside word");
      out.push_back(letters_[p - 1]);
    }
    return Word(std::move(out));
  }

  /// a_S for S encoded as a bit mask (bit i = position i + 1).
  Word restrict_mask(std::uint32_t mask) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < letters_.size(); ++i)
      if (mask >> i & 1u) out.push_back(letters_[i]);
    return Word(std::move(out));
  }

  Word slice(std::size_t from, std::size_t to) const {
    return Word(std::vector<int>(letters_.begin() + from, letters_.begin() + to));
  }

  friend Word operator+(const Word& a, const Word& b) {
    std::vector<int> out = a.letters_;
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
  }

  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex: shorter words first, then lexicographic.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.letters_ <=> b.letters_;
  }

  int max_letter() const {
    int m = 0;
    for (int l : letters_) m = l > m ? l : m;
    return m;
  }

  /// "1 2 1"; the empty word prints as "".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(letters_[i]);
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (int l : letters_) h = (h ^ static_cast<std::size_t>(l)) * 0x100000001b3ull;
    return h ^ letters_.size();
  }

 private:
  std::vector<int> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

/// All words of the given length over {1..k}, lexicographic.
inline std::vector<Word> words_of_length(int k, int length) {
  std::vector<Word> out;
  if (length == 0) return {Word{}};
  std::vector<int> cur(length, 1);
  while (true) {
    out.emplace_back(cur);
    int i = length - 1;
    while (i >= 0 && cur[i] == k) cur[i--] = 1;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

/// All words of length 1..max_length over {1..k} in shortlex order.
inline std::vector<Word> words_up_to(int k, int max_length) {
  std::vector<Word> out;
  for (int n = 1; n <= max_length; ++n) {
    auto layer = words_of_length(k, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

/// Univariate word a^n.
inline Word power_word(int n, int letter = 1) { return Word(std::vector<int>(n, letter)); }

}  // namespace ncc

template <>
struct std::hash<ncc::Word> {
  std::size_t operator()(const ncc::Word& w) const { return w.hash(); }
};
