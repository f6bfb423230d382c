#pragma once

#include <compare>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "fga/error.hpp"

namespace fga {

enum class Order { LT = -1, EQ = 0, GT = 1 };

/// A freely reduced word in the free group on `ambient_rank` generators.
/// Letters are signed 1-based generator indices: +i for x_i, -i for x_i^-1.
class Word {
public:
  explicit Word(int ambient_rank) : rank_(ambient_rank) {
    if (ambient_rank < 1)
      throw precondition_error("free group rank must be >= 1");
  }

  /// Builds a word from raw letters, freely reducing adjacent inverse pairs.
  static Word from_letters(int ambient_rank, const std::vector<int> &letters) {
    Word w(ambient_rank);
    for (int l : letters)
      w.push(l);
    return w;
  }

  static Word generator(int ambient_rank, int i, int sign = +1) {
    Word w(ambient_rank);
    w.push(sign > 0 ? i : -i);
    return w;
  }

  int ambient_rank() const { return rank_; }
  const std::vector<int> &letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  Word operator*(const Word &o) const {
    check(o);
    Word w = *this;
    for (int l : o.letters_)
      w.push(l);
    return w;
  }

  Word inverse() const {
    Word w(rank_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(-*it);
    return w;
  }

  /// True if this word is an initial segment of `o` (as reduced words).
  bool is_prefix_of(const Word &o) const {
    if (letters_.size() > o.letters_.size())
      return false;
    for (std::size_t i = 0; i < letters_.size(); ++i)
      if (letters_[i] != o.letters_[i])
        return false;
    return true;
  }

  /// Suffix w' with *this == prefix * w'; requires is_prefix_of to hold.
  Word suffix_after(const Word &prefix) const {
    Word w(rank_);
    w.letters_.assign(letters_.begin() +
                          static_cast<std::ptrdiff_t>(prefix.length()),
                      letters_.end());
    return w;
  }

  int last_letter() const {
    if (letters_.empty())
      throw precondition_error("identity word has no last letter");
    return letters_.back();
  }

  bool operator==(const Word &o) const {
    return rank_ == o.rank_ && letters_ == o.letters_;
  }
  bool operator!=(const Word &o) const { return !(*this == o); }

private:
  void push(int l) {
    if (l == 0 || l > rank_ || l < -rank_)
      throw precondition_error("letter out of range for rank " +
                               std::to_string(rank_));
    if (!letters_.empty() && letters_.back() == -l)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  void check(const Word &o) const {
    if (rank_ != o.rank_)
      throw mismatch_error("words from free groups of different rank");
  }

  std::vector<int> letters_;
  int rank_;
};

inline Word word_mul(const Word &a, const Word &b) { return a * b; }
inline Word word_inv(const Word &a) { return a.inverse(); }

/// Position of a signed letter in the fixed letter order
/// x_1 < x_1^-1 < x_2 < x_2^-1 < ...
inline int letter_key(int l) { return (std::abs(l) - 1) * 2 + (l < 0 ? 1 : 0); }

/// Shortlex over the signed alphabet: a well-order on F compatible with
/// cancellation-free right multiplication.
inline Order word_compare(const Word &a, const Word &b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw mismatch_error("comparing words of different ambient rank");
  if (a.length() != b.length())
    return a.length() < b.length() ? Order::LT : Order::GT;
  for (std::size_t i = 0; i < a.length(); ++i) {
    int ka = letter_key(a.letters()[i]);
    int kb = letter_key(b.letters()[i]);
    if (ka != kb)
      return ka < kb ? Order::LT : Order::GT;
  }
  return Order::EQ;
}

struct WordLess {
  bool operator()(const Word &a, const Word &b) const {
    return word_compare(a, b) == Order::LT;
  }
};

using WordSet = std::set<Word, WordLess>;

/// Well-order on finite supports: A < B when the maximal element of the
/// symmetric difference lies in B.
inline Order support_compare(const WordSet &a, const WordSet &b) {
  auto ia = a.rbegin(), ib = b.rbegin();
  while (ia != a.rend() && ib != b.rend()) {
    Order c = word_compare(*ia, *ib);
    if (c != Order::EQ)
      return c; // the larger of the two heads is in the symmetric difference
    ++ia;
    ++ib;
  }
  if (ia == a.rend() && ib == b.rend())
    return Order::EQ;
  return ia == a.rend() ? Order::LT : Order::GT;
}

inline std::string to_string(const Word &w) {
  if (w.is_identity())
    return "1";
  std::string out;
  std::size_t i = 0;
  const auto &ls = w.letters();
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i])
      ++j;
    if (!out.empty())
      out += "*";
    int g = std::abs(ls[i]);
    std::string name;
    if (w.ambient_rank() <= 3)
      name = std::string(1, "xyz"[g - 1]);
    else
      name = "x" + std::to_string(g);
    out += name;
    long long e = static_cast<long long>(j - i) * (ls[i] < 0 ? -1 : 1);
    if (e != 1)
      out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

} // namespace fga
