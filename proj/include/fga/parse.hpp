#pragma once

#include <cctype>
#include <string>

#include "fga/element.hpp"

namespace fga {

namespace detail {

/// Recursive-descent reader for the element grammar:
///   element  := ['-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := primary ['^' integer]
///   primary  := scalar | generator | '(' element ')' | '[' element ',' element ']'
///   scalar   := integer ['/' integer]
/// Generators are x1..xr, with x, y, z accepted for rank <= 3. "1" is the
/// scalar one. Negative exponents apply to single-term factors only.
class ElementParser {
public:
  ElementParser(const std::string &src, FieldSpec field, int rank)
      : src_(src), field_(field), rank_(rank) {}

  AlgebraElement parse() {
    AlgebraElement e = element();
    skip_ws();
    if (pos_ != src_.size())
      throw parse_error("unexpected trailing input", pos_);
    return e;
  }

private:
  AlgebraElement element() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    AlgebraElement e = term();
    if (neg)
      e = -e;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-')
        break;
      ++pos_;
      AlgebraElement t = term();
      e = c == '+' ? e + t : e - t;
    }
    return e;
  }

  AlgebraElement term() {
    AlgebraElement e = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*')
        break;
      ++pos_;
      e = e * factor();
    }
    return e;
  }

  AlgebraElement factor() {
    AlgebraElement base = primary();
    skip_ws();
    if (peek() != '^')
      return base;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    long long exp = read_int();
    if (exp >= 0) {
      AlgebraElement out = AlgebraElement::one(field_, rank_);
      for (long long i = 0; i < exp; ++i)
        out = out * base;
      return out;
    }
    AlgebraElement inv = invert(base, at);
    AlgebraElement out = AlgebraElement::one(field_, rank_);
    for (long long i = 0; i < -exp; ++i)
      out = out * inv;
    return out;
  }

  AlgebraElement primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      AlgebraElement e = element();
      expect(')');
      return e;
    }
    if (c == '[') {
      std::size_t at = pos_;
      ++pos_;
      AlgebraElement a = element();
      expect(',');
      AlgebraElement b = element();
      expect(']');
      // commutator a b a^-1 b^-1 of two invertible monomials
      return a * b * invert(a, at) * invert(b, at);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return scalar();
    if (std::isalpha(static_cast<unsigned char>(c)))
      return generator();
    throw parse_error("expected a scalar, generator, or parenthesis", pos_);
  }

  AlgebraElement scalar() {
    long long num = read_int();
    skip_ws();
    Rational r(num);
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t at = pos_;
      long long den = read_int();
      if (den == 0)
        throw parse_error("zero denominator", at);
      r /= den;
    }
    return AlgebraElement::monomial(Scalar::from_rational(field_, r),
                                    Word(rank_));
  }

  AlgebraElement generator() {
    std::size_t at = pos_;
    char c = src_[pos_++];
    int index = 0;
    if (c == 'x' && pos_ < src_.size() &&
        std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      index = static_cast<int>(read_int());
    } else if (c == 'x')
      index = 1;
    else if (c == 'y' && rank_ <= 3)
      index = 2;
    else if (c == 'z' && rank_ <= 3)
      index = 3;
    else
      throw parse_error(std::string("unknown generator '") + c + "'", at);
    if (index < 1 || index > rank_)
      throw parse_error("generator index out of range for rank " +
                            std::to_string(rank_),
                        at);
    return AlgebraElement::from_word(field_, Word::generator(rank_, index));
  }

  AlgebraElement invert(const AlgebraElement &e, std::size_t at) {
    if (e.support_size() != 1)
      throw parse_error("only single-term expressions can be inverted", at);
    const auto &[w, c] = *e.terms().begin();
    return AlgebraElement::monomial(c.inv(), w.inverse());
  }

  long long read_int() {
    skip_ws();
    std::size_t at = pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw parse_error("expected an integer", pos_);
    long long v = 0;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      v = v * 10 + (src_[pos_] - '0');
      if (v > (1LL << 40))
        throw parse_error("integer literal too large", at);
      ++pos_;
    }
    return neg ? -v : v;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  const std::string &src_;
  FieldSpec field_;
  int rank_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline AlgebraElement parse_element(const std::string &src, FieldSpec field,
                                    int rank) {
  return detail::ElementParser(src, field, rank).parse();
}

/// Parses a group word: the element grammar restricted to results that are
/// a single word with coefficient one.
inline Word parse_word(const std::string &src, int rank) {
  AlgebraElement e = parse_element(src, FieldSpec::rationals(), rank);
  if (e.support_size() != 1 || !e.terms().begin()->second.is_one())
    throw parse_error("expected a single group word", 0);
  return e.terms().begin()->first;
}

} // namespace fga
