#pragma once

#include <map>
#include <string>
#include <vector>

#include "fga/scalar.hpp"
#include "fga/word.hpp"

namespace fga {

/// A finite sparse K-linear combination of freely reduced words: an element
/// of the group algebra K[F]. Terms are kept sorted under the word order, so
/// the leading power product is the last key. Zero coefficients are never
/// stored.
class AlgebraElement {
public:
  using TermMap = std::map<Word, Scalar, WordLess>;

  AlgebraElement(FieldSpec field, int ambient_rank)
      : field_(field), rank_(ambient_rank) {
    if (ambient_rank < 1)
      throw precondition_error("free group rank must be >= 1");
  }

  static AlgebraElement zero(FieldSpec f, int rank) {
    return AlgebraElement(f, rank);
  }
  static AlgebraElement one(FieldSpec f, int rank) {
    return monomial(Scalar::one(f), Word(rank));
  }
  static AlgebraElement monomial(const Scalar &c, const Word &w) {
    AlgebraElement e(c.field(), w.ambient_rank());
    if (!c.is_zero())
      e.terms_.emplace(w, c);
    return e;
  }
  static AlgebraElement from_word(FieldSpec f, const Word &w) {
    return monomial(Scalar::one(f), w);
  }

  const FieldSpec &field() const { return field_; }
  int ambient_rank() const { return rank_; }
  const TermMap &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  Scalar coefficient(const Word &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  WordSet support() const {
    WordSet s;
    for (const auto &[w, c] : terms_)
      s.insert(w);
    return s;
  }

  AlgebraElement operator+(const AlgebraElement &o) const {
    check(o);
    AlgebraElement r = *this;
    for (const auto &[w, c] : o.terms_)
      r.add_term(w, c);
    return r;
  }

  AlgebraElement operator-() const {
    AlgebraElement r(field_, rank_);
    for (const auto &[w, c] : terms_)
      r.terms_.emplace(w, -c);
    return r;
  }

  AlgebraElement operator-(const AlgebraElement &o) const {
    return *this + (-o);
  }

  /// Convolution product over freely reduced products of words.
  AlgebraElement operator*(const AlgebraElement &o) const {
    check(o);
    AlgebraElement r(field_, rank_);
    for (const auto &[u, a] : terms_)
      for (const auto &[v, b] : o.terms_)
        r.add_term(u * v, a * b);
    return r;
  }

  AlgebraElement operator*(const Scalar &c) const {
    AlgebraElement r(field_, rank_);
    if (c.is_zero())
      return r;
    for (const auto &[w, a] : terms_)
      r.terms_.emplace(w, a * c);
    return r;
  }

  AlgebraElement operator*(const Word &w) const {
    AlgebraElement r(field_, rank_);
    for (const auto &[u, a] : terms_)
      r.add_term(u * w, a);
    return r;
  }

  bool operator==(const AlgebraElement &o) const {
    if (!(field_ == o.field_) || rank_ != o.rank_ ||
        terms_.size() != o.terms_.size())
      return false;
    auto it = o.terms_.begin();
    for (const auto &[w, c] : terms_) {
      if (!(w == it->first) || c != it->second)
        return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const AlgebraElement &o) const { return !(*this == o); }

  void add_term(const Word &w, const Scalar &c) {
    if (c.is_zero())
      return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

private:
  void check(const AlgebraElement &o) const {
    if (!(field_ == o.field_))
      throw mismatch_error("elements over different fields");
    if (rank_ != o.rank_)
      throw mismatch_error("elements over free groups of different rank");
  }

  FieldSpec field_;
  int rank_;
  TermMap terms_;
};

inline AlgebraElement operator*(const Scalar &c, const AlgebraElement &f) {
  return f * c; // scalars are central
}

/// iota: the K-linear extension of group inversion, an anti-homomorphism.
inline AlgebraElement iota_elem(const AlgebraElement &f) {
  AlgebraElement r(f.field(), f.ambient_rank());
  for (const auto &[w, c] : f.terms())
    r.add_term(w.inverse(), c);
  return r;
}

/// Sum of coefficients: the augmentation map K[F] -> K.
inline Scalar augmentation(const AlgebraElement &f) {
  Scalar s = Scalar::zero(f.field());
  for (const auto &[w, c] : f.terms())
    s = s + c;
  return s;
}

/// Leading power product: the maximal support word under the word order.
inline const Word &lpp(const AlgebraElement &f) {
  if (f.is_zero())
    throw precondition_error("lpp of the zero element");
  return f.terms().rbegin()->first;
}

inline Scalar leading_coefficient(const AlgebraElement &f) {
  if (f.is_zero())
    throw precondition_error("leading coefficient of the zero element");
  return f.terms().rbegin()->second;
}

inline bool is_monic(const AlgebraElement &f) {
  return !f.is_zero() && leading_coefficient(f).is_one();
}

inline AlgebraElement make_monic(const AlgebraElement &f) {
  return f * leading_coefficient(f).inv();
}

/// A fixed-length column of algebra elements: an element of K[F]^k.
class AlgebraVector {
public:
  explicit AlgebraVector(std::vector<AlgebraElement> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty())
      throw precondition_error("algebra vector must have length >= 1");
    for (const auto &e : entries_)
      if (!(e.field() == entries_[0].field()) ||
          e.ambient_rank() != entries_[0].ambient_rank())
        throw mismatch_error("mixed fields or ranks in algebra vector");
  }

  static AlgebraVector zero(FieldSpec f, int rank, std::size_t k) {
    return AlgebraVector(
        std::vector<AlgebraElement>(k, AlgebraElement::zero(f, rank)));
  }

  static AlgebraVector unit(FieldSpec f, int rank, std::size_t k,
                            std::size_t i) {
    AlgebraVector v = zero(f, rank, k);
    v.entries_[i] = AlgebraElement::one(f, rank);
    return v;
  }

  std::size_t size() const { return entries_.size(); }
  const AlgebraElement &operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<AlgebraElement> &entries() const { return entries_; }
  const FieldSpec &field() const { return entries_[0].field(); }
  int ambient_rank() const { return entries_[0].ambient_rank(); }

  bool is_zero() const {
    for (const auto &e : entries_)
      if (!e.is_zero())
        return false;
    return true;
  }

  AlgebraVector operator+(const AlgebraVector &o) const {
    require_same_shape(o);
    std::vector<AlgebraElement> r;
    r.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
      r.push_back(entries_[i] + o.entries_[i]);
    return AlgebraVector(std::move(r));
  }

  AlgebraVector operator-(const AlgebraVector &o) const {
    require_same_shape(o);
    std::vector<AlgebraElement> r;
    r.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
      r.push_back(entries_[i] - o.entries_[i]);
    return AlgebraVector(std::move(r));
  }

  /// Right action of K[F] on column vectors.
  AlgebraVector operator*(const AlgebraElement &g) const {
    std::vector<AlgebraElement> r;
    r.reserve(size());
    for (const auto &e : entries_)
      r.push_back(e * g);
    return AlgebraVector(std::move(r));
  }

  bool operator==(const AlgebraVector &o) const {
    return entries_ == o.entries_;
  }

private:
  void require_same_shape(const AlgebraVector &o) const {
    if (size() != o.size())
      throw mismatch_error("algebra vectors of different length");
  }

  std::vector<AlgebraElement> entries_;
};

/// A dense k x m grid of algebra elements.
class AlgebraMatrix {
public:
  AlgebraMatrix(FieldSpec f, int rank, std::size_t rows, std::size_t cols)
      : field_(f), rank_(rank), rows_(rows), cols_(cols),
        entries_(rows * cols, AlgebraElement::zero(f, rank)) {}

  static AlgebraMatrix identity(FieldSpec f, int rank, std::size_t n) {
    AlgebraMatrix m(f, rank, n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, i) = AlgebraElement::one(f, rank);
    return m;
  }

  static AlgebraMatrix from_columns(const std::vector<AlgebraVector> &cols) {
    if (cols.empty())
      throw precondition_error("matrix needs at least one column");
    AlgebraMatrix m(cols[0].field(), cols[0].ambient_rank(), cols[0].size(),
                    cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_)
        throw mismatch_error("columns of different length");
      for (std::size_t i = 0; i < m.rows_; ++i)
        m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec &field() const { return field_; }
  int ambient_rank() const { return rank_; }

  AlgebraElement &at(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const AlgebraElement &at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  AlgebraVector column(std::size_t j) const {
    std::vector<AlgebraElement> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      c.push_back(at(i, j));
    return AlgebraVector(std::move(c));
  }

  std::vector<AlgebraVector> columns() const {
    std::vector<AlgebraVector> cs;
    cs.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      cs.push_back(column(j));
    return cs;
  }

  AlgebraMatrix operator*(const AlgebraMatrix &o) const {
    if (cols_ != o.rows_)
      throw mismatch_error("matrix dimensions do not compose");
    AlgebraMatrix r(field_, rank_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        AlgebraElement s = AlgebraElement::zero(field_, rank_);
        for (std::size_t l = 0; l < cols_; ++l)
          s = s + at(i, l) * o.at(l, j);
        r.at(i, j) = s;
      }
    return r;
  }

  AlgebraMatrix operator+(const AlgebraMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw mismatch_error("matrix dimensions differ");
    AlgebraMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      r.entries_[i] = r.entries_[i] + o.entries_[i];
    return r;
  }

  AlgebraMatrix operator-(const AlgebraMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw mismatch_error("matrix dimensions differ");
    AlgebraMatrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      r.entries_[i] = r.entries_[i] - o.entries_[i];
    return r;
  }

  bool operator==(const AlgebraMatrix &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

private:
  FieldSpec field_;
  int rank_;
  std::size_t rows_, cols_;
  std::vector<AlgebraElement> entries_;
};

inline AlgebraMatrix mat_mul(const AlgebraMatrix &a, const AlgebraMatrix &b) {
  return a * b;
}

/// Element-wise iota of the transpose; swaps row and column structure.
inline AlgebraMatrix iota_matrix(const AlgebraMatrix &q) {
  AlgebraMatrix r(q.field(), q.ambient_rank(), q.cols(), q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      r.at(j, i) = iota_elem(q.at(i, j));
  return r;
}

inline std::string to_string(const AlgebraElement &f) {
  if (f.is_zero())
    return "0";
  std::string out;
  // canonical form lists terms descending under the word order
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const Word &w = it->first;
    Scalar c = it->second;
    bool negative = false;
    if (!c.field().prime_field() && c.rational() < 0) {
      negative = true;
      c = -c;
    }
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (w.is_identity())
      out += to_string(c);
    else if (c.is_one())
      out += to_string(w);
    else
      out += to_string(c) + "*" + to_string(w);
  }
  return out;
}

inline std::string to_string(const AlgebraVector &v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

} // namespace fga
