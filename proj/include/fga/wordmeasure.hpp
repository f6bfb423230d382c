#pragma once

#include <cstdint>
#include <vector>

#include "fga/modules.hpp"

namespace fga {

/// Dense matrix over GF(p) for tiny linear algebra (ranks, inverses) in the
/// measure computations.
class FpMat {
public:
  FpMat(std::uint32_t p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FpMat identity(std::uint32_t p, std::size_t n) {
    FpMat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
      m.at(i, i) = 1;
    return m;
  }

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t &at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  FpMat operator*(const FpMat &o) const {
    if (cols_ != o.rows_)
      throw mismatch_error("matrix dimensions do not compose");
    FpMat r(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t l = 0; l < cols_; ++l) {
        std::int64_t v = at(i, l);
        if (!v)
          continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = (r.at(i, j) + v * o.at(l, j)) % p_;
      }
    return r;
  }

  FpMat operator+(const FpMat &o) const {
    FpMat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
      r.a_[i] = (r.a_[i] + o.a_[i]) % p_;
    return r;
  }

  FpMat scaled(std::int64_t c) const {
    FpMat r = *this;
    c = ((c % p_) + p_) % p_;
    for (auto &v : r.a_)
      v = v * c % p_;
    return r;
  }

  bool operator==(const FpMat &o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  std::size_t rank() const {
    FpMat m = *this;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols_ && rk < rows_; ++col) {
      std::size_t piv = rk;
      while (piv < rows_ && m.at(piv, col) == 0)
        ++piv;
      if (piv == rows_)
        continue;
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m.at(rk, j), m.at(piv, j));
      std::int64_t inv = inv_mod(m.at(rk, col));
      for (std::size_t j = 0; j < cols_; ++j)
        m.at(rk, j) = m.at(rk, j) * inv % p_;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == rk || m.at(i, col) == 0)
          continue;
        std::int64_t f = m.at(i, col);
        for (std::size_t j = 0; j < cols_; ++j)
          m.at(i, j) = ((m.at(i, j) - f * m.at(rk, j)) % p_ + p_) % p_;
      }
      ++rk;
    }
    return rk;
  }

  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

  FpMat inverse() const {
    if (rows_ != cols_)
      throw precondition_error("inverse of a non-square matrix");
    FpMat m = *this, inv = identity(p_, rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t piv = col;
      while (piv < rows_ && m.at(piv, col) == 0)
        ++piv;
      if (piv == rows_)
        throw precondition_error("matrix is singular");
      for (std::size_t j = 0; j < cols_; ++j) {
        std::swap(m.at(col, j), m.at(piv, j));
        std::swap(inv.at(col, j), inv.at(piv, j));
      }
      std::int64_t f = inv_mod(m.at(col, col));
      for (std::size_t j = 0; j < cols_; ++j) {
        m.at(col, j) = m.at(col, j) * f % p_;
        inv.at(col, j) = inv.at(col, j) * f % p_;
      }
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == col || m.at(i, col) == 0)
          continue;
        std::int64_t g = m.at(i, col);
        for (std::size_t j = 0; j < cols_; ++j) {
          m.at(i, j) = ((m.at(i, j) - g * m.at(col, j)) % p_ + p_) % p_;
          inv.at(i, j) = ((inv.at(i, j) - g * inv.at(col, j)) % p_ + p_) % p_;
        }
      }
    }
    return inv;
  }

private:
  std::int64_t inv_mod(std::int64_t v) const {
    std::int64_t r = 1, b = v % p_, e = p_ - 2; // Fermat
    while (e) {
      if (e & 1)
        r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return r;
  }

  std::uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<std::int64_t> a_;
};

/// A module structure on K^N: one invertible N x N matrix over GF(q) per
/// free-group generator, with precomputed inverses.
struct ModuleAssignment {
  std::uint32_t q;
  std::size_t n;
  std::vector<FpMat> mats;
  std::vector<FpMat> invs;

  ModuleAssignment(std::uint32_t q_, std::size_t n_, std::vector<FpMat> ms)
      : q(q_), n(n_), mats(std::move(ms)) {
    for (const auto &m : mats) {
      if (!m.invertible())
        throw precondition_error("module assignment needs invertible "
                                 "matrices");
      invs.push_back(m.inverse());
    }
  }
};

/// The algebra homomorphism K[F] -> Mat_NxN(GF(q)) induced by the
/// assignment: each generator goes to its matrix, extended multiplicatively
/// over words and linearly over terms.
inline FpMat evaluate_hat_g(const ModuleAssignment &g,
                            const AlgebraElement &f) {
  if (!f.field().prime_field() || f.field().characteristic != g.q)
    throw mismatch_error("element field does not match the assignment");
  FpMat out(g.q, g.n, g.n);
  for (const auto &[w, c] : f.terms()) {
    FpMat m = FpMat::identity(g.q, g.n);
    for (int l : w.letters())
      m = m * (l > 0 ? g.mats[static_cast<std::size_t>(l - 1)]
                     : g.invs[static_cast<std::size_t>(-l - 1)]);
    out = out + m.scaled(c.residue());
  }
  return out;
}

namespace detail {

inline std::vector<FpMat> all_invertible(std::uint32_t q, std::size_t n) {
  std::vector<FpMat> out;
  std::size_t cells = n * n;
  std::vector<std::int64_t> digits(cells, 0);
  for (;;) {
    FpMat m(q, n, n);
    for (std::size_t i = 0; i < cells; ++i)
      m.at(i / n, i % n) = digits[i];
    if (m.invertible())
      out.push_back(m);
    std::size_t i = 0;
    while (i < cells && ++digits[i] == q)
      digits[i++] = 0;
    if (i == cells)
      break;
  }
  return out;
}

inline BigInt pow_big(BigInt b, std::size_t e) {
  BigInt r = 1;
  while (e--)
    r *= b;
  return r;
}

inline BigInt gl_order(std::uint32_t q, std::size_t n) {
  BigInt qn = pow_big(BigInt(q), n), order = 1;
  for (std::size_t i = 0; i < n; ++i)
    order *= qn - pow_big(BigInt(q), i);
  return order;
}

struct MeasureSetup {
  std::vector<AlgebraVector> basis; // of J, size t
  std::vector<std::vector<AlgebraElement>> c_cols; // s columns of length t
};

inline MeasureSetup measure_setup(const Submodule &i, const Submodule &j,
                                  std::uint32_t q) {
  if (!i.field().prime_field() || i.field().characteristic != q ||
      !(i.field() == j.field()))
    throw precondition_error("word measures need a prime field matching q");
  if (i.ambient_k() != j.ambient_k() ||
      i.ambient_rank() != j.ambient_rank())
    throw mismatch_error("modules of different shape");
  MeasureSetup s;
  s.basis = module_basis(j);
  for (const auto &g : i.gens()) {
    if (g.is_zero()) {
      s.c_cols.push_back(std::vector<AlgebraElement>(
          s.basis.size(), AlgebraElement::zero(i.field(), i.ambient_rank())));
      continue;
    }
    s.c_cols.push_back(express_in_basis(j, g)); // throws if not contained
  }
  return s;
}

} // namespace detail

enum class MeasureAction { rows, columns };

/// Exact value of the measure q^N * P(I ⊆ ker φ_J), evaluated as
/// q^N |GL_N(q)|^{-r} Σ_g q^{-rk(ĝ(C))}, where C expresses I's generators
/// in J's canonical basis. Requires I ≤ J over GF(q); refuses when the
/// enumeration |GL_N(q)|^r exceeds the budget.
inline Rational phi_exact(const Submodule &i, const Submodule &j,
                          std::uint32_t q, std::size_t n,
                          MeasureAction action = MeasureAction::rows,
                          std::uint64_t budget = 10000000) {
  detail::MeasureSetup setup = detail::measure_setup(i, j, q);
  std::size_t t = setup.basis.size(), s = setup.c_cols.size();
  std::size_t r = static_cast<std::size_t>(i.ambient_rank());

  BigInt structures = detail::pow_big(detail::gl_order(q, n), r);
  if (structures > budget)
    throw budget_error("word-measure enumeration exceeds the budget");
  std::vector<FpMat> gl = detail::all_invertible(q, n);

  BigInt qn = detail::pow_big(BigInt(q), n);
  // Σ_g q^{tN - rk(ĝ(C))} counted in units of q^{-tN} at the end
  Rational total = 0;
  std::vector<std::size_t> idx(r, 0);
  for (;;) {
    std::vector<FpMat> mats;
    for (std::size_t l = 0; l < r; ++l)
      mats.push_back(gl[idx[l]]);
    ModuleAssignment g(q, n, std::move(mats));

    std::size_t rk;
    if (action == MeasureAction::rows) {
      // block (i, j) of the tN x sN matrix is ĝ(C[i][j])
      FpMat big(q, t * n, s * n);
      for (std::size_t bi = 0; bi < t; ++bi)
        for (std::size_t bj = 0; bj < s; ++bj) {
          FpMat blk = evaluate_hat_g(g, setup.c_cols[bj][bi]);
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              big.at(bi * n + a, bj * n + b) = blk.at(a, b);
        }
      rk = big.rank();
    } else {
      // column-vector action v·h = ĝ(ι(h)) v: the constraint matrix is
      // sN x tN with block (j, i) = ĝ(ι(C[i][j]))
      FpMat big(q, s * n, t * n);
      for (std::size_t bi = 0; bi < t; ++bi)
        for (std::size_t bj = 0; bj < s; ++bj) {
          FpMat blk = evaluate_hat_g(g, iota_elem(setup.c_cols[bj][bi]));
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              big.at(bj * n + a, bi * n + b) = blk.at(a, b);
        }
      rk = big.rank();
    }
    total += Rational(1) / detail::pow_big(BigInt(q), rk);

    std::size_t l = 0;
    while (l < r && ++idx[l] == gl.size())
      idx[l++] = 0;
    if (l == r)
      break;
  }
  return Rational(qn) * total / Rational(structures);
}

/// The same measure by brute force over every homomorphism choice: for each
/// module structure, enumerate all q^{Nt} images of J's basis and count the
/// choices that kill every generator of I. Test oracle with a stricter
/// budget.
inline Rational phi_direct(const Submodule &i, const Submodule &j,
                           std::uint32_t q, std::size_t n,
                           std::uint64_t budget = 10000000) {
  detail::MeasureSetup setup = detail::measure_setup(i, j, q);
  std::size_t t = setup.basis.size(), s = setup.c_cols.size();
  std::size_t r = static_cast<std::size_t>(i.ambient_rank());

  BigInt structures = detail::pow_big(detail::gl_order(q, n), r);
  BigInt homs = detail::pow_big(BigInt(q), n * t);
  if (structures * homs > budget)
    throw budget_error("direct word-measure enumeration exceeds the budget");
  std::vector<FpMat> gl = detail::all_invertible(q, n);

  BigInt hits = 0;
  std::vector<std::size_t> idx(r, 0);
  for (;;) {
    std::vector<FpMat> mats;
    for (std::size_t l = 0; l < r; ++l)
      mats.push_back(gl[idx[l]]);
    ModuleAssignment g(q, n, std::move(mats));

    std::vector<FpMat> hats; // ĝ of each C entry, column-major
    for (std::size_t bj = 0; bj < s; ++bj)
      for (std::size_t bi = 0; bi < t; ++bi)
        hats.push_back(evaluate_hat_g(g, setup.c_cols[bj][bi]));

    // enumerate row-vector images phi(T_1..T_t) in (GF(q)^N)^t
    std::vector<std::int64_t> choice(n * t, 0);
    for (;;) {
      bool ok = true;
      for (std::size_t bj = 0; bj < s && ok; ++bj) {
        // phi(S_j) = Σ_i phi(T_i) ĝ(C[i][j]) must vanish
        for (std::size_t col = 0; col < n && ok; ++col) {
          std::int64_t acc = 0;
          for (std::size_t bi = 0; bi < t; ++bi) {
            const FpMat &blk = hats[bj * t + bi];
            for (std::size_t a = 0; a < n; ++a)
              acc += choice[bi * n + a] * blk.at(a, col);
          }
          if (acc % q != 0)
            ok = false;
        }
      }
      if (ok)
        ++hits;
      std::size_t c = 0;
      while (c < n * t && ++choice[c] == q)
        choice[c++] = 0;
      if (c == n * t)
        break;
    }

    std::size_t l = 0;
    while (l < r && ++idx[l] == gl.size())
      idx[l++] = 0;
    if (l == r)
      break;
  }
  BigInt qn = detail::pow_big(BigInt(q), n);
  return Rational(qn) * Rational(hits) / Rational(structures * homs);
}

} // namespace fga
