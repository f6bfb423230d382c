#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <utility>
#include <vector>

#include "fga/element.hpp"

namespace fga {

/// Result of dividing an element by a fixed list of monic divisors:
/// f = sum_j basis[j] * quotients[j] + remainder.
struct Reduction {
  AlgebraElement remainder;
  std::vector<AlgebraElement> quotients;

  explicit Reduction(const AlgebraElement &f, std::size_t n)
      : remainder(f),
        quotients(n, AlgebraElement::zero(f.field(), f.ambient_rank())) {}
};

/// Repeatedly rewrites the largest support word of the remainder that has
/// some divisor's leading power product as a prefix. Divisors must be monic
/// and nonzero. Terminates because each step strictly shrinks the support
/// in the support well-order.
inline Reduction reduce_modulo(const AlgebraElement &f,
                               const std::vector<const AlgebraElement *> &basis) {
  Reduction r(f, basis.size());
  bool again = true;
  while (again) {
    again = false;
    for (auto it = r.remainder.terms().rbegin();
         it != r.remainder.terms().rend(); ++it) {
      const Word &w = it->first;
      std::size_t hit = basis.size();
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (lpp(*basis[j]).is_prefix_of(w)) {
          hit = j;
          break;
        }
      if (hit == basis.size())
        continue;
      Scalar c = it->second;
      Word tail = w.suffix_after(lpp(*basis[hit]));
      AlgebraElement q = AlgebraElement::monomial(c, tail);
      r.remainder = r.remainder - *basis[hit] * q;
      r.quotients[hit] = r.quotients[hit] + q;
      again = true;
      break; // the term map changed; restart the scan
    }
  }
  return r;
}

/// Canonical data of a finitely generated right ideal: a free basis
/// (the firsts), their unit-orbit mates (the seconds), the matrix C with
/// beta = alpha * C, the prefix-reduction word set, and the matrix A
/// expressing the firsts in the input generators (v * A = alpha for the
/// generator row v).
struct GroebnerData {
  FieldSpec field;
  int rank; // ambient free-group rank

  std::vector<AlgebraElement> firsts;
  std::vector<AlgebraElement> seconds;
  AlgebraMatrix C;           // firsts.size() x seconds.size()
  WordSet lpp_set;           // LPPs of firsts and seconds
  AlgebraMatrix transform_A; // #input gens x firsts.size()
  bool is_unit_ideal = false;

  GroebnerData(FieldSpec f, int r, std::size_t n_gens)
      : field(f), rank(r), C(f, r, 0, 0), transform_A(f, r, n_gens, 0) {}

  bool is_zero_ideal() const { return firsts.empty(); }
  std::size_t ideal_rank() const { return firsts.size(); }

  /// Firsts followed by seconds: the full reduction system.
  std::vector<const AlgebraElement *> basis_pointers() const {
    std::vector<const AlgebraElement *> b;
    b.reserve(firsts.size() + seconds.size());
    for (const auto &g : firsts)
      b.push_back(&g);
    for (const auto &g : seconds)
      b.push_back(&g);
    return b;
  }
};

namespace detail {

/// An element of the working set together with its expression in the input
/// generators: elem = sum_i gens[i] * expr[i].
struct Tracked {
  AlgebraElement elem;
  std::vector<AlgebraElement> expr;
};

/// Divides t.elem by the elems of `others`, composing provenance.
inline void reduce_tracked(Tracked &t, const std::vector<Tracked *> &others) {
  std::vector<const AlgebraElement *> basis;
  basis.reserve(others.size());
  for (Tracked *o : others)
    basis.push_back(&o->elem);
  Reduction r = reduce_modulo(t.elem, basis);
  t.elem = r.remainder;
  for (std::size_t j = 0; j < others.size(); ++j)
    if (!r.quotients[j].is_zero())
      for (std::size_t i = 0; i < t.expr.size(); ++i)
        t.expr[i] = t.expr[i] - others[j]->expr[i] * r.quotients[j];
}

inline void make_monic_tracked(Tracked &t) {
  Scalar s = leading_coefficient(t.elem).inv();
  t.elem = t.elem * s;
  for (auto &e : t.expr)
    e = e * s;
}

/// True when b == a * (c * w) for some scalar c and word w, i.e. a and b
/// generate the same cyclic right module. Both inputs are monic. Candidate
/// words are u^-1 * u' over support words u of a, u' of b.
inline bool unit_equivalent(const AlgebraElement &a, const AlgebraElement &b) {
  if (a.support_size() != b.support_size())
    return false;
  for (const auto &[u, cu] : a.terms())
    for (const auto &[v, cv] : b.terms()) {
      Word w = u.inverse() * v;
      AlgebraElement h = a * w;
      if (!h.is_zero() && make_monic(h) == b)
        return true;
    }
  return false;
}

} // namespace detail

/// Process-wide default for the completion insertion cap; adjustable by
/// front ends before kicking off a computation.
inline std::size_t &completion_insertion_cap() {
  static std::size_t cap = 100000;
  return cap;
}

/// Computes the canonical free-basis data of the right ideal generated by
/// `gens`. Deterministic: the output depends only on the ideal, not on the
/// particular generating set. Throws budget_error if the working set would
/// exceed `insertion_cap` insertions.
inline GroebnerData
rosenmann_basis(const std::vector<AlgebraElement> &gens,
                std::size_t insertion_cap = completion_insertion_cap()) {
  if (gens.empty())
    throw precondition_error("ideal needs at least one generator");
  FieldSpec field = gens[0].field();
  int rank = gens[0].ambient_rank();
  for (const auto &g : gens)
    if (!(g.field() == field) || g.ambient_rank() != rank)
      throw mismatch_error("generators over mixed fields or ranks");

  std::vector<detail::Tracked> W;
  std::size_t insertions = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero())
      continue;
    detail::Tracked t{gens[i],
                      std::vector<AlgebraElement>(
                          gens.size(), AlgebraElement::zero(field, rank))};
    t.expr[i] = AlgebraElement::one(field, rank);
    detail::make_monic_tracked(t);
    W.push_back(std::move(t));
    ++insertions;
  }

  GroebnerData out(field, rank, gens.size());
  if (W.empty())
    return out; // the zero ideal

  auto interreduce = [&W]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < W.size(); ++i) {
        std::vector<detail::Tracked *> others;
        others.reserve(W.size() - 1);
        for (std::size_t j = 0; j < W.size(); ++j)
          if (j != i)
            others.push_back(&W[j]);
        AlgebraElement before = W[i].elem;
        detail::reduce_tracked(W[i], others);
        if (W[i].elem.is_zero()) {
          W.erase(W.begin() + static_cast<std::ptrdiff_t>(i));
          --i;
          changed = true;
        } else if (W[i].elem != before) {
          detail::make_monic_tracked(W[i]);
          changed = true;
        }
      }
    }
  };

  for (;;) {
    interreduce();
    // Close under the one way a right unit multiple escapes prefix
    // rewriting: multiplying by the inverse of the last letter of the
    // leading word, which changes the leading word by cancellation.
    std::vector<detail::Tracked> fresh;
    std::vector<detail::Tracked *> all;
    for (auto &t : W)
      all.push_back(&t);
    for (const auto &g : W) {
      if (g.elem.support_size() == 1 && lpp(g.elem).is_identity())
        continue; // the unit ideal: nothing left to saturate
      Word shift = Word::generator(rank, std::abs(lpp(g.elem).last_letter()),
                                   lpp(g.elem).last_letter() > 0 ? -1 : +1);
      detail::Tracked cand{g.elem * shift, g.expr};
      for (auto &e : cand.expr)
        e = e * shift;
      detail::reduce_tracked(cand, all);
      if (cand.elem.is_zero())
        continue;
      detail::make_monic_tracked(cand);
      fresh.push_back(std::move(cand));
      if (++insertions > insertion_cap)
        throw budget_error("ideal completion exceeded the insertion cap");
    }
    if (fresh.empty())
      break;
    for (auto &t : fresh)
      W.push_back(std::move(t));
  }

  // Split the interreduced set into unit-equivalence classes; the minimal
  // member of each class (under the support order) is a basis element, the
  // rest are its seconds.
  std::vector<std::vector<detail::Tracked *>> classes;
  for (auto &t : W) {
    bool placed = false;
    for (auto &cls : classes)
      if (detail::unit_equivalent(cls[0]->elem, t.elem)) {
        cls.push_back(&t);
        placed = true;
        break;
      }
    if (!placed)
      classes.push_back({&t});
  }
  for (auto &cls : classes) {
    std::sort(cls.begin(), cls.end(),
              [](const detail::Tracked *a, const detail::Tracked *b) {
                return support_compare(a->elem.support(), b->elem.support()) ==
                       Order::LT;
              });
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto &a, const auto &b) {
              return support_compare(a[0]->elem.support(),
                                     b[0]->elem.support()) == Order::LT;
            });

  struct SecondInfo {
    const detail::Tracked *t;
    std::size_t first_index;
  };
  std::vector<SecondInfo> secs;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.firsts.push_back(classes[i][0]->elem);
    for (std::size_t j = 1; j < classes[i].size(); ++j)
      secs.push_back({classes[i][j], i});
  }
  std::sort(secs.begin(), secs.end(), [](const SecondInfo &a,
                                         const SecondInfo &b) {
    return support_compare(a.t->elem.support(), b.t->elem.support()) ==
           Order::LT;
  });

  std::size_t m = out.firsts.size();
  out.C = AlgebraMatrix(field, rank, m, secs.size());
  for (std::size_t j = 0; j < secs.size(); ++j) {
    out.seconds.push_back(secs[j].t->elem);
    // beta = alpha_i * (c * w): recover the unit by division
    const AlgebraElement &alpha = out.firsts[secs[j].first_index];
    const AlgebraElement &beta = out.seconds.back();
    bool found = false;
    for (const auto &[u, cu] : alpha.terms()) {
      for (const auto &[v, cv] : beta.terms()) {
        Word w = u.inverse() * v;
        AlgebraElement h = alpha * w;
        if (h.is_zero())
          continue;
        Scalar c = leading_coefficient(h).inv() *
                   leading_coefficient(beta); // beta is monic, so this is lc^-1
        if (alpha * AlgebraElement::monomial(c, w) == beta) {
          out.C.at(secs[j].first_index, j) = AlgebraElement::monomial(c, w);
          found = true;
          break;
        }
      }
      if (found)
        break;
    }
    if (!found)
      throw error("internal: unit relating a basis element to its second "
                  "not found");
  }

  for (const auto &g : out.firsts)
    out.lpp_set.insert(lpp(g));
  for (const auto &g : out.seconds)
    out.lpp_set.insert(lpp(g));

  out.transform_A = AlgebraMatrix(field, rank, gens.size(), m);
  std::size_t col = 0;
  for (const auto &cls : classes) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      out.transform_A.at(i, col) = cls[0]->expr[i];
    ++col;
  }

  out.is_unit_ideal =
      m == 1 && out.firsts[0] == AlgebraElement::one(field, rank);
  return out;
}

/// The unique minimal-support representative of f's coset modulo the ideal.
inline AlgebraElement remainder(const AlgebraElement &f,
                                const GroebnerData &g) {
  if (!(f.field() == g.field) || f.ambient_rank() != g.rank)
    throw mismatch_error("element incompatible with ideal data");
  if (g.is_zero_ideal())
    return f;
  return reduce_modulo(f, g.basis_pointers()).remainder;
}

/// Divides f by the free basis: f = sum_i firsts[i] * coeffs[i] + rem,
/// with rem fully reduced. The coefficients are unique.
inline std::pair<std::vector<AlgebraElement>, AlgebraElement>
extract_coefficients(const GroebnerData &g, const AlgebraElement &f) {
  if (!(f.field() == g.field) || f.ambient_rank() != g.rank)
    throw mismatch_error("element incompatible with ideal data");
  std::size_t m = g.firsts.size();
  std::vector<AlgebraElement> coeffs(
      m, AlgebraElement::zero(f.field(), f.ambient_rank()));
  if (g.is_zero_ideal())
    return {coeffs, f};
  Reduction r = reduce_modulo(f, g.basis_pointers());
  // quotients split as (s | t) over firsts and seconds; fold the seconds
  // back through beta = alpha * C, so g = s + C t.
  for (std::size_t i = 0; i < m; ++i) {
    coeffs[i] = r.quotients[i];
    for (std::size_t j = 0; j < g.seconds.size(); ++j)
      coeffs[i] = coeffs[i] + g.C.at(i, j) * r.quotients[m + j];
  }
  return {coeffs, r.remainder};
}

inline std::pair<std::vector<AlgebraElement>, AlgebraElement>
extract_coefficients(const std::vector<AlgebraElement> &gens,
                     const AlgebraElement &f) {
  return extract_coefficients(rosenmann_basis(gens), f);
}

inline bool ideal_membership(const GroebnerData &g, const AlgebraElement &f) {
  return remainder(f, g).is_zero();
}

inline bool ideal_membership(const std::vector<AlgebraElement> &gens,
                             const AlgebraElement &f) {
  return ideal_membership(rosenmann_basis(gens), f);
}

inline bool ideal_equal(const std::vector<AlgebraElement> &gens_a,
                        const std::vector<AlgebraElement> &gens_b) {
  GroebnerData ga = rosenmann_basis(gens_a);
  GroebnerData gb = rosenmann_basis(gens_b);
  for (const auto &g : gens_a)
    if (!ideal_membership(gb, g))
      return false;
  for (const auto &g : gens_b)
    if (!ideal_membership(ga, g))
      return false;
  // equal ideals must agree on the canonical basis
  if (ga.firsts != gb.firsts)
    throw error("internal: equal ideals produced different canonical bases");
  return true;
}

inline std::size_t ideal_rank(const std::vector<AlgebraElement> &gens) {
  return rosenmann_basis(gens).ideal_rank();
}

} // namespace fga
