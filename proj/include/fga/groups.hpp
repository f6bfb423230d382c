#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <vector>

#include "fga/duality.hpp"

namespace fga {

/// A finitely generated subgroup of the free group, given by generators.
struct Subgroup {
  int ambient_rank;
  std::vector<Word> gens;

  Subgroup(int rank, std::vector<Word> g)
      : ambient_rank(rank), gens(std::move(g)) {
    for (const auto &w : gens)
      if (w.ambient_rank() != ambient_rank)
        throw mismatch_error("generator from a different free group");
  }

  static Subgroup trivial(int rank) { return Subgroup(rank, {}); }
  static Subgroup whole(int rank) {
    std::vector<Word> g;
    for (int i = 1; i <= rank; ++i)
      g.push_back(Word::generator(rank, i));
    return Subgroup(rank, std::move(g));
  }
};

/// Folded Stallings graph of a subgroup. Vertices are 0..V-1 with base 0;
/// a geometric edge (a, l, b) with l > 0 is traversed forward by the letter
/// l and backward by -l. After folding and trimming every non-base vertex
/// has degree >= 2, membership is path tracing, and rank = E - V + 1.
class CoreGraph {
  struct Edge {
    int from, label, to; // label > 0
  };

public:
  explicit CoreGraph(const Subgroup &h) : rank_(h.ambient_rank), n_(1) {
    for (const Word &w : h.gens) {
      int v = 0;
      const auto &ls = w.letters();
      for (std::size_t i = 0; i < ls.size(); ++i) {
        int target = (i + 1 == ls.size()) ? 0 : n_++;
        if (ls[i] > 0)
          edges_.push_back({v, ls[i], target});
        else
          edges_.push_back({target, -ls[i], v});
        v = target;
      }
    }
    fold();
    trim();
    build_steps();
  }

  int ambient_rank() const { return rank_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(n_); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t rank() const {
    return edges_.size() - vertex_count() + 1;
  }

  bool traces(const Word &w) const {
    int v = 0;
    for (int l : w.letters()) {
      auto it = steps_[static_cast<std::size_t>(v)].find(l);
      if (it == steps_[static_cast<std::size_t>(v)].end())
        return false;
      v = it->second;
    }
    return v == 0;
  }

private:
  // Half-edges at v: pairs (signed letter, neighbor).
  std::vector<std::pair<int, int>> half_edges(int v) const {
    std::vector<std::pair<int, int>> out;
    for (const Edge &e : edges_) {
      if (e.from == v)
        out.push_back({e.label, e.to});
      if (e.to == v)
        out.push_back({-e.label, e.from});
    }
    return out;
  }

  void fold() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n_ && !changed; ++v) {
        auto hs = half_edges(v);
        std::sort(hs.begin(), hs.end());
        for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
          if (hs[i].first != hs[i + 1].first)
            continue;
          int t1 = hs[i].second, t2 = hs[i + 1].second;
          if (t1 == t2)
            drop_duplicate_edge(v, hs[i].first, t1);
          else
            merge(std::min(t1, t2), std::max(t1, t2));
          changed = true;
          break;
        }
      }
    }
  }

  // Two identical geometric edges between v and t with the same label:
  // delete one copy.
  void drop_duplicate_edge(int v, int signed_label, int t) {
    int from = signed_label > 0 ? v : t;
    int to = signed_label > 0 ? t : v;
    int label = std::abs(signed_label);
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].from == from && edges_[i].to == to &&
          edges_[i].label == label) {
        edges_.erase(edges_.begin() + static_cast<std::ptrdiff_t>(i));
        return;
      }
  }

  void merge(int keep, int drop) {
    for (Edge &e : edges_) {
      if (e.from == drop)
        e.from = keep;
      else if (e.from > drop)
        --e.from;
      if (e.to == drop)
        e.to = keep;
      else if (e.to > drop)
        --e.to;
    }
    --n_;
  }

  void trim() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 1; v < n_; ++v) {
        std::size_t degree = 0;
        for (const Edge &e : edges_)
          degree += (e.from == v) + (e.to == v);
        if (degree <= 1) {
          std::erase_if(edges_,
                        [v](const Edge &e) { return e.from == v || e.to == v; });
          for (Edge &e : edges_) {
            if (e.from > v)
              --e.from;
            if (e.to > v)
              --e.to;
          }
          --n_;
          changed = true;
          break;
        }
      }
    }
  }

  void build_steps() {
    steps_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge &e : edges_) {
      steps_[static_cast<std::size_t>(e.from)][e.label] = e.to;
      steps_[static_cast<std::size_t>(e.to)][-e.label] = e.from;
    }
  }

  int rank_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::map<int, int>> steps_;
};

inline CoreGraph core_graph(const Subgroup &h) { return CoreGraph(h); }

inline bool subgroup_membership(const Subgroup &h, const Word &w) {
  if (w.ambient_rank() != h.ambient_rank)
    throw mismatch_error("word from a different free group");
  return CoreGraph(h).traces(w);
}

inline bool subgroup_equal(const Subgroup &a, const Subgroup &b) {
  if (a.ambient_rank != b.ambient_rank)
    throw mismatch_error("subgroups of different free groups");
  CoreGraph ga(a), gb(b);
  for (const auto &w : a.gens)
    if (!gb.traces(w))
      return false;
  for (const auto &w : b.gens)
    if (!ga.traces(w))
      return false;
  return true;
}

inline std::size_t subgroup_rank(const Subgroup &h) {
  return CoreGraph(h).rank();
}

/// The right ideal generated by { h - 1 : h a generator of H }, as a width-1
/// submodule. The trivial subgroup yields the zero ideal.
inline Submodule augmentation_generators(const Subgroup &h,
                                         FieldSpec field = FieldSpec::gf(2)) {
  std::vector<AlgebraVector> gens;
  auto one = AlgebraElement::one(field, h.ambient_rank);
  for (const auto &w : h.gens)
    if (!w.is_identity())
      gens.push_back(
          AlgebraVector({AlgebraElement::from_word(field, w) - one}));
  if (gens.empty())
    gens.push_back(
        AlgebraVector({AlgebraElement::zero(field, h.ambient_rank)}));
  return Submodule(1, gens);
}

/// The smallest L with H algebraic in L and L a free factor of H'. Runs the
/// module closure on the two augmentation ideals and reads the subgroup off
/// the resulting canonical basis, whose elements are differences of two
/// words u - v; the closure is generated by the words u v^-1.
inline Subgroup group_algebraic_closure(const Subgroup &h, const Subgroup &hp,
                                        FieldSpec field = FieldSpec::gf(2)) {
  if (h.ambient_rank != hp.ambient_rank)
    throw mismatch_error("subgroups of different free groups");
  CoreGraph gp(hp);
  for (const auto &w : h.gens)
    if (!gp.traces(w))
      throw precondition_error("first subgroup is not contained in the second");

  bool h_trivial = true;
  for (const auto &w : h.gens)
    if (!w.is_identity())
      h_trivial = false;
  if (h_trivial)
    return Subgroup::trivial(h.ambient_rank); // already a free factor

  Submodule jh = augmentation_generators(h, field);
  Submodule jhp = augmentation_generators(hp, field);
  Submodule closure = algebraic_closure(jh, jhp);

  std::vector<Word> gens;
  for (const AlgebraVector &b : closure.basis()) {
    const AlgebraElement &e = b[0];
    if (e.support_size() != 2)
      throw error("internal: closure basis element is not a binomial");
    auto it = e.terms().begin();
    const Word &v = it->first;
    Scalar cv = it->second;
    ++it;
    const Word &u = it->first;
    Scalar cu = it->second;
    if (!cu.is_one() || !(cv == -Scalar::one(field)))
      throw error("internal: closure basis binomial is not of the form u - v");
    gens.push_back(u * v.inverse());
  }
  return Subgroup(h.ambient_rank, std::move(gens));
}

inline bool group_is_algebraic(const Subgroup &h, const Subgroup &hp,
                               FieldSpec field = FieldSpec::gf(2)) {
  return subgroup_equal(group_algebraic_closure(h, hp, field), hp);
}

inline bool group_is_free_factor(const Subgroup &h, const Subgroup &hp,
                                 FieldSpec field = FieldSpec::gf(2)) {
  return subgroup_equal(group_algebraic_closure(h, hp, field), h);
}

inline bool word_is_primitive(const Word &w, const Subgroup &hp,
                              FieldSpec field = FieldSpec::gf(2)) {
  if (w.is_identity())
    throw precondition_error("the identity is never primitive");
  if (!subgroup_membership(hp, w))
    throw precondition_error("word does not lie in the subgroup");
  return group_is_free_factor(Subgroup(w.ambient_rank(), {w}), hp, field);
}

namespace detail {

inline Word cyclic_reduce(const Word &w) {
  std::vector<int> ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == -ls[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word::from_letters(w.ambient_rank(),
                            std::vector<int>(ls.begin() + lo, ls.begin() + hi));
}

/// Applies the automorphism determined by a multiplier letter `a` and a
/// letter set A (containing a, not a^-1): a is fixed; any other letter x
/// picks up a^-1 on the left when x^-1 is in A and a on the right when x
/// is in A.
inline Word whitehead_apply(const Word &w, int a,
                            const std::vector<int> &in_set) {
  auto member = [&](int l) {
    return std::find(in_set.begin(), in_set.end(), l) != in_set.end();
  };
  Word out(w.ambient_rank());
  for (int l : w.letters()) {
    std::vector<int> image;
    if (l == a || l == -a)
      image = {l};
    else {
      if (member(-l))
        image.push_back(-a);
      image.push_back(l);
      if (member(l))
        image.push_back(a);
    }
    out = out * Word::from_letters(w.ambient_rank(), image);
  }
  return out;
}

} // namespace detail

/// Brute-force primitivity test by greedy length descent under the finite
/// set of letter-level automorphisms: a word is primitive exactly when its
/// cyclic length can be driven to 1. Restricted to small inputs; this is a
/// cross-validation oracle, not a production path.
inline bool whitehead_primitivity_oracle(const Word &w) {
  int r = w.ambient_rank();
  if (r > 3 || w.length() > 10)
    throw budget_error("primitivity oracle limited to rank <= 3 and "
                       "length <= 10");
  if (w.is_identity())
    return false;

  std::vector<int> letters;
  for (int i = 1; i <= r; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }

  Word cur = detail::cyclic_reduce(w);
  bool improved = true;
  while (improved && cur.length() > 1) {
    improved = false;
    for (int a : letters) {
      std::vector<int> rest;
      for (int l : letters)
        if (l != a && l != -a)
          rest.push_back(l);
      for (std::size_t mask = 0; mask < (std::size_t{1} << rest.size());
           ++mask) {
        std::vector<int> in_set{a};
        for (std::size_t b = 0; b < rest.size(); ++b)
          if (mask & (std::size_t{1} << b))
            in_set.push_back(rest[b]);
        Word img =
            detail::cyclic_reduce(detail::whitehead_apply(cur, a, in_set));
        if (img.length() < cur.length()) {
          cur = img;
          improved = true;
          break;
        }
      }
      if (improved)
        break;
    }
  }
  return cur.length() == 1;
}

} // namespace fga
