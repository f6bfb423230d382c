#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "fga/groebner.hpp"

namespace fga {

namespace detail {

/// Shared data of the fixed ideal I_k generated by b2^-i b1 b2^i - 1,
/// i = 1..k. Its canonical free basis gives the embedding of K[F]^k.
struct IkData {
  GroebnerData groebner;
  std::vector<AlgebraElement> basis; // k elements, the firsts of I_k
};

inline const IkData &ik_ideal(FieldSpec field, int rank, std::size_t k) {
  if (rank < 2)
    throw precondition_error(
        "module embedding needs a free group of rank >= 2 "
        "(the normal-form alternative for rank 1 is not implemented)");
  struct Key {
    std::uint32_t p;
    int rank;
    std::size_t k;
    bool operator<(const Key &o) const {
      return std::tie(p, rank, k) < std::tie(o.p, o.rank, o.k);
    }
  };
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const IkData>> memo;

  Key key{field.characteristic, rank, k};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(key);
    if (it != memo.end())
      return *it->second;
  }
  std::vector<AlgebraElement> gens;
  Word b1 = Word::generator(rank, 1), b2 = Word::generator(rank, 2);
  Word conj = b1;
  for (std::size_t i = 1; i <= k; ++i) {
    conj = b2.inverse() * conj * b2; // b2^-i b1 b2^i
    gens.push_back(AlgebraElement::from_word(field, conj) -
                   AlgebraElement::one(field, rank));
  }
  auto data = std::make_shared<IkData>(
      IkData{rosenmann_basis(gens), {}});
  if (data->groebner.ideal_rank() != k)
    throw error("internal: I_k has unexpected rank");
  data->basis = data->groebner.firsts;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] = memo.emplace(key, std::move(data));
  (void)fresh; // a concurrent insert of the same value is harmless
  return *it->second;
}

} // namespace detail

/// Image of a column vector under the module isomorphism K[F]^k -> I_k that
/// sends the i-th standard basis vector to the i-th canonical basis element
/// of I_k. Additive and right-K[F]-linear.
inline AlgebraElement embed_vector(const AlgebraVector &f) {
  const auto &ik = detail::ik_ideal(f.field(), f.ambient_rank(), f.size());
  AlgebraElement out = AlgebraElement::zero(f.field(), f.ambient_rank());
  for (std::size_t i = 0; i < f.size(); ++i)
    out = out + ik.basis[i] * f[i];
  return out;
}

/// Inverse of embed_vector; g must lie in I_k.
inline AlgebraVector unembed_vector(const AlgebraElement &g, std::size_t k) {
  const auto &ik = detail::ik_ideal(g.field(), g.ambient_rank(), k);
  auto [coeffs, rem] = extract_coefficients(ik.groebner, g);
  if (!rem.is_zero())
    throw precondition_error("element does not lie in the embedding ideal");
  return AlgebraVector(std::move(coeffs));
}

/// A finitely generated submodule of K[F]^k, presented by generators.
/// Canonical basis data is computed lazily, at most once, and may be read
/// from multiple threads.
class Submodule {
public:
  Submodule(std::size_t k, std::vector<AlgebraVector> gens)
      : k_(k), gens_(std::move(gens)), cache_(std::make_shared<CacheBox>()) {
    if (k_ < 1)
      throw precondition_error("ambient width must be >= 1");
    if (gens_.empty())
      throw precondition_error("submodule needs at least one generator");
    for (const auto &g : gens_)
      if (g.size() != k_)
        throw mismatch_error("generator length differs from ambient width");
  }

  static Submodule from_columns(const AlgebraMatrix &q) {
    return Submodule(q.rows(), q.columns());
  }

  std::size_t ambient_k() const { return k_; }
  const std::vector<AlgebraVector> &gens() const { return gens_; }
  const FieldSpec &field() const { return gens_[0].field(); }
  int ambient_rank() const { return gens_[0].ambient_rank(); }

  bool is_zero() const {
    for (const auto &g : gens_)
      if (!g.is_zero())
        return false;
    return true;
  }

  /// Canonical ideal data of the embedded image (or of the ideal itself
  /// when k = 1, which skips the embedding entirely).
  const GroebnerData &groebner() const { return cached().groebner; }

  /// The canonical free basis as column vectors; size = rank.
  const std::vector<AlgebraVector> &basis() const { return cached().basis; }

private:
  struct CacheData {
    GroebnerData groebner;
    std::vector<AlgebraVector> basis;
  };
  struct CacheBox {
    std::once_flag once;
    std::shared_ptr<const CacheData> data;
  };

  const CacheData &cached() const {
    std::call_once(cache_->once, [this] {
      std::vector<AlgebraElement> ideal_gens;
      ideal_gens.reserve(gens_.size());
      for (const auto &g : gens_)
        ideal_gens.push_back(k_ == 1 ? g[0] : embed_vector(g));
      auto data = std::make_shared<CacheData>(CacheData{
          rosenmann_basis(ideal_gens), {}});
      for (const auto &alpha : data->groebner.firsts)
        data->basis.push_back(k_ == 1
                                  ? AlgebraVector({alpha})
                                  : unembed_vector(alpha, k_));
      cache_->data = std::move(data);
    });
    return *cache_->data;
  }

  std::size_t k_;
  std::vector<AlgebraVector> gens_;
  std::shared_ptr<CacheBox> cache_;
};

inline std::vector<AlgebraVector> module_basis(const Submodule &m) {
  return m.basis();
}

inline std::size_t module_rank(const Submodule &m) {
  return m.groebner().ideal_rank();
}

inline bool module_membership(const Submodule &m, const AlgebraVector &f) {
  if (f.size() != m.ambient_k())
    throw mismatch_error("vector length differs from ambient width");
  AlgebraElement g = m.ambient_k() == 1 ? f[0] : embed_vector(f);
  return ideal_membership(m.groebner(), g);
}

/// Unique coefficients of f in the canonical basis; f must lie in m.
inline std::vector<AlgebraElement> express_in_basis(const Submodule &m,
                                                    const AlgebraVector &f) {
  if (f.size() != m.ambient_k())
    throw mismatch_error("vector length differs from ambient width");
  AlgebraElement g = m.ambient_k() == 1 ? f[0] : embed_vector(f);
  auto [coeffs, rem] = extract_coefficients(m.groebner(), g);
  if (!rem.is_zero())
    throw precondition_error("vector does not lie in the submodule");
  return coeffs;
}

inline bool module_equal(const Submodule &a, const Submodule &b) {
  if (a.ambient_k() != b.ambient_k())
    throw mismatch_error("submodules of different ambient width");
  for (const auto &g : a.gens())
    if (!module_membership(b, g))
      return false;
  for (const auto &g : b.gens())
    if (!module_membership(a, g))
      return false;
  return true;
}

} // namespace fga
