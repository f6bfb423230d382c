#pragma once

#include <vector>

#include "fga/modules.hpp"

namespace fga {

/// Generators of M ∩ N through the split exact sequence of the sum:
/// stack the generators of both modules into one row v, compute the
/// canonical basis u of the sum with its tracked expression matrix A
/// (v A = u) and the unique B with u B = v, and read the intersection
/// off the entries of v P (I - A B), where P projects onto the M block.
inline Submodule module_intersection(const Submodule &m, const Submodule &n) {
  if (m.ambient_k() != n.ambient_k())
    throw mismatch_error("modules of different ambient width");
  if (!(m.field() == n.field()) || m.ambient_rank() != n.ambient_rank())
    throw mismatch_error("modules over different fields or free groups");

  std::size_t k = m.ambient_k();
  FieldSpec field = m.field();
  int rank = m.ambient_rank();

  std::vector<AlgebraElement> v;
  for (const auto &g : m.gens())
    v.push_back(k == 1 ? g[0] : embed_vector(g));
  for (const auto &g : n.gens())
    v.push_back(k == 1 ? g[0] : embed_vector(g));
  std::size_t s = m.gens().size(), total = v.size();

  GroebnerData sum = rosenmann_basis(v);
  std::size_t t = sum.ideal_rank();

  AlgebraMatrix vm(field, rank, 1, total);
  for (std::size_t j = 0; j < total; ++j)
    vm.at(0, j) = v[j];

  const AlgebraMatrix &a = sum.transform_A; // total x t, with v A = u
  AlgebraMatrix b(field, rank, t, total);   // u B = v
  for (std::size_t j = 0; j < total; ++j) {
    auto [coeffs, rem] = extract_coefficients(sum, v[j]);
    if (!rem.is_zero())
      throw error("internal: generator fails to reduce in its own ideal");
    for (std::size_t i = 0; i < t; ++i)
      b.at(i, j) = coeffs[i];
  }

  AlgebraMatrix p(field, rank, total, total);
  for (std::size_t i = 0; i < s; ++i)
    p.at(i, i) = AlgebraElement::one(field, rank);

  AlgebraMatrix h =
      vm * (p * (AlgebraMatrix::identity(field, rank, total) - a * b));

  std::vector<AlgebraVector> gens;
  for (std::size_t j = 0; j < total; ++j) {
    const AlgebraElement &e = h.at(0, j);
    if (e.is_zero())
      continue;
    gens.push_back(k == 1 ? AlgebraVector({e}) : unembed_vector(e, k));
  }
  if (gens.empty())
    gens.push_back(AlgebraVector::zero(field, rank, k));
  return Submodule(k, gens);
}

} // namespace fga
