#pragma once

#include <vector>

#include "fga/modules.hpp"

namespace fga {

/// The dual of M with respect to Q, returned through iota as a right
/// submodule of K[F]^m (m = number of columns of Q): express each column
/// of Q in M's canonical basis to form G, then take the columns of the
/// iota-transpose of G. Requires every column of Q to lie in M.
inline Submodule q_dual(const AlgebraMatrix &q, const Submodule &m) {
  if (q.rows() != m.ambient_k())
    throw mismatch_error("matrix height differs from the module's ambient "
                         "width");
  std::size_t t = module_rank(m);
  if (t == 0) {
    // only the zero matrix has columns in the zero module; its dual is
    // everything, but with no basis to express against we return the
    // ambient-spanning description directly
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (!q.column(j).is_zero())
        throw precondition_error("matrix column does not lie in the module");
    std::vector<AlgebraVector> std_gens;
    for (std::size_t i = 0; i < q.cols(); ++i)
      std_gens.push_back(
          AlgebraVector::unit(q.field(), q.ambient_rank(), q.cols(), i));
    return Submodule(q.cols(), std_gens);
  }
  AlgebraMatrix g(q.field(), q.ambient_rank(), t, q.cols());
  for (std::size_t j = 0; j < q.cols(); ++j) {
    std::vector<AlgebraElement> coeffs = express_in_basis(m, q.column(j));
    for (std::size_t i = 0; i < t; ++i)
      g.at(i, j) = coeffs[i];
  }
  return Submodule::from_columns(iota_matrix(g));
}

/// The smallest L with M algebraic in L and L a free factor of N, computed
/// as the double dual of M inside N. Requires M nonzero and M ≤ N.
inline Submodule algebraic_closure(const Submodule &m, const Submodule &n) {
  if (m.ambient_k() != n.ambient_k())
    throw mismatch_error("modules of different ambient width");
  if (m.is_zero())
    throw precondition_error("closure of the zero module is not defined");
  for (const auto &g : m.gens())
    if (!module_membership(n, g))
      throw precondition_error("first module is not contained in the second");
  AlgebraMatrix q = AlgebraMatrix::from_columns(m.gens());
  Submodule d = q_dual(q, n);
  return q_dual(iota_matrix(q), d);
}

inline bool is_algebraic(const Submodule &m, const Submodule &n) {
  return module_equal(algebraic_closure(m, n), n);
}

inline bool is_free_factor(const Submodule &m, const Submodule &n) {
  return module_equal(algebraic_closure(m, n), m);
}

/// True when f extends to a free basis of N.
inline bool is_primitive(const AlgebraVector &f, const Submodule &n) {
  if (f.is_zero())
    throw precondition_error("the zero vector is never primitive");
  if (!module_membership(n, f))
    throw precondition_error("vector does not lie in the module");
  return is_free_factor(Submodule(f.size(), {f}), n);
}

/// The dual of the right ideal J with respect to the 1x1 matrix (w - λ),
/// returned through iota as a right ideal. On algebraic extensions of
/// (w - λ)K[F] this map is inverted by the same map with λ^-1.
inline Submodule dual_wrt_word(const Word &w, const Scalar &lambda,
                               const Submodule &j) {
  if (lambda.is_zero())
    throw precondition_error("the scalar must be invertible");
  if (j.ambient_k() != 1)
    throw precondition_error("word duality acts on right ideals (width 1)");
  AlgebraElement q_elem =
      AlgebraElement::from_word(lambda.field(), w) -
      AlgebraElement::monomial(lambda, Word(w.ambient_rank()));
  AlgebraVector col({q_elem});
  if (!module_membership(j, col))
    throw precondition_error("w - λ does not lie in the ideal");
  AlgebraMatrix q = AlgebraMatrix::from_columns({col});
  return q_dual(q, j);
}

} // namespace fga
