#ifndef LTS_DETAIL_SPARSE_HPP
#define LTS_DETAIL_SPARSE_HPP

#include <lts/cochain.hpp>
#include <lts/rational.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

/// \file sparse.hpp
/// Sparse cochains and a scatter-mode circle product.
///
/// The dense circle product loops over every output tuple; its cost grows
/// with dim^arity regardless of support.  High-arity composites (for
/// example the pairwise compositions of the derived differentials, arity
/// 7 on an 8-dimensional doubled space) would be prohibitively large to
/// even allocate densely.  This scatter implementation loops over the
/// nonzero tuples of the two factors instead, so its cost is proportional
/// to the product of the supports and independent of the ambient tuple
/// count.
///
/// It is an independent second implementation of the same product: the
/// test suite cross-validates it against the dense one on random inputs.

namespace lts::detail {

/// A cochain stored as a map from flat argument-tuple index (row-major,
/// as in Cochain::tuple_index) to its value block.  Entries may hold zero
/// vectors after cancellation; is_zero and comparisons look through them.
struct SparseCochain {
  int dim = 0;
  int degree = 0;
  std::map<std::size_t, Vec> entries;

  int arity() const { return 2 * degree + 1; }

  /// Flat tuple index from argument indices (row-major, args[0] slowest).
  std::size_t tuple_index(const int* args) const;
  void unpack_tuple(std::size_t ti, int* args) const;

  /// Value block for accumulation, created zero on first touch.
  Vec& slot(const int* args);

  bool is_zero() const;
  /// Lexicographically first tuple with a nonzero value block.
  std::optional<std::vector<int>> first_nonzero_tuple() const;

  SparseCochain& add_scaled(const SparseCochain& other, const Rational& s);
};

/// Conversions (dense scans its zero flags; to_dense materializes
/// dim^arity storage, so callers must keep that within reason).
SparseCochain to_sparse(const Cochain& c);
Cochain to_dense(const SparseCochain& c);

/// Scatter-mode circle product (same operation as lts::circle_product).
SparseCochain circle_product_sparse(const SparseCochain& p,
                                    const SparseCochain& q);

/// [P,Q] = P o Q - (-1)^(pq) Q o P in scatter mode.
SparseCochain graded_bracket_sparse(const SparseCochain& p,
                                    const SparseCochain& q);

}  // namespace lts::detail

#endif  // LTS_DETAIL_SPARSE_HPP
