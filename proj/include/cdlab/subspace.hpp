#ifndef CDLAB_SUBSPACE_HPP
#define CDLAB_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "cdlab/element.hpp"
#include "cdlab/matrix.hpp"
#include "cdlab/rational.hpp"

namespace cdlab {

// Reduced row echelon form of an arbitrary rational matrix, computed by
// fraction-free (Bareiss) elimination over the integers after clearing
// denominators row by row, followed by rational back-substitution.
// Pivoting is first-nonzero only, so the result is the canonical RREF.
// Returns the nonzero rows; pivot columns come out strictly increasing.
std::vector<std::vector<Rational>> rref(
    std::vector<std::vector<Rational>> rows, std::size_t cols);

// Canonical basis of the nullspace {v : Mv = 0} of a rows x cols matrix.
std::vector<std::vector<Rational>> nullspace(
    const std::vector<std::vector<Rational>>& rows, std::size_t cols);

// A subspace of A_n held as the canonical RREF basis of its elements, so
// two equal subspaces always have identical stored bases.
class Subspace {
 public:
  static Subspace zero(int level);
  static Subspace full(int level);
  static Subspace from_spanning(int level,
                                const std::vector<Element>& spanning);

  int level() const { return level_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<Rational>>& rows() const { return basis_; }
  Element basis_element(std::size_t i) const;
  std::vector<Element> basis_elements() const;

  bool contains(const Element& x) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.level_ == b.level_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  Subspace(int level, std::vector<std::vector<Rational>> basis)
      : level_(level), basis_(std::move(basis)) {}

  int level_;
  std::vector<std::vector<Rational>> basis_;

  friend Subspace kernel(const OperatorMatrix& m);
  friend Subspace intersect(const Subspace& u, const Subspace& v);
  friend Subspace orthogonal_complement(const Subspace& u);
};

// Canonical basis of ker M; dim = 2^level - rank(M). Exact. The returned
// vectors are re-verified against M before returning.
Subspace kernel(const OperatorMatrix& m);

Subspace intersect(const Subspace& u, const Subspace& v);

// Complement with respect to the standard inner product.
Subspace orthogonal_complement(const Subspace& u);

bool contains(const Subspace& u, const Element& x);

}  // namespace cdlab

#endif  // CDLAB_SUBSPACE_HPP
