#ifndef CDLAB_CONSTRUCTIONS_HPP
#define CDLAB_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdlab/element.hpp"
#include "cdlab/matrix.hpp"
#include "cdlab/operators.hpp"
#include "cdlab/subspace.hpp"

namespace cdlab {

// A constructed element together with its certified annihilator dimension.
// Builders verify the claim by an exact kernel computation before handing
// the certificate out; when a witness basis is present it spans exactly
// the annihilator and every witness vector annihilates the element on
// both sides.
struct Certificate {
  Element element;
  int claimed_ann_dim = 0;
  std::string provenance;
  std::optional<Subspace> witness_basis;
};

// Recomputes the annihilator and checks the witness; returns false and
// fills `why` on any mismatch.
bool verify_certificate(const Certificate& cert, std::string* why = nullptr);

// Imaginary standard basis vectors (a, b) at the given level with
// dim Ass[a,b] = d (anti = false) or dim Ass'[a,b] = d (anti = true).
// Requires d == 4 (mod 8) and 4 <= d <= 2^(level-1), level >= 3.
std::pair<Element, Element> assoc_pair_with_dim(int level, int d, bool anti);

// An element of A_level whose annihilator has exact dimension d.
// Requires d == 0 (mod 4) and 0 <= d <= max(0, 2^level - 4*level + 4).
Certificate element_with_ann_dim(int level, int d);

// (a, sign * i_n a) at level n+1, with annihilator dimension
// 2^n - 4 + dim Ann(a). Requires a nonzero and orthogonal to C_n.
Certificate double_zero_divisor(const Element& a, int sign);

// (alpha a, beta a) at level n+1 with annihilator Ann(a) x Ann(a).
// Requires a nonzero in the complement of C_n and alpha^2 + beta^2 != 0.
Certificate scale_pair(const Element& a, const ComplexScalar& alpha,
                       const ComplexScalar& beta);

// The level-4 zero-divisor (a1, a2) built from orthogonal imaginary
// level-3 vectors of equal nonzero norm, with its explicit witness
// { (x, -(a1 a2) x / ||a1 a2||) : x in span{1,a1,a2,a1a2}-perp }.
Certificate a4_zero_divisor(const Element& a1, const Element& a2);

// Iterated doublings of a level-4 seed zero-divisor, one per sign; the
// result has the top annihilator dimension 2^level - 4*level + 4.
Certificate top_zero_divisor(int level, const std::vector<int>& signs);
Certificate top_zero_divisor(int level, const std::vector<int>& signs,
                             const Element& seed1, const Element& seed2);

// The level-5 family ((t,kt), (alpha t, (alpha k) t)) indexed by a nonzero
// quaternion alpha; its annihilator dimension is 16 when alpha = +-k,

// 12 when alpha is imaginary of unit norm (but not +-k), and 8 otherwise.
Certificate a5_family(const Element& alpha);

// The 8x8 matrix of the algebra automorphism of A_3 sending i -> x,
// j -> y, t -> z, extended multiplicatively over the standard basis.
// Requires pairwise orthogonal imaginary unit vectors with z also
// orthogonal to xy. Validated as a homomorphism on all basis pairs.
OperatorMatrix build_octonion_automorphism(const Element& x,
                                           const Element& y,
                                           const Element& z);

}  // namespace cdlab

#endif  // CDLAB_CONSTRUCTIONS_HPP
