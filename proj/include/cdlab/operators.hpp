#ifndef CDLAB_OPERATORS_HPP
#define CDLAB_OPERATORS_HPP

#include "cdlab/element.hpp"
#include "cdlab/matrix.hpp"
#include "cdlab/subspace.hpp"

namespace cdlab {

// The operator families the library computes kernels of:
//   LeftMul(x):    y -> xy
//   RightMul(x):   y -> yx
//   Assoc(a,b):    z -> [a,z,b]        (= R_b L_a - L_a R_b)
//   AntiAssoc(a,b):z -> (az)b + a(zb)  (= R_b L_a + L_a R_b)
//   AltMap(x):     y -> [x,x,y]
enum class OperatorKind { LeftMul, RightMul, Assoc, AntiAssoc, AltMap };

OperatorMatrix left_mul_matrix(const Element& x);
OperatorMatrix right_mul_matrix(const Element& x);

OperatorMatrix operator_matrix(OperatorKind kind, const Element& a);
OperatorMatrix operator_matrix(OperatorKind kind, const Element& a,
                               const Element& b);

// Ann(x) = ker L_x. For x = 0 this is all of A_n.
Subspace annihilator(const Element& x);

// Alt(x) = {y : [x,x,y] = 0}.
Subspace alternator_space(const Element& x);

// Ass[a,b] = ker A_{a,b} (anti = false), Ass'[a,b] = ker A'_{a,b}.
Subspace associator_space(const Element& a, const Element& b, bool anti);

// Orthogonal imaginary unit vectors whose generated subalgebra is
// associative, i.e. [a,a,b] = [b,b,a] = 0. Demands exactly ||a||^2 = 1;
// callers wanting scale invariance must normalize first.
bool is_quaternionic_pair(const Element& a, const Element& b);

bool is_alternative(const Element& x);

// Orthonormal basis span{1, a, b, ab} of the subalgebra generated by a
// quaternionic pair (valid for any nonzero orthogonal imaginary a, b).
Subspace quaternion_subalgebra(const Element& a, const Element& b);

}  // namespace cdlab

#endif  // CDLAB_OPERATORS_HPP
