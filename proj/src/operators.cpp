#include "cdlab/operators.hpp"

namespace cdlab {

namespace {

void check_same_level(const Element& a, const Element& b) {
  if (a.level() != b.level()) {
    throw InputError("operator arguments have mismatched levels");
  }
}

}  // namespace

// Column q of L_x is x * e_q = sum_p x_p (e_p e_q); building it from the
// basis sign table costs no rational multiplications. basis_product is
// validated against multiply by the test suite before anything trusts this.
OperatorMatrix left_mul_matrix(const Element& x) {
  OperatorMatrix m = OperatorMatrix::zero(x.level());
  std::size_t dim = x.dim();
  for (std::size_t p = 0; p < dim; ++p) {
    if (x[p] == 0) continue;
    for (std::size_t q = 0; q < dim; ++q) {
      auto [sign, r] = basis_product(x.level(), p, q);
      if (sign > 0) {
        m.at(r, q) += x[p];
      } else {
        m.at(r, q) -= x[p];
      }
    }
  }
  return m;
}

OperatorMatrix right_mul_matrix(const Element& x) {
  OperatorMatrix m = OperatorMatrix::zero(x.level());
  std::size_t dim = x.dim();
  for (std::size_t p = 0; p < dim; ++p) {
    if (x[p] == 0) continue;
    for (std::size_t q = 0; q < dim; ++q) {
      auto [sign, r] = basis_product(x.level(), q, p);
      if (sign > 0) {
        m.at(r, q) += x[p];
      } else {
        m.at(r, q) -= x[p];
      }
    }
  }
  return m;
}

OperatorMatrix operator_matrix(OperatorKind kind, const Element& a) {
  switch (kind) {
    case OperatorKind::LeftMul:
      return left_mul_matrix(a);
    case OperatorKind::RightMul:
      return right_mul_matrix(a);
    case OperatorKind::AltMap: {
      OperatorMatrix lx = left_mul_matrix(a);
      return left_mul_matrix(multiply(a, a)) - lx * lx;
    }
    default:
      throw InputError("operator kind needs two element arguments");
  }
}

OperatorMatrix operator_matrix(OperatorKind kind, const Element& a,
                               const Element& b) {
  check_same_level(a, b);
  switch (kind) {
    case OperatorKind::Assoc: {
      OperatorMatrix la = left_mul_matrix(a), rb = right_mul_matrix(b);
      return rb * la - la * rb;
    }
    case OperatorKind::AntiAssoc: {
      OperatorMatrix la = left_mul_matrix(a), rb = right_mul_matrix(b);
      return rb * la + la * rb;
    }
    default:
      throw InputError("operator kind takes one element argument");
  }
}

Subspace annihilator(const Element& x) {
  return kernel(left_mul_matrix(x));
}

Subspace alternator_space(const Element& x) {
  return kernel(operator_matrix(OperatorKind::AltMap, x));
}

Subspace associator_space(const Element& a, const Element& b, bool anti) {
  return kernel(operator_matrix(
      anti ? OperatorKind::AntiAssoc : OperatorKind::Assoc, a, b));
}

bool is_quaternionic_pair(const Element& a, const Element& b) {
  check_same_level(a, b);
  if (norm_squared(a) != 1 || norm_squared(b) != 1) return false;
  if (!is_imaginary(a) || !is_imaginary(b)) return false;
  if (inner_product_real(a, b) != 0) return false;
  return associator(a, a, b).is_zero() && associator(b, b, a).is_zero();
}

bool is_alternative(const Element& x) {
  return alternator_space(x).dim() == static_cast<int>(x.dim());
}

Subspace quaternion_subalgebra(const Element& a, const Element& b) {
  check_same_level(a, b);
  Subspace h = Subspace::from_spanning(
      a.level(),
      {Element::unit(a.level()), a, b, multiply(a, b)});
  if (h.dim() != 4) {
    throw InputError("pair does not span a 4-dimensional subalgebra");
  }
  return h;
}

}  // namespace cdlab
