#ifndef CDLAB_ELEMENT_HPP
#define CDLAB_ELEMENT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cdlab/rational.hpp"

namespace cdlab {

// Default cap on the doubling level (dim 1024). Overridable through the
// CD_LAB_MAX_LEVEL environment variable; exact elimination cost grows
// steeply past this point.
int max_level();

// An element of the level-n Cayley-Dickson algebra A_n, stored as the dense
// vector of its 2^n rational coordinates over the standard basis.
//
// Basis indexing is little-endian doubling: index p at level n splits as
// p = p_lo + 2^(n-1)*p_hi, and the pair (a,b) places a on indices
// 0..2^(n-1)-1 and b on the rest. Hence e_0 = 1 and e_{2^(n-1)} = i_n.
// Elements are immutable values; all operations return fresh elements.
class Element {
 public:
  Element(int level, std::vector<Rational> coeffs);

  static Element zero(int level);
  static Element unit(int level);  // e_0
  static Element basis(int level, std::size_t index);

  int level() const { return level_; }
  std::size_t dim() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  // First and second component of the pair (a,b) the element represents.
  Element first_half() const;
  Element second_half() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.level_ == b.level_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

 private:
  int level_;
  std::vector<Rational> coeffs_;
};

Element make_element(int level, const std::map<std::size_t, Rational>& sparse);

// Packs (a,b) at level n+1 out of two level-n components.
Element pair_element(const Element& a, const Element& b);

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element operator-(const Element& a);
Element operator*(const Rational& s, const Element& a);

// The Cayley-Dickson product (a,b)(c,d) = (ac - d*b, da + bc*), computed by
// the recursive doubling formula; level 0 is rational multiplication.
Element multiply(const Element& x, const Element& y);

// The involution (a,b)* = (a*, -b): fixes e_0, negates every other basis
// coordinate.
Element conjugate(const Element& x);

// (Re x, Im x) with x = Re(x) e_0 + Im(x).
std::pair<Rational, Element> real_imag_split(const Element& x);
Rational real_part(const Element& x);
Element imaginary_part(const Element& x);
bool is_imaginary(const Element& x);

// Re(x y*); equals the standard dot product of the coordinate vectors.
Rational inner_product_real(const Element& x, const Element& y);
Rational norm_squared(const Element& x);

// Projection of x y* onto C_n, as <x,y> - i_n <i_n x, y>. Needs level >= 1.
ComplexScalar hermitian_inner_product(const Element& x, const Element& y);

// [x,y,z] = (xy)z - x(yz).
Element associator(const Element& x, const Element& y, const Element& z);

// i_n = (0,1), the basis vector e_{2^(level-1)}. Needs level >= 1.
Element i_element(int level);

// True when x has zero coordinates on both e_0 and i_n, i.e. lies in the
// orthogonal complement of C_n.
bool in_c_perp(const Element& x);

// The element re + im*i_n of C_n inside A_level.
Element complex_to_element(int level, const ComplexScalar& z);

// e_p e_q = (sign) e_{p XOR q}. Fast sign recursion; must agree with
// multiply on basis vectors (validated by tests up to level 6).
std::pair<int, std::size_t> basis_product(int level, std::size_t p,
                                          std::size_t q);

std::string to_string(const Element& x);

}  // namespace cdlab

#endif  // CDLAB_ELEMENT_HPP
