#ifndef CDLAB_RATIONAL_HPP
#define CDLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cdlab {

// Exact scalar field. mpq_class keeps values in canonical lowest terms with
// a positive denominator, which is the representation every equality test
// and serialization in this library relies on.
using Rational = mpq_class;
using BigInt = mpz_class;

// Raised on any violated operation precondition (bad levels, malformed
// input, out-of-range parameters). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Rational rational_from_string(const std::string& text) {
  mpq_class value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw InputError("malformed rational '" + text + "'");
  }
  if (value.get_den() == 0) {
    throw InputError("zero denominator in rational '" + text + "'");
  }
  value.canonicalize();
  return value;
}

inline std::string rational_to_string(const Rational& value) {
  return value.get_str();
}

// An element of C_n = span{1, i_n}, i.e. re + im*i_n.
struct ComplexScalar {
  Rational re;
  Rational im;

  ComplexScalar() : re(0), im(0) {}
  ComplexScalar(Rational real, Rational imag)
      : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  ComplexScalar conjugate() const { return {re, -im}; }

  friend ComplexScalar operator+(const ComplexScalar& a,
                                 const ComplexScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexScalar operator-(const ComplexScalar& a,
                                 const ComplexScalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexScalar operator-(const ComplexScalar& a) {
    return {-a.re, -a.im};
  }
  friend ComplexScalar operator*(const ComplexScalar& a,
                                 const ComplexScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
    return a.re == b.re && a.im == b.im;
  }
};

inline std::string to_string(const ComplexScalar& z) {
  return z.re.get_str() + (z.im >= 0 ? "+" : "") + z.im.get_str() + "*i";
}

}  // namespace cdlab

#endif  // CDLAB_RATIONAL_HPP
