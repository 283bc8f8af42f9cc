#include "cdlab/element.hpp"

#include <cstdlib>
#include <sstream>

namespace cdlab {

namespace {

int read_max_level() {
  if (const char* env = std::getenv("CD_LAB_MAX_LEVEL")) {
    int value = std::atoi(env);
    if (value >= 0) return value;
  }
  return 10;
}

void check_level(int level) {
  if (level < 0) throw InputError("level must be non-negative");
  if (level > max_level()) {
    throw InputError("level " + std::to_string(level) +
                     " exceeds the cap of " + std::to_string(max_level()) +
                     " (override with CD_LAB_MAX_LEVEL)");
  }
}

void check_same_level(const Element& a, const Element& b) {
  if (a.level() != b.level()) {
    throw InputError("level mismatch: " + std::to_string(a.level()) +
                     " vs " + std::to_string(b.level()));
  }
}

std::vector<Rational> conj_vec(const std::vector<Rational>& x) {
  std::vector<Rational> out(x.size());
  out[0] = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) out[i] = -x[i];
  return out;
}

std::vector<Rational> half(const std::vector<Rational>& x, bool high) {
  std::size_t h = x.size() / 2;
  return std::vector<Rational>(x.begin() + (high ? h : 0),
                               x.begin() + (high ? x.size() : h));
}

std::vector<Rational> mul_vec(const std::vector<Rational>& x,
                              const std::vector<Rational>& y) {
  if (x.size() == 1) return {x[0] * y[0]};
  std::size_t h = x.size() / 2;
  auto a = half(x, false), b = half(x, true);
  auto c = half(y, false), d = half(y, true);
  auto ac = mul_vec(a, c);
  auto dsb = mul_vec(conj_vec(d), b);
  auto da = mul_vec(d, a);
  auto bcs = mul_vec(b, conj_vec(c));
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - dsb[i];
    out[h + i] = da[i] + bcs[i];
  }
  return out;
}

int basis_sign(int n, std::size_t p, std::size_t q) {
  if (n == 0) return 1;
  std::size_t h = std::size_t{1} << (n - 1);
  bool ph = (p & h) != 0, qh = (q & h) != 0;
  std::size_t pl = p & (h - 1), ql = q & (h - 1);
  if (!ph && !qh) return basis_sign(n - 1, pl, ql);          // (ac, 0)
  if (!ph && qh) return basis_sign(n - 1, ql, pl);           // (0, da)
  if (ph && !qh)                                             // (0, bc*)
    return (ql == 0 ? 1 : -1) * basis_sign(n - 1, pl, ql);
  return -(ql == 0 ? 1 : -1) * basis_sign(n - 1, ql, pl);    // (-d*b, 0)
}

}  // namespace

int max_level() {
  static const int cap = read_max_level();
  return cap;
}

Element::Element(int level, std::vector<Rational> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
  check_level(level);
  if (coeffs_.size() != (std::size_t{1} << level_)) {
    throw InputError("coefficient vector has length " +
                     std::to_string(coeffs_.size()) + ", expected " +
                     std::to_string(std::size_t{1} << level_));
  }
}

Element Element::zero(int level) {
  check_level(level);
  return Element(level, std::vector<Rational>(std::size_t{1} << level, 0));
}

Element Element::unit(int level) { return basis(level, 0); }

Element Element::basis(int level, std::size_t index) {
  check_level(level);
  if (index >= (std::size_t{1} << level)) {
    throw InputError("basis index " + std::to_string(index) +
                     " out of range at level " + std::to_string(level));
  }
  std::vector<Rational> coeffs(std::size_t{1} << level, 0);
  coeffs[index] = 1;
  return Element(level, std::move(coeffs));
}

bool Element::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Element Element::first_half() const {
  if (level_ == 0) throw InputError("level-0 element has no halves");
  return Element(level_ - 1, half(coeffs_, false));
}

Element Element::second_half() const {
  if (level_ == 0) throw InputError("level-0 element has no halves");
  return Element(level_ - 1, half(coeffs_, true));
}

Element make_element(int level,
                     const std::map<std::size_t, Rational>& sparse) {
  check_level(level);
  std::vector<Rational> coeffs(std::size_t{1} << level, 0);
  for (const auto& [index, value] : sparse) {
    if (index >= coeffs.size()) {
      throw InputError("basis index " + std::to_string(index) +
                       " out of range at level " + std::to_string(level));
    }
    coeffs[index] = value;
    coeffs[index].canonicalize();
  }
  return Element(level, std::move(coeffs));
}

Element pair_element(const Element& a, const Element& b) {
  check_same_level(a, b);
  std::vector<Rational> coeffs;
  coeffs.reserve(2 * a.dim());
  coeffs.insert(coeffs.end(), a.coeffs().begin(), a.coeffs().end());
  coeffs.insert(coeffs.end(), b.coeffs().begin(), b.coeffs().end());
  return Element(a.level() + 1, std::move(coeffs));
}

Element operator+(const Element& a, const Element& b) {
  check_same_level(a, b);
  std::vector<Rational> coeffs(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) coeffs[i] = a[i] + b[i];
  return Element(a.level(), std::move(coeffs));
}

Element operator-(const Element& a, const Element& b) {
  check_same_level(a, b);
  std::vector<Rational> coeffs(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) coeffs[i] = a[i] - b[i];
  return Element(a.level(), std::move(coeffs));
}

Element operator-(const Element& a) {
  std::vector<Rational> coeffs(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) coeffs[i] = -a[i];
  return Element(a.level(), std::move(coeffs));
}

Element operator*(const Rational& s, const Element& a) {
  std::vector<Rational> coeffs(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) coeffs[i] = s * a[i];
  return Element(a.level(), std::move(coeffs));
}

Element multiply(const Element& x, const Element& y) {
  check_same_level(x, y);
  return Element(x.level(), mul_vec(x.coeffs(), y.coeffs()));
}

Element conjugate(const Element& x) {
  return Element(x.level(), conj_vec(x.coeffs()));
}

std::pair<Rational, Element> real_imag_split(const Element& x) {
  std::vector<Rational> coeffs = x.coeffs();
  Rational re = coeffs[0];
  coeffs[0] = 0;
  return {re, Element(x.level(), std::move(coeffs))};
}

Rational real_part(const Element& x) { return x[0]; }

Element imaginary_part(const Element& x) {
  return real_imag_split(x).second;
}

bool is_imaginary(const Element& x) { return x[0] == 0; }

Rational inner_product_real(const Element& x, const Element& y) {
  check_same_level(x, y);
  Rational sum = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) sum += x[i] * y[i];
  return sum;
}

Rational norm_squared(const Element& x) {
  return inner_product_real(x, x);
}

ComplexScalar hermitian_inner_product(const Element& x, const Element& y) {
  check_same_level(x, y);
  if (x.level() < 1) {
    throw InputError("hermitian inner product needs level >= 1");
  }
  Rational re = inner_product_real(x, y);
  Rational im = -inner_product_real(multiply(i_element(x.level()), x), y);
  return {re, im};
}

Element associator(const Element& x, const Element& y, const Element& z) {
  return multiply(multiply(x, y), z) - multiply(x, multiply(y, z));
}

Element i_element(int level) {
  if (level < 1) throw InputError("i_n needs level >= 1");
  return Element::basis(level, std::size_t{1} << (level - 1));
}

bool in_c_perp(const Element& x) {
  if (x.level() < 1) return false;
  return x[0] == 0 && x[std::size_t{1} << (x.level() - 1)] == 0;
}

Element complex_to_element(int level, const ComplexScalar& z) {
  if (level < 1) throw InputError("C_n embedding needs level >= 1");
  std::vector<Rational> coeffs(std::size_t{1} << level, 0);
  coeffs[0] = z.re;
  coeffs[std::size_t{1} << (level - 1)] = z.im;
  return Element(level, std::move(coeffs));
}

std::pair<int, std::size_t> basis_product(int level, std::size_t p,
                                          std::size_t q) {
  check_level(level);
  std::size_t dim = std::size_t{1} << level;
  if (p >= dim || q >= dim) {
    throw InputError("basis index out of range at level " +
                     std::to_string(level));
  }
  return {basis_sign(level, p, q), p ^ q};
}

std::string to_string(const Element& x) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x[i] == 0) continue;
    if (!first) out << " + ";
    out << "(" << x[i].get_str() << ")e" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace cdlab
